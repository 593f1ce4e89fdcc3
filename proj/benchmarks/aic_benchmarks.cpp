#include <benchmark/benchmark.h>

#include "aic/additive_map.hpp"
#include "aic/code.hpp"
#include "aic/oracle.hpp"
#include "aic/paut.hpp"
#include "aic/structures.hpp"

namespace {

using namespace aic;

void BM_FieldMul(benchmark::State& state) {
  const Field field = make_field(2, static_cast<unsigned>(state.range(0)));
  const Elem size = field->size();
  Elem acc = 1;
  Elem x = 1;
  for (auto _ : state) {
    acc = field->mul(acc, x) ^ 1u;
    x = x + 1 == size ? 1 : x + 1;
    benchmark::DoNotOptimize(acc);
  }
}
BENCHMARK(BM_FieldMul)->Arg(4)->Arg(8)->Arg(16);

void BM_CodeBasis(benchmark::State& state) {
  const Field field = make_field(2, static_cast<unsigned>(state.range(0)));
  const DefiningSet d = enumerate_affine_invariant(2, field->m(), 1)[1].set;
  for (auto _ : state) {
    const AffineInvariantCode code(field, 1, d);
    benchmark::DoNotOptimize(code.basis().size());
  }
}
BENCHMARK(BM_CodeBasis)->Arg(3)->Arg(4)->Arg(5)->Arg(6);

void BM_ComputeParams(benchmark::State& state) {
  const Field field = make_field(2, 4);
  for (auto _ : state) {
    const AffineInvariantCode code(field, 1, DefiningSet{0, 1, 2, 4, 8});
    benchmark::DoNotOptimize(code.params().a);
  }
}
BENCHMARK(BM_ComputeParams);

void BM_CheckIyb(benchmark::State& state) {
  const Field field = make_field(2, static_cast<unsigned>(state.range(0)));
  const ChiF cf = construct_f1(field, 1, trace_form(*field, 1, 1), 1);
  const AlphaMap alpha = chi_f_alpha(cf);
  for (auto _ : state) benchmark::DoNotOptimize(check_iyb(alpha));
}
BENCHMARK(BM_CheckIyb)->Arg(3)->Arg(4)->Arg(5);

void BM_BruteScanLength8(benchmark::State& state) {
  const AffineInvariantCode code(make_field(2, 3), 1, DefiningSet{0, 1, 2, 4});
  for (auto _ : state) benchmark::DoNotOptimize(brute_paut_scan(code).size());
}
BENCHMARK(BM_BruteScanLength8)->Unit(benchmark::kMillisecond);

void BM_EnumeratePaut(benchmark::State& state) {
  const auto m = static_cast<unsigned>(state.range(0));
  const AffineInvariantCode code = m == 3 ? AffineInvariantCode(make_field(2, 3), 1, DefiningSet{0, 1, 2, 4})
                                          : AffineInvariantCode(make_field(2, 4), 1, DefiningSet{0, 1, 2, 4, 8});
  for (auto _ : state) benchmark::DoNotOptimize(enumerate_paut(code).size());
}
BENCHMARK(BM_EnumeratePaut)->Arg(3)->Arg(4)->Unit(benchmark::kMillisecond);

void BM_RegularSubgroupSearchLength8(benchmark::State& state) {
  const AffineInvariantCode code(make_field(2, 3), 1, DefiningSet{0, 1, 2, 4});
  const auto paut = enumerate_paut(code);
  for (auto _ : state) benchmark::DoNotOptimize(regular_subgroup_search(paut, 2).groups.size());
}
BENCHMARK(BM_RegularSubgroupSearchLength8)->Unit(benchmark::kMillisecond);

void BM_StructureDescriptor(benchmark::State& state) {
  const Field field = make_field(2, 4);
  const ChiF cf = construct_f1(field, 1, trace_form(*field, 1, 1), 1);
  for (auto _ : state) benchmark::DoNotOptimize(estr_descriptor(cf).matches());
}
BENCHMARK(BM_StructureDescriptor);

}  // namespace
BENCHMARK_MAIN();
