#pragma once

#include <gtest/gtest.h>

#include "aic/code.hpp"
#include "aic/error.hpp"
#include "aic/finite_field.hpp"

namespace aic::testing {

template <class Fn>
void expect_errc(Fn&& fn, Errc expected) {
  try {
    fn();
    ADD_FAILURE() << "expected " << to_string(expected);
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), expected) << e.what();
  }
}

inline AffineInvariantCode hamming8() { return AffineInvariantCode(make_field(2, 3), 1, DefiningSet{0, 1, 2, 4}); }

inline AffineInvariantCode length4(DefiningSet d) { return AffineInvariantCode(make_field(2, 2), 2, std::move(d)); }

/// t, the class of x in the power basis.
inline Elem generator_t(const FieldSpec& field) { return field.space().unit(1); }

}  // namespace aic::testing
