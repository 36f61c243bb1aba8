#pragma once

#include <functional>

#include "doctest.h"

#include "decostab/errors.hpp"
#include "decostab/rational.hpp"

namespace testing {

inline decostab::ErrorKind kind_of(const std::function<void()>& fn) {
  try {
    fn();
  } catch (const decostab::Error& e) {
    return e.kind();
  }
  FAIL("no error thrown");
  return decostab::ErrorKind::InvalidArgument;
}

inline decostab::Rational q(const char* text) { return decostab::parse_rational(text); }

}  // namespace testing
