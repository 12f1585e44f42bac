#pragma once

#include <gtest/gtest.h>

#include "projsep/error.hpp"

namespace test_support {

/// Kind of the projsep::Error thrown by `f`; records a failure if none is.
template <class F>
projsep::ErrorKind kind_of(F&& f) {
  try {
    f();
  } catch (const projsep::Error& e) {
    return e.kind();
  }
  ADD_FAILURE() << "no projsep::Error thrown";
  return projsep::ErrorKind::InternalError;
}

}  // namespace test_support
