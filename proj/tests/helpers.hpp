#pragma once

#include <utility>

#include "reciproca/errors.hpp"

// True when fn raises a reciproca::error with exactly the given code.
template <typename F>
bool raises(reciproca::errc code, F&& fn) {
  try {
    (void)std::forward<F>(fn)();
  } catch (const reciproca::error& e) {
    return e.code() == code;
  } catch (...) {
    return false;
  }
  return false;
}
