#pragma once

#include <optional>

#include "okubo/error.hpp"

// Error code thrown by fn, or nullopt if it returns normally.
template <class Fn>
std::optional<okubo::ErrorCode> error_code(Fn&& fn) {
  try {
    fn();
  } catch (const okubo::Error& e) {
    return e.code();
  }
  return std::nullopt;
}
