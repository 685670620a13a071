#pragma once

#include <optional>

#include "wloc/errors.hpp"
#include "wloc/expr.hpp"

namespace testutil {

// Error code raised by f, if any.
template <class F>
std::optional<wloc::ErrorCode> code_of(F&& f) {
  try {
    f();
  } catch (const wloc::Error& e) {
    return e.code();
  }
  return std::nullopt;
}

inline wloc::WittClass W(const char* text, const wloc::FieldDescriptor& f) { return wloc::parse_witt(text, f); }

}  // namespace testutil
