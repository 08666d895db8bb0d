#pragma once

namespace helfer {

inline constexpr const char* kVersion = "0.1.0";

}  // namespace helfer
