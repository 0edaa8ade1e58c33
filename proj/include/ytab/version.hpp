#pragma once

namespace ytab {
inline constexpr const char* kVersion = "0.1.0";
}  // namespace ytab
