#pragma once

namespace qpg {

inline constexpr const char* kVersion = "0.1.0";

}  // namespace qpg
