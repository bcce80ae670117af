#pragma once

namespace ckforms {

inline constexpr const char* kVersion = "0.1.0";

}  // namespace ckforms
