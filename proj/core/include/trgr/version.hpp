#pragma once

namespace trgr {

inline constexpr const char* kVersion = "trgr 0.1.0";

}  // namespace trgr
