#pragma once

namespace tjcm {

inline constexpr const char* kVersion = "0.1.0";

}  // namespace tjcm
