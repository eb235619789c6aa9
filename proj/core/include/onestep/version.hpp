#pragma once

namespace onestep {

inline constexpr const char* kVersion = "0.1.0";

}  // namespace onestep
