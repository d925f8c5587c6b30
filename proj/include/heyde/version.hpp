#pragma once

namespace heyde {

inline constexpr const char* kVersion = "0.1.0";

}  // namespace heyde
