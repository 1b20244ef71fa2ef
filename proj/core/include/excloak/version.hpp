#pragma once

namespace excloak {

inline constexpr const char* kVersion = "0.1.0";

}  // namespace excloak
