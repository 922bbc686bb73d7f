#pragma once

namespace circ {

inline constexpr char kVersion[] = "0.1.0";

}  // namespace circ
