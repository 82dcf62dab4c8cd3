#pragma once

namespace scf {

inline constexpr const char* kVersion = "0.1.0";

}  // namespace scf
