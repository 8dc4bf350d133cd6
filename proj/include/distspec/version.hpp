#pragma once

namespace distspec {

inline constexpr const char* version = "0.1.0";

} // namespace distspec
