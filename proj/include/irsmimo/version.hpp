#pragma once

#include <string_view>

namespace irsmimo {

inline constexpr std::string_view kVersion = "irsmimo 0.1.0";

}  // namespace irsmimo
