#pragma once

#include "mpu/network.hpp"

#include <filesystem>
#include <string>
#include <string_view>

namespace mpu
{

// Reads the "target, rule" text format. An optional "targets, factors"
// header and '#' comment lines are skipped. Throws ParseError.
[[nodiscard]] BooleanNetwork parse_bnet( std::string_view text );

[[nodiscard]] BooleanNetwork load_bnet( const std::filesystem::path& path );

// Deterministic rendering: header line, then one line per component with
// its rule as a sorted sum of products read off the diagram.
[[nodiscard]] std::string print_bnet( const BooleanNetwork& net );

} // namespace mpu
