#pragma once

#include "mpu/network.hpp"
#include "mpu/state.hpp"

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace mpu
{

enum class Sign
{
    positive,
    negative,
    dual,
};

[[nodiscard]] std::string_view to_string( Sign s );

struct RegEdge
{
    std::size_t source;
    std::size_t target;
    Sign sign;
    // States s with s[source] = 0 such that flipping source to 1 raises
    // (resp. lowers) f_target.
    std::optional< BoolState > positive_witness;
    std::optional< BoolState > negative_witness;
};

struct RegGraph
{
    std::vector< std::string > names;
    // Sorted by (target, source).
    std::vector< RegEdge > edges;

    [[nodiscard]] const RegEdge* find( std::size_t source, std::size_t target ) const;
    [[nodiscard]] const RegEdge* find( std::string_view source, std::string_view target ) const;
};

// Exact signs from cofactor comparison on each rule's diagram.
[[nodiscard]] RegGraph infer_regulatory_graph( const BooleanNetwork& net );

} // namespace mpu
