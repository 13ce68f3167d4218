#pragma once

#include "mpu/network.hpp"
#include "mpu/state.hpp"

#include <string_view>
#include <vector>

namespace mpu
{

enum class Semantics
{
    sync,
    async,
    general,
    mp,
};

[[nodiscard]] std::string_view to_string( Semantics s );
[[nodiscard]] Semantics semantics_from_string( std::string_view text );

[[nodiscard]] BoolState sync_successor( const BooleanNetwork& net, const BoolState& s );

// One successor per unstable component, in declaration order.
[[nodiscard]] std::vector< BoolState > async_successors( const BooleanNetwork& net, const BoolState& s );

// One successor per non-empty subset of the unstable components, ordered by
// increasing subset bitmask (bit i = i-th unstable component).
[[nodiscard]] std::vector< BoolState > general_successors( const BooleanNetwork& net, const BoolState& s );

// Whether f_j can evaluate to `value` on some Boolean completion of x, where
// components at i or d are free and Boolean components are fixed.
[[nodiscard]] bool gamma_can_be( const BooleanNetwork& net, std::size_t j, const MPState& x, bool value );

// Most Permissive successors. For each component in declaration order the
// candidate moves are tried in the order: rise to i, fall to d, i to 1,
// d to 0.
[[nodiscard]] std::vector< MPState > mp_successors( const BooleanNetwork& net, const MPState& x );

} // namespace mpu
