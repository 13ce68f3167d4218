#pragma once

// Brute-force reference implementations. Nothing here touches decision
// diagrams of the input network: rules are evaluated on their expression
// trees and completions are enumerated explicitly.

#include "mpu/network.hpp"
#include "mpu/state.hpp"
#include "mpu/unfold.hpp"

#include <cstdint>
#include <set>
#include <string>
#include <vector>

namespace mpu::oracle
{

inline constexpr std::size_t max_naive_size = 10;
inline constexpr std::size_t max_equivalence_size = 4;

// Throws Error(size_limit) above max_naive_size components.
[[nodiscard]] std::set< MPState > naive_mp_successors( const BooleanNetwork& net, const MPState& x );

struct RandomNetSpec
{
    std::size_t n = 3;
    std::size_t max_regulators = 3;
    std::size_t depth = 3;
    std::uint64_t seed = 1;
};

// Pure function of the spec. Components are named x1..xn; every rule only
// reads from at most max_regulators components and at least one rule is
// not constant.
[[nodiscard]] BooleanNetwork random_network( const RandomNetSpec& spec );

struct Mismatch
{
    std::string source;
    std::string target;
    bool mp_reachable;
    bool unfolded_reachable;
    // Path on the side that reaches the target: MP states, or unfolded
    // Boolean states.
    std::vector< std::string > witness;
};

struct EquivalenceReport
{
    std::string network;
    Mode mode = Mode::exact;
    bool all_levels = false;
    std::size_t pairs_checked = 0;
    std::vector< Mismatch > mismatches;
    // Boolean pairs reachable asynchronously on f but not under Most Permissive.
    std::vector< std::pair< std::string, std::string > > subsumption_violations;

    [[nodiscard]] bool holds() const { return mismatches.empty() && subsumption_violations.empty(); }
};

// For every ordered pair (x, y) of Boolean configurations (or of all
// Most Permissive configurations when `all_levels`), compares Most Permissive
// reachability on `net` with asynchronous reachability of encode(y) from
// encode(x) on the full unfolding. Throws Error(size_limit) above
// max_equivalence_size components.
[[nodiscard]] EquivalenceReport check_equivalence( const BooleanNetwork& net, Mode mode, std::string id = {},
                                                   bool all_levels = false );

} // namespace mpu::oracle
