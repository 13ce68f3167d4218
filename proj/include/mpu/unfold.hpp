#pragma once

#include "mpu/bdd.hpp"
#include "mpu/network.hpp"
#include "mpu/state.hpp"

#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace mpu
{

// Three Boolean variables (a, b, c) standing for one Most Permissive level.
//
//   level  0    i    d    1
//   abc   000  001  101  111
//
// 011 sits between 001 and 111, 100 between 101 and 000. The artifacts
// 010 and 110 never occur on an encoded trajectory.
struct Triplet
{
    bool a = false;
    bool b = false;
    bool c = false;

    static Triplet parse( std::string_view bits );
    [[nodiscard]] std::string to_string() const;

    friend bool operator==( const Triplet&, const Triplet& ) = default;
};

[[nodiscard]] Triplet encode_level( Level l );
// Defined exactly on 000, 001, 101, 111.
[[nodiscard]] std::optional< Level > decode_triplet( Triplet t );
[[nodiscard]] bool is_valid_triplet( Triplet t );
[[nodiscard]] bool is_artifact( Triplet t );
// Readings seen by targets: active iff c = 1, inactive iff b = 0.
[[nodiscard]] constexpr bool reads_active( Triplet t ) { return t.c; }
[[nodiscard]] constexpr bool reads_inactive( Triplet t ) { return !t.b; }

// Synchronous image of a triplet given the truth of its ⊕ and ⊖ conditions.
[[nodiscard]] Triplet triplet_step( Triplet own, bool plus, bool minus );

enum class Mode
{
    // ⊕/⊖ as "f can be 1/0 over the allowed readings", read off the diagram.
    exact,
    // Literal substitution in the negation normal form of f / !f.
    syntactic,
};

[[nodiscard]] std::string_view to_string( Mode m );
[[nodiscard]] Mode mode_from_string( std::string_view text );

enum class Polarity
{
    plus,
    minus,
};

struct UnfoldSpec
{
    std::vector< bool > selected;
    Mode mode = Mode::exact;

    static UnfoldSpec full( const BooleanNetwork& net, Mode mode = Mode::exact );
    static UnfoldSpec none( const BooleanNetwork& net, Mode mode = Mode::exact );
    // Throws Error(invalid_argument) on unknown component names.
    static UnfoldSpec of( const BooleanNetwork& net, std::span< const std::string > components,
                          Mode mode = Mode::exact );
};

// Position of every original component in the unfolded network. An unfolded
// component X occupies three consecutive slots X_a, X_b, X_c in place of X.
class UnfoldLayout
{
    std::vector< bool > _unfolded;
    std::vector< std::size_t > _offset;
    std::vector< std::string > _names;
    std::vector< std::string > _original_names;

public:
    UnfoldLayout() = default;
    // Throws Error(name_collision) when a generated name already exists.
    UnfoldLayout( const BooleanNetwork& net, const std::vector< bool >& selected );

    [[nodiscard]] std::size_t original_size() const { return _unfolded.size(); }
    [[nodiscard]] std::size_t size() const { return _names.size(); }
    [[nodiscard]] const std::vector< std::string >& names() const { return _names; }
    [[nodiscard]] const std::string& original_name( std::size_t k ) const { return _original_names.at( k ); }
    [[nodiscard]] bool unfolded( std::size_t k ) const { return _unfolded.at( k ); }
    [[nodiscard]] std::size_t offset( std::size_t k ) const { return _offset.at( k ); }
    [[nodiscard]] std::size_t a( std::size_t k ) const { return _offset.at( k ); }
    [[nodiscard]] std::size_t b( std::size_t k ) const { return _offset.at( k ) + 1; }
    [[nodiscard]] std::size_t c( std::size_t k ) const { return _offset.at( k ) + 2; }
};

// Condition over the unfolded variables (diagram variable = unfolded
// component index) that f_j can reach 1 (plus) or 0 (minus).
[[nodiscard]] Bdd build_condition( const BooleanNetwork& net, std::size_t j, const UnfoldLayout& layout,
                                   Polarity polarity, Mode mode, BddManager& out );

// Exact-mode transform of an arbitrary diagram whose variable v stands for
// original component `component_of_var[v]`. Lets callers choose any
// variable order for f.
[[nodiscard]] Bdd exact_condition( const Bdd& f, std::span< const std::size_t > component_of_var,
                                   const UnfoldLayout& layout, Polarity polarity, BddManager& out );

[[nodiscard]] Bdd syntactic_condition( const Expr& f, const UnfoldLayout& layout, Polarity polarity,
                                       BddManager& out );

struct Unfolding
{
    BooleanNetwork network;
    UnfoldLayout layout;
    Mode mode = Mode::exact;
};

[[nodiscard]] Unfolding unfold( const BooleanNetwork& net, const UnfoldSpec& spec );

// Plain components must be at Boolean levels.
[[nodiscard]] BoolState encode_state( const MPState& x, const UnfoldLayout& layout );
// Throws Error(non_level_triplet) unless every triplet is 000, 001, 101 or 111.
[[nodiscard]] MPState decode_state( const BoolState& s, const UnfoldLayout& layout );

[[nodiscard]] Triplet triplet_of( const BoolState& s, const UnfoldLayout& layout, std::size_t k );
// Every unfolded triplet decodes to a level.
[[nodiscard]] bool is_encoded( const BoolState& s, const UnfoldLayout& layout );
// Every unfolded triplet is a level or an intermediate (no artifacts).
[[nodiscard]] bool is_valid( const BoolState& s, const UnfoldLayout& layout );

// Maps a pattern over original components to one over unfolded components;
// '*' widens to "***" on unfolded components.
[[nodiscard]] StatePattern encode_pattern( const StatePattern& p, const UnfoldLayout& layout );

// Canonical expansion of a Most Permissive path into an asynchronous path of
// the full unfolding: i->1 goes through 011, d->0 through 100, every other
// step is a single flip. Throws Error(not_a_path) if a step is not a
// Most Permissive transition of `net`.
[[nodiscard]] std::vector< BoolState > translate_trajectory( const BooleanNetwork& net,
                                                              std::span< const MPState > path );

} // namespace mpu
