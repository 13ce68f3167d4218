#pragma once

#include "mpu/bdd.hpp"
#include "mpu/expr.hpp"
#include "mpu/state.hpp"

#include <cstddef>
#include <functional>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace mpu
{

// Builds the diagram of `e` in `manager`, testing expression variable k as
// diagram variable `var_of(k)`.
[[nodiscard]] Bdd to_bdd( const Expr& e, BddManager& manager,
                          const std::function< Bdd::var_id( std::size_t ) >& var_of );

// Identity variable mapping.
[[nodiscard]] Bdd to_bdd( const Expr& e, BddManager& manager );

// Sum of the diagram's disjoint path cubes, literals in variable order.
[[nodiscard]] Expr sum_of_products( const Bdd& f );

// An ordered list of named components, each with one update rule. Rules are
// compiled to canonical diagrams at construction, with diagram variable k
// being component k. Immutable after construction.
class BooleanNetwork
{
    std::vector< std::string > _names;
    std::vector< Expr > _rules;
    std::shared_ptr< BddManager > _manager;
    std::vector< Bdd > _functions;
    std::unordered_map< std::string, std::size_t > _index;

    void index_names();

public:
    BooleanNetwork() = default;

    // Throws Error(invalid_argument) on duplicate names or out-of-range
    // variable indices.
    BooleanNetwork( std::vector< std::string > names, std::vector< Expr > rules );

    // Rules given directly as diagrams over `functions[*].manager()`; the
    // expression form is derived from the diagram.
    BooleanNetwork( std::vector< std::string > names, std::vector< Bdd > functions );

    [[nodiscard]] std::size_t size() const { return _names.size(); }
    [[nodiscard]] const std::vector< std::string >& names() const { return _names; }
    [[nodiscard]] const std::string& name( std::size_t j ) const { return _names.at( j ); }
    [[nodiscard]] const Expr& rule( std::size_t j ) const { return _rules.at( j ); }
    [[nodiscard]] const Bdd& function( std::size_t j ) const { return _functions.at( j ); }
    [[nodiscard]] const std::shared_ptr< BddManager >& manager() const { return _manager; }
    [[nodiscard]] std::optional< std::size_t > index_of( std::string_view name ) const;
};

// f_j(s), evaluated on the rule's expression tree.
[[nodiscard]] bool eval_rule( const BooleanNetwork& net, std::size_t j, const BoolState& s );

[[nodiscard]] const Bdd& build_function( const BooleanNetwork& net, std::size_t j );

[[nodiscard]] std::vector< std::size_t > support( const Bdd& f );

// Same component names and, component by component, the same function.
[[nodiscard]] bool same_functions( const BooleanNetwork& a, const BooleanNetwork& b );

} // namespace mpu
