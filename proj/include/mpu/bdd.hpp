#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <limits>
#include <memory>
#include <optional>
#include <tuple>
#include <unordered_map>
#include <unordered_set>
#include <utility>
#include <vector>

namespace mpu
{

class Bdd;

// Reduced ordered binary decision diagrams with a shared unique table.
// Variable order is the numeric order of variable ids. Nodes are never
// freed; managers are sized for one model and its transformations.
//
// Building new diagrams mutates the manager and is not thread-safe;
// evaluating existing diagrams is read-only.
class BddManager : public std::enable_shared_from_this< BddManager >
{
public:
    using node_id = std::uint32_t;
    using var_id = std::uint32_t;

    static constexpr node_id false_node = 0;
    static constexpr node_id true_node = 1;
    static constexpr var_id terminal_var = std::numeric_limits< var_id >::max();

    struct node
    {
        var_id var;
        node_id low;
        node_id high;
    };

    enum class op : std::uint8_t
    {
        conj,
        disj,
        exclusive,
    };

    static std::shared_ptr< BddManager > create();

    [[nodiscard]] Bdd constant( bool value );
    [[nodiscard]] Bdd var( var_id v );
    [[nodiscard]] Bdd nvar( var_id v );
    [[nodiscard]] Bdd ite( var_id v, const Bdd& high, const Bdd& low );

    [[nodiscard]] const node& at( node_id id ) const { return _nodes[ id ]; }
    [[nodiscard]] std::size_t size() const { return _nodes.size(); }

    node_id make( var_id v, node_id low, node_id high );
    node_id apply( op o, node_id a, node_id b );
    node_id negate( node_id a );
    node_id restrict( node_id a, var_id v, bool value );
    node_id exists( node_id a, var_id v );

private:
    BddManager();

    struct triple_hash
    {
        std::size_t operator()( const std::tuple< std::uint32_t, std::uint32_t, std::uint32_t >& t ) const noexcept;
    };
    using triple = std::tuple< std::uint32_t, std::uint32_t, std::uint32_t >;

    std::vector< node > _nodes;
    std::unordered_map< triple, node_id, triple_hash > _unique;
    std::unordered_map< triple, node_id, triple_hash > _apply_cache;
    std::unordered_map< node_id, node_id > _negate_cache;
};

// Handle to a canonical diagram. Two handles from the same manager compare
// equal iff they denote the same Boolean function.
class Bdd
{
    std::shared_ptr< BddManager > _manager;
    BddManager::node_id _id = BddManager::false_node;

public:
    using var_id = BddManager::var_id;
    using cube = std::vector< std::pair< var_id, bool > >;

    Bdd() = default;
    Bdd( std::shared_ptr< BddManager > manager, BddManager::node_id id ) : _manager{ std::move( manager ) }, _id{ id } {}

    [[nodiscard]] bool valid() const { return _manager != nullptr; }
    [[nodiscard]] const std::shared_ptr< BddManager >& manager() const { return _manager; }
    [[nodiscard]] BddManager::node_id id() const { return _id; }

    [[nodiscard]] bool is_true() const { return _id == BddManager::true_node; }
    [[nodiscard]] bool is_false() const { return _id == BddManager::false_node; }
    [[nodiscard]] bool is_constant() const { return _id <= BddManager::true_node; }

    // Top variable; only meaningful on non-constant diagrams.
    [[nodiscard]] var_id var() const { return _manager->at( _id ).var; }
    [[nodiscard]] Bdd low() const { return { _manager, _manager->at( _id ).low }; }
    [[nodiscard]] Bdd high() const { return { _manager, _manager->at( _id ).high }; }

    friend Bdd operator&( const Bdd& a, const Bdd& b );
    friend Bdd operator|( const Bdd& a, const Bdd& b );
    friend Bdd operator^( const Bdd& a, const Bdd& b );
    friend Bdd operator~( const Bdd& a );
    Bdd& operator&=( const Bdd& other ) { return *this = *this & other; }
    Bdd& operator|=( const Bdd& other ) { return *this = *this | other; }

    friend bool operator==( const Bdd& a, const Bdd& b ) { return a._manager == b._manager && a._id == b._id; }

    [[nodiscard]] Bdd restrict( var_id v, bool value ) const { return { _manager, _manager->restrict( _id, v, value ) }; }
    [[nodiscard]] Bdd exists( var_id v ) const { return { _manager, _manager->exists( _id, v ) }; }

    // `assignment[v]` must be convertible to bool for every tested v.
    template < class Assignment >
    [[nodiscard]] bool eval( const Assignment& assignment ) const
    {
        auto id = _id;
        while ( id > BddManager::true_node )
        {
            const auto& n = _manager->at( id );
            id = assignment[ n.var ] ? n.high : n.low;
        }
        return id == BddManager::true_node;
    }

    // True iff some path reaches the `value` terminal when each tested
    // variable v may only take the values allowed by `allowed(v)`, which
    // returns {may_be_0, may_be_1}. Read-only on the manager.
    template < class Allowed >
    [[nodiscard]] bool can_attain( bool value, Allowed&& allowed ) const
    {
        const auto target = value ? BddManager::true_node : BddManager::false_node;
        std::vector< BddManager::node_id > stack{ _id };
        std::unordered_set< BddManager::node_id > seen{ _id };
        while ( !stack.empty() )
        {
            const auto id = stack.back();
            stack.pop_back();
            if ( id == target )
                return true;
            if ( id <= BddManager::true_node )
                continue;
            const auto& n = _manager->at( id );
            const auto [ may0, may1 ] = allowed( n.var );
            if ( may0 && seen.insert( n.low ).second )
                stack.push_back( n.low );
            if ( may1 && seen.insert( n.high ).second )
                stack.push_back( n.high );
        }
        return false;
    }

    // Variables the function depends on, in increasing order.
    [[nodiscard]] std::vector< var_id > support() const;

    // Disjoint cubes, one per path to the true terminal, low branch first.
    [[nodiscard]] std::vector< cube > cubes() const;

    // All satisfying assignments over variables 0..nvars-1 in lexicographic
    // order (variable 0 most significant, 0 before 1).
    void for_each_solution( std::size_t nvars, const std::function< void( const std::vector< bool >& ) >& visit ) const;

    // Smallest satisfying assignment in the above order.
    [[nodiscard]] std::optional< std::vector< bool > > any_solution( std::size_t nvars ) const;

    [[nodiscard]] std::size_t node_count() const;
};

} // namespace mpu
