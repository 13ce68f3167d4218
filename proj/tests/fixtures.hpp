#pragma once

// Reference data for Example A and the signal model, shared between the unit
// tests and the acceptance runner.

#include "mpu/bnet.hpp"
#include "mpu/network.hpp"

#include <array>
#include <set>
#include <string>
#include <string_view>
#include <vector>

namespace fixtures
{

inline const char* example_a_text = "targets, factors\n"
                                    "x1, x1 & !x3\n"
                                    "x2, x1\n"
                                    "x3, !x1\n";

// Declared with the input first so that states read (signal, x1, x2, x3).
inline const char* signal_text = "targets, factors\n"
                                 "signal, signal\n"
                                 "x1, signal\n"
                                 "x2, x1\n"
                                 "x3, !x1 & x2\n";

inline mpu::BooleanNetwork example_a() { return mpu::parse_bnet( example_a_text ); }
inline mpu::BooleanNetwork signal_model() { return mpu::parse_bnet( signal_text ); }

struct TransitionRow
{
    std::string_view from;
    // Comma-separated alternatives; each character that is not '-' and differs
    // from `from` at its position is one successor changing that coordinate.
    std::string_view to;
};

// Most Permissive transitions of Example A, all 64 configurations, as
// published. Row 11i omits the move to 11d that the transition rules allow.
inline constexpr std::array< TransitionRow, 64 > mp_table{ {
        { "000", "00i" },      { "00i", "001" },      { "00d", "000, --i" }, { "001", "001" },
        { "0i0", "01i, -d-" }, { "0ii", "011, -d-" }, { "0id", "010, -di" }, { "0i1", "011, -d-" },
        { "0d0", "00i" },      { "0di", "001" },      { "0dd", "000, --i" }, { "0d1", "001" },
        { "010", "0di" },      { "01i", "0d1" },      { "01d", "0d0, --i" }, { "011", "0d1" },

        { "i00", "1ii, d--" }, { "i0i", "1i1, d-d" }, { "i0d", "1i0, d-i" }, { "i01", "1id, d--" },
        { "ii0", "11i, dd-" }, { "iii", "111, ddd" }, { "iid", "110, ddi" }, { "ii1", "11d, dd-" },
        { "id0", "10i, di-" }, { "idi", "101, did" }, { "idd", "100, dii" }, { "id1", "10d, di-" },
        { "i10", "1di, d--" }, { "i1i", "1d1, d-d" }, { "i1d", "1d0, d-i" }, { "i11", "1dd, d--" },

        { "d00", "0ii, i--" }, { "d0i", "0i1, i-d" }, { "d0d", "0i0, i-i" }, { "d01", "0id" },
        { "di0", "01i, id-" }, { "dii", "011, idd" }, { "did", "010, idi" }, { "di1", "01d, -d-" },
        { "dd0", "00i, ii-" }, { "ddi", "001, iid" }, { "ddd", "000, iii" }, { "dd1", "00d, -i-" },
        { "d10", "0di, i--" }, { "d1i", "0d1, i-d" }, { "d1d", "0d0, i-i" }, { "d11", "0dd" },

        { "100", "1i0" },      { "10i", "di1, --d" }, { "10d", "di0" },      { "101", "did" },
        { "1i0", "110" },      { "1ii", "d11, --d" }, { "1id", "d10" },      { "1i1", "d1d" },
        { "1d0", "100, -i-" }, { "1di", "d01, -id" }, { "1dd", "d00, -i-" }, { "1d1", "d0d, -i-" },
        { "110", "110" },      { "11i", "d11" },      { "11d", "d10" },      { "111", "d1d" },
} };

inline constexpr std::array< TransitionRow, 8 > sync_table{ {
        { "000", "001" },
        { "001", "001" },
        { "010", "001" },
        { "011", "001" },
        { "100", "110" },
        { "101", "010" },
        { "110", "110" },
        { "111", "010" },
} };

inline std::set< std::string > expand( const TransitionRow& row )
{
    std::set< std::string > out;
    std::string_view rest = row.to;
    while ( !rest.empty() )
    {
        const auto comma = rest.find( ',' );
        auto alt = rest.substr( 0, comma );
        rest = comma == std::string_view::npos ? std::string_view{} : rest.substr( comma + 1 );
        while ( !alt.empty() && alt.front() == ' ' )
            alt.remove_prefix( 1 );
        for ( std::size_t p = 0; p < alt.size(); ++p )
        {
            if ( alt[ p ] == '-' || alt[ p ] == row.from[ p ] )
                continue;
            std::string next( row.from );
            next[ p ] = alt[ p ];
            out.insert( std::move( next ) );
        }
    }
    return out;
}

// Preimage patterns of the fully unfolded Example A, variables in the order
// x1_a x1_b x1_c x2_a ... x3_c. A variable is 1 exactly on the union.
inline const std::array< std::vector< std::string_view >, 9 > preimages{ {
        { "011******", "110******", "111******", "001******", "101****1*" },
        { "110******", "0*1******", "111*****0" },
        { "11*******", "0*1******" },
        { "***011***", "***110***", "***111***", "*0*001***", "**0101***" },
        { "***110***", "***0*1***", "*1*111***" },
        { "***11****", "***0*1***", "**1000***" },
        { "******011", "******110", "******111", "**1***001", "*1****101" },
        { "******110", "******0*1", "**0***111" },
        { "******11*", "******0*1", "*0****000" },
} };

inline bool matches( std::string_view pattern, std::string_view state )
{
    for ( std::size_t i = 0; i < pattern.size(); ++i )
        if ( pattern[ i ] != '*' && pattern[ i ] != state[ i ] )
            return false;
    return true;
}

inline bool preimage_value( std::size_t var, std::string_view state )
{
    for ( auto p : preimages[ var ] )
        if ( matches( p, state ) )
            return true;
    return false;
}

// A trajectory from 111 to the fixed point 001, and its encoding.
inline const std::vector< std::string > mp_path{ "111", "d11", "dd1", "d01", "001" };
inline const std::vector< std::string > encoded_path{ "111111111", "101111111", "101101111", "101100111",
                                                      "101000111", "100000111", "000000111" };

} // namespace fixtures
