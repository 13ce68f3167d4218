#pragma once

#include "mpu/reach.hpp"
#include "mpu/reggraph.hpp"

#include <algorithm>
#include <string>

namespace mpu
{

// Green positive, red negative, blue undetermined sign.
[[nodiscard]] std::string export_dot( const RegGraph& g );

template < class State >
[[nodiscard]] std::string export_dot( const Stg< State >& g )
{
    std::string out = "digraph stg {\n";
    out += "  label=\"" + g.semantics + ( g.cap_exceeded ? " (cap exceeded)" : "" ) + "\";\n";
    out += "  node [shape=box, fontname=\"monospace\"];\n";
    for ( const auto& n : g.nodes )
    {
        const bool root = std::find( g.roots.begin(), g.roots.end(), n ) != g.roots.end();
        out += "  \"" + n.to_string() + "\"" + ( root ? " [penwidth=2]" : "" ) + ";\n";
    }
    for ( const auto& e : g.edges )
    {
        out += "  \"" + g.nodes[ e.from ].to_string() + "\" -> \"" + g.nodes[ e.to ].to_string() + "\"";
        if ( e.style == EdgeStyle::dotted )
            out += " [style=dotted]";
        out += ";\n";
    }
    out += "}\n";
    return out;
}

} // namespace mpu
