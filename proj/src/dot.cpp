#include "mpu/dot.hpp"

namespace mpu
{

std::string export_dot( const RegGraph& g )
{
    std::string out = "digraph regulatory_graph {\n";
    out += "  node [shape=ellipse];\n";
    for ( const auto& n : g.names )
        out += "  \"" + n + "\";\n";
    for ( const auto& e : g.edges )
    {
        out += "  \"" + g.names[ e.source ] + "\" -> \"" + g.names[ e.target ] + "\" ";
        switch ( e.sign )
        {
        case Sign::positive: out += "[color=green, arrowhead=normal]"; break;
        case Sign::negative: out += "[color=red, arrowhead=tee]"; break;
        case Sign::dual: out += "[color=blue, arrowhead=dot]"; break;
        }
        out += ";\n";
    }
    out += "}\n";
    return out;
}

} // namespace mpu
