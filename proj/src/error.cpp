#include "mpu/error.hpp"

namespace mpu
{

std::string_view to_string( ErrorKind kind )
{
    switch ( kind )
    {
    case ErrorKind::syntax: return "syntax";
    case ErrorKind::undeclared_identifier: return "undeclared-identifier";
    case ErrorKind::duplicate_target: return "duplicate-target";
    case ErrorKind::empty_model: return "empty-model";
    case ErrorKind::invalid_argument: return "invalid-argument";
    case ErrorKind::name_collision: return "name-collision";
    case ErrorKind::non_level_triplet: return "non-level-triplet";
    case ErrorKind::not_a_path: return "not-a-path";
    case ErrorKind::size_limit: return "size-limit";
    case ErrorKind::cap_exceeded: return "cap-exceeded";
    case ErrorKind::io: return "io";
    }
    return "unknown";
}

ParseError::ParseError( ErrorKind kind, const std::string& message, std::size_t line, std::size_t column )
        : Error( kind, "line " + std::to_string( line ) + ", column " + std::to_string( column ) + ": " + message ),
          _line{ line }, _column{ column }
{
}

} // namespace mpu
