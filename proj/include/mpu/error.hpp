#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>

namespace mpu
{

enum class ErrorKind
{
    syntax,
    undeclared_identifier,
    duplicate_target,
    empty_model,
    invalid_argument,
    name_collision,
    non_level_triplet,
    not_a_path,
    size_limit,
    cap_exceeded,
    io,
};

[[nodiscard]] std::string_view to_string( ErrorKind kind );

// Every failure raised by the library carries a kind so front ends can
// render it as a structured record.
class Error : public std::runtime_error
{
    ErrorKind _kind;

public:
    Error( ErrorKind kind, const std::string& message ) : std::runtime_error( message ), _kind{ kind } {}

    [[nodiscard]] ErrorKind kind() const { return _kind; }
};

class ParseError : public Error
{
    std::size_t _line;
    std::size_t _column;

public:
    ParseError( ErrorKind kind, const std::string& message, std::size_t line, std::size_t column );

    // 1-based position of the offending token.
    [[nodiscard]] std::size_t line() const { return _line; }
    [[nodiscard]] std::size_t column() const { return _column; }
};

} // namespace mpu
