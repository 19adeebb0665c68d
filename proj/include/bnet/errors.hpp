#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace bnet
{

class Error : public std::runtime_error
{
public:
    using std::runtime_error::runtime_error;
};

// Malformed network or configuration (width mismatch, literal out of range).
class StructuralError : public Error
{
public:
    using Error::Error;
};

// A size guardrail or term-count cap was exceeded.
class CapacityError : public Error
{
public:
    using Error::Error;
};

// Argument is well-formed but not meaningful for the operation
// (e.g. a state sequence that is not a cycle of the dynamics).
class DomainError : public Error
{
public:
    using Error::Error;
};

// Name resolution failures after a successful parse.
class SemanticError : public Error
{
public:
    using Error::Error;
};

// Broken internal invariant; always a bug.
class InvariantError : public Error
{
public:
    using Error::Error;
};

class ParseError : public Error
{
public:
    ParseError( std::size_t line, std::size_t column, std::string message, std::string token = {} )
            : Error( "line " + std::to_string( line ) + ", column " + std::to_string( column ) + ": " + message
                     + ( token.empty() ? std::string{} : " near '" + token + "'" ) ),
              line_{ line }, column_{ column }, message_{ std::move( message ) }, token_{ std::move( token ) }
    {
    }

    // 1-based.
    [[nodiscard]] std::size_t line() const { return line_; }
    [[nodiscard]] std::size_t column() const { return column_; }
    [[nodiscard]] const std::string& message() const { return message_; }
    [[nodiscard]] const std::string& token() const { return token_; }

private:
    std::size_t line_;
    std::size_t column_;
    std::string message_;
    std::string token_;
};

} // namespace bnet
