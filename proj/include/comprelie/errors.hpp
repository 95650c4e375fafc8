#pragma once

#include <stdexcept>
#include <string>

namespace comprelie {

/// Malformed textual input (trees, words, scalars, spec files).
class ParseError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// A computation was asked to go past a configured degree or size bound.
class ResourceError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Precondition violated by a caller (bad vertex reference, non-ideal, ...).
class InvalidArgument : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Global degree guard. Defaults to 7; the COMPRELIE_MAXDEG environment
/// variable overrides it.
int degree_limit();

/// Overrides the guard for the rest of the process (CLI --force).
void set_degree_limit(int limit);

/// Throws ResourceError when `degree` exceeds degree_limit().
void check_degree(int degree, const std::string& what);

}  // namespace comprelie
