#pragma once

#include <stdexcept>
#include <string>

namespace shufflekit {

/// Base of every exception thrown by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// A precondition was violated (length mismatch, alphabet mismatch, empty operand list).
class ContractError : public Error {
public:
    using Error::Error;
};

/// A configured work or size bound was exceeded. Distinct from a definitive "no".
class ResourceLimitError : public Error {
public:
    using Error::Error;
};

/// Malformed textual input: word, regex or NFA JSON.
class ParseError : public Error {
public:
    using Error::Error;
};

} // namespace shufflekit
