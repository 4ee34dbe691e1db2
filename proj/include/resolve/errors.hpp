#pragma once

#include <stdexcept>
#include <string>

namespace resolve {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Malformed text input (monomials, ideal files, face files, order lists).
class ParseError : public Error {
public:
    using Error::Error;
};

/// Monomials or complexes over incompatible variable tables / ideals.
class DimensionError : public Error {
public:
    using Error::Error;
};

/// A configured size cap (--max-gens, --max-orders) would be exceeded.
class ResourceError : public Error {
public:
    using Error::Error;
};

/// Arguments outside an operation's domain (trivial ideal, mu not in I, bad prime).
class DomainError : public Error {
public:
    using Error::Error;
};

}  // namespace resolve
