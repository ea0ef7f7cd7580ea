#pragma once

#include <stdexcept>
#include <string>

namespace wavestencil {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// The interpolation matrix has zero determinant: the node set is not
/// unisolvent for the requested monomial space.
class SingularMatrix : public Error {
public:
    using Error::Error;
};

/// Argument outside the domain of a mathematical function.
class DomainError : public Error {
public:
    using Error::Error;
};

class UnknownScheme : public Error {
public:
    explicit UnknownScheme(const std::string& name)
        : Error("unknown scheme '" + name + "' (expected one of P5, C5, P9, C9, P13, C13)") {}
};

/// Dirichlet boundaries only support stencils of radius 1.
class RadiusUnsupported : public Error {
public:
    using Error::Error;
};

/// The reference solution vanishes at every sampled point, so the relative
/// error has a zero denominator.
class DegenerateNorm : public Error {
public:
    using Error::Error;
};

/// No Courant number in the search interval satisfies the von Neumann bound.
class NeverStable : public Error {
public:
    using Error::Error;
};

/// Malformed scheme table text.
class ParseError : public Error {
public:
    using Error::Error;
};

}  // namespace wavestencil
