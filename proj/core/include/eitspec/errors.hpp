// errors.hpp: exception types shared across eitspec modules.

#pragma once

#include <stdexcept>
#include <string>

namespace eitspec {

// Base for every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Input outside an operation's mathematical domain (negative J, mu <= 0, ...).
class DomainError : public Error {
public:
    using Error::Error;
};

// Rabi frequency of zero handed to a formula that needs coupling.
class DegenerateCouplingError : public DomainError {
public:
    using DomainError::DomainError;
};

// Malformed line list, control list or scenario config.
class ParseError : public Error {
public:
    using Error::Error;
};

// More than one control selects the same line, or a selector matches nothing.
class ControlSelectionError : public Error {
public:
    using Error::Error;
};

class UnknownScenarioError : public Error {
public:
    using Error::Error;
};

// Numerical failure: singular 2x2 effective Hamiltonian.
class SingularMatrixError : public Error {
public:
    using Error::Error;
};

}  // namespace eitspec
