#pragma once

#include <stdexcept>
#include <string>

namespace jacksym {

/// Division of a rational or rational function by zero.
class DivisionByZero : public std::domain_error {
public:
    explicit DivisionByZero(const std::string& what = "division by zero")
        : std::domain_error(what) {}
};

/// Evaluation of a rational function at a root of its denominator.
class SpecializationPole : public std::domain_error {
public:
    explicit SpecializationPole(const std::string& what)
        : std::domain_error(what) {}
};

/// A cell index that does not lie inside the Young diagram.
class CellOutOfDiagram : public std::out_of_range {
public:
    explicit CellOutOfDiagram(const std::string& what)
        : std::out_of_range(what) {}
};

/// A pairing was requested between elements of incompatible degrees.
class DegreeMismatch : public std::invalid_argument {
public:
    explicit DegreeMismatch(const std::string& what)
        : std::invalid_argument(what) {}
};

/// A torus weight that is identically zero where a nonzero one is required.
class ZeroWeight : public std::domain_error {
public:
    explicit ZeroWeight(const std::string& what)
        : std::domain_error(what) {}
};

/// Malformed textual input (partition syntax, JSON payloads).
class ParseError : public std::runtime_error {
public:
    explicit ParseError(const std::string& what)
        : std::runtime_error(what) {}
};

} // namespace jacksym
