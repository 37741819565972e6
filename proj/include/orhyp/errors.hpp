#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace orhyp {

// Base class for every error raised by the library.
class error : public std::runtime_error {
public:
    explicit error(const std::string& msg) : std::runtime_error(msg) {}
};

// A vertex, edge or point label that does not exist in the owning structure.
class lookup_error : public error {
public:
    explicit lookup_error(const std::string& msg) : error(msg) {}
};

// Argument outside the domain of an operation (e.g. a loop pair vi == vj).
class domain_error : public error {
public:
    explicit domain_error(const std::string& msg) : error(msg) {}
};

// Structural hypothesis of an operation not satisfied (non-linear input, ...).
class precondition_error : public error {
public:
    explicit precondition_error(const std::string& msg) : error(msg) {}
};

// Invalid construction: duplicate labels, repeated incidences, bad tokens.
class invalid_structure : public error {
public:
    explicit invalid_structure(const std::string& msg) : error(msg) {}
};

// Switching function whose domain does not exactly cover its target.
class coverage_error : public error {
public:
    explicit coverage_error(const std::string& msg) : error(msg) {}
};

class dimension_error : public error {
public:
    explicit dimension_error(const std::string& msg) : error(msg) {}
};

class convergence_error : public error {
public:
    explicit convergence_error(const std::string& msg) : error(msg) {}
};

// Random instance generation exhausted its attempt budget.
class generation_error : public error {
public:
    explicit generation_error(const std::string& msg) : error(msg) {}
};

// Text-format error carrying the 1-based line number it was raised on.
class parse_error : public error {
public:
    parse_error(std::size_t line, const std::string& msg)
        : error("line " + std::to_string(line) + ": " + msg), line_(line) {}

    std::size_t line() const noexcept { return line_; }

private:
    std::size_t line_;
};

} // namespace orhyp
