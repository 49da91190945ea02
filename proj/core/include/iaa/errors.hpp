#pragma once

#include <stdexcept>
#include <string>

namespace iaa {

/// Malformed input text (CSV/JSON cells, numbers, schema violations).
class ParseError : public std::runtime_error {
  public:
    explicit ParseError(const std::string& what) : std::runtime_error(what) {}
};

/// Structurally valid input that violates a domain rule (reversed interval,
/// empty set, non-unit weights, degenerate population, ...).
class ValidationError : public std::invalid_argument {
  public:
    explicit ValidationError(const std::string& what) : std::invalid_argument(what) {}
};

}  // namespace iaa
