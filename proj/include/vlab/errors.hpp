#pragma once

#include <stdexcept>

namespace vlab {

// Textual input (rationals, polynomials, CLI values) that cannot be parsed.
class ParseError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

// An enumeration that would exceed the configured state cap.
class ResourceLimitError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

// Two computation routes that must agree exactly did not.
class InternalInconsistencyError : public std::logic_error {
public:
  using std::logic_error::logic_error;
};

} // namespace vlab
