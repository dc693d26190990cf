#pragma once

#include <stdexcept>
#include <string>

namespace equitri {

// Base for every error the library throws on bad input or unsupported cases.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class InvalidInput : public Error {
 public:
  using Error::Error;
};

// Zero-area or otherwise degenerate triangle (an angle <= 0, apex on the base line).
class DegenerateTriangle : public InvalidInput {
 public:
  using InvalidInput::InvalidInput;
};

// Argument outside the domain a closed form is defined on.
class DomainError : public Error {
 public:
  using Error::Error;
};

}  // namespace equitri
