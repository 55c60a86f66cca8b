#pragma once

#include <stdexcept>
#include <string>

namespace qk {

class Error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

// Malformed input: bad labels, non-parallel relations, schema violations.
class ValidationError : public Error {
public:
  using Error::Error;
};

// A G-grading that does not make every relation homogeneous.
class HomogeneityError : public ValidationError {
public:
  using ValidationError::ValidationError;
};

// A request that exceeds the truncation bounds of a model or resolution.
class BoundError : public Error {
public:
  using Error::Error;
};

} // namespace qk
