#pragma once

#include <stdexcept>
#include <string>

namespace depknap {

// Base for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed input: bad JSON, unknown fields, out-of-range parameters.
class InputError : public Error {
 public:
  using Error::Error;
};

// Sizes of two arguments disagree (selection vs instance, matrix vs graph).
class DimensionError : public Error {
 public:
  using Error::Error;
};

// A node sequence that is not a dependency path of the graph.
class InvalidPathError : public Error {
 public:
  using Error::Error;
};

// A configured size limit was exceeded (e.g. the exhaustive search cap).
class LimitError : public Error {
 public:
  using Error::Error;
};

}  // namespace depknap
