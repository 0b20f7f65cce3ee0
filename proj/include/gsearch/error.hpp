#pragma once

#include <stdexcept>
#include <string>

namespace gsearch {

// Base for every error raised by the library. Absence results (non-isomorphic
// pairs, unsatisfiable formulas) are values, never exceptions.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed textual or structured input for a declared format.
class FormatError : public Error {
 public:
  using Error::Error;
};

// Self-loops or asymmetric (directed) adjacency. Only simple undirected
// graphs are representable.
class NotSimpleError : public Error {
 public:
  using Error::Error;
};

// Vertex count beyond the supported cap, or beyond a format's limit.
class CapacityError : public Error {
 public:
  using Error::Error;
};

// Declared sizes that disagree (vertex counts, permutation lengths, ...).
class SizeMismatchError : public Error {
 public:
  using Error::Error;
};

}  // namespace gsearch
