#pragma once

#include <stdexcept>
#include <string>

namespace artin {

// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A graph, map or defining graph references something that does not exist,
// or violates a structural invariant (loops, duplicate edges, bad labels).
class StructuralError : public Error {
 public:
  using Error::Error;
};

// An operation was called outside its documented domain, e.g. free_rank on a
// disconnected graph.
class PreconditionError : public Error {
 public:
  using Error::Error;
};

// A search or enumeration was refused because its input exceeds the bound.
class RefusalError : public Error {
 public:
  using Error::Error;
};

}  // namespace artin
