#pragma once

#include <stdexcept>
#include <string>

namespace foldloop {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// braid
struct PatternMismatch : Error {
  using Error::Error;
};

// linkdiag
struct UnknownComponent : Error {
  using Error::Error;
};
struct SameComponent : Error {
  using Error::Error;
};

// band
struct MultiComponentCore : Error {
  using Error::Error;
};

// folds
struct EvenLoopCount : Error {
  using Error::Error;
};
struct InvalidFold : Error {
  using Error::Error;
};

// text I/O
struct SyntaxError : Error {
  using Error::Error;
};
struct BoundsError : Error {
  using Error::Error;
};

}  // namespace foldloop
