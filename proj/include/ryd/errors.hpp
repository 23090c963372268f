#pragma once

#include <stdexcept>
#include <string>

namespace ryd {

struct Error : std::runtime_error {
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

struct RingMismatch : Error {
  RingMismatch() : Error("ring mismatch: operands belong to different coefficient rings") {}
};

struct RankMismatch : Error {
  explicit RankMismatch(const std::string& what) : Error(what) {}
};

// Scalar / tangle syntax errors carry a position (byte offset or line:col).
struct ParseError : Error {
  ParseError(const std::string& what, std::size_t pos)
      : Error(what + " (at position " + std::to_string(pos) + ")"), position(pos) {}
  std::size_t position;
};

struct TangleError : Error {
  TangleError(const std::string& what, int line, int col)
      : Error("line " + std::to_string(line) + ", col " + std::to_string(col) + ": " + what),
        line(line), col(col) {}
  explicit TangleError(const std::string& what) : Error(what), line(0), col(0) {}
  int line, col;
};

struct NotCertified : Error {
  explicit NotCertified(const std::string& what) : Error(what) {}
};

struct TwistNotScalar : Error {
  TwistNotScalar() : Error("twist is not a scalar multiple of the identity; framing normalization unavailable") {}
};

}  // namespace ryd
