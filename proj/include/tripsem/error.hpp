#ifndef TRIPSEM_ERROR_HPP
#define TRIPSEM_ERROR_HPP

#include <cstddef>
#include <stdexcept>
#include <string>

namespace tripsem {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Shapes or layouts that do not conform.
class DimensionError : public Error {
 public:
  using Error::Error;
};

// Negation requested on a layout with no inverted value dimensions.
class DegenerateNegationError : public Error {
 public:
  using Error::Error;
};

class UndefinedSimilarityError : public Error {
 public:
  using Error::Error;
};

// alpha_a + alpha_b == 0 in the weighted composition step.
class DegenerateWeightsError : public Error {
 public:
  using Error::Error;
};

class LookupError : public Error {
 public:
  explicit LookupError(const std::string& token)
      : Error("unknown token '" + token + "'"), token_(token) {}
  const std::string& token() const noexcept { return token_; }

 private:
  std::string token_;
};

class ArityError : public Error {
 public:
  using Error::Error;
};

class InvalidArgument : public Error {
 public:
  using Error::Error;
};

// Raised by the tree reader (position is a character offset) and the
// lexicon reader (position is a 1-based line number).
class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::size_t position)
      : Error(what), position_(position) {}
  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

}  // namespace tripsem

#endif  // TRIPSEM_ERROR_HPP
