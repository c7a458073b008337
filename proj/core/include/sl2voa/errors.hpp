#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace sl2voa {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct BasisMismatch : Error {
  using Error::Error;
};

struct ContextMismatch : Error {
  using Error::Error;
};

struct OutOfRange : Error {
  using Error::Error;
};

struct DegreeCapExceeded : Error {
  using Error::Error;
};

struct ParityMismatch : Error {
  using Error::Error;
};

struct NotHomogeneous : Error {
  using Error::Error;
};

struct UnknownName : Error {
  using Error::Error;
};

class ParseError : public Error {
public:
  ParseError(const std::string& what, std::size_t position)
      : Error(what + " at position " + std::to_string(position)), position_(position) {}
  std::size_t position() const noexcept { return position_; }

private:
  std::size_t position_;
};

}  // namespace sl2voa
