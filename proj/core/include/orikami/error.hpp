#pragma once

#include <stdexcept>
#include <string>

namespace orikami {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class DegenerateError : public Error {  // zero-length vectors, collapsed triangles
 public:
  using Error::Error;
};

class CongruenceError : public Error {
 public:
  CongruenceError(const std::string& what, double defect)
      : Error(what), defect_(defect) {}
  double defect() const noexcept { return defect_; }

 private:
  double defect_;
};

class DomainError : public Error {
 public:
  using Error::Error;
};

class NonPlanarError : public Error {
 public:
  using Error::Error;
};

class NonGenericError : public Error {
 public:
  using Error::Error;
};

class NotAKnotError : public Error {
 public:
  using Error::Error;
};

class SizeError : public Error {
 public:
  using Error::Error;
};

class UnsupportedError : public Error {
 public:
  using Error::Error;
};

class ConstructionError : public Error {
 public:
  using Error::Error;
};

class NumericError : public Error {
 public:
  using Error::Error;
};

class GenerationError : public Error {
 public:
  using Error::Error;
};

/// Malformed input documents. The message names the offending key.
class SchemaError : public Error {
 public:
  using Error::Error;
};

}  // namespace orikami
