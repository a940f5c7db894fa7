#pragma once

#include <stdexcept>
#include <string>

namespace face {

// Error categories map to CLI exit codes; see tools/face_main.cpp.
class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

class ParseError : public Error {
 public:
  using Error::Error;
};

class ShapeError : public Error {
 public:
  using Error::Error;
};

class DataError : public Error {
 public:
  using Error::Error;
};

class ConfigError : public Error {
 public:
  using Error::Error;
};

class IndexError : public Error {
 public:
  using Error::Error;
};

// Required input file absent (CLI exit code 2).
class MissingInputError : public Error {
 public:
  using Error::Error;
};

// Training stage requested before its prerequisite exists (CLI exit code 3).
class StageOrderError : public Error {
 public:
  using Error::Error;
};

// Token not in the codebook vocabulary (CLI exit code 4).
class UnknownTokenError : public Error {
 public:
  using Error::Error;
};

}  // namespace face
