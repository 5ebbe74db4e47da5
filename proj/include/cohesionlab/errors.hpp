#pragma once

#include <stdexcept>
#include <string>

namespace clab {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct ParseError : Error {
  int line, column;
  ParseError(const std::string& msg, int line_, int col_)
      : Error("parse error at " + std::to_string(line_) + ":" + std::to_string(col_) + ": " + msg),
        line(line_),
        column(col_) {}
};

struct UnresolvedName : Error {
  using Error::Error;
};

struct NotWellDefined : Error {
  using Error::Error;
};

struct InfiniteDimensional : Error {
  using Error::Error;
};

struct PositiveDimensional : Error {
  using Error::Error;
};

struct NotWeil : Error {
  using Error::Error;
};

struct DNotWeil : Error {
  using Error::Error;
};

struct SizeLimit : Error {
  using Error::Error;
};

struct NotPreCohesiveSite : Error {
  using Error::Error;
};

struct NotARing : Error {
  using Error::Error;
};

}  // namespace clab
