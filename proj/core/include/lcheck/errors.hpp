#pragma once

#include <stdexcept>
#include <string>

namespace lcheck {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed expression, hypothesis line, case file or data file.
class ParseError : public Error {
 public:
  ParseError(const std::string& what, int line = 0)
      : Error(line > 0 ? "line " + std::to_string(line) + ": " + what : what), line_(line) {}
  int line() const { return line_; }

 private:
  int line_;
};

/// An opaque atom reached a Satake evaluation.
class NotEvaluable : public Error {
 public:
  explicit NotEvaluable(const std::string& atom)
      : Error("opaque atom not evaluable: " + atom), atom_(atom) {}
  const std::string& atom() const { return atom_; }

 private:
  std::string atom_;
};

class NoDualityData : public Error {
 public:
  explicit NoDualityData(const std::string& atom)
      : Error("no duality data declared for " + atom), atom_(atom) {}
  const std::string& atom() const { return atom_; }

 private:
  std::string atom_;
};

class UndeclaredCuspidality : public Error {
 public:
  explicit UndeclaredCuspidality(const std::string& atom)
      : Error("cuspidality undeclared for " + atom), atom_(atom) {}
  const std::string& atom() const { return atom_; }

 private:
  std::string atom_;
};

class MissingVariable : public Error {
 public:
  explicit MissingVariable(const std::string& var)
      : Error("Satake point does not supply " + var), var_(var) {}
  const std::string& variable() const { return var_; }

 private:
  std::string var_;
};

/// Eigenvalue data, character data or a Satake point violating its contract.
class DataError : public Error {
 public:
  using Error::Error;
};

}  // namespace lcheck
