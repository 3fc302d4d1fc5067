#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace coauth {

// Root of every error raised by the library. The CLI maps subclasses onto
// exit codes: ConfigError -> 1, ConvergenceError -> 3, everything else -> 2.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed input header or file structure.
class FormatError : public Error {
 public:
  using Error::Error;
};

// A single data row could not be interpreted.
class RowError : public Error {
 public:
  RowError(std::size_t line, const std::string& what)
      : Error("line " + std::to_string(line) + ": " + what), line_(line) {}
  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

// Corpus-level inconsistency, e.g. duplicate record ids.
class CorpusError : public Error {
 public:
  using Error::Error;
};

// Author name that cannot be normalized.
class NameError : public Error {
 public:
  using Error::Error;
};

// Invalid user configuration (merge map cycles, bad flags, unreadable paths).
class ConfigError : public Error {
 public:
  using Error::Error;
};

// Operation called outside its domain (empty graph, bad arguments, ...).
class DomainError : public Error {
 public:
  using Error::Error;
};

// Regression design matrix is rank deficient.
class RankError : public DomainError {
 public:
  using DomainError::DomainError;
};

// Rank correlation undefined because one series has no rank variance.
class UndefinedCorrelationError : public DomainError {
 public:
  using DomainError::DomainError;
};

class ConvergenceError : public Error {
 public:
  ConvergenceError(const std::string& what, double residual)
      : Error(what), residual_(residual) {}
  double residual() const noexcept { return residual_; }

 private:
  double residual_;
};

}  // namespace coauth
