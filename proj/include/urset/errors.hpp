#pragma once

#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace urset {

/// Base of every error raised by the core library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A mathematical precondition was violated (valuation of zero, composite
/// "prime", zero polynomial, ...).
class DomainError : public Error {
 public:
  using Error::Error;
};

/// Malformed input text: rationals, JSON documents, schema violations.
/// `path` names the offending location ("pairs[3].x", "--epsilon").
class ParseError : public Error {
 public:
  ParseError(std::string path, const std::string& what)
      : Error(path.empty() ? what : path + ": " + what), path_(std::move(path)) {}
  const std::string& path() const noexcept { return path_; }

 private:
  std::string path_;
};

/// A factoring or enumeration budget was exhausted.
class BudgetError : public Error {
 public:
  using Error::Error;
};

/// Enumeration stopped at its budget. Carries every result found in the
/// completed sub-range so the caller can still report them.
template <class T>
class PartialResultError : public BudgetError {
 public:
  PartialResultError(const std::string& what, std::vector<T> partial, std::string completed_range)
      : BudgetError(what), partial_(std::move(partial)), completed_range_(std::move(completed_range)) {}
  const std::vector<T>& partial() const noexcept { return partial_; }
  const std::string& completed_range() const noexcept { return completed_range_; }

 private:
  std::vector<T> partial_;
  std::string completed_range_;
};

}  // namespace urset
