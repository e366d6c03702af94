#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace rangequant {

// Root of every error the library throws. Callers that only need to know
// "the pipeline failed" catch this; tests match the concrete subclasses.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::size_t line)
      : Error(what + " (line " + std::to_string(line) + ")"), line_(line) {}
  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

class DomainError : public Error { using Error::Error; };
class EmptyInputError : public Error { using Error::Error; };
class LengthError : public Error { using Error::Error; };
class IndexError : public Error { using Error::Error; };
class AlignmentError : public Error { using Error::Error; };
class ConfigurationError : public Error { using Error::Error; };
class DegenerateError : public Error { using Error::Error; };
class UndefinedStatisticError : public Error { using Error::Error; };
class SingularDesignError : public Error { using Error::Error; };
class SolverError : public Error { using Error::Error; };
class BootstrapError : public Error { using Error::Error; };
class CovarianceError : public Error { using Error::Error; };
class RecursionError : public Error { using Error::Error; };
class PreconditionError : public Error { using Error::Error; };

}  // namespace rangequant
