#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace ffmea {

/// Base class for every error raised by the toolkit.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Invalid membership-function or variable parameters.
class ParameterError : public Error {
 public:
  using Error::Error;
};

/// Inconsistent FIS or rule-base configuration.
class ConfigError : public Error {
 public:
  using Error::Error;
};

/// Bad input data (ratings, registers). Exit code 1 at the CLI.
class ValidationError : public Error {
 public:
  using Error::Error;
};

/// Text-format error tied to a 1-based line number of the source.
class ParseError : public Error {
 public:
  ParseError(const std::string& source, std::size_t line, const std::string& what)
      : Error(source + ":" + std::to_string(line) + ": " + what), line_(line) {}

  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

/// Failures during inference or defuzzification. Exit code 2 at the CLI.
class InferenceError : public Error {
 public:
  using Error::Error;
};

class NoRuleFiredError : public InferenceError {
 public:
  using InferenceError::InferenceError;
};

class DegenerateOutputError : public InferenceError {
 public:
  using InferenceError::InferenceError;
};

}  // namespace ffmea
