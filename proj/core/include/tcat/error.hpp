#pragma once

#include <stdexcept>
#include <string>

namespace tcat {

// Every failure the library reports derives from Error. The category maps
// onto the command-line exit-code contract (2 usage, 3 I/O, 4 data shape).
class Error : public std::runtime_error {
 public:
  enum class Category { invalid_argument, io, data_shape, numerical };

  Error(Category category, const std::string& what)
      : std::runtime_error(what), category_(category) {}

  Category category() const noexcept { return category_; }

 private:
  Category category_;
};

class InvalidArgument : public Error {
 public:
  explicit InvalidArgument(const std::string& what)
      : Error(Category::invalid_argument, what) {}
};

class IoError : public Error {
 public:
  explicit IoError(const std::string& what) : Error(Category::io, what) {}
};

// Input data that is well-formed as a request but unusable: malformed rows,
// too few samples for a window, degenerate curves.
class DataError : public Error {
 public:
  explicit DataError(const std::string& what)
      : Error(Category::data_shape, what) {}
};

class ParseError : public DataError {
 public:
  ParseError(std::size_t line, const std::string& what)
      : DataError("line " + std::to_string(line) + ": " + what), line_(line) {}

  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

class NumericalError : public Error {
 public:
  explicit NumericalError(const std::string& what)
      : Error(Category::numerical, what) {}
};

}  // namespace tcat
