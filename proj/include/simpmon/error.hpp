#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace simpmon {

// Malformed input: bad tables, out-of-range letters, parse failures.
class input_error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class parse_error : public input_error {
 public:
  parse_error(std::size_t line, std::size_t column, const std::string& what)
      : input_error("line " + std::to_string(line) + ", column " +
                    std::to_string(column) + ": " + what),
        line_(line),
        column_(column) {}

  std::size_t line() const noexcept { return line_; }
  std::size_t column() const noexcept { return column_; }

 private:
  std::size_t line_;
  std::size_t column_;
};

// An enumeration or matrix would exceed the configured budget.
class resource_error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace simpmon
