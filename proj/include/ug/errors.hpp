#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace ug {

// Argument outside the domain of an operation (unknown id, prefix too deep, ...).
struct DomainError : std::domain_error {
  using std::domain_error::domain_error;
};

// Input file that cannot be parsed into the expected structure.
struct ParseError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Structurally parsed object that violates a semantic invariant.
struct ValidationError : std::runtime_error {
  explicit ValidationError(std::vector<std::string> issues_)
      : std::runtime_error(join(issues_)), issues(std::move(issues_)) {}
  std::vector<std::string> issues;

 private:
  static std::string join(const std::vector<std::string>& v) {
    std::string out;
    for (const auto& s : v) {
      if (!out.empty()) out += "; ";
      out += s;
    }
    return out;
  }
};

}  // namespace ug
