#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace thuelab {

/// Invalid argument or precondition violation. CLI exit code 1.
class domain_error : public std::runtime_error {
public:
  explicit domain_error(const std::string& what) : std::runtime_error(what) {}
};

/// Search or enumeration exceeded its node budget. CLI exit code 2.
/// Carries whatever partial progress the caller can still report.
class budget_error : public std::runtime_error {
public:
  budget_error(const std::string& what, std::uint64_t nodes_explored,
               std::uint64_t best_proven = 0)
      : std::runtime_error(what), nodes_explored(nodes_explored), best_proven(best_proven) {}

  std::uint64_t nodes_explored;
  std::uint64_t best_proven;
};

/// File system or stream failure. CLI exit code 3.
class io_error : public std::runtime_error {
public:
  explicit io_error(const std::string& what) : std::runtime_error(what) {}
};

/// Malformed input file; line is 1-based.
class parse_error : public io_error {
public:
  parse_error(const std::string& what, std::size_t line)
      : io_error(what + " (line " + std::to_string(line) + ")"), line(line) {}

  std::size_t line;
};

}  // namespace thuelab
