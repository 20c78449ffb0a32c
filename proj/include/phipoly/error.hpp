#pragma once

#include <stdexcept>
#include <string>

namespace phipoly {

// Input violates an operation's domain (bad polynomial, bad prime, malformed
// valuation list, ...). Maps to CLI exit status 2.
class domain_error : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// Input is well-formed but the bound's hypotheses do not hold (no unit
// coefficient, s = 0, degenerate positive region). Maps to CLI exit status 1.
class inapplicable_error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Fewer than two finite points were handed to the polygon builder.
class degenerate_input_error : public domain_error {
 public:
  using domain_error::domain_error;
};

// An internal identity that must hold by construction failed. Build-breaking.
class internal_check_error : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

// Syntax error in polynomial text; carries the character offset.
class parse_error : public std::invalid_argument {
 public:
  parse_error(const std::string& what, std::size_t offset)
      : std::invalid_argument(what + " (at offset " + std::to_string(offset) + ")"),
        offset_(offset) {}
  std::size_t offset() const { return offset_; }

 private:
  std::size_t offset_;
};

}  // namespace phipoly
