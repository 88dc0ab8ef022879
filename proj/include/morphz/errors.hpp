#pragma once

#include "morphz/numeric.hpp"

#include <cstddef>
#include <stdexcept>
#include <string>

namespace morphz {

// An enumeration was about to exceed its budget; `count` is the size the
// enumeration would have had.
class BudgetError : public std::runtime_error {
 public:
  BudgetError(const std::string& what, Int count)
      : std::runtime_error(what), count_(std::move(count)) {}
  const Int& count() const { return count_; }

 private:
  Int count_;
};

// Two independent computations of the same fact produced different answers.
// This always indicates a bug, never bad input.
class DisagreementError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& what, std::size_t position)
      : std::runtime_error(what), position_(position) {}
  std::size_t position() const { return position_; }

 private:
  std::size_t position_;
};

}  // namespace morphz
