#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace srw {

  class ParseError : public std::runtime_error {
   public:
    ParseError(std::size_t line, std::size_t column, std::string const& msg);

    std::size_t line() const noexcept {
      return line_;
    }
    std::size_t column() const noexcept {
      return column_;
    }

   private:
    std::size_t line_;
    std::size_t column_;
  };

  // Raised when normalization exceeds the caller-supplied step budget.
  class StepBudgetExceeded : public std::runtime_error {
   public:
    explicit StepBudgetExceeded(std::size_t budget);
  };

  // Raised when a relation cannot be turned into a rule, e.g. 1 = 0.
  class UnorientableRelation : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
  };

}  // namespace srw
