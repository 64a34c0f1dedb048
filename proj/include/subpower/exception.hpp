// subpower - finite semigroups and the subpower membership problem
//
// Exception types shared by the library.

#ifndef SUBPOWER_EXCEPTION_HPP_
#define SUBPOWER_EXCEPTION_HPP_

#include <cstddef>    // for size_t
#include <stdexcept>  // for invalid_argument, runtime_error
#include <string>     // for string, to_string

namespace subpower {

  //! Thrown when an argument violates a documented precondition (bad index,
  //! mismatched tuple length, malformed file, ...).
  class InputError : public std::invalid_argument {
   public:
    using std::invalid_argument::invalid_argument;
  };

  //! Thrown by the closure search when the state budget is exhausted. This
  //! is not a "non-member" answer.
  class BudgetExceeded : public std::runtime_error {
   public:
    explicit BudgetExceeded(std::size_t budget)
        : std::runtime_error("budget exceeded: more than "
                             + std::to_string(budget) + " states"),
          _budget(budget) {}

    std::size_t budget() const noexcept {
      return _budget;
    }

   private:
    std::size_t _budget;
  };

}  // namespace subpower

#endif  // SUBPOWER_EXCEPTION_HPP_
