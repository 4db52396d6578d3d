#ifndef BLOCKSORT_ERRORS_HPP
#define BLOCKSORT_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace blocksort {

// Thrown when a computation contradicts one of the structural identities the
// library is built on (exact divisibility, the distance formula, the
// insertion case analysis, ...). User input never triggers this; reaching it
// means either a bug or a falsified identity, so it must surface loudly.
class invariant_violation : public std::logic_error {
 public:
  explicit invariant_violation(const std::string& what)
      : std::logic_error(what) {}
};

}  // namespace blocksort

#endif  // BLOCKSORT_ERRORS_HPP
