#ifndef MIDDLECURVES_ERRORS_HPP
#define MIDDLECURVES_ERRORS_HPP

#include <cstdint>
#include <stdexcept>
#include <string>

namespace middlecurves {

/// Thrown when an enumeration would exceed its configured candidate budget.
/// Callers should retry with a larger eps, a smaller ell, or a raised cap.
class resource_limit_error : public std::runtime_error {
 public:
  resource_limit_error(std::uint64_t limit, const std::string& what_happened)
      : std::runtime_error(what_happened + " (candidate cap " +
                           std::to_string(limit) + " exceeded)"),
        limit_(limit) {}

  std::uint64_t limit() const noexcept { return limit_; }

 private:
  std::uint64_t limit_;
};

/// Thrown when an internal consistency check that is provably impossible to
/// fail on valid inputs does fail (e.g. overlapping letter partitions while
/// decoding a middle curve).
class internal_inconsistency_error : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// Budget for candidate enumeration in the exact solvers and the grid-based
/// center approximation. The count is over visited candidate prefixes.
struct enumeration_limits {
  std::uint64_t max_candidates = 10'000'000;
};

}  // namespace middlecurves

#endif  // MIDDLECURVES_ERRORS_HPP
