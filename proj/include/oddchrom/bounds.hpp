#ifndef ODDCHROM_BOUNDS_HPP
#define ODDCHROM_BOUNDS_HPP

#include <cstdint>
#include <iosfwd>
#include <mutex>
#include <optional>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace oddchrom {

// f(n,k) is the largest N such that every graph on at most N vertices without
// odd cycles of length <= 2k-1 is n-colorable. Everything below is a lower or
// upper bound on f(n,k).

using big_int = boost::multiprecision::cpp_int;
using big_rational = boost::multiprecision::cpp_rational;

/// x (x+1) ... (x+k-1); 1 when k = 0.
big_int rising_factorial(std::int64_t x, std::uint32_t k);

/// ceil for exact rationals.
big_int ceil(const big_rational &q);

/// (k / (2(n-1)))^(n-1) - 1. Vacuous (negative) once n grows past k/(2e)+1.
big_rational kst_lower_exact(std::uint32_t n, std::uint32_t k);
double kst_lower(std::uint32_t n, std::uint32_t k);

/// n^(4k+1); f(n,k) is strictly below it.
big_int erdos_upper(std::uint32_t n, std::uint32_t k);

/// ((n-1)(2k-1)+2) / ((n-1)k+1) * C((n-1)k+1, n-1): the order of the Schrijver
/// graph with d = n-1 and m = (n-1)(k-1)+1. f(n,k) is strictly below it.
big_int schrijver_upper(std::uint32_t n, std::uint32_t k);

/// n + (k-1)(n-1)(n+2)/2, valid for n >= 1.
std::int64_t quad_lower(std::uint32_t n, std::uint32_t k);

struct factorial_bound {
  big_rational exact; ///< (n+k)^(k) / (2^(k-1) k^k)
  double value = 0.0;
};

factorial_bound factorial_lower(std::uint32_t n, std::uint32_t k);

/// The constant c = 2^(1-k) k^(-k) of the rising-factorial bound.
big_rational factorial_constant(std::uint32_t k);

/// Both sides of c (n+a-1)^(k) + c k (n+a)^(k-1) = c (n+a)^(k) with a = k.
struct step_identity {
  big_rational lhs;
  big_rational rhs;
};
step_identity factorial_induction_step(std::uint32_t n, std::uint32_t k);

/// Memoized min-max recurrence for one k:
///   L(1) = 1, L(2) = 2k,
///   L(n) = ceil( min_{t >= n(k-1)+1} max{ L(n-1) + t,
///                  x/(x-1) (L(n-2)+1) - 1 } ),  x = t^(1/(k-1)).
/// Reads and fills are serialized by an internal mutex.
class recurrence_table {
public:
  explicit recurrence_table(std::uint32_t k);

  std::uint32_t k() const { return k_; }
  /// Throws std::overflow_error if a value leaves the int64 range.
  std::int64_t at(std::uint32_t n);

  /// Minimizing t found for L(n), n >= 3.
  std::int64_t argmin_t(std::uint32_t n);

private:
  void fill_to(std::uint32_t n);

  std::uint32_t k_;
  std::vector<std::int64_t> values_;  // values_[n], index 0 unused
  std::vector<std::int64_t> argmins_; // argmins_[n] for n >= 3
  std::mutex mutex_;
};

/// Value of the recurrence; shares one table per k across calls.
std::int64_t recurrent_lower(std::uint32_t n, std::uint32_t k);

struct bounds_row {
  std::uint32_t n = 0;
  std::uint32_t k = 0;
  std::optional<double> kst_lower;  // n >= 2
  std::int64_t quad_lower = 0;
  std::optional<factorial_bound> factorial_lower; // n >= 2
  std::int64_t recurrent_lower = 0;
  big_int schrijver_upper_incl;              // schrijver_upper - 1
  std::optional<big_int> erdos_upper_incl;   // n >= 2
  big_int best_lower;
  big_int best_upper;
};

/// Requires n >= 1 and k >= 2.
bounds_row make_bounds_row(std::uint32_t n, std::uint32_t k);

struct bounds_caps {
  std::uint32_t max_n = 64;
  std::uint32_t max_k = 32;
};

/// Rows ordered by n, then k. Throws std::out_of_range outside the caps.
std::vector<bounds_row> bounds_table(std::uint32_t n_lo, std::uint32_t n_hi,
                                     std::uint32_t k_lo, std::uint32_t k_hi,
                                     bounds_caps caps = {});

void write_bounds_csv(std::ostream &os, const std::vector<bounds_row> &rows);
void write_bounds_markdown(std::ostream &os,
                           const std::vector<bounds_row> &rows);

} // namespace oddchrom

#endif // ODDCHROM_BOUNDS_HPP
