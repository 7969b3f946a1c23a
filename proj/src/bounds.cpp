#include "oddchrom/bounds.hpp"

#include <cmath>
#include <iomanip>
#include <limits>
#include <map>
#include <memory>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>

#include "oddchrom/constructions.hpp"

namespace oddchrom {

using boost::multiprecision::denominator;
using boost::multiprecision::numerator;
using boost::multiprecision::pow;

namespace {

void require_k(std::uint32_t k) {
  if (k < 2)
    throw std::invalid_argument("k must be at least 2, got " +
                                std::to_string(k));
}

void require_n(std::uint32_t n, std::uint32_t min) {
  if (n < min)
    throw std::invalid_argument("n must be at least " + std::to_string(min) +
                                ", got " + std::to_string(n));
}

// Slack subtracted before rounding a floating-point bound up, so a rounding
// error can only weaken the bound.
long double slack_for(long double v) {
  return 1e-9L * std::max(1.0L, std::fabs(v));
}

} // namespace

big_int rising_factorial(std::int64_t x, std::uint32_t k) {
  big_int out = 1;
  for (std::uint32_t i = 0; i < k; ++i)
    out *= big_int(x) + i;
  return out;
}

big_int ceil(const big_rational &q) {
  const big_int num = numerator(q);
  const big_int den = denominator(q); // positive
  big_int quot = num / den;           // truncates toward zero
  if (num > 0 && quot * den != num)
    ++quot;
  return quot;
}

big_rational kst_lower_exact(std::uint32_t n, std::uint32_t k) {
  require_n(n, 2);
  require_k(k);
  const big_rational base(big_int(k), big_int(2) * (n - 1));
  big_rational p = 1;
  for (std::uint32_t i = 0; i + 1 < n; ++i)
    p *= base;
  return p - 1;
}

double kst_lower(std::uint32_t n, std::uint32_t k) {
  return kst_lower_exact(n, k).convert_to<double>();
}

big_int erdos_upper(std::uint32_t n, std::uint32_t k) {
  require_n(n, 2);
  require_k(k);
  return pow(big_int(n), 4 * k + 1);
}

big_int schrijver_upper(std::uint32_t n, std::uint32_t k) {
  require_n(n, 1);
  require_k(k);
  const std::uint64_t a = std::uint64_t(n - 1) * k + 1;
  const big_int num = (big_int(n - 1) * (2 * k - 1) + 2) * binomial(a, n - 1);
  if (num % a != 0)
    throw std::logic_error("Schrijver bound is not an integer");
  return num / a;
}

std::int64_t quad_lower(std::uint32_t n, std::uint32_t k) {
  require_n(n, 1);
  require_k(k);
  const std::int64_t nn = n, kk = k;
  return nn + (kk - 1) * ((nn - 1) * (nn + 2) / 2);
}

big_rational factorial_constant(std::uint32_t k) {
  require_k(k);
  return big_rational(big_int(1), pow(big_int(2), k - 1) * pow(big_int(k), k));
}

factorial_bound factorial_lower(std::uint32_t n, std::uint32_t k) {
  require_n(n, 2);
  factorial_bound b;
  b.exact = factorial_constant(k) * big_rational(rising_factorial(n + k, k));
  b.value = b.exact.convert_to<double>();
  return b;
}

step_identity factorial_induction_step(std::uint32_t n, std::uint32_t k) {
  const big_rational c = factorial_constant(k);
  const std::int64_t shifted = std::int64_t(n) + k; // n + a with a = k
  step_identity s;
  s.lhs = c * big_rational(rising_factorial(shifted - 1, k)) +
          c * k * big_rational(rising_factorial(shifted, k - 1));
  s.rhs = c * big_rational(rising_factorial(shifted, k));
  return s;
}

recurrence_table::recurrence_table(std::uint32_t k) : k_(k) {
  require_k(k);
  values_ = {0, 1, 2 * std::int64_t(k)};
  argmins_ = {0, 0, 0};
}

std::int64_t recurrence_table::at(std::uint32_t n) {
  require_n(n, 1);
  std::lock_guard lock(mutex_);
  fill_to(n);
  return values_[n];
}

std::int64_t recurrence_table::argmin_t(std::uint32_t n) {
  require_n(n, 3);
  std::lock_guard lock(mutex_);
  fill_to(n);
  return argmins_[n];
}

void recurrence_table::fill_to(std::uint32_t n) {
  const long double inv_exp = 1.0L / (k_ - 1);
  while (values_.size() <= n) {
    const std::uint32_t cur = static_cast<std::uint32_t>(values_.size());
    const std::int64_t prev1 = values_[cur - 1];
    const std::int64_t prev2 = values_[cur - 2];
    const std::int64_t t_min = std::int64_t(cur) * (k_ - 1) + 1;

    // increasing in t
    auto grow = [&](std::int64_t t) { return static_cast<long double>(prev1 + t); };
    // decreasing in t
    auto shrink = [&](std::int64_t t) {
      const long double x = std::pow(static_cast<long double>(t), inv_exp);
      return x / (x - 1) * static_cast<long double>(prev2 + 1) - 1;
    };
    auto worst = [&](std::int64_t t) { return std::max(grow(t), shrink(t)); };

    // Smallest t with grow(t) >= shrink(t); it lies below shrink(t_min) - prev1 + 1.
    const long double bound = shrink(t_min) - prev1 + 1;
    if (bound > static_cast<long double>(std::numeric_limits<std::int64_t>::max() / 4))
      throw std::overflow_error("recurrence search range overflows int64");
    std::int64_t lo = t_min;
    std::int64_t hi = std::max<std::int64_t>(t_min, static_cast<std::int64_t>(std::ceil(bound)));
    while (lo < hi) {
      const std::int64_t mid = lo + (hi - lo) / 2;
      if (grow(mid) >= shrink(mid))
        hi = mid;
      else
        lo = mid + 1;
    }
    std::int64_t best_t = lo;
    long double best = worst(lo);
    if (lo - 1 >= t_min && worst(lo - 1) < best) {
      best_t = lo - 1;
      best = worst(lo - 1);
    }
    if (worst(t_min) < best) {
      best_t = t_min;
      best = worst(t_min);
    }
    const long double rounded = std::ceil(best - slack_for(best));
    if (rounded > static_cast<long double>(std::numeric_limits<std::int64_t>::max() / 4))
      throw std::overflow_error("recurrence value overflows int64");
    values_.push_back(static_cast<std::int64_t>(rounded));
    argmins_.push_back(best_t);
  }
}

std::int64_t recurrent_lower(std::uint32_t n, std::uint32_t k) {
  require_k(k);
  static std::mutex registry_mutex;
  static std::map<std::uint32_t, std::unique_ptr<recurrence_table>> registry;
  recurrence_table *table = nullptr;
  {
    std::lock_guard lock(registry_mutex);
    auto &slot = registry[k];
    if (!slot)
      slot = std::make_unique<recurrence_table>(k);
    table = slot.get();
  }
  return table->at(n);
}

bounds_row make_bounds_row(std::uint32_t n, std::uint32_t k) {
  require_n(n, 1);
  require_k(k);
  bounds_row row;
  row.n = n;
  row.k = k;
  row.quad_lower = quad_lower(n, k);
  row.recurrent_lower = recurrent_lower(n, k);
  row.schrijver_upper_incl = schrijver_upper(n, k) - 1;

  big_int lower = std::max<std::int64_t>({1, row.quad_lower, row.recurrent_lower});
  big_int upper = row.schrijver_upper_incl;
  if (n >= 2) {
    const auto kst = kst_lower_exact(n, k);
    row.kst_lower = kst.convert_to<double>();
    lower = std::max(lower, ceil(kst));
    row.factorial_lower = factorial_lower(n, k);
    lower = std::max(lower, ceil(row.factorial_lower->exact));
    row.erdos_upper_incl = erdos_upper(n, k) - 1;
    upper = std::min(upper, *row.erdos_upper_incl);
  }
  row.best_lower = lower;
  row.best_upper = upper;
  return row;
}

std::vector<bounds_row> bounds_table(std::uint32_t n_lo, std::uint32_t n_hi,
                                     std::uint32_t k_lo, std::uint32_t k_hi,
                                     bounds_caps caps) {
  if (n_lo < 1 || n_lo > n_hi || n_hi > caps.max_n)
    throw std::out_of_range("n range must satisfy 1 <= lo <= hi <= " +
                            std::to_string(caps.max_n));
  if (k_lo < 2 || k_lo > k_hi || k_hi > caps.max_k)
    throw std::out_of_range("k range must satisfy 2 <= lo <= hi <= " +
                            std::to_string(caps.max_k));
  std::vector<bounds_row> rows;
  for (auto n = n_lo; n <= n_hi; ++n)
    for (auto k = k_lo; k <= k_hi; ++k)
      rows.push_back(make_bounds_row(n, k));
  return rows;
}

namespace {

std::string fmt_real(double v) {
  std::ostringstream os;
  os << std::fixed << std::setprecision(6) << v;
  return os.str();
}

std::vector<std::string> cells(const bounds_row &r) {
  return {std::to_string(r.n),
          std::to_string(r.k),
          r.kst_lower ? fmt_real(*r.kst_lower) : "",
          std::to_string(r.quad_lower),
          r.factorial_lower ? fmt_real(r.factorial_lower->value) : "",
          std::to_string(r.recurrent_lower),
          r.schrijver_upper_incl.str(),
          r.erdos_upper_incl ? r.erdos_upper_incl->str() : "",
          r.best_lower.str(),
          r.best_upper.str()};
}

const std::vector<std::string> header = {
    "n",          "k",
    "kst_lower",  "quad_lower",
    "factorial_lower", "recurrent_lower",
    "schrijver_upper_incl", "erdos_upper_incl",
    "best_lower", "best_upper"};

} // namespace

void write_bounds_csv(std::ostream &os, const std::vector<bounds_row> &rows) {
  auto line = [&](const std::vector<std::string> &c) {
    for (std::size_t i = 0; i < c.size(); ++i)
      os << (i ? "," : "") << c[i];
    os << '\n';
  };
  line(header);
  for (const auto &r : rows)
    line(cells(r));
}

void write_bounds_markdown(std::ostream &os,
                           const std::vector<bounds_row> &rows) {
  auto line = [&](const std::vector<std::string> &c) {
    os << '|';
    for (const auto &s : c)
      os << ' ' << (s.empty() ? "-" : s) << " |";
    os << '\n';
  };
  line(header);
  os << '|';
  for (std::size_t i = 0; i < header.size(); ++i)
    os << (i < 2 ? " --- |" : " ---: |");
  os << '\n';
  for (const auto &r : rows)
    line(cells(r));
}

} // namespace oddchrom
