#pragma once

// Closed-form product generating functions: Göttsche's product for the Hilbert
// schemes of points on X, its parabolic extension by the divisor factors, and
// the local punctual product whose coefficients are the classes of punctual
// parabolic Hilbert schemes (variable L in the z slot).

#include "parahilb/cells.hpp"
#include "parahilb/parallel.hpp"
#include "parahilb/series.hpp"

#include <array>
#include <string>
#include <vector>

namespace parahilb {

struct BettiData {
  std::array<Count, 5> X{1, 0, 1, 0, 1};
  std::array<Count, 3> D{1, 0, 1};
  friend bool operator==(BettiData const &, BettiData const &) = default;
};

namespace genfun_detail {

/// Multiplies s by (1 + sign * z^zd x0^m x_alpha)^{sign * b}, i.e. by the
/// numerator factor (sign = +1) or the inverse denominator factor (sign = -1).
inline void apply(MultiSeries &s, int sign, Count b, Count zd, Count m, Level alpha) {
  if (b == 0) return;
  MultiDegree d(zd, m);
  if (alpha != 0) d.set_x(alpha, 1);
  s *= expand_factor(BigInt(sign), d, sign * b, s.order());
}

/// Factors beyond the cut must be identically 1 under the truncation order.
inline void check_cut(TruncationOrder const &order, Count zd, Count m, Level alpha) {
  MultiDegree d(zd, m);
  if (alpha != 0) d.set_x(alpha, 1);
  if (order.contains(d))
    throw std::logic_error("product cut too early: factor x0^" + std::to_string(m) +
                           " still contributes");
}

inline void surface_factors(MultiSeries &s, std::array<Count, 5> const &b) {
  Count const N0 = s.order().N0;
  for (Count m = 1; m <= N0; ++m) {
    apply(s, +1, b[1], 2 * m - 1, m, 0);
    apply(s, +1, b[3], 2 * m + 1, m, 0);
    apply(s, -1, b[0], 2 * m - 2, m, 0);
    apply(s, -1, b[2], 2 * m, m, 0);
    apply(s, -1, b[4], 2 * m + 2, m, 0);
  }
  for (Count m = N0 + 1; m <= N0 + 2; ++m) check_cut(s.order(), 0, m, 0);
}

/// Divisor factor attached to level alpha with shift a (m >= a).
inline void divisor_factors(MultiSeries &s, std::array<Count, 3> const &b, Level alpha, Count a) {
  Count const N0 = s.order().N0;
  for (Count m = a; m <= N0; ++m) {
    Count k = m - a;
    apply(s, +1, b[1], 2 * k + 1, m, alpha);
    apply(s, -1, b[0], 2 * k, m, alpha);
    apply(s, -1, b[2], 2 * k + 2, m, alpha);
  }
  for (Count m = N0 + 1; m <= N0 + 2; ++m) check_cut(s.order(), 0, m, alpha);
}

} // namespace genfun_detail

/// sum_n P(X^[n], z) x0^n.
inline MultiSeries goettsche_series(std::array<Count, 5> const &bX, TruncationOrder const &order) {
  MultiSeries s = MultiSeries::constant(1, order);
  genfun_detail::surface_factors(s, bX);
  return s;
}

/// sum_v P(X^[v], z) x^v over levels in `window` (which must lie in the order's window).
inline MultiSeries parabolic_poincare_series(BettiData const &b, Window const &window,
                                             TruncationOrder const &order) {
  if (window.lo < order.window.lo || window.hi > order.window.hi)
    throw std::invalid_argument("parabolic_poincare_series: window exceeds truncation window");
  MultiSeries s = goettsche_series(b.X, order);
  for (Level alpha = window.lo; alpha < window.hi; ++alpha) {
    if (alpha == 0) continue;
    genfun_detail::divisor_factors(s, b.D, alpha, alpha < 0 ? 1 : 0);
  }
  return s;
}
inline MultiSeries parabolic_poincare_series(BettiData const &b, TruncationOrder const &order) {
  return parabolic_poincare_series(b, order.window, order);
}

/// sum_v [punctual X^[v]] x^v with L stored in the z slot.
inline MultiSeries local_punctual_series(Window const &window, TruncationOrder const &order) {
  if (window.lo < order.window.lo || window.hi > order.window.hi)
    throw std::invalid_argument("local_punctual_series: window exceeds truncation window");
  using genfun_detail::apply;
  MultiSeries s = MultiSeries::constant(1, order);
  Count const N0 = order.N0;
  for (Count i = 1; i <= N0; ++i) apply(s, -1, 1, i - 1, i, 0);
  for (Level alpha = window.lo; alpha < window.hi; ++alpha) {
    if (alpha == 0) continue;
    if (alpha < 0)
      for (Count i = 1; i <= N0; ++i) apply(s, -1, 1, i - 1, i, alpha);
    else
      for (Count i = 0; i <= N0; ++i) apply(s, -1, 1, i, i, alpha);
    for (Count i = N0 + 1; i <= N0 + 2; ++i) genfun_detail::check_cut(order, 0, i, alpha);
  }
  return s;
}

struct CellProductReport {
  Window window;
  Count max_n = 0;
  Count cap = 0;
  std::int64_t cases = 0;        // admissible v compared
  std::int64_t vanishing = 0;    // non-admissible x-degrees checked to be zero
  std::vector<std::string> mismatches;
  bool ok() const { return mismatches.empty(); }
};

/// Dual-path check: cell enumeration against the local product, coefficient by coefficient.
inline CellProductReport verify_cell_vs_product(Window const &window, Count max_n, Count cap = 2,
                                                unsigned jobs = 1) {
  CellProductReport r;
  r.window = window;
  r.max_n = max_n;
  r.cap = cap;
  TruncationOrder order(max_n, window, cap);
  MultiSeries const series = local_punctual_series(window, order);
  auto const degs = index_vectors_in_window(window, max_n, cap);

  struct Acc {
    std::int64_t cases = 0, vanishing = 0;
    std::vector<std::string> bad;
  };
  auto parts = parallel_accumulate<Acc>(degs.size(), jobs, [&](std::size_t i, Acc &acc) {
    IndexVector const &v = degs[i];
    Poly prod = series.coefficient(v);
    if (!is_admissible(v)) {
      ++acc.vanishing;
      if (!prod.is_zero())
        acc.bad.push_back(v.to_string() + ": product " + prod.to_string("L") +
                          " for a non-admissible index");
      return;
    }
    ++acc.cases;
    Poly cells = punctual_motive(v);
    if (cells != prod)
      acc.bad.push_back(v.to_string() + ": cells " + cells.to_string("L") + " vs product " +
                        prod.to_string("L"));
  });
  for (auto const &p : parts) {
    r.cases += p.cases;
    r.vanishing += p.vanishing;
    r.mismatches.insert(r.mismatches.end(), p.bad.begin(), p.bad.end());
  }
  return r;
}

} // namespace parahilb
