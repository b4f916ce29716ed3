#pragma once

// Torus weights of the tangent space at a fixed point, as an element of the
// representation ring Z[lambda^{+-1}, mu^{+-1}] of the 2-torus, together with
// the generic-cocharacter count that recovers the cell dimension.

#include "parahilb/cells.hpp"
#include "parahilb/lattice.hpp"

#include <algorithm>
#include <cstdint>
#include <exception>
#include <map>
#include <set>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace parahilb {

/// Finite Laurent polynomial in two characters (lambda, mu).
class LaurentPair {
public:
  using Key = std::pair<int, int>; // (exponent of lambda, exponent of mu)
  using Map = std::map<Key, Count>;

  void add(int i, int j, Count c) {
    if (c == 0) return;
    auto &slot = terms_[{i, j}];
    slot += c;
    if (slot == 0) terms_.erase({i, j});
  }
  Count coeff(int i, int j) const {
    auto it = terms_.find({i, j});
    return it == terms_.end() ? 0 : it->second;
  }
  Map const &terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  /// Sum of coefficients (the virtual dimension).
  Count total() const {
    Count s = 0;
    for (auto const &[k, c] : terms_) s += c;
    return s;
  }
  std::set<Key> support() const {
    std::set<Key> s;
    for (auto const &[k, c] : terms_) s.insert(k);
    return s;
  }

  LaurentPair &operator+=(LaurentPair const &o) {
    for (auto const &[k, c] : o.terms_) add(k.first, k.second, c);
    return *this;
  }
  LaurentPair &operator-=(LaurentPair const &o) {
    for (auto const &[k, c] : o.terms_) add(k.first, k.second, -c);
    return *this;
  }
  friend LaurentPair operator+(LaurentPair a, LaurentPair const &b) { return a += b; }
  friend LaurentPair operator-(LaurentPair a, LaurentPair const &b) { return a -= b; }
  friend LaurentPair operator*(LaurentPair const &a, LaurentPair const &b) {
    LaurentPair r;
    for (auto const &[k1, c1] : a.terms_)
      for (auto const &[k2, c2] : b.terms_) r.add(k1.first + k2.first, k1.second + k2.second, c1 * c2);
    return r;
  }
  friend bool operator==(LaurentPair const &, LaurentPair const &) = default;

private:
  Map terms_;
};

/// The b-sequence and h-bar table of a label.
struct Staircase {
  std::vector<Count> b; // b[i] for i = 0 .. max_m - 1; later entries are 0
  /// (alpha, i) -> sum_{beta >= alpha} eta_beta(i) for alpha between the lowest
  /// and highest occupied level; only nonzero values are stored.
  std::map<std::pair<Level, Count>, Count> hbar;
  Level lo = 0, hi = 0;

  Count b_at(Count i) const {
    return (i >= 0 && i < static_cast<Count>(b.size())) ? b[static_cast<std::size_t>(i)] : 0;
  }
  Count hbar_at(Level alpha, Count i) const {
    if (alpha > hi) return 0;
    auto it = hbar.find({std::max(alpha, lo), i});
    return it == hbar.end() ? 0 : it->second;
  }
};

/// b_{i-1} = number of parts (with multiplicity) with m >= i.
inline Staircase staircase(CellLabel const &eta) {
  Staircase s;
  Count M = eta.max_m();
  s.b.assign(static_cast<std::size_t>(M), 0);
  for (auto const &p : eta.part_list())
    for (Count i = 1; i <= p.m; ++i) s.b[static_cast<std::size_t>(i - 1)] += p.mult;
  if (eta.empty()) return s;
  s.lo = *eta.min_level();
  s.hi = *eta.max_level();
  for (Count i = 0; i <= M; ++i) {
    Count acc = 0;
    for (Level a = s.hi; a >= s.lo; --a) {
      acc += eta.eta(a, i);
      if (acc != 0) s.hbar[{a, i}] = acc;
    }
  }
  return s;
}

namespace weights_detail {

/// Evaluation context: eta, its b-sequence and fast hbar lookup.
struct Ctx {
  CellLabel const &eta;
  Staircase st;
  explicit Ctx(CellLabel const &e) : eta(e), st(staircase(e)) {}

  Count b(Count i) const { return st.b_at(i); }
  Count E(Level a, Count m) const { return eta.eta(a, m); }
  Count hbar(Level alpha, Count i) const { return st.hbar_at(alpha, i); }
};

inline int narrow(Count x) { return static_cast<int>(x); }

/// The four-term expression with explicit index ranges:
/// i, j in [0, R), alpha in [alpha_minus, alpha_top].
inline LaurentPair four_terms(Ctx const &c, Level alpha_minus, Count R, Level alpha_top) {
  LaurentPair T;
  // 1. the double sum over the staircase (classical Hilbert-scheme part)
  for (Count j = 1; j < R; ++j)
    for (Count i = 1; i <= j; ++i)
      for (Count s = c.b(j); s < c.b(j - 1); ++s) {
        T.add(narrow(i - j - 1), narrow(c.b(i - 1) - s - 1), 1);
        T.add(narrow(j - i), narrow(s - c.b(i - 1)), 1);
      }
  // 2. the correction sum over S
  for (Level al = alpha_minus; al <= alpha_top; ++al)
    for (Count i = 0; i < R; ++i)
      for (Count j = 0; j < R; ++j) {
        bool inS = (i >= 1 && j >= 1) || (al > 0 && i >= 1 && j == 0) || (al > 1 && i == 0);
        if (!inS) continue;
        Count h = c.hbar(al, j);
        Count base = c.b(j) - c.b(i);
        for (Count a = 0; a < h; ++a) {
          T.add(narrow(j - i), narrow(base - c.hbar(al, i) + a), 1);
          T.add(narrow(j - i), narrow(base - c.hbar(al - 1, i) + a), -1);
        }
      }
  // 3. the subtraction over alpha_minus <= alpha <= 0
  for (Level al = alpha_minus; al <= 0; ++al)
    for (Count i = 1; i < R; ++i)
      for (Count a = 0; a < c.E(al - 1, i); ++a)
        T.add(narrow(-i), narrow(c.b(0) - c.b(i) + a - c.hbar(al - 1, i)), -1);
  // 4. the addition over j >= 0
  for (Count j = 0; j < R; ++j)
    for (Count a = 0; a < c.hbar(1, j); ++a)
      T.add(narrow(j), narrow(c.b(j) - c.b(0) - c.hbar(1, 0) + a), 1);
  return T;
}

} // namespace weights_detail

/// Tangent-space character at the fixed point labelled by eta. The lower level
/// edge alpha_minus enters the S-range and the subtraction term; every level
/// of psi(eta) must be >= alpha_minus.
inline LaurentPair tangent_weights(CellLabel const &eta, Level alpha_minus) {
  if (auto lo = eta.min_level(); lo && *lo < alpha_minus)
    throw std::invalid_argument("tangent_weights: label has a part at level " +
                                std::to_string(*lo) + " below alpha_minus=" +
                                std::to_string(alpha_minus));
  weights_detail::Ctx ctx(eta);
  Count const R = eta.max_m() + 2;
  Level const top = std::max<Level>(eta.max_level().value_or(0), 1) + 1;
  LaurentPair T = weights_detail::four_terms(ctx, alpha_minus, R, top);

  // Every summand beyond these ranges vanishes; confirm by widening.
  LaurentPair wide = weights_detail::four_terms(ctx, alpha_minus, R + 2, top + 2);
  if (wide != T)
    throw std::logic_error("tangent_weights: result changed when index ranges were widened for " +
                           eta.to_string());
  for (auto const &[k, c] : T.terms())
    if (c < 0)
      throw std::logic_error("tangent_weights: negative coefficient at (" +
                             std::to_string(k.first) + "," + std::to_string(k.second) + ") for " +
                             eta.to_string());
  return T;
}

/// The classical double sum alone (equals the whole character for labels at level 0).
inline LaurentPair es_term(CellLabel const &eta) {
  weights_detail::Ctx ctx(eta);
  Count const R = eta.max_m() + 2;
  LaurentPair T;
  for (Count j = 1; j < R; ++j)
    for (Count i = 1; i <= j; ++i)
      for (Count s = ctx.b(j); s < ctx.b(j - 1); ++s) {
        T.add(weights_detail::narrow(i - j - 1), weights_detail::narrow(ctx.b(i - 1) - s - 1), 1);
        T.add(weights_detail::narrow(j - i), weights_detail::narrow(s - ctx.b(i - 1)), 1);
      }
  return T;
}

struct Cocharacter {
  Count w1 = 1;
  Count w2 = 1;
  friend bool operator==(Cocharacter const &, Cocharacter const &) = default;
};

/// Finds (w1, w2) with i*w2 + j*w1 > 0 exactly when i > 0, and nonzero for
/// every nonzero support point. Candidates w1 = 1, -1, 2, -2, ... up to
/// search_bound; for each, the least admissible w2 >= 1 is computed directly.
inline Cocharacter generic_cocharacter(std::set<std::pair<int, int>> const &support,
                                       Count search_bound = 64) {
  auto floor_div = [](Count a, Count b) {
    Count q = a / b;
    if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
    return q;
  };
  for (Count k = 1; k <= search_bound; ++k) {
    for (Count w1 : {k, -k}) {
      bool ok = true;
      Count w2 = 1;
      for (auto const &[i, j] : support) {
        if (i == 0) {
          if (j != 0 && j * w1 >= 0) ok = false;
        } else if (i > 0) {
          w2 = std::max(w2, floor_div(-j * w1, i) + 1); // i w2 + j w1 > 0
        } else {
          w2 = std::max(w2, floor_div(j * w1, -i) + 1); // i w2 + j w1 < 0
        }
      }
      if (ok && w2 <= search_bound * search_bound) return {w1, w2};
    }
  }
  throw std::runtime_error("generic_cocharacter: no separating cocharacter within the search bound");
}

inline Count positive_weight_count(LaurentPair const &T) {
  auto w = generic_cocharacter(T.support());
  Count n = 0;
  for (auto const &[k, c] : T.terms())
    if (k.first * w.w2 + k.second * w.w1 > 0) n += c;
  return n;
}

/// Positive-weight count of the tangent space at eta for a generic cocharacter.
inline Count positive_weight_count(CellLabel const &eta, Level alpha_minus) {
  return positive_weight_count(tangent_weights(eta, alpha_minus));
}
inline Count positive_weight_count(CellLabel const &eta) {
  return positive_weight_count(eta, std::min<Level>(eta.min_level().value_or(-1), -1));
}

struct WeightsReport {
  Window window;
  Count max_n = 0;
  Count cap = 0;
  Level alpha_minus = 0; // lower level edge used in the S-range and subtraction term
  std::int64_t labels = 0;
  std::int64_t level_zero_labels = 0; // labels compared against the classical double sum
  std::vector<std::string> violations;
  bool ok() const { return violations.empty(); }
};

/// For every label of every admissible v in the window (rho_0 <= max_n, other
/// entries <= cap): nonnegative character, total = d(v), positive count = cell
/// dimension, and reduction to the classical double sum for labels at level 0.
inline WeightsReport verify_weights(Window const &window, Count max_n, Count cap = 2) {
  WeightsReport r;
  r.window = window;
  r.max_n = max_n;
  r.cap = cap;
  r.alpha_minus = window.lo;
  for (auto const &v : index_vectors_in_window(window, max_n, cap)) {
    if (!is_admissible(v)) continue;
    for (auto const &eta : enumerate_labels(v)) {
      ++r.labels;
      std::string const tag = v.to_string() + " " + eta.to_string() + ": ";
      try {
        LaurentPair T = tangent_weights(eta, window.lo);
        if (T.total() != degree(v))
          r.violations.push_back(tag + "total " + std::to_string(T.total()) + " != d(v) " +
                                 std::to_string(degree(v)));
        Count pos = positive_weight_count(T);
        if (pos != cell_dimension(eta))
          r.violations.push_back(tag + "positive weights " + std::to_string(pos) +
                                 " != cell dimension " + std::to_string(cell_dimension(eta)));
        if (T.coeff(0, 0) != 0) r.violations.push_back(tag + "zero weight in the tangent space");
        if (jump_part(v).is_zero()) {
          ++r.level_zero_labels;
          if (!(T == es_term(eta)) || T.total() != 2 * rho0(v))
            r.violations.push_back(tag + "does not reduce to the classical double sum");
        }
      } catch (std::exception const &e) {
        r.violations.push_back(tag + e.what());
      }
    }
  }
  return r;
}

} // namespace parahilb
