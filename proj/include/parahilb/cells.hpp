#pragma once

// Torus-fixed-point labels eta in M(v) = Psi^{-1}(v): finite multisets over the
// generator set C. Each label indexes an affine cell of dimension rho_0 - ||eta||
// in the punctual parabolic Hilbert scheme.

#include "parahilb/lattice.hpp"
#include "parahilb/polynomial.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>
#include <string>
#include <tuple>
#include <vector>

namespace parahilb {

/// One generator m*e_0 + e_alpha taken with a multiplicity.
struct Part {
  Level alpha = 0;
  Count m = 0;
  Count mult = 1;
  friend bool operator==(Part const &, Part const &) = default;
  friend auto operator<=>(Part const &, Part const &) = default;
};

/// Finite multiset over C, stored canonically as level -> (m -> multiplicity).
class CellLabel {
public:
  using Map = std::map<Level, std::map<Count, Count>>;

  CellLabel() = default;
  CellLabel(std::initializer_list<Part> parts) {
    for (auto const &p : parts) add(p.alpha, p.m, p.mult);
  }

  void add(Level alpha, Count m, Count mult = 1) {
    if (mult < 0) throw std::invalid_argument("CellLabel: negative multiplicity");
    if (mult == 0) return;
    Count mmin = alpha > 0 ? 0 : 1;
    if (m < mmin)
      throw std::invalid_argument("CellLabel: m=" + std::to_string(m) +
                                  " is not allowed at level " + std::to_string(alpha));
    parts_[alpha][m] += mult;
  }

  /// eta_alpha(m): multiplicity of m*e_0 + e_alpha.
  Count eta(Level alpha, Count m) const {
    auto it = parts_.find(alpha);
    if (it == parts_.end()) return 0;
    auto jt = it->second.find(m);
    return jt == it->second.end() ? 0 : jt->second;
  }

  Map const &parts() const { return parts_; }
  bool empty() const { return parts_.empty(); }

  /// Canonical part list sorted by (alpha, m).
  std::vector<Part> part_list() const {
    std::vector<Part> out;
    for (auto const &[a, ms] : parts_)
      for (auto const &[m, k] : ms) out.push_back({a, m, k});
    return out;
  }

  Count max_m() const {
    Count r = 0;
    for (auto const &[a, ms] : parts_)
      if (!ms.empty()) r = std::max(r, ms.rbegin()->first);
    return r;
  }
  std::optional<Level> min_level() const {
    if (parts_.empty()) return std::nullopt;
    return parts_.begin()->first;
  }
  std::optional<Level> max_level() const {
    if (parts_.empty()) return std::nullopt;
    return parts_.rbegin()->first;
  }

  std::string to_string() const {
    std::string s = "[";
    bool first = true;
    for (auto const &p : part_list()) {
      if (!first) s += ",";
      first = false;
      s += "(" + std::to_string(p.alpha) + "," + std::to_string(p.m) + "," +
           std::to_string(p.mult) + ")";
    }
    return s + "]";
  }

  friend bool operator==(CellLabel const &, CellLabel const &) = default;
  friend bool operator<(CellLabel const &a, CellLabel const &b) {
    return a.part_list() < b.part_list();
  }

private:
  Map parts_;
};

/// Psi(eta) = sum of eta(u) * u over C.
inline IndexVector psi(CellLabel const &eta) {
  IndexVector v;
  for (auto const &p : eta.part_list()) {
    v.add(0, p.m * p.mult);
    if (p.alpha != 0) v.add(p.alpha, p.mult);
  }
  return v;
}

/// ||eta||: number of parts at levels alpha <= 0, with multiplicity.
inline Count seminorm(CellLabel const &eta) {
  Count s = 0;
  for (auto const &p : eta.part_list())
    if (p.alpha <= 0) s += p.mult;
  return s;
}

inline Count cell_dimension(CellLabel const &eta) { return rho0(psi(eta)) - seminorm(eta); }

namespace cells_detail {

// Multisets of `count` values m >= mmin (non-decreasing) with total <= budget.
inline void level_choices(Count count, Count mmin, Count budget, std::vector<Count> &cur,
                          std::vector<std::vector<Count>> &out) {
  if (count == 0) {
    out.push_back(cur);
    return;
  }
  Count start = cur.empty() ? mmin : cur.back();
  for (Count m = start; m * count <= budget; ++m) {
    cur.push_back(m);
    level_choices(count - 1, mmin, budget - m, cur, out);
    cur.pop_back();
  }
}

// Partitions of n into parts <= maxpart, as a multiplicity map.
inline void partitions(Count n, Count maxpart, std::map<Count, Count> &cur,
                       std::vector<std::map<Count, Count>> &out) {
  if (n == 0) {
    out.push_back(cur);
    return;
  }
  for (Count p = std::min(n, maxpart); p >= 1; --p) {
    ++cur[p];
    partitions(n - p, p, cur, out);
    if (--cur[p] == 0) cur.erase(p);
  }
}

} // namespace cells_detail

/// All eta with psi(eta) = v, each once, sorted canonically. Empty if v is not admissible.
inline std::vector<CellLabel> enumerate_labels(IndexVector const &v) {
  std::vector<CellLabel> out;
  if (!is_admissible(v)) return out;

  std::vector<Level> levels;
  for (auto const &[a, x] : v.entries())
    if (a != 0) levels.push_back(a);

  // Memoised partitions of the level-0 residue.
  std::map<Count, std::vector<std::map<Count, Count>>> part_cache;
  auto level0 = [&](Count n) -> std::vector<std::map<Count, Count>> const & {
    auto it = part_cache.find(n);
    if (it != part_cache.end()) return it->second;
    std::vector<std::map<Count, Count>> ps;
    std::map<Count, Count> cur;
    cells_detail::partitions(n, n, cur, ps);
    return part_cache.emplace(n, std::move(ps)).first->second;
  };

  CellLabel acc;
  auto rec = [&](auto &&self, std::size_t i, Count left, CellLabel const &label) -> void {
    if (i == levels.size()) {
      for (auto const &lam : level0(left)) {
        CellLabel full = label;
        for (auto const &[m, k] : lam) full.add(0, m, k);
        out.push_back(std::move(full));
      }
      return;
    }
    Level a = levels[i];
    std::vector<std::vector<Count>> choices;
    std::vector<Count> cur;
    cells_detail::level_choices(v[a], a > 0 ? 0 : 1, left, cur, choices);
    for (auto const &ms : choices) {
      CellLabel next = label;
      Count used = 0;
      for (Count m : ms) {
        next.add(a, m);
        used += m;
      }
      self(self, i + 1, left - used, next);
    }
  };
  rec(rec, 0, rho0(v), acc);
  std::sort(out.begin(), out.end());
  return out;
}

/// Sum over cells of z^{2 dim}.
inline Poly punctual_poincare(IndexVector const &v) {
  if (!is_admissible(v)) throw std::invalid_argument(v.to_string() + " is not admissible");
  Poly p;
  for (auto const &eta : enumerate_labels(v)) p.add_term(static_cast<int>(2 * cell_dimension(eta)), 1);
  return p;
}

/// Sum over cells of L^{dim}.
inline Poly punctual_motive(IndexVector const &v) {
  if (!is_admissible(v)) throw std::invalid_argument(v.to_string() + " is not admissible");
  Poly p;
  for (auto const &eta : enumerate_labels(v)) p.add_term(static_cast<int>(cell_dimension(eta)), 1);
  return p;
}

struct TopCells {
  Count dimension = 0;
  std::vector<CellLabel> labels;
  Count bound = 0;                  // n - eps_{rho_+(v)} + eps_v
  bool characterization_ok = true;  // matches the expected description of the top cells
  std::string violation;
};

/// Maximal cells of the punctual scheme for v with no negative-level entries.
inline TopCells top_cells(IndexVector const &v) {
  if (!is_admissible(v)) throw std::invalid_argument(v.to_string() + " is not admissible");
  if (norms(v).minus != 0)
    throw std::invalid_argument("top_cells: requires rho_-(v) = 0, got " + v.to_string());

  auto labels = enumerate_labels(v);
  TopCells t;
  t.dimension = -1;
  for (auto const &eta : labels) {
    Count d = cell_dimension(eta);
    if (d > t.dimension) {
      t.dimension = d;
      t.labels.clear();
    }
    if (d == t.dimension) t.labels.push_back(eta);
  }

  Count const n = rho0(v);
  IndexVector const plus = positive_part(v);
  t.bound = n - epsilon(plus) + epsilon(v);

  std::vector<CellLabel> expected;
  if (!plus.is_zero()) {
    for (auto const &eta : labels)
      if (!eta.parts().contains(0)) expected.push_back(eta);
  } else if (!v.is_zero()) {
    expected.push_back(CellLabel{{0, n, 1}});
  } else {
    expected.push_back(CellLabel{});
  }
  if (expected != t.labels) {
    t.characterization_ok = false;
    t.violation = "top cells of " + v.to_string() + " differ from the expected description";
  } else if (t.dimension != t.bound) {
    t.characterization_ok = false;
    t.violation = "top dimension " + std::to_string(t.dimension) + " differs from bound " +
                  std::to_string(t.bound);
  }
  for (auto const &eta : labels)
    if (cell_dimension(eta) < 0 || cell_dimension(eta) > t.bound) {
      t.characterization_ok = false;
      t.violation = "cell dimension out of range for " + eta.to_string();
    }
  return t;
}

} // namespace parahilb
