#pragma once

// Index semigroup T = (+)_{alpha in Z} Z, the admissible cone A, the generator
// sets C and -C, their scalar invariants, the level-shift maps and the
// incidence/composition dimension counts.

#include <cstdint>
#include <initializer_list>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace parahilb {

using Level = int;
using Count = std::int64_t;

/// Finitely supported integer-valued function on Z (one entry per level).
/// Zero entries are never stored, so equality and ordering ignore support.
class IndexVector {
public:
  using Map = std::map<Level, Count>;

  IndexVector() = default;
  IndexVector(std::initializer_list<std::pair<const Level, Count>> init) {
    for (auto const &[a, x] : init) add(a, x);
  }
  explicit IndexVector(Map const &m) {
    for (auto const &[a, x] : m) add(a, x);
  }

  static IndexVector unit(Level alpha, Count scale = 1) {
    IndexVector v;
    v.add(alpha, scale);
    return v;
  }

  Count operator[](Level alpha) const {
    auto it = entries_.find(alpha);
    return it == entries_.end() ? 0 : it->second;
  }

  void set(Level alpha, Count value) {
    if (value == 0)
      entries_.erase(alpha);
    else
      entries_[alpha] = value;
  }
  void add(Level alpha, Count delta) { set(alpha, (*this)[alpha] + delta); }

  Map const &entries() const { return entries_; }
  bool is_zero() const { return entries_.empty(); }
  std::optional<Level> min_level() const {
    if (entries_.empty()) return std::nullopt;
    return entries_.begin()->first;
  }
  std::optional<Level> max_level() const {
    if (entries_.empty()) return std::nullopt;
    return entries_.rbegin()->first;
  }

  IndexVector &operator+=(IndexVector const &o) {
    for (auto const &[a, x] : o.entries_) add(a, x);
    return *this;
  }
  IndexVector &operator-=(IndexVector const &o) {
    for (auto const &[a, x] : o.entries_) add(a, -x);
    return *this;
  }
  friend IndexVector operator+(IndexVector a, IndexVector const &b) { return a += b; }
  friend IndexVector operator-(IndexVector a, IndexVector const &b) { return a -= b; }
  friend IndexVector operator-(IndexVector const &a) { return IndexVector{} - a; }
  friend IndexVector operator*(Count k, IndexVector const &a) {
    IndexVector r;
    if (k == 0) return r;
    for (auto const &[l, x] : a.entries_) r.set(l, k * x);
    return r;
  }

  friend bool operator==(IndexVector const &, IndexVector const &) = default;
  friend auto operator<=>(IndexVector const &a, IndexVector const &b) {
    return a.entries_ <=> b.entries_;
  }

  std::string to_string() const {
    std::string s = "{";
    bool first = true;
    for (auto const &[a, x] : entries_) {
      if (!first) s += ",";
      first = false;
      s += std::to_string(a) + ":" + std::to_string(x);
    }
    return s + "}";
  }

private:
  Map entries_;
};

/// Level window [lo, hi) with lo < 0 < hi.
struct Window {
  Level lo = -1;
  Level hi = 1;

  Window() = default;
  Window(Level lo_, Level hi_) : lo(lo_), hi(hi_) {
    if (!(lo < 0 && 0 < hi))
      throw std::invalid_argument("window must satisfy lo < 0 < hi, got (" + std::to_string(lo) +
                                  "," + std::to_string(hi) + ")");
  }
  bool contains(Level alpha) const { return lo <= alpha && alpha < hi; }
  bool contains(IndexVector const &v) const {
    for (auto const &[a, x] : v.entries())
      if (!contains(a)) return false;
    return true;
  }
  friend bool operator==(Window const &, Window const &) = default;
};

// ---------------------------------------------------------------------------
// scalar invariants

inline Count rho0(IndexVector const &v) { return v[0]; }

struct Norms {
  Count total = 0;
  Count plus = 0;
  Count minus = 0;
  friend bool operator==(Norms const &, Norms const &) = default;
};

inline Norms norms(IndexVector const &v) {
  Norms n;
  for (auto const &[a, x] : v.entries()) {
    Count ax = x < 0 ? -x : x;
    n.total += ax;
    if (a > 0) n.plus += ax;
    if (a < 0) n.minus += ax;
  }
  return n;
}

/// d(v) = 2 rho_0 + |v|_+ - |v|_-, the dimension of X^[v].
inline Count degree(IndexVector const &v) {
  auto n = norms(v);
  return 2 * rho0(v) + n.plus - n.minus;
}

/// epsilon_v: 1 iff v == 0.
inline int epsilon(IndexVector const &v) { return v.is_zero() ? 1 : 0; }

/// rho_+(v): the part of v at positive levels.
inline IndexVector positive_part(IndexVector const &v) {
  IndexVector r;
  for (auto const &[a, x] : v.entries())
    if (a > 0) r.set(a, x);
  return r;
}
inline IndexVector negative_part(IndexVector const &v) {
  IndexVector r;
  for (auto const &[a, x] : v.entries())
    if (a < 0) r.set(a, x);
  return r;
}
/// rho(v) = rho_-(v) (+) rho_+(v): everything off level 0.
inline IndexVector jump_part(IndexVector const &v) {
  IndexVector r = v;
  r.set(0, 0);
  return r;
}

inline bool is_admissible(IndexVector const &v) {
  for (auto const &[a, x] : v.entries())
    if (x < 0) return false;
  return rho0(v) - norms(v).minus >= 0;
}

// ---------------------------------------------------------------------------
// generators

struct GeneratorClass {
  enum class Kind { PosC, NegC, NotGenerator };
  Kind kind = Kind::NotGenerator;
  Level alpha = 0;

  static GeneratorClass pos(Level a) { return {Kind::PosC, a}; }
  static GeneratorClass neg(Level a) { return {Kind::NegC, a}; }
  static GeneratorClass none() { return {}; }
  bool is_generator() const { return kind != Kind::NotGenerator; }
  friend bool operator==(GeneratorClass const &, GeneratorClass const &) = default;
};

namespace detail {
inline std::optional<Level> positive_generator_level(IndexVector const &u) {
  auto const &e = u.entries();
  Count m = u[0];
  if (e.size() == 1 && e.begin()->first == 0)
    return m >= 1 ? std::optional<Level>(0) : std::nullopt;
  std::optional<Level> alpha;
  for (auto const &[a, x] : e) {
    if (a == 0) continue;
    if (alpha || x != 1) return std::nullopt;
    alpha = a;
  }
  if (!alpha) return std::nullopt;
  if (*alpha > 0 && m >= 0) return alpha;
  if (*alpha < 0 && m >= 1) return alpha;
  return std::nullopt;
}
} // namespace detail

inline GeneratorClass classify_generator(IndexVector const &u) {
  if (auto a = detail::positive_generator_level(u)) return GeneratorClass::pos(*a);
  if (auto a = detail::positive_generator_level(-u)) return GeneratorClass::neg(*a);
  return GeneratorClass::none();
}

inline bool is_generator(IndexVector const &u) { return classify_generator(u).is_generator(); }
inline bool in_C(IndexVector const &u) {
  return classify_generator(u).kind == GeneratorClass::Kind::PosC;
}

/// The generator m*e_0 + e_alpha (alpha != 0) or m*e_0 (alpha == 0).
inline IndexVector generator(Level alpha, Count m) {
  IndexVector u = IndexVector::unit(0, m);
  if (alpha != 0) u.add(alpha, 1);
  if (!in_C(u))
    throw std::invalid_argument("m*e0+e_alpha is not in C for alpha=" + std::to_string(alpha) +
                                ", m=" + std::to_string(m));
  return u;
}

namespace detail {
inline GeneratorClass require_generator(IndexVector const &u, char const *what) {
  auto c = classify_generator(u);
  if (!c.is_generator())
    throw std::invalid_argument(std::string(what) + ": " + u.to_string() +
                                " is not an element of C or -C");
  return c;
}
} // namespace detail

/// g(u) = -1 on -C_+ and C_-, 0 elsewhere on C~.
inline int g_value(IndexVector const &u) {
  auto c = detail::require_generator(u, "g_value");
  using K = GeneratorClass::Kind;
  if (c.kind == K::NegC && c.alpha > 0) return -1;
  if (c.kind == K::PosC && c.alpha < 0) return -1;
  return 0;
}

/// sgn(u) = +1 on C, -1 on -C.
inline int sgn(IndexVector const &u) {
  auto c = detail::require_generator(u, "sgn");
  return c.kind == GeneratorClass::Kind::PosC ? 1 : -1;
}

/// Heisenberg constant
///   mu(u) = sgn(u) * (-|rho_0(u)| + |u|_-)^{eps_rho(u)} * (-1)^{rho_0(u) - |u|_-}.
inline Count mu(IndexVector const &u) {
  int s = sgn(u);
  Count r0 = rho0(u);
  Count minus = norms(u).minus;
  Count base = (r0 < 0 ? r0 : -r0) + minus;
  Count factor = epsilon(jump_part(u)) == 1 ? base : 1;
  Count parity = ((r0 - minus) % 2 + 2) % 2;
  return s * factor * (parity == 0 ? 1 : -1);
}

// ---------------------------------------------------------------------------
// level shift v -> v'(beta)

enum class ShiftConvention {
  /// The block moved for beta < 0 is [lo, beta]; keeps d(v) invariant.
  DegreePreserving,
  /// The case formulas verbatim: for beta < 0 only [lo, beta) moves.
  Literal,
};

struct ShiftResult {
  IndexVector v;
  Window window;
  friend bool operator==(ShiftResult const &, ShiftResult const &) = default;
};

inline ShiftResult shift_index(IndexVector const &v, Level beta, Window const &w,
                               ShiftConvention conv = ShiftConvention::DegreePreserving) {
  if (beta == 0) throw std::invalid_argument("shift_index: beta must be nonzero");
  if (!w.contains(beta)) throw std::invalid_argument("shift_index: beta outside window");
  if (!is_admissible(v))
    throw std::invalid_argument("shift_index: " + v.to_string() + " is not admissible");
  if (!w.contains(v)) throw std::invalid_argument("shift_index: support outside window");

  Level const lo = w.lo, hi = w.hi;
  IndexVector r;
  if (beta > 0) {
    // [beta, hi) folds to [lo - hi + beta, lo); rho_0 absorbs the moved mass.
    Count moved = 0;
    for (auto const &[a, x] : v.entries()) {
      if (a == 0) continue;
      if (a < beta) {
        r.set(a, x);
      } else {
        r.set(a + lo - hi, x);
        moved += x;
      }
    }
    r.set(0, rho0(v) + moved);
    return {r, Window(lo - hi + beta, beta)};
  }

  bool const inclusive = conv == ShiftConvention::DegreePreserving;
  Count removed = 0;
  for (auto const &[a, x] : v.entries()) {
    if (a == 0) continue;
    if (a > beta) {
      r.set(a, x);
      continue;
    }
    removed += x;
    if (a < beta || inclusive) r.set(a + hi - lo, x);
  }
  r.set(0, rho0(v) - removed);
  Level new_hi = beta + hi - lo + (inclusive ? 1 : 0);
  // beta == -1 lands the image in T_0 (+) T_+; the window still needs lo < 0.
  Level new_lo = beta + 1 < 0 ? beta + 1 : -1;
  return {r, Window(new_lo, new_hi)};
}

/// Every vector with 0 <= rho_0 <= max_rho0 and 0 <= rho_alpha <= cap on the
/// window levels (admissible or not), in a fixed order.
inline std::vector<IndexVector> index_vectors_in_window(Window const &w, Count max_rho0, Count cap) {
  std::vector<IndexVector> out;
  for (Count r = 0; r <= max_rho0; ++r) out.push_back(IndexVector::unit(0, r));
  for (Level a = w.lo; a < w.hi; ++a) {
    if (a == 0) continue;
    std::vector<IndexVector> next;
    for (auto const &v : out)
      for (Count x = 0; x <= cap; ++x) {
        IndexVector u = v;
        u.set(a, x);
        next.push_back(u);
      }
    out = std::move(next);
  }
  return out;
}

// ---------------------------------------------------------------------------
// incidence / composition dimensions

/// dim Z(v, u) = d(v) + rho_0(u) + 1 + g(u); nullopt when Z(v, u) is empty.
inline std::optional<Count> dim_incidence(IndexVector const &v, IndexVector const &u) {
  int g = g_value(u);
  if (!is_admissible(v) || !is_admissible(v + u)) return std::nullopt;
  return degree(v) + rho0(u) + 1 + g;
}

/// Expected dimension d(v, u1, u2) = d(v) + rho_0(u1 + u2) + 2 + g(u1) + g(u2).
inline Count dim_composition(IndexVector const &v, IndexVector const &u1, IndexVector const &u2) {
  int g1 = g_value(u1);
  int g2 = g_value(u2);
  return degree(v) + rho0(u1 + u2) + 2 + g1 + g2;
}

} // namespace parahilb
