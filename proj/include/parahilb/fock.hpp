#pragma once

// Truncated Fock-space model Sym(W_+) of the total cohomology of all parabolic
// Hilbert schemes: creation and annihilation operators q_u(a), exact checks of
// the Heisenberg relations, and the graded character of the model.
//
// Sign conventions (Koszul): a generator (u, a) has parity deg(a) mod 2. Basis
// states are monomials with factors sorted by generator id; creation multiplies
// on the left and reorders; annihilation is the graded derivation
//   q_{-u}(a') (s_1 ... s_k) = sum_i (-1)^{|a'| (|s_1| + ... + |s_{i-1}|)}
//                              <(-u, a'), s_i> s_1 ... ^s_i ... s_k
// with <(u1, a1), (u2, a2)> = eps_{u1+u2} mu(u1) int a1 a2.

#include "parahilb/genfun.hpp"
#include "parahilb/lattice.hpp"
#include "parahilb/parallel.hpp"
#include "parahilb/series.hpp"

#include <algorithm>
#include <array>
#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

namespace parahilb {

enum class Space { X, D };

inline char const *space_name(Space s) { return s == Space::X ? "X" : "D"; }

/// Y_u = X if u has no off-zero levels, D otherwise.
inline Space space_of(IndexVector const &u) { return jump_part(u).is_zero() ? Space::X : Space::D; }

/// Basis of H*(Y) with degrees and the integration pairing int a_i a_j.
struct SpaceModel {
  int real_dim = 0;
  std::vector<int> degrees;
  std::vector<std::vector<Count>> integral;

  std::size_t size() const { return degrees.size(); }
  int parity(std::size_t i) const { return degrees.at(i) % 2; }
  Count integrate(std::size_t i, std::size_t j) const { return integral.at(i).at(j); }
};

namespace fock_detail {

inline BigInt determinant(std::vector<std::vector<Count>> const &m) {
  // Fraction-free Gaussian elimination (Bareiss).
  std::size_t n = m.size();
  if (n == 0) return 1;
  std::vector<std::vector<BigInt>> a(n, std::vector<BigInt>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) a[i][j] = m[i][j];
  BigInt prev = 1;
  int sign = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (a[k][k] == 0) {
      std::size_t p = k + 1;
      while (p < n && a[p][k] == 0) ++p;
      if (p == n) return 0;
      std::swap(a[p], a[k]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i)
      for (std::size_t j = k + 1; j < n; ++j)
        a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) / prev;
    prev = a[k][k];
  }
  return sign * a[n - 1][n - 1];
}

} // namespace fock_detail

/// Validates degrees, graded symmetry and non-degeneracy of a pairing.
inline void validate_space_model(SpaceModel const &s, std::string const &name) {
  std::size_t n = s.degrees.size();
  if (s.integral.size() != n)
    throw std::invalid_argument(name + ": pairing matrix has wrong size");
  for (std::size_t i = 0; i < n; ++i) {
    if (s.integral[i].size() != n) throw std::invalid_argument(name + ": pairing matrix not square");
    if (s.degrees[i] < 0 || s.degrees[i] > s.real_dim)
      throw std::invalid_argument(name + ": class degree out of range");
  }
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      Count v = s.integral[i][j];
      if (v != 0 && s.degrees[i] + s.degrees[j] != s.real_dim)
        throw std::invalid_argument(name + ": pairing nonzero off complementary degrees");
      int sgn = (s.degrees[i] * s.degrees[j]) % 2 == 0 ? 1 : -1;
      if (v != sgn * s.integral[j][i])
        throw std::invalid_argument(name + ": pairing is not graded symmetric");
    }
  if (fock_detail::determinant(s.integral) == 0)
    throw std::invalid_argument(name + ": pairing is degenerate");
}

/// Hyperbolic default: antidiagonal within complementary-degree blocks, skew on odd blocks.
template <std::size_t N>
SpaceModel default_space_model(std::array<Count, N> const &betti, std::string const &name) {
  int const dim = static_cast<int>(N) - 1;
  SpaceModel s;
  s.real_dim = dim;
  std::vector<std::size_t> start(N);
  for (std::size_t k = 0; k < N; ++k) {
    if (betti[k] < 0) throw std::invalid_argument(name + ": negative Betti number");
    start[k] = s.degrees.size();
    for (Count p = 0; p < betti[k]; ++p) s.degrees.push_back(static_cast<int>(k));
  }
  for (std::size_t k = 0; k < N; ++k)
    if (betti[k] != betti[N - 1 - k])
      throw std::invalid_argument(name + ": Betti numbers are not Poincare symmetric; supply a pairing");
  std::size_t n = s.degrees.size();
  s.integral.assign(n, std::vector<Count>(n, 0));
  for (std::size_t k = 0; k < N; ++k) {
    std::size_t kk = N - 1 - k;
    Count b = betti[k];
    for (Count p = 0; p < b; ++p) {
      std::size_t i = start[k] + static_cast<std::size_t>(p);
      std::size_t j = start[kk] + static_cast<std::size_t>(b - 1 - p);
      Count v = 1;
      if (k % 2 == 1) {
        // odd x odd is antisymmetric: +1 on the lower half, -1 on its transpose
        if (k == kk) {
          if (b % 2 != 0)
            throw std::invalid_argument(name + ": odd middle Betti number admits no skew pairing");
          v = (2 * p < b) ? 1 : -1;
        } else {
          v = k < kk ? 1 : -1;
        }
      }
      s.integral[i][j] = v;
    }
  }
  validate_space_model(s, name);
  return s;
}

struct CohModel {
  SpaceModel X;
  SpaceModel D;

  static CohModel from_betti(BettiData const &b) {
    return {default_space_model(b.X, "X"), default_space_model(b.D, "D")};
  }
  SpaceModel const &of(Space s) const { return s == Space::X ? X : D; }
};

/// mu(u) * int a * a2, for a in H*(Y_u) and a2 in H*(Y_{-u}).
inline Count pairing(CohModel const &coh, IndexVector const &u, std::size_t a, std::size_t a2) {
  Space sp = space_of(u);
  if (space_of(-u) != sp) throw std::invalid_argument("pairing: space mismatch");
  SpaceModel const &m = coh.of(sp);
  if (a >= m.size() || a2 >= m.size())
    throw std::invalid_argument(std::string("pairing: class index out of range for ") + space_name(sp));
  return mu(u) * m.integrate(a, a2);
}

/// One creation generator (u in C, class a of Y_u).
struct FockGenerator {
  IndexVector u;
  std::size_t u_index = 0; // position of u in FockSpace::generator_vectors()
  std::size_t cls = 0;
  Space space = Space::X;
  int parity = 0;
  Count z_deg = 0; // deg(a) + 2 (rho_0(u) - 1 - g(-u))
};

/// Multiset of generator ids, sorted ascending; odd generators appear at most once.
using FockState = std::vector<std::uint16_t>;

struct FockStateHash {
  std::size_t operator()(FockState const &s) const {
    std::size_t h = 1469598103934665603ull;
    for (auto x : s) h = (h ^ x) * 1099511628211ull;
    return h ^ s.size();
  }
};

struct QResult {
  std::vector<std::pair<Count, FockState>> terms;
  bool truncated = false;
};

/// An operator q_u(a) with u in C~ (creation if u in C, annihilation if u in -C).
struct FockOp {
  bool creation = true;
  std::size_t u_index = 0; // index of +-u in generator_vectors()
  std::size_t cls = 0;
};

class FockSpace {
public:
  FockSpace(CohModel coh, TruncationOrder bound) : coh_(std::move(coh)), bound_(std::move(bound)) {
    // generator vectors u in C within the bound
    for (Count m = 1; m <= bound_.N0; ++m) us_.push_back(IndexVector::unit(0, m));
    for (auto const &[a, cap] : bound_.caps) {
      if (cap < 1) continue;
      for (Count m = a > 0 ? 0 : 1; m <= bound_.N0; ++m) us_.push_back(generator(a, m));
    }
    for (std::size_t ui = 0; ui < us_.size(); ++ui) {
      IndexVector const &u = us_[ui];
      Space sp = space_of(u);
      u_base_.push_back(gens_.size());
      SpaceModel const &m = coh_.of(sp);
      for (std::size_t c = 0; c < m.size(); ++c) {
        FockGenerator g;
        g.u = u;
        g.u_index = ui;
        g.cls = c;
        g.space = sp;
        g.parity = m.parity(c);
        g.z_deg = m.degrees[c] + 2 * (rho0(u) - 1 - g_value(-u));
        gens_.push_back(g);
      }
    }
    if (gens_.size() > 65535) throw std::invalid_argument("FockSpace: too many generators");
    levels_.push_back(0);
    for (auto const &[a, cap] : bound_.caps) levels_.push_back(a);
    for (auto const &g : gens_) {
      std::vector<Count> d;
      for (Level a : levels_) d.push_back(g.u[a]);
      gen_deg_.push_back(d);
    }
    caps_.push_back(bound_.N0);
    for (auto const &[a, cap] : bound_.caps) caps_.push_back(cap);
  }

  CohModel const &coh() const { return coh_; }
  TruncationOrder const &bound() const { return bound_; }
  std::vector<FockGenerator> const &generators() const { return gens_; }
  std::vector<IndexVector> const &generator_vectors() const { return us_; }

  /// Generator id of (u, a) for u in C; throws if outside the bound or class invalid.
  std::size_t generator_id(IndexVector const &u, std::size_t cls) const {
    for (std::size_t i = 0; i < gens_.size(); ++i)
      if (gens_[i].u == u && gens_[i].cls == cls) return i;
    throw std::invalid_argument("generator_id: (" + u.to_string() + ", class " +
                                std::to_string(cls) + ") is not a generator within the bound");
  }

  FockOp op(IndexVector const &u, std::size_t cls) const {
    auto c = classify_generator(u);
    if (!c.is_generator()) throw std::invalid_argument("q_u: " + u.to_string() + " is not in C or -C");
    bool creation = c.kind == GeneratorClass::Kind::PosC;
    IndexVector u0 = creation ? u : -u;
    for (std::size_t i = 0; i < us_.size(); ++i)
      if (us_[i] == u0) {
        if (cls >= coh_.of(space_of(u0)).size())
          throw std::invalid_argument("q_u: class index out of range");
        return {creation, i, cls};
      }
    throw std::invalid_argument("q_u: " + u.to_string() + " outside the bound");
  }

  IndexVector op_vector(FockOp const &o) const { return o.creation ? us_[o.u_index] : -us_[o.u_index]; }
  int op_parity(FockOp const &o) const { return coh_.of(space_of(us_[o.u_index])).parity(o.cls); }

  /// All operators q_u(a) with +-u among the bound's generators.
  std::vector<FockOp> all_ops() const {
    std::vector<FockOp> ops;
    for (bool cr : {true, false})
      for (std::size_t ui = 0; ui < us_.size(); ++ui)
        for (std::size_t c = 0; c < coh_.of(space_of(us_[ui])).size(); ++c) ops.push_back({cr, ui, c});
    return ops;
  }

  /// x-degree digits [rho_0, rho_alpha...] of a state.
  std::vector<Count> x_digits(FockState const &s) const {
    std::vector<Count> d(levels_.size(), 0);
    for (auto id : s)
      for (std::size_t t = 0; t < d.size(); ++t) d[t] += gen_deg_[id][t];
    return d;
  }
  IndexVector x_degree(FockState const &s) const {
    IndexVector v;
    for (auto id : s) v += gens_[id].u;
    return v;
  }
  Count z_degree(FockState const &s) const {
    Count z = 0;
    for (auto id : s) z += gens_[id].z_deg;
    return z;
  }
  bool in_bound(std::vector<Count> const &d) const {
    for (std::size_t t = 0; t < d.size(); ++t)
      if (d[t] > caps_[t]) return false;
    return true;
  }

  /// q_u(a) applied to a basis state.
  QResult apply(FockOp const &o, FockState const &s) const {
    QResult r;
    if (o.creation) {
      std::size_t g = generator_index(o.u_index, o.cls);
      auto d = x_digits(s);
      for (std::size_t t = 0; t < d.size(); ++t) d[t] += gen_deg_[g][t];
      int const pg = gens_[g].parity;
      if (pg == 1 && std::find(s.begin(), s.end(), g) != s.end()) return r; // odd squared
      if (!in_bound(d)) {
        r.truncated = true;
        return r;
      }
      int passed = 0;
      FockState out;
      out.reserve(s.size() + 1);
      bool placed = false;
      for (auto id : s) {
        if (!placed && id >= g) {
          out.push_back(static_cast<std::uint16_t>(g));
          placed = true;
        }
        if (!placed) passed += gens_[id].parity;
        out.push_back(id);
      }
      if (!placed) out.push_back(static_cast<std::uint16_t>(g));
      Count sign = (pg * passed) % 2 == 0 ? 1 : -1;
      r.terms.emplace_back(sign, std::move(out));
      return r;
    }
    // annihilation q_{-u0}(a')
    IndexVector const minus_u = -us_[o.u_index];
    int const pa = op_parity(o);
    int before = 0;
    std::map<FockState, Count> acc;
    for (std::size_t i = 0; i < s.size(); ++i) {
      FockGenerator const &gi = gens_[s[i]];
      if (gi.u_index == o.u_index) {
        Count c = pairing(coh_, minus_u, o.cls, gi.cls);
        if (c != 0) {
          if ((pa * before) % 2 == 1) c = -c;
          FockState out;
          out.reserve(s.size() - 1);
          for (std::size_t j = 0; j < s.size(); ++j)
            if (j != i) out.push_back(s[j]);
          acc[out] += c;
        }
      }
      before += gi.parity;
    }
    for (auto &[st, c] : acc)
      if (c != 0) r.terms.emplace_back(c, st);
    return r;
  }

  QResult apply(IndexVector const &u, std::size_t cls, FockState const &s) const {
    return apply(op(u, cls), s);
  }

  /// Depth-first enumeration of every basis state within the bound.
  template <class Visit> void for_each_state(Visit visit) const {
    FockState cur;
    std::vector<Count> deg(levels_.size(), 0);
    Count z = 0;
    auto rec = [&](auto &&self, std::size_t g) -> void {
      if (g == gens_.size()) {
        visit(cur, deg, z);
        return;
      }
      self(self, g + 1);
      int pushed = 0;
      while (true) {
        bool ok = true;
        for (std::size_t t = 0; t < deg.size(); ++t) {
          deg[t] += gen_deg_[g][t];
          if (deg[t] > caps_[t]) ok = false;
        }
        bool degenerate = true;
        for (std::size_t t = 0; t < deg.size(); ++t) degenerate = degenerate && gen_deg_[g][t] == 0;
        if (!ok || degenerate) {
          for (std::size_t t = 0; t < deg.size(); ++t) deg[t] -= gen_deg_[g][t];
          break;
        }
        cur.push_back(static_cast<std::uint16_t>(g));
        z += gens_[g].z_deg;
        ++pushed;
        self(self, g + 1);
        if (gens_[g].parity == 1) break;
      }
      for (int k = 0; k < pushed; ++k) {
        cur.pop_back();
        z -= gens_[g].z_deg;
        for (std::size_t t = 0; t < deg.size(); ++t) deg[t] -= gen_deg_[g][t];
      }
    };
    rec(rec, 0);
  }

  /// Generators are laid out u-major, class-minor.
  std::size_t generator_index(std::size_t u_index, std::size_t cls) const {
    return u_base_[u_index] + cls;
  }

private:
  CohModel coh_;
  TruncationOrder bound_;
  std::vector<IndexVector> us_;
  std::vector<FockGenerator> gens_;
  std::vector<Level> levels_; // 0 first, then window levels
  std::vector<std::vector<Count>> gen_deg_;
  std::vector<Count> caps_;
  std::vector<std::size_t> u_base_;
};

/// Counting series of the basis states by (z-degree, x-degree).
inline MultiSeries fock_character(FockSpace const &F) {
  MultiSeries s(F.bound());
  std::map<std::pair<std::vector<Count>, Count>, std::int64_t> counts;
  F.for_each_state([&](FockState const &, std::vector<Count> const &deg, Count z) { ++counts[{deg, z}]; });
  std::vector<Level> levels{0};
  for (auto const &[a, cap] : F.bound().caps) levels.push_back(a);
  for (auto const &[key, n] : counts) {
    MultiDegree d;
    d.z_deg = key.second;
    d.x0_deg = key.first[0];
    for (std::size_t t = 1; t < levels.size(); ++t) d.set_x(levels[t], key.first[t]);
    s.add_term(d, n);
  }
  return s;
}
inline MultiSeries fock_character(TruncationOrder const &bound, BettiData const &betti) {
  return fock_character(FockSpace(CohModel::from_betti(betti), bound));
}

struct HeisenbergReport {
  std::int64_t pairs_checked = 0;
  std::int64_t states_checked = 0;  // (pair, state) evaluations certified in bound
  std::int64_t states_skipped = 0;  // (pair, state) evaluations touching the truncation
  std::int64_t nonzero_brackets = 0; // certified evaluations with a nonzero expected value
  std::int64_t basis_size = 0;
  std::int64_t violation_count = 0;
  std::vector<std::string> violations; // first few, for diagnostics
  bool ok() const { return violation_count == 0; }

  void merge(HeisenbergReport const &o) {
    pairs_checked += o.pairs_checked;
    states_checked += o.states_checked;
    states_skipped += o.states_skipped;
    nonzero_brackets += o.nonzero_brackets;
    violation_count += o.violation_count;
    for (auto const &v : o.violations)
      if (violations.size() < 20) violations.push_back(v);
  }
};

/// Basis plus precomputed images of every operator on every basis state.
class FockOperatorTables {
public:
  explicit FockOperatorTables(FockSpace const &F, unsigned jobs = 1) : F_(F), ops_(F.all_ops()) {
    F.for_each_state([&](FockState const &s, std::vector<Count> const &, Count) {
      index_.emplace(s, static_cast<std::int32_t>(states_.size()));
      states_.push_back(s);
    });
    // every nonempty state arises from a smaller one by a creation
    for (auto const &s : states_) {
      if (s.empty()) continue;
      FockState t(s.begin(), s.end() - 1);
      if (!index_.contains(t)) throw std::logic_error("Fock basis is not closed under removing a factor");
    }
    std::size_t const n = states_.size();
    tables_.resize(ops_.size());
    parallel_accumulate<int>(ops_.size(), jobs, [&](std::size_t k, int &) {
      Table &tb = tables_[k];
      tb.offsets.assign(n + 1, 0);
      tb.truncated.assign(n, 0);
      for (std::size_t i = 0; i < n; ++i) {
        QResult r = F_.apply(ops_[k], states_[i]);
        tb.truncated[i] = r.truncated ? 1 : 0;
        for (auto const &[c, st] : r.terms) {
          auto it = index_.find(st);
          if (it == index_.end()) throw std::logic_error("operator image left the basis");
          tb.entries.push_back({it->second, static_cast<std::int32_t>(c)});
        }
        tb.offsets[i + 1] = static_cast<std::uint32_t>(tb.entries.size());
      }
    });
  }

  struct Entry {
    std::int32_t state;
    std::int32_t coef;
  };
  struct Table {
    std::vector<std::uint32_t> offsets;
    std::vector<Entry> entries;
    std::vector<std::uint8_t> truncated;
  };

  std::size_t basis_size() const { return states_.size(); }
  std::vector<FockOp> const &ops() const { return ops_; }
  std::vector<FockState> const &states() const { return states_; }
  Table const &table(std::size_t k) const { return tables_[k]; }

  /// Checks [q_1, q_2] = eps mu(u1) int a1 a2 id on every certified basis state.
  HeisenbergReport check_pair(std::size_t k1, std::size_t k2) const {
    HeisenbergReport rep;
    rep.pairs_checked = 1;
    FockOp const &o1 = ops_[k1];
    FockOp const &o2 = ops_[k2];
    IndexVector const u1 = F_.op_vector(o1), u2 = F_.op_vector(o2);
    int const p1 = F_.op_parity(o1), p2 = F_.op_parity(o2);
    Count const swap_sign = (p1 * p2) % 2 == 0 ? 1 : -1;
    Count expected = 0;
    if ((u1 + u2).is_zero()) expected = pairing(F_.coh(), u1, o1.cls, o2.cls);

    Table const &t1 = tables_[k1];
    Table const &t2 = tables_[k2];
    std::vector<std::pair<std::int32_t, Count>> acc;
    for (std::size_t s = 0; s < states_.size(); ++s) {
      if (t1.truncated[s] || t2.truncated[s]) {
        ++rep.states_skipped;
        continue;
      }
      acc.clear();
      bool trunc = false;
      // q1 q2 s
      for (auto e = t2.offsets[s]; e < t2.offsets[s + 1] && !trunc; ++e) {
        auto const &x = t2.entries[e];
        if (t1.truncated[x.state]) trunc = true;
        for (auto f = t1.offsets[x.state]; f < t1.offsets[x.state + 1]; ++f)
          acc.emplace_back(t1.entries[f].state, Count(x.coef) * t1.entries[f].coef);
      }
      // - (-1)^{p1 p2} q2 q1 s
      for (auto e = t1.offsets[s]; e < t1.offsets[s + 1] && !trunc; ++e) {
        auto const &x = t1.entries[e];
        if (t2.truncated[x.state]) trunc = true;
        for (auto f = t2.offsets[x.state]; f < t2.offsets[x.state + 1]; ++f)
          acc.emplace_back(t2.entries[f].state, -swap_sign * Count(x.coef) * t2.entries[f].coef);
      }
      if (trunc) {
        ++rep.states_skipped;
        continue;
      }
      ++rep.states_checked;
      if (expected != 0) {
        ++rep.nonzero_brackets;
        acc.emplace_back(static_cast<std::int32_t>(s), -expected);
      }
      std::sort(acc.begin(), acc.end());
      for (std::size_t i = 0; i < acc.size();) {
        std::size_t j = i;
        Count sum = 0;
        while (j < acc.size() && acc[j].first == acc[i].first) sum += acc[j++].second;
        if (sum != 0) {
          ++rep.violation_count;
          if (rep.violations.size() < 5)
            rep.violations.push_back("[q_" + u1.to_string() + "(" + std::to_string(o1.cls) + "), q_" +
                                     u2.to_string() + "(" + std::to_string(o2.cls) +
                                     ")] on state #" + std::to_string(s) + ": residual " +
                                     std::to_string(sum) + " at state #" + std::to_string(acc[i].first));
          break;
        }
        i = j;
      }
    }
    return rep;
  }

  /// All ordered operator pairs.
  HeisenbergReport check_all(unsigned jobs = 1) const {
    std::size_t const n = ops_.size();
    auto parts = parallel_accumulate<HeisenbergReport>(n, jobs, [&](std::size_t k1, HeisenbergReport &r) {
      for (std::size_t k2 = 0; k2 < n; ++k2) r.merge(check_pair(k1, k2));
    });
    HeisenbergReport total;
    for (auto const &p : parts) total.merge(p);
    total.basis_size = static_cast<std::int64_t>(states_.size());
    return total;
  }

private:
  FockSpace const &F_;
  std::vector<FockOp> ops_;
  std::vector<FockState> states_;
  std::unordered_map<FockState, std::int32_t, FockStateHash> index_;
  std::vector<Table> tables_;
};

/// [q_{u1}(a1), q_{u2}(a2)] against eps mu(u1) int a1 a2 on every basis state in bound.
inline HeisenbergReport commutator_check(FockSpace const &F, IndexVector const &u1, std::size_t a1,
                                         IndexVector const &u2, std::size_t a2) {
  FockOperatorTables T(F);
  auto find = [&](FockOp const &o) {
    for (std::size_t k = 0; k < T.ops().size(); ++k) {
      auto const &x = T.ops()[k];
      if (x.creation == o.creation && x.u_index == o.u_index && x.cls == o.cls) return k;
    }
    throw std::logic_error("operator not tabulated");
  };
  auto r = T.check_pair(find(F.op(u1, a1)), find(F.op(u2, a2)));
  r.basis_size = static_cast<std::int64_t>(T.basis_size());
  return r;
}

/// Every generator pair on the model bounded by `bound`.
inline HeisenbergReport verify_heisenberg(BettiData const &betti, TruncationOrder const &bound,
                                          unsigned jobs = 1) {
  FockSpace F(CohModel::from_betti(betti), bound);
  FockOperatorTables T(F, jobs);
  return T.check_all(jobs);
}

} // namespace parahilb
