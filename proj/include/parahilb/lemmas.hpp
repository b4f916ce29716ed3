#pragma once

// Exhaustive verification of the dimension estimates for the incidence and
// composition varieties. Everything is evaluated in the "L" domain: index
// vectors with no negative-level entries, where the estimates are stated.
//
// For a generator u and local length vectors a (and a + u ...), the local
// defect terms below are what the dimension of a stratum exceeds (or falls
// short of) the expected dimension by. The claims are
//   single:    defect(a, u) <= g(u), equality iff a = 0 or a + u = 0;
//   pair:      defect(a, u1, u2) <= g(u1) + g(u2),
//              equality iff u1 in C_L and u1 + u2 = a = 0;
//   incidence: for u in C_L, defect(a, u) <= 0 with equality iff a = 0.
// The ambient vector v never enters a defect; it only has to exist, which it
// always does (take v = a + N e_0 for N large), so it is not enumerated.

#include "parahilb/lattice.hpp"
#include "parahilb/parallel.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace parahilb {

struct LemmaReport {
  std::int64_t bound = 0;
  std::int64_t single_cases = 0;     // (u, a)
  std::int64_t single_equalities = 0;
  std::int64_t pair_cases = 0;       // (u1, u2, a)
  std::int64_t pair_equalities = 0;
  std::int64_t incidence_cases = 0;  // (u in C_L, a)
  std::int64_t incidence_equalities = 0;
  std::vector<std::string> violations;

  std::int64_t total_cases() const { return single_cases + pair_cases + incidence_cases; }
  bool ok() const { return violations.empty(); }

  void merge(LemmaReport const &o) {
    single_cases += o.single_cases;
    single_equalities += o.single_equalities;
    pair_cases += o.pair_cases;
    pair_equalities += o.pair_equalities;
    incidence_cases += o.incidence_cases;
    incidence_equalities += o.incidence_equalities;
    violations.insert(violations.end(), o.violations.begin(), o.violations.end());
  }
};

/// Levels exercised by the exhaustive check.
inline constexpr Level kLemmaLevelLo = -2;
inline constexpr Level kLemmaLevelHi = 2;

inline bool in_A_L(IndexVector const &v) { return is_admissible(v) && norms(v).minus == 0; }

inline bool in_C_L(IndexVector const &u) {
  auto c = classify_generator(u);
  return c.kind == GeneratorClass::Kind::PosC && c.alpha >= 0;
}

namespace lemma_detail {
inline int eps_plus(IndexVector const &v) { return epsilon(positive_part(v)); }
} // namespace lemma_detail

/// Local defect of a stratum of the two-point composition variety at one point.
inline Count single_defect(IndexVector const &a, IndexVector const &u) {
  using lemma_detail::eps_plus;
  IndexVector au = a + u;
  return -norms(a).plus - eps_plus(a) + epsilon(a) - eps_plus(au) + epsilon(au) +
         eps_plus(u) * epsilon(jump_part(a)) * eps_plus(au);
}

/// Local defect of a stratum of the one-point composition variety.
inline Count pair_defect(IndexVector const &a, IndexVector const &u1, IndexVector const &u2) {
  using lemma_detail::eps_plus;
  IndexVector s = a + u1 + u2;
  return -norms(a).plus - 1 - eps_plus(a) + epsilon(a) - eps_plus(s) + epsilon(s) +
         eps_plus(u1) * eps_plus(u2) * eps_plus(a);
}

/// Local defect of a stratum of the incidence variety (u in C_L).
inline Count incidence_defect(IndexVector const &a, IndexVector const &u) {
  using lemma_detail::eps_plus;
  IndexVector au = a + u;
  return -norms(a).plus - eps_plus(a) + epsilon(a) - eps_plus(au) + eps_plus(a) * eps_plus(au);
}

/// All elements of C~ = C u -C supported on the lemma levels with |rho_0| <= bound.
inline std::vector<IndexVector> lemma_generators(Count bound) {
  std::vector<IndexVector> out;
  for (Level alpha = kLemmaLevelLo; alpha <= kLemmaLevelHi; ++alpha) {
    for (Count m = 0; m <= bound; ++m) {
      IndexVector u = IndexVector::unit(0, m);
      if (alpha != 0) u.add(alpha, 1);
      if (!in_C(u)) continue;
      out.push_back(u);
      out.push_back(-u);
    }
  }
  return out;
}

/// All vectors with entries in [0, bound] on the lemma levels.
inline std::vector<IndexVector> lemma_vectors(Count bound) {
  std::vector<IndexVector> out{IndexVector{}};
  for (Level alpha = kLemmaLevelLo; alpha <= kLemmaLevelHi; ++alpha) {
    std::vector<IndexVector> next;
    for (auto const &v : out)
      for (Count x = 0; x <= bound; ++x) {
        IndexVector w = v;
        w.set(alpha, x);
        next.push_back(w);
      }
    out = std::move(next);
  }
  return out;
}

inline LemmaReport verify_dimension_lemmas(Count bound, unsigned jobs = 1) {
  LemmaReport report;
  report.bound = bound;
  if (bound <= 0) return report;

  auto const gens = lemma_generators(bound);
  std::vector<IndexVector> avecs;
  for (auto const &a : lemma_vectors(bound))
    if (in_A_L(a)) avecs.push_back(a);

  auto parts = parallel_accumulate<LemmaReport>(gens.size(), jobs, [&](std::size_t i, LemmaReport &r) {
    IndexVector const &u1 = gens[i];
    int const g1 = g_value(u1);
    bool const u1_in_CL = in_C_L(u1);
    for (auto const &a : avecs) {
      IndexVector const a1 = a + u1;
      if (!in_A_L(a1)) continue;

      ++r.single_cases;
      Count lhs = single_defect(a, u1);
      bool expect_eq = a.is_zero() || a1.is_zero();
      if (lhs == g1) ++r.single_equalities;
      if (lhs > g1 || (lhs == g1) != expect_eq)
        r.violations.push_back("single: u=" + u1.to_string() + " a=" + a.to_string() +
                               " lhs=" + std::to_string(lhs) + " g=" + std::to_string(g1));

      if (u1_in_CL) {
        ++r.incidence_cases;
        Count dfx = incidence_defect(a, u1);
        if (dfx == 0) ++r.incidence_equalities;
        if (dfx > 0 || (dfx == 0) != a.is_zero())
          r.violations.push_back("incidence: u=" + u1.to_string() + " a=" + a.to_string() +
                                 " defect=" + std::to_string(dfx));
      }

      for (auto const &u2 : gens) {
        IndexVector const a12 = a1 + u2;
        if (!in_A_L(a12)) continue;
        ++r.pair_cases;
        int const g12 = g1 + g_value(u2);
        Count lhs2 = pair_defect(a, u1, u2);
        bool expect_eq2 = u1_in_CL && (u1 + u2).is_zero() && a.is_zero();
        if (lhs2 == g12) ++r.pair_equalities;
        if (lhs2 > g12 || (lhs2 == g12) != expect_eq2)
          r.violations.push_back("pair: u1=" + u1.to_string() + " u2=" + u2.to_string() +
                                 " a=" + a.to_string() + " lhs=" + std::to_string(lhs2) +
                                 " g=" + std::to_string(g12));
      }
    }
  });
  for (auto const &p : parts) report.merge(p);
  return report;
}

} // namespace parahilb
