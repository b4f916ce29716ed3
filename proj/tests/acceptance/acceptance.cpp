// Acceptance run: one PASS/FAIL line per criterion, with wall time.
// Every comparison is exact; the process exits non-zero if any criterion fails.

#include "oracles.hpp"
#include "parahilb/parahilb.hpp"

#include <chrono>
#include <fstream>
#include <functional>
#include <iomanip>
#include <map>
#include <thread>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

using namespace parahilb;

namespace {

struct Outcome {
  bool ok = true;
  std::string detail;
};

Poly from_dense(oracle::DensePoly const &p) {
  Poly r;
  for (std::size_t e = 0; e < p.size(); ++e) r.add_term(static_cast<int>(e), p[e]);
  return r;
}

BettiData odd_profile() {
  BettiData b;
  b.D = {1, 2, 1};
  return b;
}

unsigned jobs() { return std::max(1u, std::thread::hardware_concurrency()); }

// 1. classical reduction
Outcome classical() {
  Outcome o;
  std::ostringstream d;
  for (int n = 0; n <= 7; ++n) {
    auto labels = enumerate_labels(IndexVector::unit(0, n));
    if (static_cast<oracle::i64>(labels.size()) != oracle::partition_number(n)) {
      o.ok = false;
      d << "p(" << n << ") mismatch; ";
    }
    if (punctual_poincare(IndexVector::unit(0, n)) != from_dense(oracle::punctual_plane_poincare(n))) {
      o.ok = false;
      d << "punctual poincare n=" << n << " mismatch; ";
    }
  }
  auto g = goettsche_series({1, 0, 1, 0, 1}, TruncationOrder(2, Window(-1, 1), 0));
  std::string h2 = g.coefficient({{0, 2}}).to_string("z");
  if (h2 != "1+2z^2+3z^4+2z^6+z^8" || g.coefficient({{0, 2}}) != from_dense(oracle::hilb_p2_poincare(2))) {
    o.ok = false;
    d << "Hilb^2(P^2) = " << h2 << "; ";
  }
  d << "p(0..7) and punctual polynomials match; Hilb^2(P^2) = " << h2;
  o.detail = d.str();
  return o;
}

// 2. dual-path punctual identity
Outcome dual_path() {
  auto r = verify_cell_vs_product(Window(-2, 3), 5, 2, jobs());
  Outcome o{r.ok(), std::to_string(r.cases) + " admissible v, " + std::to_string(r.vanishing) +
                        " vanishing coefficients, " + std::to_string(r.mismatches.size()) + " mismatches"};
  if (!r.ok()) o.detail += " (first: " + r.mismatches.front() + ")";
  return o;
}

// 3. tangent-weight coherence
Outcome weights_coherence() {
  auto r = verify_weights(Window(-2, 3), 4, 3);
  Outcome o{r.ok() && r.labels > 0, std::to_string(r.labels) + " labels (jump entries <= 3), " +
                                        std::to_string(r.violations.size()) + " violations"};
  if (!r.ok()) o.detail += " (first: " + r.violations.front() + ")";
  return o;
}

// 4. dimension-estimate lemmas
Outcome lemmas() {
  auto r = verify_dimension_lemmas(4, jobs());
  std::ostringstream d;
  d << r.total_cases() << " cases (" << r.single_equalities << " + " << r.pair_equalities << " + "
    << r.incidence_equalities << " equality cases), " << r.violations.size() << " violations";
  if (!r.ok()) d << " (first: " << r.violations.front() << ")";
  return {r.ok() && r.total_cases() > 0 && r.single_equalities > 0 && r.pair_equalities > 0, d.str()};
}

// 5. Heisenberg relations
Outcome heisenberg() {
  Outcome o;
  std::ostringstream d;
  for (Count m = 1; m <= 6; ++m)
    if (mu(IndexVector::unit(0, m)) != (m % 2 == 1 ? m : -m)) {
      o.ok = false;
      d << "mu(" << m << "e0) wrong; ";
    }
  TruncationOrder bound(4, Window(-2, 3), 2);
  for (auto const &b : {BettiData{}, odd_profile()}) {
    auto r = verify_heisenberg(b, bound, jobs());
    o.ok = o.ok && r.ok() && r.nonzero_brackets > 0;
    d << "D=(" << b.D[0] << "," << b.D[1] << "," << b.D[2] << "): " << r.pairs_checked << " pairs, "
      << r.states_checked << " states, " << r.violation_count << " violations; ";
    if (!r.ok()) d << "first: " << r.violations.front() << "; ";
  }
  d << "mu(m e0) = (-1)^(m-1) m for m <= 6";
  o.detail = d.str();
  return o;
}

// 6. character identity
Outcome character() {
  Outcome o;
  std::ostringstream d;
  TruncationOrder bound(4, Window(-2, 3), 2);
  for (auto const &b : {BettiData{}, odd_profile()}) {
    auto ch = fock_character(bound, b);
    auto ps = parabolic_poincare_series(b, bound);
    bool eq = ch == ps;
    o.ok = o.ok && eq;
    d << "D=(" << b.D[0] << "," << b.D[1] << "," << b.D[2] << "): " << ps.size() << " terms "
      << (eq ? "equal" : "DIFFER") << "; ";
  }
  o.detail = d.str();
  return o;
}

// 7. shift invariance and the literal case formulas
Outcome shift_invariance() {
  Outcome o;
  std::ostringstream d;
  Window const w(-2, 3);
  BettiData const b;
  auto const vs = index_vectors_in_window(w, 4, 2);
  std::int64_t checked = 0;
  // series for the source window, and one per image window
  MultiSeries const src = parabolic_poincare_series(b, w, TruncationOrder(4, w, 2));
  std::map<std::pair<Level, Level>, MultiSeries> images;
  for (Level beta : {-2, -1, 1, 2}) {
    for (auto const &v : vs) {
      if (!is_admissible(v)) continue;
      auto r = shift_index(v, beta, w, ShiftConvention::DegreePreserving);
      if (degree(r.v) != degree(v)) {
        o.ok = false;
        d << "degree changed for " << v.to_string() << " beta=" << beta << "; ";
      }
      auto key = std::pair{r.window.lo, r.window.hi};
      auto it = images.find(key);
      if (it == images.end())
        it = images.emplace(key, parabolic_poincare_series(b, r.window, TruncationOrder(8, r.window, 2))).first;
      if (it->second.coefficient(r.v) != src.coefficient(v)) {
        o.ok = false;
        d << "Poincare changed for " << v.to_string() << " beta=" << beta << "; ";
      }
      ++checked;
    }
  }
  std::ifstream in(std::string(PARAHILB_GOLDEN_DIR) + "/shift_golden.json");
  std::int64_t golden = 0;
  if (!in) {
    o.ok = false;
    d << "golden file missing; ";
  } else {
    Json doc = Json::parse(in);
    Window gw(doc["window"][0].get<Level>(), doc["window"][1].get<Level>());
    for (auto const &c : doc["cases"]) {
      IndexVector v = index_vector_from_json(c["v"]);
      Level beta = c["beta"].get<Level>();
      if (shift_index(v, beta, gw, ShiftConvention::Literal).v != index_vector_from_json(c["literal"]) ||
          shift_index(v, beta, gw, ShiftConvention::DegreePreserving).v !=
              index_vector_from_json(c["d_preserving"])) {
        o.ok = false;
        d << "golden mismatch at " << v.to_string() << " beta=" << beta << "; ";
      }
      ++golden;
    }
    if (golden == 0) o.ok = false;
  }
  d << checked << " (v, beta) pairs invariant; " << golden << " golden cases reproduced";
  o.detail = d.str();
  return o;
}

// 8. specialization x_alpha = 0
Outcome specialization() {
  Outcome o;
  std::ostringstream d;
  for (auto const &b : {BettiData{}, odd_profile()}) {
    auto par = parabolic_poincare_series(b, TruncationOrder(6, Window(-2, 3), 1)).drop_levels();
    auto g = goettsche_series(b.X, TruncationOrder(6, Window(-2, 3), 0));
    bool eq = par == g;
    o.ok = o.ok && eq;
    d << g.size() << " terms " << (eq ? "equal" : "DIFFER") << "; ";
  }
  d << "up to x0^6";
  o.detail = d.str();
  return o;
}

} // namespace

int main() {
  struct Criterion {
    char const *name;
    double budget_s;
    std::function<Outcome()> run;
  };
  std::vector<Criterion> const criteria{
      {"1 classical reduction", 1, classical},
      {"2 dual-path punctual identity", 60, dual_path},
      {"3 tangent-weight coherence", 60, weights_coherence},
      {"4 dimension-estimate lemmas", 60, lemmas},
      {"5 Heisenberg relations", 120, heisenberg},
      {"6 character identity", 60, character},
      {"7 shift invariance", 60, shift_invariance},
      {"8 specialization", 10, specialization},
  };
  int failures = 0;
  for (auto const &c : criteria) {
    auto t0 = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (std::exception const &e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    bool in_time = secs <= c.budget_s;
    bool pass = o.ok && in_time;
    if (!pass) ++failures;
    std::cout << (pass ? "PASS" : "FAIL") << "  criterion " << c.name << "  [" << std::fixed
              << std::setprecision(2) << secs << " s / " << c.budget_s << " s]  " << o.detail
              << (in_time ? "" : "  (over time budget)") << std::endl;
  }
  std::cout << (failures == 0 ? "all acceptance criteria passed" : "acceptance FAILED") << std::endl;
  return failures == 0 ? 0 : 1;
}
