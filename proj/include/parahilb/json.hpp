#pragma once

// JSON encodings of every value type. Big integers travel as decimal strings;
// object keys are sorted (nlohmann's default std::map), so identical values
// always serialise to identical bytes.

#include "parahilb/cells.hpp"
#include "parahilb/fock.hpp"
#include "parahilb/genfun.hpp"
#include "parahilb/lattice.hpp"
#include "parahilb/lemmas.hpp"
#include "parahilb/polynomial.hpp"
#include "parahilb/series.hpp"
#include "parahilb/weights.hpp"

#include <nlohmann/json.hpp>

#include <stdexcept>
#include <string>

namespace parahilb {

using Json = nlohmann::json;

// --- IndexVector: {"0":2,"1":1} -------------------------------------------------

inline Json to_json(IndexVector const &v) {
  Json j = Json::object();
  for (auto const &[a, x] : v.entries()) j[std::to_string(a)] = x;
  return j;
}

inline IndexVector index_vector_from_json(Json const &j) {
  if (!j.is_object()) throw std::invalid_argument("index vector must be a JSON object");
  IndexVector v;
  for (auto it = j.begin(); it != j.end(); ++it) {
    std::size_t used = 0;
    Level a = 0;
    try {
      a = std::stoi(it.key(), &used);
    } catch (std::exception const &) {
      used = 0;
    }
    if (used == 0 || used != it.key().size())
      throw std::invalid_argument("index vector key '" + it.key() + "' is not an integer level");
    if (!it.value().is_number_integer())
      throw std::invalid_argument("index vector value at level " + it.key() + " is not an integer");
    v.add(a, it.value().get<Count>());
  }
  return v;
}

inline IndexVector parse_index_vector(std::string const &text) {
  Json j;
  try {
    j = Json::parse(text);
  } catch (Json::parse_error const &e) {
    throw std::invalid_argument(std::string("invalid JSON for index vector: ") + e.what());
  }
  return index_vector_from_json(j);
}

inline Json to_json(Window const &w) { return Json::array({w.lo, w.hi}); }

// --- CellLabel: [[alpha, m, mult], ...] ----------------------------------------

inline Json to_json(CellLabel const &eta) {
  Json j = Json::array();
  for (auto const &p : eta.part_list()) j.push_back(Json::array({p.alpha, p.m, p.mult}));
  return j;
}

inline CellLabel cell_label_from_json(Json const &j) {
  if (!j.is_array()) throw std::invalid_argument("cell label must be a JSON array");
  CellLabel eta;
  for (auto const &t : j) {
    if (!t.is_array() || t.size() != 3)
      throw std::invalid_argument("cell label parts are [alpha, m, multiplicity] triples");
    eta.add(t[0].get<Level>(), t[1].get<Count>(), t[2].get<Count>());
  }
  return eta;
}

// --- polynomials ----------------------------------------------------------------

/// Coefficient list in ascending degree, as decimal strings.
inline Json coefficients_json(Poly const &p) {
  Json j = Json::array();
  for (int e = 0; e <= p.degree(); ++e) j.push_back(p.coeff(e).str());
  return j;
}

// --- LaurentPair: [[i, j, c], ...] ----------------------------------------------

inline Json to_json(LaurentPair const &T) {
  Json j = Json::array();
  for (auto const &[k, c] : T.terms()) j.push_back(Json::array({k.first, k.second, c}));
  return j;
}

// --- TruncationOrder and MultiSeries ----------------------------------------------

inline Json to_json(TruncationOrder const &o) {
  Json caps = Json::object();
  for (auto const &[a, m] : o.caps) caps[std::to_string(a)] = m;
  return {{"N0", o.N0}, {"window", to_json(o.window)}, {"caps", caps}};
}

inline Json to_json(MultiSeries const &s) {
  Json terms = Json::array();
  for (auto const &[d, c] : s.terms()) {
    Json xs = Json::object();
    for (auto const &[a, x] : d.x_deg) xs[std::to_string(a)] = x;
    terms.push_back(Json::array({d.z_deg, d.x0_deg, xs, c.str()}));
  }
  return {{"order", to_json(s.order())}, {"terms", terms}};
}

inline MultiSeries series_from_json(Json const &j) {
  auto const &o = j.at("order");
  Window w(o.at("window").at(0).get<Level>(), o.at("window").at(1).get<Level>());
  std::map<Level, Count> caps;
  for (auto it = o.at("caps").begin(); it != o.at("caps").end(); ++it)
    caps[std::stoi(it.key())] = it.value().get<Count>();
  TruncationOrder order(o.at("N0").get<Count>(), w, caps);
  MultiSeries s(order);
  for (auto const &t : j.at("terms")) {
    MultiDegree d(t.at(0).get<Count>(), t.at(1).get<Count>());
    for (auto it = t.at(2).begin(); it != t.at(2).end(); ++it) d.set_x(std::stoi(it.key()), it.value().get<Count>());
    s.add_term(d, BigInt(t.at(3).get<std::string>()));
  }
  return s;
}

// --- BettiData: {"X":[b0..b4],"D":[b0..b2]} --------------------------------------

inline Json to_json(BettiData const &b) { return {{"X", b.X}, {"D", b.D}}; }

inline BettiData betti_from_json(Json const &j) {
  BettiData b;
  auto const &x = j.at("X");
  auto const &d = j.at("D");
  if (x.size() != 5 || d.size() != 3)
    throw std::invalid_argument("Betti data needs 5 numbers for X and 3 for D");
  for (std::size_t i = 0; i < 5; ++i) b.X[i] = x[i].get<Count>();
  for (std::size_t i = 0; i < 3; ++i) b.D[i] = d[i].get<Count>();
  for (auto v : b.X)
    if (v < 0) throw std::invalid_argument("Betti numbers must be non-negative");
  for (auto v : b.D)
    if (v < 0) throw std::invalid_argument("Betti numbers must be non-negative");
  return b;
}

// --- generator classification -------------------------------------------------------

inline Json to_json(GeneratorClass const &c) {
  switch (c.kind) {
  case GeneratorClass::Kind::PosC:
    return {{"kind", "PosC"}, {"alpha", c.alpha}};
  case GeneratorClass::Kind::NegC:
    return {{"kind", "NegC"}, {"alpha", c.alpha}};
  default:
    return {{"kind", "NotGenerator"}};
  }
}

// --- reports ------------------------------------------------------------------------

inline Json to_json(LemmaReport const &r) {
  return {{"bound", r.bound},
          {"levels", Json::array({kLemmaLevelLo, kLemmaLevelHi})},
          {"single_cases", r.single_cases},
          {"single_equalities", r.single_equalities},
          {"pair_cases", r.pair_cases},
          {"pair_equalities", r.pair_equalities},
          {"incidence_cases", r.incidence_cases},
          {"incidence_equalities", r.incidence_equalities},
          {"cases", r.total_cases()},
          {"violations", r.violations}};
}

inline Json to_json(CellProductReport const &r) {
  return {{"window", to_json(r.window)}, {"max_n", r.max_n},          {"cap", r.cap},
          {"cases", r.cases},            {"vanishing", r.vanishing},  {"mismatches", r.mismatches}};
}

inline Json to_json(HeisenbergReport const &r) {
  return {{"pairs_checked", r.pairs_checked},     {"states_checked", r.states_checked},
          {"states_skipped", r.states_skipped},   {"nonzero_brackets", r.nonzero_brackets},
          {"basis_size", r.basis_size},           {"violation_count", r.violation_count},
          {"violations", r.violations}};
}

} // namespace parahilb
