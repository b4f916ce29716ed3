#pragma once

// Command layer behind the parahilb executable. Each command takes parsed
// options and returns a JSON document plus an exit code:
//   0  computed / verified, 1  usage or invalid input, 2  verification violation.
// Keeping this separate from argument parsing lets the tests drive commands
// directly.

#include "parahilb/cells.hpp"
#include "parahilb/fock.hpp"
#include "parahilb/genfun.hpp"
#include "parahilb/json.hpp"
#include "parahilb/lattice.hpp"
#include "parahilb/lemmas.hpp"
#include "parahilb/series.hpp"
#include "parahilb/weights.hpp"

#include <algorithm>
#include <charconv>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace parahilb {

enum ExitCode : int { kExitOk = 0, kExitUsage = 1, kExitViolation = 2 };

struct CommandResult {
  Json json;
  int exit_code = kExitOk;
};

/// Thrown for malformed flags; maps to exit code 1.
struct UsageError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

// ---------------------------------------------------------------------------
// flag parsers

namespace cli_detail {

inline long long parse_int(std::string_view s, char const *what) {
  long long x = 0;
  auto const *end = s.data() + s.size();
  auto [p, ec] = std::from_chars(s.data(), end, x);
  if (s.empty() || ec != std::errc() || p != end)
    throw UsageError(std::string(what) + ": '" + std::string(s) + "' is not an integer");
  return x;
}

inline std::vector<std::string> split(std::string const &s, char sep) {
  std::vector<std::string> out;
  std::string cur;
  std::istringstream in(s);
  while (std::getline(in, cur, sep)) out.push_back(cur);
  if (!s.empty() && s.back() == sep) out.emplace_back();
  return out;
}

} // namespace cli_detail

/// "lo:hi" -> Window.
inline Window parse_window(std::string const &text) {
  auto parts = cli_detail::split(text, ':');
  if (parts.size() != 2) throw UsageError("--window expects lo:hi, got '" + text + "'");
  auto lo = cli_detail::parse_int(parts[0], "--window");
  auto hi = cli_detail::parse_int(parts[1], "--window");
  try {
    return Window(static_cast<Level>(lo), static_cast<Level>(hi));
  } catch (std::invalid_argument const &e) {
    throw UsageError(e.what());
  }
}

/// "N0" or "N0,M" (M = cap for every nonzero level of the window).
inline TruncationOrder parse_order(std::string const &text, Window const &w, Count default_cap = 2) {
  auto parts = cli_detail::split(text, ',');
  if (parts.empty() || parts.size() > 2) throw UsageError("--order expects N0[,M], got '" + text + "'");
  auto n0 = cli_detail::parse_int(parts[0], "--order");
  Count cap = parts.size() == 2 ? cli_detail::parse_int(parts[1], "--order") : default_cap;
  if (n0 < 0 || cap < 0) throw UsageError("--order values must be non-negative");
  return TruncationOrder(n0, w, cap);
}

/// Either a JSON document {"X":[...],"D":[...]} or tokens "X=1,0,1,0,1" "D=1,0,1".
inline BettiData parse_betti(std::vector<std::string> const &tokens) {
  if (tokens.empty()) throw UsageError("--betti is required");
  try {
    if (tokens.size() == 1 && !tokens[0].empty() && tokens[0].front() == '{')
      return betti_from_json(Json::parse(tokens[0]));
  } catch (Json::exception const &e) {
    throw UsageError(std::string("--betti: ") + e.what());
  } catch (std::invalid_argument const &e) {
    throw UsageError(std::string("--betti: ") + e.what());
  }
  BettiData b;
  bool seenX = false, seenD = false;
  for (auto const &tok : tokens) {
    auto eq = tok.find('=');
    if (eq == std::string::npos) throw UsageError("--betti token '" + tok + "' must be X=... or D=...");
    std::string key = tok.substr(0, eq);
    auto nums = cli_detail::split(tok.substr(eq + 1), ',');
    auto fill = [&](auto &arr, char const *name) {
      if (nums.size() != arr.size())
        throw UsageError(std::string("--betti ") + name + " needs " + std::to_string(arr.size()) +
                         " numbers");
      for (std::size_t i = 0; i < arr.size(); ++i) {
        arr[i] = cli_detail::parse_int(nums[i], "--betti");
        if (arr[i] < 0) throw UsageError("--betti: Betti numbers must be non-negative");
      }
    };
    if (key == "X") {
      fill(b.X, "X");
      seenX = true;
    } else if (key == "D") {
      fill(b.D, "D");
      seenD = true;
    } else {
      throw UsageError("--betti key '" + key + "' must be X or D");
    }
  }
  if (!seenX || !seenD) throw UsageError("--betti needs both X=... and D=...");
  return b;
}

inline IndexVector parse_v(std::string const &text) {
  try {
    return parse_index_vector(text);
  } catch (std::invalid_argument const &e) {
    throw UsageError(e.what());
  }
}

inline ShiftConvention parse_convention(std::string const &text) {
  if (text == "d-preserving") return ShiftConvention::DegreePreserving;
  if (text == "paper") return ShiftConvention::Literal;
  throw UsageError("--convention must be 'paper' or 'd-preserving'");
}

/// Smallest window containing {-1, 0} and the support of v.
inline Window window_for(IndexVector const &v) {
  Level lo = -1, hi = 1;
  for (auto const &[a, x] : v.entries()) {
    lo = std::min(lo, a);
    hi = std::max(hi, a + 1);
  }
  return Window(lo, hi);
}

/// Truncation order just large enough to read the coefficient at v.
inline TruncationOrder order_for(IndexVector const &v, Window const &w) {
  std::map<Level, Count> caps;
  for (auto const &[a, x] : v.entries())
    if (a != 0) caps[a] = std::max<Count>(x, 0);
  return TruncationOrder(std::max<Count>(rho0(v), 0), w, caps);
}

// ---------------------------------------------------------------------------
// commands

inline void require_admissible(IndexVector const &v) {
  if (!is_admissible(v)) throw UsageError(v.to_string() + " is not admissible");
}

inline CommandResult cmd_cells(IndexVector const &v) {
  require_admissible(v);
  auto labels = enumerate_labels(v);
  Json cells = Json::array();
  Count top = 0;
  for (auto const &eta : labels) {
    Count d = cell_dimension(eta);
    top = std::max(top, d);
    cells.push_back({{"label", to_json(eta)}, {"dim", d}});
  }
  Json j = {{"v", to_json(v)},
            {"degree", degree(v)},
            {"count", labels.size()},
            {"cells", cells},
            {"top_dim", top},
            {"poincare", punctual_poincare(v).to_string("z")},
            {"motive", punctual_motive(v).to_string("L")}};
  if (norms(v).minus == 0) {
    TopCells t = top_cells(v);
    Json tl = Json::array();
    for (auto const &eta : t.labels) tl.push_back(to_json(eta));
    j["top_cells"] = {{"dim", t.dimension}, {"bound", t.bound}, {"labels", tl},
                      {"characterization_ok", t.characterization_ok}};
  }
  return {j, kExitOk};
}

inline Json series_or_coefficient(MultiSeries const &s, std::optional<IndexVector> const &v,
                                  char const *var) {
  if (!v) return to_json(s);
  Poly p = s.coefficient(*v);
  return {{"v", to_json(*v)}, {"polynomial", p.to_string(var)}, {"coefficients", coefficients_json(p)}};
}

/// Full truncated series, or with v the single coefficient polynomial.
/// Without an explicit window/order, the smallest ones containing v are used.
inline CommandResult cmd_genfun(BettiData const &b, std::optional<Window> window,
                                std::optional<std::string> order_text,
                                std::optional<IndexVector> const &v) {
  Window w = window ? *window : (v ? window_for(*v) : Window(-1, 2));
  if (v && !w.contains(*v)) throw UsageError("--v " + v->to_string() + " lies outside the window");
  TruncationOrder o = order_text ? parse_order(*order_text, w) : (v ? order_for(*v, w) : TruncationOrder(4, w, 2));
  if (v && !o.contains_x(*v)) throw UsageError("--v " + v->to_string() + " lies outside the truncation order");
  MultiSeries s = parabolic_poincare_series(b, w, o);
  Json j = series_or_coefficient(s, v, "z");
  j["betti"] = to_json(b);
  return {j, kExitOk};
}

inline CommandResult cmd_local(std::optional<Window> window, std::optional<std::string> order_text,
                               std::optional<IndexVector> const &v) {
  Window w = window ? *window : (v ? window_for(*v) : Window(-1, 2));
  if (v && !w.contains(*v)) throw UsageError("--v " + v->to_string() + " lies outside the window");
  TruncationOrder o = order_text ? parse_order(*order_text, w) : (v ? order_for(*v, w) : TruncationOrder(4, w, 2));
  if (v && !o.contains_x(*v)) throw UsageError("--v " + v->to_string() + " lies outside the truncation order");
  return {series_or_coefficient(local_punctual_series(w, o), v, "L"), kExitOk};
}

/// Tangent characters at every fixed point of the punctual scheme for v.
inline CommandResult cmd_weights(IndexVector const &v, std::optional<Level> alpha_minus) {
  require_admissible(v);
  Level am = alpha_minus ? *alpha_minus : window_for(v).lo;
  Json pts = Json::array();
  for (auto const &eta : enumerate_labels(v)) {
    LaurentPair T = tangent_weights(eta, am);
    auto w = generic_cocharacter(T.support());
    pts.push_back({{"label", to_json(eta)},
                   {"dim", cell_dimension(eta)},
                   {"weights", to_json(T)},
                   {"total", T.total()},
                   {"cocharacter", Json::array({w.w1, w.w2})},
                   {"positive", positive_weight_count(T)}});
  }
  return {{{"v", to_json(v)}, {"degree", degree(v)}, {"alpha_minus", am}, {"fixed_points", pts}},
          kExitOk};
}

inline CommandResult cmd_shift(IndexVector const &v, Level beta, std::optional<Window> window,
                               ShiftConvention conv) {
  require_admissible(v);
  Window w = window ? *window : window_for(v);
  ShiftResult r;
  try {
    r = shift_index(v, beta, w, conv);
  } catch (std::invalid_argument const &e) {
    throw UsageError(e.what());
  }
  return {{{"v", to_json(v)},
           {"beta", beta},
           {"window", to_json(w)},
           {"convention", conv == ShiftConvention::Literal ? "paper" : "d-preserving"},
           {"image", to_json(r.v)},
           {"image_window", to_json(r.window)},
           {"degree", degree(v)},
           {"image_degree", degree(r.v)}},
          kExitOk};
}

inline CommandResult cmd_mu(IndexVector const &u) {
  GeneratorClass c = classify_generator(u);
  Json j = {{"u", to_json(u)}, {"class", to_json(c)}, {"g", g_value(u)}};
  if (!u.is_zero()) {
    j["sgn"] = sgn(u);
    j["mu"] = mu(u);
  }
  return {j, kExitOk};
}

// --- verify suites ---------------------------------------------------------

inline CommandResult verify_lemmas(Count bound, unsigned jobs) {
  LemmaReport r = verify_dimension_lemmas(bound, jobs);
  Json j = to_json(r);
  j["suite"] = "lemmas";
  return {j, r.ok() ? kExitOk : kExitViolation};
}

inline CommandResult verify_cells_vs_product(Window w, Count max_n, Count cap, unsigned jobs) {
  CellProductReport r = verify_cell_vs_product(w, max_n, cap, jobs);
  Json j = to_json(r);
  j["suite"] = "cells-vs-product";
  return {j, r.ok() ? kExitOk : kExitViolation};
}

inline CommandResult verify_weights_suite(Window w, Count max_n, Count cap) {
  WeightsReport r = verify_weights(w, max_n, cap);
  Json j = {{"suite", "weights"},
            {"window", to_json(r.window)},
            {"max_n", r.max_n},
            {"cap", r.cap},
            {"alpha_minus", r.alpha_minus},
            {"labels", r.labels},
            {"level_zero_labels", r.level_zero_labels},
            {"violations", r.violations}};
  return {j, r.ok() ? kExitOk : kExitViolation};
}

/// Heisenberg relations and the character identity for both standard Betti
/// profiles (even-only divisor and divisor with odd classes).
inline CommandResult verify_fock(TruncationOrder const &bound, unsigned jobs) {
  bool ok = true;
  Json profiles = Json::array();
  std::vector<BettiData> bs(2);
  bs[1].D = {1, 2, 1};
  for (auto const &b : bs) {
    HeisenbergReport h = verify_heisenberg(b, bound, jobs);
    bool chars = fock_character(bound, b) == parabolic_poincare_series(b, bound);
    ok = ok && h.ok() && chars;
    profiles.push_back({{"betti", to_json(b)}, {"heisenberg", to_json(h)}, {"character_match", chars}});
  }
  return {{{"suite", "fock"}, {"order", to_json(bound)}, {"profiles", profiles}},
          ok ? kExitOk : kExitViolation};
}

} // namespace parahilb
