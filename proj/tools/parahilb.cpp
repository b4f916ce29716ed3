// parahilb: batch front end. Every subcommand prints one JSON document
// (to stdout or --out) and exits 0 (ok), 1 (usage/invalid input) or
// 2 (verification violation).

#include "parahilb/parahilb.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

using namespace parahilb;

namespace {

struct Flags {
  std::string v, u, window, order, convention = "d-preserving", out, bound;
  std::vector<std::string> betti;
  Level beta = 0;
  Level alpha_minus = 0;
  Count max_n = 4;
  Count cap = 2;
  unsigned jobs = 1;
};

std::optional<Window> opt_window(Flags const &f) {
  if (f.window.empty()) return std::nullopt;
  return parse_window(f.window);
}
std::optional<std::string> opt_string(std::string const &s) {
  if (s.empty()) return std::nullopt;
  return s;
}
std::optional<IndexVector> opt_v(std::string const &s) {
  if (s.empty()) return std::nullopt;
  return parse_v(s);
}

CommandResult run_verify(std::string const &suite, Flags const &f, CLI::App const &sub) {
  if (suite == "lemmas") {
    Count b = f.bound.empty() ? 3 : cli_detail::parse_int(f.bound, "--bound");
    return verify_lemmas(b, f.jobs);
  }
  Window w = f.window.empty() ? Window(-1, 2) : parse_window(f.window);
  if (suite == "cells-vs-product") return verify_cells_vs_product(w, f.max_n, f.cap, f.jobs);
  if (suite == "weights") return verify_weights_suite(w, f.max_n, f.cap);
  if (suite == "fock") {
    TruncationOrder o;
    if (f.bound == "small") {
      o = TruncationOrder(2, Window(-1, 2), 1);
    } else if (f.bound.empty() || f.bound == "default") {
      o = TruncationOrder(4, f.window.empty() ? Window(-2, 3) : w, 2);
    } else {
      Window fw = f.window.empty() ? Window(-2, 3) : w;
      o = TruncationOrder(cli_detail::parse_int(f.bound, "--bound"), fw,
                          sub.count("--cap") ? f.cap : 2);
    }
    if (!f.order.empty()) o = parse_order(f.order, o.window);
    return verify_fock(o, f.jobs);
  }
  throw UsageError("unknown verify suite '" + suite + "'");
}

} // namespace

int main(int argc, char **argv) {
  CLI::App app{"Exact combinatorics of parabolic Hilbert schemes of points"};
  app.require_subcommand(1);
  Flags f;

  auto add_common = [&](CLI::App *s) {
    s->add_option("--out", f.out, "Write JSON to this path instead of stdout");
    s->add_option("--jobs", f.jobs, "Worker threads")->check(CLI::Range(1u, 4096u));
  };
  auto add_window = [&](CLI::App *s) {
    s->add_option("--window", f.window, "Level window lo:hi (lo < 0 < hi)")->allow_extra_args(false);
  };

  auto *cells = app.add_subcommand("cells", "Cell labels, dimensions and punctual polynomials of v");
  cells->add_option("--v", f.v, "Index vector as JSON, e.g. '{\"0\":2}'")->required();
  add_common(cells);

  auto *genfun = app.add_subcommand("genfun", "Parabolic Poincare series from Betti numbers");
  genfun->add_option("--betti", f.betti, "X=b0,..,b4 D=b0,b1,b2 or a JSON object")->required();
  genfun->add_option("--v", f.v, "Only the coefficient at this index vector");
  genfun->add_option("--order", f.order, "Truncation N0[,M]");
  add_window(genfun);
  add_common(genfun);

  auto *local = app.add_subcommand("local", "Local punctual product series (variable L)");
  local->add_option("--v", f.v, "Only the coefficient at this index vector");
  local->add_option("--order", f.order, "Truncation N0[,M]");
  add_window(local);
  add_common(local);

  auto *weights = app.add_subcommand("weights", "Tangent-space torus weights at every fixed point");
  weights->add_option("--v", f.v, "Index vector as JSON")->required();
  auto *am = weights->add_option("--alpha-minus", f.alpha_minus, "Lower level edge (default: window lo)");
  add_common(weights);

  auto *shift = app.add_subcommand("shift", "Level-shift image v'(beta)");
  shift->add_option("--v", f.v, "Index vector as JSON")->required();
  shift->add_option("--beta", f.beta, "Nonzero level inside the window")->required();
  shift->add_option("--convention", f.convention, "paper | d-preserving")
      ->check(CLI::IsMember({"paper", "d-preserving"}));
  add_window(shift);
  add_common(shift);

  auto *mu_cmd = app.add_subcommand("mu", "Commutator constant and generator class of u");
  mu_cmd->add_option("--u", f.u, "Index vector as JSON")->required();
  add_common(mu_cmd);

  std::string suite;
  auto *verify = app.add_subcommand("verify", "Run a verification suite");
  verify->add_option("suite", suite, "lemmas | cells-vs-product | weights | fock")
      ->required()
      ->check(CLI::IsMember({"lemmas", "cells-vs-product", "weights", "fock"}));
  verify->add_option("--bound", f.bound, "lemmas: coordinate bound; fock: 'small' or N0");
  verify->add_option("--max-n", f.max_n, "Largest rho_0");
  verify->add_option("--cap", f.cap, "Largest entry at nonzero levels");
  verify->add_option("--order", f.order, "fock: truncation N0[,M]");
  add_window(verify);
  add_common(verify);

  try {
    app.parse(argc, argv);
  } catch (CLI::ParseError const &e) {
    int rc = app.exit(e);
    return rc == 0 ? kExitOk : kExitUsage;
  }

  CommandResult res;
  try {
    if (*cells) res = cmd_cells(parse_v(f.v));
    else if (*genfun) res = cmd_genfun(parse_betti(f.betti), opt_window(f), opt_string(f.order), opt_v(f.v));
    else if (*local) res = cmd_local(opt_window(f), opt_string(f.order), opt_v(f.v));
    else if (*weights)
      res = cmd_weights(parse_v(f.v), am->count() ? std::optional<Level>(f.alpha_minus) : std::nullopt);
    else if (*shift) res = cmd_shift(parse_v(f.v), f.beta, opt_window(f), parse_convention(f.convention));
    else if (*mu_cmd) res = cmd_mu(parse_v(f.u));
    else if (*verify) res = run_verify(suite, f, *verify);
  } catch (UsageError const &e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (std::invalid_argument const &e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (std::out_of_range const &e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }

  std::string text = res.json.dump(1) + "\n";
  if (f.out.empty()) {
    std::cout << text;
  } else {
    std::ofstream os(f.out);
    if (!os) {
      std::cerr << "error: cannot open " << f.out << "\n";
      return kExitUsage;
    }
    os << text;
  }
  if (res.exit_code == kExitViolation) std::cerr << "verification violations found\n";
  return res.exit_code;
}
