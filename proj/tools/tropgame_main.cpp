/*
 * Copyright 2026 The tropgame authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "tropgame/convexity.hpp"
#include "tropgame/games.hpp"
#include "tropgame/io.hpp"
#include "tropgame/rank.hpp"

namespace tg = tropgame;
using nlohmann::json;

namespace {

constexpr int kExitHolds = 0;
constexpr int kExitFails = 1;
constexpr int kExitError = 2;

struct Options {
  bool json = false;
  long long scale = 1;
};

json certificate_json(const tg::FeasibilityReport& r) {
  json cert;
  switch (r.certificate) {
    case tg::FeasibilityReport::Certificate::witness:
      cert["kind"] = "witness";
      break;
    case tg::FeasibilityReport::Certificate::strategy: {
      cert["kind"] = "strategy";
      cert["player"] = "min";
      json moves = json::array();
      for (size_t j = 0; j < r.losing_strategy->choice.size(); ++j) {
        json move;
        move["state"] = r.elim.kept_cols[j] + 1;
        move["row"] = r.losing_strategy->choice[j] + 1;  // reduced row position
        moves.push_back(move);
      }
      cert["moves"] = moves;
      json values = json::array();
      for (const tg::Rational& v : r.strategy_values)
        values.push_back(tg::format_rational(v));
      cert["values"] = values;
      break;
    }
    case tg::FeasibilityReport::Certificate::elimination:
      cert["kind"] = "elimination";
      break;
    case tg::FeasibilityReport::Certificate::none:
      cert["kind"] = "none";
      break;
  }
  return cert;
}

void print_feasibility(const tg::FeasibilityReport& r, const Options& opt) {
  if (opt.json) {
    json out;
    out["verdict"] = r.feasible ? "feasible" : "infeasible";
    json sup = json::array();
    for (int j : r.support) sup.push_back(j + 1);
    out["support"] = sup;
    if (r.witness) {
      json w = json::array();
      for (const tg::Weight& x : *r.witness) w.push_back(tg::format_weight(x));
      out["witness"] = w;
    }
    out["certificate"] = certificate_json(r);
    out["scale"] = opt.scale;
    std::cout << out.dump(2) << "\n";
    return;
  }
  std::cout << "verdict: " << (r.feasible ? "feasible" : "infeasible") << "\n";
  if (!r.support.empty()) {
    std::cout << "support:";
    for (int j : r.support) std::cout << ' ' << (j + 1);
    std::cout << "\n";
  }
  if (r.witness) std::cout << "witness: " << tg::format_weight_vec(*r.witness) << "\n";
  if (r.certificate == tg::FeasibilityReport::Certificate::strategy) {
    std::cout << "certificate: min-strategy";
    for (int row : r.losing_strategy->choice) std::cout << ' ' << (row + 1);
    std::cout << "\nstrategy-values: " << tg::format_rational_vec(r.strategy_values)
              << "\n";
  } else if (r.certificate == tg::FeasibilityReport::Certificate::elimination) {
    std::cout << "certificate: elimination (all variables forced to -inf)\n";
  }
}

int run_cone(const std::string& lhs, const std::string& rhs, bool support,
             bool finite, bool integer, const Options& opt) {
  tg::TropMatrix a = tg::parse_trop_matrix(tg::read_file(lhs));
  tg::TropMatrix b = tg::parse_trop_matrix(tg::read_file(rhs));
  if (a.rows != b.rows || a.cols != b.cols)
    throw tg::DimensionError("cone: --lhs and --rhs shapes differ");
  if (opt.scale != 1) {
    a = tg::scale_matrix(a, tg::Int(opt.scale));
    b = tg::scale_matrix(b, tg::Int(opt.scale));
  }

  if (finite) {
    std::optional<tg::WeightVec> x = tg::finite_solution(a, b);
    if (opt.json) {
      json out;
      out["verdict"] = x ? "feasible" : "infeasible";
      if (x) {
        json w = json::array();
        for (const tg::Weight& v : *x) w.push_back(tg::format_weight(v));
        out["witness"] = w;
      }
      out["scale"] = opt.scale;
      std::cout << out.dump(2) << "\n";
    } else if (x) {
      std::cout << "finite: yes\nwitness: " << tg::format_weight_vec(*x) << "\n";
    } else {
      std::cout << "finite: no\n";
    }
    return x ? kExitHolds : kExitFails;
  }
  if (integer) {
    std::optional<tg::WeightVec> x = tg::integer_witness(a, b);
    if (opt.json) {
      json out;
      out["verdict"] = x ? "feasible" : "infeasible";
      if (x) {
        json w = json::array();
        for (const tg::Weight& v : *x) w.push_back(tg::format_weight(v));
        out["witness"] = w;
      }
      out["scale"] = opt.scale;
      std::cout << out.dump(2) << "\n";
    } else if (x) {
      std::cout << "witness: " << tg::format_weight_vec(*x) << "\n";
    } else {
      std::cout << "verdict: infeasible\n";
    }
    return x ? kExitHolds : kExitFails;
  }

  tg::FeasibilityReport r = support ? tg::cone_support(a, b) : tg::cone_nontrivial(a, b);
  print_feasibility(r, opt);
  return r.feasible ? kExitHolds : kExitFails;
}

int run_poly(const std::string& lhs, const std::string& rhs, const std::string& cfile,
             const std::string& dfile, const Options& opt) {
  tg::TropMatrix a = tg::parse_trop_matrix(tg::read_file(lhs));
  tg::TropMatrix b = tg::parse_trop_matrix(tg::read_file(rhs));
  tg::WeightVec c = tg::parse_weight_vector(tg::read_file(cfile));
  tg::WeightVec d = tg::parse_weight_vector(tg::read_file(dfile));
  if (a.rows != b.rows || a.cols != b.cols)
    throw tg::DimensionError("poly: --lhs and --rhs shapes differ");
  if (static_cast<int>(c.size()) != a.rows || static_cast<int>(d.size()) != a.rows)
    throw tg::DimensionError("poly: --c/--d must have one entry per row");
  if (opt.scale != 1) {
    tg::Int s(opt.scale);
    a = tg::scale_matrix(a, s);
    b = tg::scale_matrix(b, s);
    c = tg::scale_vector(c, s);
    d = tg::scale_vector(d, s);
  }
  tg::FeasibilityReport r = tg::poly_nonempty(a, b, c, d);
  print_feasibility(r, opt);
  return r.feasible ? kExitHolds : kExitFails;
}

tg::Strategy parse_strategy_file(const std::string& text, int rows, int cols) {
  std::istringstream in(text);
  std::string kind;
  in >> kind;
  tg::Strategy s;
  if (kind == "max") {
    s.kind = tg::Strategy::Kind::max_player;
  } else if (kind == "min") {
    s.kind = tg::Strategy::Kind::min_player;
  } else {
    throw tg::ParseError("strategy file must start with 'max' or 'min'", 1, 1);
  }
  int count = s.kind == tg::Strategy::Kind::max_player ? rows : cols;
  for (int i = 0; i < count; ++i) {
    long long v;
    if (!(in >> v))
      throw tg::ParseError("strategy file needs " + std::to_string(count) + " moves", 2, 1);
    s.choice.push_back(static_cast<int>(v) - 1);
  }
  return s;
}

int run_game(const std::string& lhs, const std::string& rhs, bool value, bool winners,
             const std::string& certify_file, const std::string& dot_file,
             const Options& opt) {
  tg::TropMatrix a = tg::parse_trop_matrix(tg::read_file(lhs));
  tg::TropMatrix b = tg::parse_trop_matrix(tg::read_file(rhs));
  if (a.rows != b.rows || a.cols != b.cols)
    throw tg::DimensionError("game: --lhs and --rhs shapes differ");
  if (opt.scale != 1) {
    a = tg::scale_matrix(a, tg::Int(opt.scale));
    b = tg::scale_matrix(b, tg::Int(opt.scale));
  }
  const int n = a.cols;
  tg::MinMaxOperator op = tg::enforce_assumptions(a, b);

  if (!dot_file.empty()) tg::write_file(dot_file, tg::to_dot(tg::build_game(op)));

  json out;
  out["scale"] = opt.scale;
  int exit_code = kExitHolds;

  if (!certify_file.empty()) {
    bool untouched = op.elim.forced.empty() &&
                     op.elim.dropped_rows.empty() &&
                     op.constraint_count() == a.rows;
    if (!untouched)
      throw tg::DomainError("game --certify: preprocessing changed the system; "
                            "strategy indices would be ambiguous");
    tg::Strategy s = parse_strategy_file(tg::read_file(certify_file), a.rows, n);
    std::vector<tg::Rational> values = tg::certify_strategy(op, s);
    std::vector<std::string> printed;
    for (const tg::Rational& v : values)
      printed.push_back(tg::format_rational(v / tg::Rational(opt.scale)));
    if (opt.json) {
      out["player"] = s.kind == tg::Strategy::Kind::max_player ? "max" : "min";
      out["values"] = printed;
      std::cout << out.dump(2) << "\n";
    } else {
      std::cout << "player: "
                << (s.kind == tg::Strategy::Kind::max_player ? "max" : "min") << "\n"
                << "values:";
      for (const std::string& p : printed) std::cout << ' ' << p;
      std::cout << "\n";
    }
    return kExitHolds;
  }

  if (winners) {
    std::vector<bool> reduced;
    if (!op.elim.all_forced()) reduced = tg::winning_states(op);
    std::vector<int> winners_original;
    for (size_t k = 0; k < reduced.size(); ++k)
      if (reduced[k]) winners_original.push_back(op.elim.kept_cols[k] + 1);
    exit_code = winners_original.empty() ? kExitFails : kExitHolds;
    if (opt.json) {
      out["winners"] = winners_original;
      std::cout << out.dump(2) << "\n";
    } else {
      std::cout << "winners:";
      for (int j : winners_original) std::cout << ' ' << j;
      std::cout << "\n";
    }
    return exit_code;
  }

  // Default: exact values. Eliminated states have value -inf.
  (void)value;
  std::vector<std::string> printed(n, "-inf");
  if (!op.elim.all_forced()) {
    tg::GameValue gv = tg::solve_exact(op);
    for (size_t k = 0; k < gv.chi.size(); ++k)
      printed[op.elim.kept_cols[k]] =
          tg::format_rational(gv.chi[k] / tg::Rational(opt.scale));
  }
  if (opt.json) {
    out["chi"] = printed;
    std::cout << out.dump(2) << "\n";
  } else {
    std::cout << "chi:";
    for (const std::string& p : printed) std::cout << ' ' << p;
    std::cout << "\n";
  }
  return kExitHolds;
}

int run_rank(const std::string& matrix_file, bool independent, bool max_rank,
             int at_least, bool exact, bool singular, const std::string& cramer_rhs,
             const Options& opt) {
  tg::ExtMatrix a = tg::parse_ext_matrix(tg::read_file(matrix_file));
  if (opt.scale != 1) {
    for (tg::ExtNumber& e : a.entries)
      if (!e.is_zero())
        e = tg::ExtNumber(tg::Weight(e.magnitude().value() * opt.scale), e.mult());
  }
  json out;
  out["scale"] = opt.scale;

  if (singular) {
    if (a.rows != a.cols) throw tg::DomainError("rank --singular: matrix must be square");
    bool s = !tg::tropical_permanent(a).is_invertible();
    if (opt.json) {
      out["singular"] = s;
      std::cout << out.dump(2) << "\n";
    } else {
      std::cout << "singular: " << (s ? "yes" : "no") << "\n";
    }
    return s ? kExitHolds : kExitFails;
  }

  if (!cramer_rhs.empty()) {
    std::vector<tg::ExtNumber> b = tg::parse_ext_vector(tg::read_file(cramer_rhs));
    if (opt.scale != 1)
      for (tg::ExtNumber& e : b)
        if (!e.is_zero())
          e = tg::ExtNumber(tg::Weight(e.magnitude().value() * opt.scale), e.mult());
    std::optional<std::vector<tg::ExtNumber>> x = tg::cramer_solve(a, b);
    if (opt.json) {
      if (x) {
        json sol = json::array();
        for (const tg::ExtNumber& e : *x) sol.push_back(tg::format_ext(e));
        out["solution"] = sol;
      } else {
        out["solution"] = nullptr;
      }
      std::cout << out.dump(2) << "\n";
    } else if (x) {
      std::cout << "solution: " << tg::format_ext_vec(*x) << "\n";
    } else {
      std::cout << "solution: none\n";
    }
    return x ? kExitHolds : kExitFails;
  }

  if (independent) {
    tg::IndependenceReport r = tg::columns_independent(a);
    if (opt.json) {
      out["independent"] = r.independent;
      if (r.witness) {
        json w = json::array();
        for (const tg::ExtNumber& e : *r.witness) w.push_back(tg::format_ext(e));
        out["witness"] = w;
      }
      if (r.certificate_rows) {
        json rows = json::array();
        for (int i : *r.certificate_rows) rows.push_back(i + 1);
        out["rows"] = rows;
      }
      std::cout << out.dump(2) << "\n";
    } else {
      std::cout << "independent: " << (r.independent ? "yes" : "no") << "\n";
      if (r.witness)
        std::cout << "witness: " << tg::format_ext_vec(*r.witness) << "\n";
      if (r.certificate_rows) {
        std::cout << "rows:";
        for (int i : *r.certificate_rows) std::cout << ' ' << (i + 1);
        std::cout << "\n";
      }
    }
    return r.independent ? kExitHolds : kExitFails;
  }

  if (max_rank || at_least >= 0) {
    int r = max_rank ? std::min(a.rows, a.cols) : at_least;
    bool holds = tg::rank_at_least(a, r);
    if (opt.json) {
      out["rank_at_least"] = r;
      out["holds"] = holds;
      std::cout << out.dump(2) << "\n";
    } else {
      std::cout << "rank >= " << r << ": " << (holds ? "yes" : "no") << "\n";
    }
    return holds ? kExitHolds : kExitFails;
  }

  if (exact) {
    int r = tg::tropical_rank(a);
    if (opt.json) {
      out["rank"] = r;
      std::cout << out.dump(2) << "\n";
    } else {
      std::cout << "rank: " << r << "\n";
    }
    return kExitHolds;
  }

  throw tg::DomainError(
      "rank: choose one of --independent, --max, --at-least, --exact, --singular, --cramer");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact solvers for tropical cones, polyhedra, tropical rank and the "
               "mean payoff games they encode"};
  app.require_subcommand(1);
  app.fallthrough();

  Options opt;
  app.add_flag("--json", opt.json, "emit a structured JSON report");
  app.add_option("--scale", opt.scale,
                 "multiply every parsed entry by this positive integer "
                 "(pre-scaling for rational data)")
      ->check(CLI::PositiveNumber);

  std::string lhs, rhs, cfile, dfile, matrix_file, certify_file, dot_file, cramer_rhs;
  bool want_support = false, want_witness = false, want_finite = false,
       want_integer = false;
  bool want_value = false, want_winners = false;
  bool want_independent = false, want_max = false, want_exact = false,
       want_singular = false;
  int at_least = -1;

  CLI::App* cone = app.add_subcommand("cone", "is the tropical cone Ax <= Bx non-trivial?");
  cone->add_option("--lhs", lhs, "matrix file for A")->required();
  cone->add_option("--rhs", rhs, "matrix file for B")->required();
  cone->add_flag("--support", want_support, "compute the full support and a maximal witness");
  cone->add_flag("--witness", want_witness, "print a witness (default)");
  cone->add_flag("--finite", want_finite, "ask for an all-finite solution");
  cone->add_flag("--integer", want_integer, "ask for an integer witness of maximal support");

  CLI::App* poly = app.add_subcommand("poly", "is the tropical polyhedron Ax + c <= Bx + d nonempty?");
  poly->add_option("--lhs", lhs, "matrix file for A")->required();
  poly->add_option("--rhs", rhs, "matrix file for B")->required();
  poly->add_option("--c", cfile, "vector file for c")->required();
  poly->add_option("--d", dfile, "vector file for d")->required();

  CLI::App* game = app.add_subcommand("game", "solve the mean payoff game coded by A and B");
  game->add_option("--lhs", lhs, "matrix file for A")->required();
  game->add_option("--rhs", rhs, "matrix file for B")->required();
  game->add_flag("--value", want_value, "print exact per-state values (default)");
  game->add_flag("--winners", want_winners, "print the states with nonnegative value");
  game->add_option("--certify", certify_file, "evaluate the strategy in this file exactly");
  game->add_option("--dot", dot_file, "write the game graph in DOT format to this file");

  CLI::App* rank = app.add_subcommand("rank", "tropical independence, rank, permanents, Cramer");
  rank->add_option("--matrix", matrix_file, "matrix file (g-suffix marks ghosts)")->required();
  rank->add_flag("--independent", want_independent, "are the columns tropically independent?");
  rank->add_flag("--max", want_max, "is the tropical rank maximal?");
  rank->add_option("--at-least", at_least, "is the tropical rank at least R?");
  rank->add_flag("--exact", want_exact, "compute the tropical rank (size-capped)");
  rank->add_flag("--singular", want_singular, "is the square matrix tropically singular?");
  rank->add_option("--cramer", cramer_rhs, "solve Ax nabla b for the b in this vector file");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitError;
  }

  try {
    if (app.got_subcommand(cone))
      return run_cone(lhs, rhs, want_support, want_finite, want_integer, opt);
    if (app.got_subcommand(poly)) return run_poly(lhs, rhs, cfile, dfile, opt);
    if (app.got_subcommand(game))
      return run_game(lhs, rhs, want_value, want_winners, certify_file, dot_file, opt);
    if (app.got_subcommand(rank))
      return run_rank(matrix_file, want_independent, want_max, at_least, want_exact,
                      want_singular, cramer_rhs, opt);
  } catch (const tg::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitError;
  }
  return kExitError;
}
