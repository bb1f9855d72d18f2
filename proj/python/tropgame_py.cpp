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

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <cmath>
#include <string>

#include "tropgame/convexity.hpp"
#include "tropgame/games.hpp"
#include "tropgame/io.hpp"
#include "tropgame/rank.hpp"

namespace py = pybind11;
namespace tg = tropgame;

namespace {

// Scalars cross the boundary as python ints (exact, arbitrary precision),
// float('-inf') for the bottom element and 'Ng' strings for ghosts.

tg::Weight weight_from_py(py::handle h) {
  if (py::isinstance<py::str>(h))
    return tg::parse_weight_token(h.cast<std::string>());
  if (py::isinstance<py::float_>(h)) {
    double v = h.cast<double>();
    if (std::isinf(v) && v < 0) return tg::Weight::bottom();
    if (v != std::floor(v))
      throw py::value_error("weights must be integers or -inf");
    return tg::Weight(tg::Int(py::str(py::int_(h)).cast<std::string>()));
  }
  if (h.is_none()) return tg::Weight::bottom();
  return tg::Weight(tg::Int(py::str(h).cast<std::string>()));
}

py::object weight_to_py(const tg::Weight& w) {
  if (w.is_bottom())
    return py::cast(-std::numeric_limits<double>::infinity());
  return py::module_::import("builtins").attr("int")(w.value().str());
}

tg::ExtNumber ext_from_py(py::handle h) {
  if (py::isinstance<py::str>(h)) return tg::parse_ext_token(h.cast<std::string>());
  return tg::inject(weight_from_py(h));
}

py::object ext_to_py(const tg::ExtNumber& e) { return py::cast(tg::format_ext(e)); }

tg::TropMatrix trop_matrix_from_py(const py::sequence& rows) {
  int m = static_cast<int>(py::len(rows));
  if (m == 0) throw py::value_error("matrix needs at least one row");
  int n = static_cast<int>(py::len(rows[0]));
  tg::TropMatrix out(m, n);
  for (int i = 0; i < m; ++i) {
    py::sequence row = rows[i].cast<py::sequence>();
    if (static_cast<int>(py::len(row)) != n)
      throw py::value_error("ragged matrix");
    for (int j = 0; j < n; ++j) out.at(i, j) = weight_from_py(row[j]);
  }
  return out;
}

tg::ExtMatrix ext_matrix_from_py(const py::sequence& rows) {
  int m = static_cast<int>(py::len(rows));
  if (m == 0) throw py::value_error("matrix needs at least one row");
  int n = static_cast<int>(py::len(rows[0]));
  tg::ExtMatrix out(m, n);
  for (int i = 0; i < m; ++i) {
    py::sequence row = rows[i].cast<py::sequence>();
    if (static_cast<int>(py::len(row)) != n)
      throw py::value_error("ragged matrix");
    for (int j = 0; j < n; ++j) out.at(i, j) = ext_from_py(row[j]);
  }
  return out;
}

tg::WeightVec weight_vec_from_py(const py::sequence& seq) {
  tg::WeightVec out;
  for (py::handle h : seq) out.push_back(weight_from_py(h));
  return out;
}

py::object rational_to_py(const tg::Rational& r) {
  py::object fraction = py::module_::import("fractions").attr("Fraction");
  return fraction(py::str(numerator(r).str()), py::str(denominator(r).str()));
}

py::list weights_to_py(const tg::WeightVec& v) {
  py::list out;
  for (const tg::Weight& w : v) out.append(weight_to_py(w));
  return out;
}

py::dict report_to_py(const tg::FeasibilityReport& r) {
  py::dict out;
  out["feasible"] = r.feasible;
  py::list sup;
  for (int j : r.support) sup.append(j + 1);
  out["support"] = sup;
  out["witness"] = r.witness ? py::object(weights_to_py(*r.witness)) : py::none();
  return out;
}

}  // namespace

PYBIND11_MODULE(tropgame, m) {
  m.doc() =
      "Exact tropical convexity and mean payoff game solvers.\n"
      "Scalars are python ints, float('-inf') for the tropical zero, and\n"
      "'Ng' strings for ghost elements of the extended semiring.";

  py::register_exception<tg::Error>(m, "TropgameError");

  m.def(
      "cone_nontrivial",
      [](py::sequence a, py::sequence b) {
        return report_to_py(
            tg::cone_nontrivial(trop_matrix_from_py(a), trop_matrix_from_py(b)));
      },
      py::arg("A"), py::arg("B"),
      "Does Ax <= Bx (tropically) admit a solution that is not identically -inf?");

  m.def(
      "cone_support",
      [](py::sequence a, py::sequence b) {
        return report_to_py(
            tg::cone_support(trop_matrix_from_py(a), trop_matrix_from_py(b)));
      },
      py::arg("A"), py::arg("B"),
      "Support of the cone plus a witness realising all of it.");

  m.def(
      "poly_nonempty",
      [](py::sequence a, py::sequence b, py::sequence c, py::sequence d) {
        return report_to_py(tg::poly_nonempty(trop_matrix_from_py(a),
                                              trop_matrix_from_py(b),
                                              weight_vec_from_py(c),
                                              weight_vec_from_py(d)));
      },
      py::arg("A"), py::arg("B"), py::arg("c"), py::arg("d"),
      "Is the tropical polyhedron Ax + c <= Bx + d nonempty?");

  m.def(
      "game_values",
      [](py::sequence a, py::sequence b) {
        tg::MinMaxOperator op =
            tg::enforce_assumptions(trop_matrix_from_py(a), trop_matrix_from_py(b));
        py::list out;
        const double ninf = -std::numeric_limits<double>::infinity();
        std::vector<py::object> values(op.elim.original_vars, py::cast(ninf));
        if (!op.elim.all_forced()) {
          tg::GameValue gv = tg::solve_exact(op);
          for (size_t k = 0; k < gv.chi.size(); ++k)
            values[op.elim.kept_cols[k]] = rational_to_py(gv.chi[k]);
        }
        for (const py::object& v : values) out.append(v);
        return out;
      },
      py::arg("A"), py::arg("B"),
      "Exact per-state mean payoff values as fractions.Fraction "
      "(float('-inf') for states eliminated by preprocessing).");

  m.def(
      "winning_states",
      [](py::sequence a, py::sequence b) {
        tg::MinMaxOperator op =
            tg::enforce_assumptions(trop_matrix_from_py(a), trop_matrix_from_py(b));
        py::list out;
        if (!op.elim.all_forced()) {
          std::vector<bool> winners = tg::winning_states(op);
          for (size_t k = 0; k < winners.size(); ++k)
            if (winners[k]) out.append(op.elim.kept_cols[k] + 1);
        }
        return out;
      },
      py::arg("A"), py::arg("B"), "1-based states with nonnegative value.");

  m.def(
      "power_trace",
      [](py::sequence a, py::sequence b) {
        tg::MinMaxOperator op =
            tg::enforce_assumptions(trop_matrix_from_py(a), trop_matrix_from_py(b));
        tg::PowerTrace t = tg::power_algorithm(op);
        py::dict out;
        py::list its;
        for (const tg::WeightVec& x : t.iterates) its.append(weights_to_py(x));
        out["iterates"] = its;
        out["nonneg"] = t.nonneg;
        const char* stop = "horizon";
        if (t.stop == tg::PowerTrace::Stop::all_negative) stop = "all_negative";
        if (t.stop == tg::PowerTrace::Stop::fixed_point) stop = "fixed_point";
        if (t.stop == tg::PowerTrace::Stop::partial_fixed_point)
          stop = "partial_fixed_point";
        out["stop"] = stop;
        out["witness"] =
            t.witness ? py::object(weights_to_py(*t.witness)) : py::none();
        return out;
      },
      py::arg("A"), py::arg("B"),
      "Iterates and verdict of the power algorithm on the preprocessed system.");

  m.def(
      "columns_independent",
      [](py::sequence a) {
        tg::IndependenceReport r = tg::columns_independent(ext_matrix_from_py(a));
        py::dict out;
        out["independent"] = r.independent;
        if (r.witness) {
          py::list w;
          for (const tg::ExtNumber& e : *r.witness) w.append(ext_to_py(e));
          out["witness"] = w;
        } else {
          out["witness"] = py::none();
        }
        if (r.certificate_rows) {
          py::list rows;
          for (int i : *r.certificate_rows) rows.append(i + 1);
          out["rows"] = rows;
        } else {
          out["rows"] = py::none();
        }
        return out;
      },
      py::arg("A"), "Tropical linear independence of the columns, with witness.");

  m.def(
      "tropical_rank",
      [](py::sequence a) { return tg::tropical_rank(ext_matrix_from_py(a)); },
      py::arg("A"), "Exact tropical rank (size-capped; the problem is NP-hard).");

  m.def(
      "rank_at_least",
      [](py::sequence a, int r) { return tg::rank_at_least(ext_matrix_from_py(a), r); },
      py::arg("A"), py::arg("r"));

  m.def(
      "is_tropically_singular",
      [](py::sequence a) {
        return !tg::tropical_permanent(ext_matrix_from_py(a)).is_invertible();
      },
      py::arg("A"));

  m.def(
      "tropical_permanent",
      [](py::sequence a) {
        return ext_to_py(tg::tropical_permanent(ext_matrix_from_py(a)));
      },
      py::arg("A"), "Permanent over the extended semiring, as a token string.");

  m.def(
      "cramer_solve",
      [](py::sequence a, py::sequence b) -> py::object {
        std::vector<tg::ExtNumber> rhs;
        for (py::handle h : b) rhs.push_back(ext_from_py(h));
        auto x = tg::cramer_solve(ext_matrix_from_py(a), rhs);
        if (!x) return py::none();
        py::list out;
        for (const tg::ExtNumber& e : *x) out.append(ext_to_py(e));
        return out;
      },
      py::arg("A"), py::arg("b"),
      "Unique real solution of Ax nabla b when the Cramer hypotheses hold.");
}
