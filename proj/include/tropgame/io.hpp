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

#pragma once

#include <string>
#include <vector>

#include "tropgame/linalg.hpp"

namespace tropgame {

// Scalar token grammar, shared between all file formats:
//   -inf          the bottom element (the zero of T_e)
//   <integer>     a finite weight, or the real element k^vee
//   <integer>g    the ghost element k^circ

Weight parse_weight_token(const std::string& token, int line = 1, int column = 1);
ExtNumber parse_ext_token(const std::string& token, int line = 1, int column = 1);

std::string format_weight(const Weight& w);
std::string format_ext(const ExtNumber& e);
std::string format_rational(const Rational& r);

std::string format_weight_vec(const WeightVec& v);
std::string format_ext_vec(const std::vector<ExtNumber>& v);
std::string format_rational_vec(const std::vector<Rational>& v);

// Matrix text format: a header line "m n", then m lines of n tokens.
// Vector files hold a single line of tokens.

TropMatrix parse_trop_matrix(const std::string& text);
ExtMatrix parse_ext_matrix(const std::string& text);
WeightVec parse_weight_vector(const std::string& text);
std::vector<ExtNumber> parse_ext_vector(const std::string& text);

std::string format_trop_matrix(const TropMatrix& m);
std::string format_ext_matrix(const ExtMatrix& m);

std::string read_file(const std::string& path);
void write_file(const std::string& path, const std::string& content);

/** Multiply every finite entry by a positive integer scale. */
TropMatrix scale_matrix(const TropMatrix& m, const Int& scale);
WeightVec scale_vector(const WeightVec& v, const Int& scale);

}  // namespace tropgame
