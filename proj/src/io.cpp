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

#include "tropgame/io.hpp"

#include <fstream>
#include <sstream>

namespace tropgame {

namespace {

struct Token {
  std::string text;
  int line;
  int column;
};

std::vector<std::vector<Token>> tokenize_lines(const std::string& text) {
  std::vector<std::vector<Token>> lines;
  std::istringstream in(text);
  std::string raw;
  int line_no = 0;
  while (std::getline(in, raw)) {
    ++line_no;
    std::vector<Token> toks;
    size_t pos = 0;
    while (pos < raw.size()) {
      while (pos < raw.size() && (raw[pos] == ' ' || raw[pos] == '\t' || raw[pos] == '\r'))
        ++pos;
      if (pos >= raw.size()) break;
      size_t start = pos;
      while (pos < raw.size() && raw[pos] != ' ' && raw[pos] != '\t' && raw[pos] != '\r')
        ++pos;
      toks.push_back({raw.substr(start, pos - start), line_no,
                      static_cast<int>(start) + 1});
    }
    if (!toks.empty()) lines.push_back(std::move(toks));
  }
  return lines;
}

bool is_integer_literal(const std::string& s) {
  size_t i = (s.size() > 1 && (s[0] == '-' || s[0] == '+')) ? 1 : 0;
  if (i >= s.size()) return false;
  for (; i < s.size(); ++i)
    if (s[i] < '0' || s[i] > '9') return false;
  return true;
}

int parse_dimension(const Token& t) {
  if (!is_integer_literal(t.text))
    throw ParseError("expected a dimension, got '" + t.text + "'", t.line, t.column);
  long long v;
  try {
    v = std::stoll(t.text);
  } catch (const std::exception&) {
    throw ParseError("dimension out of range: '" + t.text + "'", t.line, t.column);
  }
  if (v <= 0) throw ParseError("dimensions must be positive", t.line, t.column);
  return static_cast<int>(v);
}

}  // namespace

Weight parse_weight_token(const std::string& token, int line, int column) {
  if (token == "-inf") return Weight::bottom();
  if (!is_integer_literal(token)) {
    if (!token.empty() && token.back() == 'g')
      throw ParseError("ghost token '" + token + "' not allowed here", line, column);
    throw ParseError("bad scalar token '" + token + "'", line, column);
  }
  return Weight(Int(token));
}

ExtNumber parse_ext_token(const std::string& token, int line, int column) {
  if (token == "-inf") return ExtNumber::zero();
  if (!token.empty() && token.back() == 'g') {
    std::string body = token.substr(0, token.size() - 1);
    if (!is_integer_literal(body))
      throw ParseError("bad ghost token '" + token + "'", line, column);
    return ghost(Weight(Int(body)));
  }
  if (!is_integer_literal(token))
    throw ParseError("bad scalar token '" + token + "'", line, column);
  return inject(Weight(Int(token)));
}

std::string format_weight(const Weight& w) {
  return w.is_bottom() ? "-inf" : w.value().str();
}

std::string format_ext(const ExtNumber& e) {
  if (e.is_zero()) return "-inf";
  std::string s = e.magnitude().value().str();
  if (e.mult() == Mult::ghost) s += 'g';
  return s;
}

std::string format_rational(const Rational& r) {
  std::string s = numerator(r).str();
  if (denominator(r) != 1) s += "/" + denominator(r).str();
  return s;
}

namespace {

template <typename T>
std::string join(const std::vector<T>& v, std::string (*fmt)(const T&)) {
  std::string out;
  for (size_t i = 0; i < v.size(); ++i) {
    if (i) out += ' ';
    out += fmt(v[i]);
  }
  return out;
}

}  // namespace

std::string format_weight_vec(const WeightVec& v) { return join(v, format_weight); }
std::string format_ext_vec(const std::vector<ExtNumber>& v) {
  return join(v, format_ext);
}
std::string format_rational_vec(const std::vector<Rational>& v) {
  return join(v, format_rational);
}

namespace {

template <typename Matrix, typename Scalar>
Matrix parse_matrix_impl(const std::string& text,
                         Scalar (*parse)(const std::string&, int, int)) {
  auto lines = tokenize_lines(text);
  if (lines.empty()) throw ParseError("empty matrix file", 1, 1);
  if (lines[0].size() != 2)
    throw ParseError("header must be 'm n'", lines[0][0].line, lines[0][0].column);
  int m = parse_dimension(lines[0][0]);
  int n = parse_dimension(lines[0][1]);
  if (static_cast<int>(lines.size()) != m + 1)
    throw ParseError("expected " + std::to_string(m) + " rows, got " +
                         std::to_string(static_cast<int>(lines.size()) - 1),
                     lines.back()[0].line, 1);
  Matrix out(m, n);
  for (int i = 0; i < m; ++i) {
    const std::vector<Token>& row = lines[i + 1];
    if (static_cast<int>(row.size()) != n)
      throw ParseError("expected " + std::to_string(n) + " entries in this row, got " +
                           std::to_string(row.size()),
                       row[0].line, row[0].column);
    for (int j = 0; j < n; ++j)
      out.at(i, j) = parse(row[j].text, row[j].line, row[j].column);
  }
  return out;
}

template <typename Scalar>
std::vector<Scalar> parse_vector_impl(const std::string& text,
                                      Scalar (*parse)(const std::string&, int, int)) {
  auto lines = tokenize_lines(text);
  if (lines.size() != 1)
    throw ParseError("a vector file must hold exactly one non-empty line",
                     lines.empty() ? 1 : lines[1][0].line, 1);
  std::vector<Scalar> out;
  out.reserve(lines[0].size());
  for (const Token& t : lines[0]) out.push_back(parse(t.text, t.line, t.column));
  return out;
}

}  // namespace

TropMatrix parse_trop_matrix(const std::string& text) {
  return parse_matrix_impl<TropMatrix, Weight>(text, parse_weight_token);
}

ExtMatrix parse_ext_matrix(const std::string& text) {
  return parse_matrix_impl<ExtMatrix, ExtNumber>(text, parse_ext_token);
}

WeightVec parse_weight_vector(const std::string& text) {
  return parse_vector_impl<Weight>(text, parse_weight_token);
}

std::vector<ExtNumber> parse_ext_vector(const std::string& text) {
  return parse_vector_impl<ExtNumber>(text, parse_ext_token);
}

namespace {

template <typename Matrix, typename Fmt>
std::string format_matrix_impl(const Matrix& m, Fmt fmt) {
  std::ostringstream out;
  out << m.rows << ' ' << m.cols << '\n';
  for (int i = 0; i < m.rows; ++i) {
    for (int j = 0; j < m.cols; ++j) {
      if (j) out << ' ';
      out << fmt(m.at(i, j));
    }
    out << '\n';
  }
  return out.str();
}

}  // namespace

std::string format_trop_matrix(const TropMatrix& m) {
  return format_matrix_impl(m, format_weight);
}

std::string format_ext_matrix(const ExtMatrix& m) {
  return format_matrix_impl(m, format_ext);
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot open file: " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error("cannot write file: " + path);
  out << content;
}

TropMatrix scale_matrix(const TropMatrix& m, const Int& scale) {
  if (scale <= 0) throw DomainError("scale must be a positive integer");
  TropMatrix out = m;
  for (Weight& w : out.entries)
    if (w.is_finite()) w = Weight(w.value() * scale);
  return out;
}

WeightVec scale_vector(const WeightVec& v, const Int& scale) {
  if (scale <= 0) throw DomainError("scale must be a positive integer");
  WeightVec out = v;
  for (Weight& w : out)
    if (w.is_finite()) w = Weight(w.value() * scale);
  return out;
}

}  // namespace tropgame
