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

#include <stdexcept>
#include <string>

namespace tropgame {

/** Base class for all tropgame errors. */
class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

/** Incompatible matrix/vector shapes. */
class DimensionError : public Error {
 public:
  explicit DimensionError(const std::string& what) : Error(what) {}
};

/** A documented precondition was violated (bad strategy arc, non-real
 *  vector, operator missing an assumption, ...). */
class DomainError : public Error {
 public:
  explicit DomainError(const std::string& what) : Error(what) {}
};

/** An internal self-check failed. Must not happen on valid inputs. */
class InternalError : public Error {
 public:
  explicit InternalError(const std::string& what) : Error(what) {}
};

/** Problem size exceeds a documented cap (exact tropical rank is NP-hard). */
class SizeCapError : public Error {
 public:
  explicit SizeCapError(const std::string& what) : Error(what) {}
};

/** Malformed input file; carries a 1-based line/column position. */
class ParseError : public Error {
 public:
  ParseError(const std::string& what, int line, int column)
      : Error(what + " (line " + std::to_string(line) + ", column " +
              std::to_string(column) + ")"),
        line_(line),
        column_(column) {}

  int line() const { return line_; }
  int column() const { return column_; }

 private:
  int line_;
  int column_;
};

}  // namespace tropgame
