// Copyright 2026 The dgdd Authors
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

// Exception types shared by all dgdd modules.

#include <stdexcept>
#include <string>

namespace dgdd {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed text input. `line` is 1-based, 0 when not tied to a file line.
class ParseError : public Error {
 public:
  ParseError(const std::string& what, int line = 0)
      : Error(line > 0 ? "line " + std::to_string(line) + ": " + what : what),
        line_(line) {}
  int line() const { return line_; }

 private:
  int line_;
};

// Arguments of mismatched size or otherwise outside an operation's domain.
class DomainError : public Error {
 public:
  using Error::Error;
};

// A permutation on Z_ab that is not of the form (j, i) -> (q(j), Q_j(i)).
class NotSemiDirect : public Error {
 public:
  using Error::Error;
};

class NotStronglyConnected : public Error {
 public:
  NotStronglyConnected(int from, int to)
      : Error("digraph is not strongly connected: vertex " +
              std::to_string(to) + " unreachable from " + std::to_string(from)),
        from_(from),
        to_(to) {}
  int from() const { return from_; }
  int to() const { return to_; }

 private:
  int from_;
  int to_;
};

// Cyclic-difference / GCD parameters that do not produce two disjoint
// derangements. `vertex` is the offending vertex.
class InvalidParams : public Error {
 public:
  InvalidParams(const std::string& what, int vertex)
      : Error(what + " (vertex " + std::to_string(vertex) + ")"),
        vertex_(vertex) {}
  int vertex() const { return vertex_; }

 private:
  int vertex_;
};

class OverflowError : public Error {
 public:
  using Error::Error;
};

}  // namespace dgdd
