// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace sfc {

// Arbitrary-precision scalar and exact rational. All curve arithmetic is
// exact; nothing in the library rounds.
using BigInt = mpz_class;
using Rational = mpq_class;

// Rank-d coordinate tuples. Width always equals the cell's rank.
using LatticePoint = std::vector<BigInt>;
using RationalPoint = std::vector<Rational>;

class error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Bad call arguments: rank/side out of range, variant/class mismatch.
class argument_error : public error {
 public:
  using error::error;
};

// Requested work exceeds the configured node budget.
class budget_error : public argument_error {
 public:
  using argument_error::argument_error;
};

// A path fails a structural invariant; `index` names the first offending
// node or step.
class validation_error : public error {
 public:
  validation_error(const std::string& what, std::size_t index)
      : error(what), index_(index) {}
  std::size_t index() const noexcept { return index_; }

 private:
  std::size_t index_;
};

// The exit-orientation rules produced an inconsistent table at `node`.
// This is the detector for adjacent-corner cells the rules cannot handle.
class orientation_error : public error {
 public:
  orientation_error(const std::string& what, std::size_t node)
      : error(what), node_(node) {}
  std::size_t node() const noexcept { return node_; }

 private:
  std::size_t node_;
};

class parse_error : public error {
 public:
  parse_error(const std::string& what, std::size_t line)
      : error(what), line_(line) {}
  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

// Input outside an operation's stated domain (negative scalar, unit-cube
// violation, coordinate out of [0, w]).
class domain_error : public error {
 public:
  using error::error;
};

inline constexpr std::uint64_t kDefaultNodeBudget = 1'000'000;

}  // namespace sfc
