// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "sfc/cell.hpp"
#include "sfc/types.hpp"

namespace sfc {

// Aligns a sub-cell's point into the frame of node t: cyclic rotation by the
// cell's per-node rotation count, then reflection on every axis whose entry
// bit is set. `bound` is the inclusive coordinate maximum (reflection maps
// x to bound - x). Coordinates must lie in [0, bound].
LatticePoint align(const Cell& cell, const LatticePoint& v, std::size_t t,
                   const BigInt& bound);
RationalPoint align(const Cell& cell, const RationalPoint& v, std::size_t t,
                    const Rational& bound);

// Exact inverse of align: reflect first, then rotate the other way.
LatticePoint align_inv(const Cell& cell, const LatticePoint& v, std::size_t t,
                       const BigInt& bound);
RationalPoint align_inv(const Cell& cell, const RationalPoint& v, std::size_t t,
                        const Rational& bound);

// Number of digit groups needed for u: smallest l >= 1 with
// u < side^(rank^2 * l). Computed by integer multiplication only.
int group_length(const Cell& cell, const BigInt& u);

// Scalar -> lattice point. Consumes u's base side^rank digits from the most
// significant end, one per level, re-orienting the remaining digits at each
// step; runs rank * group_length(u) levels. Output coordinates lie in
// [0, side^(rank * l)).
LatticePoint encode(const Cell& cell, const BigInt& u);

// Inverse of encode: peels one base-side digit plane per level from the most
// significant end. Defined for every non-negative tuple; decode(encode(u))
// == u.
BigInt decode(const Cell& cell, const LatticePoint& v);

// Piecewise-linear interpolation between consecutive encode values, exact in
// rationals. At integer y this equals encode(y).
RationalPoint curve_point(const Cell& cell, const Rational& y);

// Centered variants for diagonal-corner cells: scalar 0 maps to the lattice
// origin and both domains extend to all (signed) integers. `forced_level`
// raises the scale level above the automatic one (0 means automatic); any
// sufficient level yields the same point.
LatticePoint encode_centered(const Cell& cell, const BigInt& u,
                             int forced_level = 0);
BigInt decode_centered(const Cell& cell, const LatticePoint& v);

// Fast fixed-width encode used by the analysis sweeps. Requires the scale
// for u to fit in 64 bits; throws argument_error otherwise.
void encode_small(const Cell& cell, std::uint64_t u,
                  std::span<std::int64_t> out);
std::vector<std::int64_t> encode_small(const Cell& cell, std::uint64_t u);

}  // namespace sfc
