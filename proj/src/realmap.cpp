// SPDX-License-Identifier: Apache-2.0
#include "sfc/realmap.hpp"

#include <utility>

#include "sfc/recurrence.hpp"

namespace sfc {
namespace {

BigInt big_pow(std::uint64_t base, std::uint64_t exp) {
  BigInt r;
  mpz_ui_pow_ui(r.get_mpz_t(), base, exp);
  return r;
}

BigInt rational_floor(const Rational& q) {
  BigInt r;
  mpz_fdiv_q(r.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
  return r;
}

Rational make_rational(const BigInt& num, const BigInt& den) {
  Rational r(num, den);
  r.canonicalize();
  return r;
}

void require_unit_scalar(const Rational& y) {
  if (y < 0 || y >= 1)
    throw domain_error("scalar argument must lie in [0, 1)");
}

void require_unit_point(const Cell& cell, const RationalPoint& point) {
  if (static_cast<int>(point.size()) != cell.rank())
    throw argument_error("point width does not match the cell rank");
  for (const Rational& c : point)
    if (c < 0 || c >= 1)
      throw domain_error("point components must lie in [0, 1)");
}

RationalPoint mid_forward_rec(const Cell& cell, const Rational& y, int depth) {
  const int d = cell.rank();
  const int s = cell.side();

  const Rational scaled = y * Rational(static_cast<unsigned long>(cell.node_count()));
  const BigInt node = rational_floor(scaled);
  const std::size_t t = mpz_get_ui(node.get_mpz_t());

  RationalPoint inner(d);
  if (depth <= 1) {
    const Rational half(1, 2);
    for (Rational& c : inner) c = half;
  } else {
    inner = mid_forward_rec(cell, scaled - Rational(node), depth - 1);
  }
  RationalPoint aligned = align(cell, inner, t, Rational(1));
  RationalPoint out(d);
  for (int j = 0; j < d; ++j) {
    out[j] = (Rational(static_cast<long>(cell.coord(t, j))) + aligned[j]) /
             Rational(static_cast<long>(s));
  }
  return out;
}

}  // namespace

RationalPoint unit_forward(const Cell& cell, const Rational& y, int groups) {
  require_unit_scalar(y);
  if (groups < 1) throw argument_error("resolution must be at least 1 group");
  const int d = cell.rank();
  const BigInt scale_in =
      big_pow(cell.side(), static_cast<std::uint64_t>(d) * d * groups);
  const BigInt scale_out =
      big_pow(cell.side(), static_cast<std::uint64_t>(d) * groups);

  const LatticePoint p = encode(cell, rational_floor(y * Rational(scale_in)));
  RationalPoint out(d);
  for (int j = 0; j < d; ++j) out[j] = make_rational(p[j], scale_out);
  return out;
}

Rational unit_inverse(const Cell& cell, const RationalPoint& point,
                      int groups) {
  require_unit_point(cell, point);
  if (groups < 1) throw argument_error("resolution must be at least 1 group");
  const int d = cell.rank();
  const BigInt scale_in =
      big_pow(cell.side(), static_cast<std::uint64_t>(d) * groups);
  const BigInt scale_out =
      big_pow(cell.side(), static_cast<std::uint64_t>(d) * d * groups);

  LatticePoint v(d);
  for (int j = 0; j < d; ++j)
    v[j] = rational_floor(point[j] * Rational(scale_in));
  return make_rational(decode(cell, v), scale_out);
}

RationalPoint mid_forward(const Cell& cell, const Rational& y, int depth) {
  require_unit_scalar(y);
  if (depth < 1) throw argument_error("depth must be at least 1");
  return mid_forward_rec(cell, y, depth);
}

Rational mid_inverse(const Cell& cell, const RationalPoint& point, int depth) {
  require_unit_point(cell, point);
  if (depth < 1) throw argument_error("depth must be at least 1");
  const int d = cell.rank();
  const int s = cell.side();

  RationalPoint v(point);
  RationalPoint tmp(d);
  std::vector<std::int32_t> digit(d);
  BigInt u = 0;
  for (int level = 0; level < depth; ++level) {
    for (int j = 0; j < d; ++j) {
      v[j] *= s;
      const BigInt dj = rational_floor(v[j]);
      digit[j] = static_cast<std::int32_t>(mpz_get_ui(dj.get_mpz_t()));
      v[j] -= Rational(dj);
    }
    const std::size_t t = cell.path_index(digit);
    u *= static_cast<unsigned long>(cell.node_count());
    u += static_cast<unsigned long>(t);

    for (int j = 0; j < d; ++j)
      if (cell.entry_bit(t, j)) v[j] = Rational(1) - v[j];
    const int rot = cell.rotation(t);
    if (rot != 0) {
      for (int j = 0; j < d; ++j) {
        int src = j - rot;
        if (src < 0) src += d;
        tmp[j] = v[src];
      }
      std::swap(v, tmp);
    }
  }
  return make_rational(u, big_pow(s, static_cast<std::uint64_t>(d) * depth));
}

namespace {

const Rational& half() {
  static const Rational h(1, 2);
  return h;
}

void require_centered_scalar(const Rational& y) {
  if (y < -half() || y >= half())
    throw domain_error("centered scalar argument must lie in [-1/2, 1/2)");
}

void require_centered_point(const Cell& cell, const RationalPoint& point) {
  if (static_cast<int>(point.size()) != cell.rank())
    throw argument_error("point width does not match the cell rank");
  for (const Rational& c : point)
    if (c < -half() || c >= half())
      throw domain_error("centered point components must lie in [-1/2, 1/2)");
}

}  // namespace

RationalPoint unit_forward_centered(const Cell& cell, const Rational& y,
                                    int groups) {
  require_centered_scalar(y);
  RationalPoint out = unit_forward(cell, y + half(), groups);
  for (Rational& c : out) c -= half();
  return out;
}

Rational unit_inverse_centered(const Cell& cell, const RationalPoint& point,
                               int groups) {
  require_centered_point(cell, point);
  RationalPoint shifted(point);
  for (Rational& c : shifted) c += half();
  return unit_inverse(cell, shifted, groups) - half();
}

RationalPoint mid_forward_centered(const Cell& cell, const Rational& y,
                                   int depth) {
  require_centered_scalar(y);
  RationalPoint out = mid_forward(cell, y + half(), depth);
  for (Rational& c : out) c -= half();
  return out;
}

Rational mid_inverse_centered(const Cell& cell, const RationalPoint& point,
                              int depth) {
  require_centered_point(cell, point);
  RationalPoint shifted(point);
  for (Rational& c : shifted) c += half();
  return mid_inverse(cell, shifted, depth) - half();
}

}  // namespace sfc
