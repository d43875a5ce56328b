// SPDX-License-Identifier: Apache-2.0
#include "sfc/recurrence.hpp"

#include <cstdint>
#include <limits>
#include <numeric>
#include <utility>

namespace sfc {
namespace {

BigInt big_pow(std::uint64_t base, std::uint64_t exp) {
  BigInt r;
  mpz_ui_pow_ui(r.get_mpz_t(), base, exp);
  return r;
}

std::size_t to_index(const BigInt& v) { return mpz_get_ui(v.get_mpz_t()); }
std::size_t to_index(std::uint64_t v) { return static_cast<std::size_t>(v); }

// One pass of the forward recurrence, outside-in. Instead of recursing into
// the aligned sub-problem, the pending alignment is tracked as a coordinate
// permutation plus per-axis reflection flags, and each level adds its node's
// scaled contribution under that frame.
template <class Int, class Out>
void encode_core(const Cell& cell, Int u, Int m, Int w, int levels, Out* out) {
  const int d = cell.rank();
  const int s = cell.side();
  const Int group(static_cast<unsigned long>(cell.node_count()));

  int perm[64];
  bool flip[64];
  for (int j = 0; j < d; ++j) {
    perm[j] = j;
    flip[j] = false;
  }

  for (int lev = 0; lev < levels; ++lev) {
    const Int digit = u / m;
    const std::size_t t = to_index(digit);
    u -= digit * m;
    const int rot = cell.rotation(t);
    for (int j = 0; j < d; ++j) {
      const int src = perm[j];
      int hj = cell.coord(t, src);
      if (flip[j]) hj = s - 1 - hj;
      out[j] += Out(w * hj);
      flip[j] = flip[j] != cell.entry_bit(t, src);
      int p = src + rot;
      if (p >= d) p -= d;
      perm[j] = p;
    }
    if (lev + 1 < levels) {
      m /= group;
      w /= s;
    }
  }
}

template <class T>
std::vector<T> align_impl(const Cell& cell, const std::vector<T>& v,
                          std::size_t t, const T& bound) {
  const int d = cell.rank();
  if (static_cast<int>(v.size()) != d)
    throw argument_error("point width does not match the cell rank");
  if (t >= cell.node_count()) throw argument_error("node index out of range");
  for (const T& c : v)
    if (c < 0 || c > bound)
      throw domain_error("alignment input coordinate outside [0, bound]");

  const int rot = cell.rotation(t);
  std::vector<T> out(d);
  for (int j = 0; j < d; ++j) {
    int src = j + rot;
    if (src >= d) src -= d;
    if (cell.entry_bit(t, j))
      out[j] = bound - v[src];
    else
      out[j] = v[src];
  }
  return out;
}

template <class T>
std::vector<T> align_inv_impl(const Cell& cell, const std::vector<T>& v,
                              std::size_t t, const T& bound) {
  const int d = cell.rank();
  if (static_cast<int>(v.size()) != d)
    throw argument_error("point width does not match the cell rank");
  if (t >= cell.node_count()) throw argument_error("node index out of range");
  for (const T& c : v)
    if (c < 0 || c > bound)
      throw domain_error("alignment input coordinate outside [0, bound]");

  // Reflect first, then rotate the opposite way.
  const int rot = cell.rotation(t);
  std::vector<T> out(d);
  for (int j = 0; j < d; ++j) {
    int src = j - rot;
    if (src < 0) src += d;
    if (cell.entry_bit(t, src))
      out[j] = bound - v[src];
    else
      out[j] = v[src];
  }
  return out;
}

}  // namespace

LatticePoint align(const Cell& cell, const LatticePoint& v, std::size_t t,
                   const BigInt& bound) {
  return align_impl(cell, v, t, bound);
}

RationalPoint align(const Cell& cell, const RationalPoint& v, std::size_t t,
                    const Rational& bound) {
  return align_impl(cell, v, t, bound);
}

LatticePoint align_inv(const Cell& cell, const LatticePoint& v, std::size_t t,
                       const BigInt& bound) {
  return align_inv_impl(cell, v, t, bound);
}

RationalPoint align_inv(const Cell& cell, const RationalPoint& v,
                        std::size_t t, const Rational& bound) {
  return align_inv_impl(cell, v, t, bound);
}

int group_length(const Cell& cell, const BigInt& u) {
  if (u < 0) throw domain_error("group_length requires a non-negative scalar");
  const unsigned long exp =
      static_cast<unsigned long>(cell.rank()) * cell.rank();
  const BigInt group = big_pow(cell.side(), exp);
  BigInt scale = group;
  int l = 1;
  while (scale <= u) {
    scale *= group;
    ++l;
  }
  return l;
}

LatticePoint encode(const Cell& cell, const BigInt& u) {
  if (u < 0) throw domain_error("encode requires a non-negative scalar");
  const int d = cell.rank();
  const int levels = d * group_length(cell, u);
  BigInt m = big_pow(cell.node_count(), levels - 1);
  BigInt w = big_pow(cell.side(), levels - 1);
  LatticePoint out(d, BigInt(0));
  encode_core<BigInt, BigInt>(cell, u, std::move(m), std::move(w), levels,
                              out.data());
  return out;
}

void encode_small(const Cell& cell, std::uint64_t u,
                  std::span<std::int64_t> out) {
  const int d = cell.rank();
  if (static_cast<int>(out.size()) != d)
    throw argument_error("output span width does not match the cell rank");
  const std::uint64_t group = cell.node_count();

  unsigned __int128 scale = 1;
  int levels = 0;
  do {
    for (int i = 0; i < d; ++i) {
      scale *= group;
      if (scale > (static_cast<unsigned __int128>(1) << 126))
        throw argument_error("scalar too large for the fixed-width encoder");
    }
    levels += d;
  } while (scale <= u);
  const unsigned __int128 m128 = scale / group;
  if (m128 > std::numeric_limits<std::uint64_t>::max())
    throw argument_error("scalar too large for the fixed-width encoder");

  std::uint64_t m = static_cast<std::uint64_t>(m128);
  std::uint64_t w = 1;
  for (int i = 0; i < levels - 1; ++i) w *= static_cast<std::uint64_t>(cell.side());

  for (int j = 0; j < d; ++j) out[j] = 0;
  encode_core<std::uint64_t, std::int64_t>(cell, u, m, w, levels, out.data());
}

std::vector<std::int64_t> encode_small(const Cell& cell, std::uint64_t u) {
  std::vector<std::int64_t> out(cell.rank());
  encode_small(cell, u, out);
  return out;
}

BigInt decode(const Cell& cell, const LatticePoint& v) {
  const int d = cell.rank();
  const int s = cell.side();
  if (static_cast<int>(v.size()) != d)
    throw argument_error("point width does not match the cell rank");
  BigInt maxc = 0;
  for (const BigInt& c : v) {
    if (c < 0) throw domain_error("decode requires non-negative coordinates");
    if (c > maxc) maxc = c;
  }

  const BigInt group(static_cast<unsigned long>(cell.node_count()));
  BigInt bound = group;  // side^(rank*l)
  int l = 1;
  while (bound <= maxc) {
    bound *= group;
    ++l;
  }
  const int levels = d * l;
  BigInt w = big_pow(s, levels - 1);

  std::vector<BigInt> cur(v);
  std::vector<BigInt> tmp(d);
  std::vector<std::int32_t> digit(d);
  BigInt u = 0;
  BigInt q;
  for (int lev = 0; lev < levels; ++lev) {
    for (int j = 0; j < d; ++j) {
      q = cur[j] / w;
      digit[j] = static_cast<std::int32_t>(mpz_get_ui(q.get_mpz_t()));
      cur[j] -= q * w;
    }
    const std::size_t t = cell.path_index(digit);
    u *= group;
    u += static_cast<unsigned long>(t);

    const BigInt wm1 = w - 1;
    for (int j = 0; j < d; ++j)
      if (cell.entry_bit(t, j)) cur[j] = wm1 - cur[j];
    const int rot = cell.rotation(t);
    if (rot != 0) {
      for (int j = 0; j < d; ++j) {
        int src = j - rot;
        if (src < 0) src += d;
        tmp[j] = cur[src];
      }
      std::swap(cur, tmp);
    }
    w /= s;
  }
  return u;
}

RationalPoint curve_point(const Cell& cell, const Rational& y) {
  if (y < 0) throw domain_error("curve_point requires a non-negative scalar");
  BigInt whole;
  mpz_fdiv_q(whole.get_mpz_t(), y.get_num_mpz_t(), y.get_den_mpz_t());
  const Rational frac = y - Rational(whole);

  const LatticePoint at = encode(cell, whole);
  RationalPoint out(cell.rank());
  if (frac == 0) {
    for (int j = 0; j < cell.rank(); ++j) out[j] = Rational(at[j]);
    return out;
  }
  const LatticePoint next = encode(cell, whole + 1);
  const Rational remain = Rational(1) - frac;
  for (int j = 0; j < cell.rank(); ++j)
    out[j] = remain * Rational(at[j]) + frac * Rational(next[j]);
  return out;
}

LatticePoint encode_centered(const Cell& cell, const BigInt& u,
                             int forced_level) {
  if (cell.corner_class().kind != CornerKind::DiagonalCorners)
    throw argument_error("centered encode requires a diagonal-corner cell");
  const int d = cell.rank();
  const BigInt group = big_pow(cell.side(), static_cast<unsigned long>(d) * d);

  const BigInt need = 2 * (1 + abs(u));
  BigInt scale = group;
  int l = 1;
  while (scale < need || l < forced_level) {
    scale *= group;
    ++l;
  }

  LatticePoint out = encode(cell, u + scale / 2);
  const BigInt offset = big_pow(cell.side(), static_cast<unsigned long>(d) * l) / 2;
  for (BigInt& c : out) c -= offset;
  return out;
}

BigInt decode_centered(const Cell& cell, const LatticePoint& v) {
  if (cell.corner_class().kind != CornerKind::DiagonalCorners)
    throw argument_error("centered decode requires a diagonal-corner cell");
  const int d = cell.rank();
  if (static_cast<int>(v.size()) != d)
    throw argument_error("point width does not match the cell rank");

  BigInt maxabs = 0;
  for (const BigInt& c : v) {
    BigInt a = abs(c);
    if (a > maxabs) maxabs = std::move(a);
  }
  const BigInt group(static_cast<unsigned long>(cell.node_count()));
  const BigInt need = 2 * (1 + maxabs);
  BigInt bound = group;  // side^(rank*l)
  int l = 1;
  while (bound < need) {
    bound *= group;
    ++l;
  }

  const BigInt offset = bound / 2;
  LatticePoint shifted(v);
  for (BigInt& c : shifted) c += offset;
  return decode(cell, shifted) -
         big_pow(cell.side(), static_cast<unsigned long>(d) * d * l) / 2;
}

}  // namespace sfc
