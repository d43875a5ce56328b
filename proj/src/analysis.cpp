// SPDX-License-Identifier: Apache-2.0
#include "sfc/analysis.hpp"

#include <cmath>
#include <cstdio>
#include <ostream>

#include "sfc/recurrence.hpp"

namespace sfc {
namespace {

std::uint64_t checked_pattern_size(const Cell& cell, int levels,
                                   std::uint64_t budget) {
  if (levels < 1) throw argument_error("levels must be at least 1");
  std::uint64_t nodes = 1;
  for (int i = 0; i < levels; ++i) {
    if (nodes > budget / cell.node_count())
      throw budget_error("pattern size exceeds the node budget of " +
                         std::to_string(budget));
    nodes *= cell.node_count();
  }
  return nodes;
}

int step_axis_between(std::span<const std::int64_t> a,
                      std::span<const std::int64_t> b, std::uint64_t at) {
  int axis = -1;
  std::int64_t l1 = 0;
  for (std::size_t j = 0; j < a.size(); ++j) {
    const std::int64_t dj = b[j] - a[j];
    l1 += dj < 0 ? -dj : dj;
    if (dj != 0) axis = static_cast<int>(j);
  }
  if (l1 != 1)
    throw orientation_error("pattern step is not a unit move",
                            static_cast<std::size_t>(at));
  return axis;
}

// SplitMix64 finalizer; the sampling stream for gap g is
// mix(mix(seed ^ 0x9E3779B97F4A7C15*g) + k) for k = 0,1,...
std::uint64_t mix64(std::uint64_t x) {
  x += 0x9E3779B97F4A7C15ull;
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ull;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBull;
  return x ^ (x >> 31);
}

std::uint64_t reduce_to_range(std::uint64_t r, std::uint64_t range) {
  return static_cast<std::uint64_t>(
      (static_cast<unsigned __int128>(r) * range) >> 64);
}

}  // namespace

BigInt Tally::total() const {
  BigInt sum = 0;
  for (const BigInt& c : counts) sum += c;
  return sum;
}

Tally edge_tally(const Cell& cell, int levels, bool closing_edge,
                 std::uint64_t node_budget) {
  const std::uint64_t nodes = checked_pattern_size(cell, levels, node_budget);
  const int d = cell.rank();

  Tally tally;
  tally.levels = levels;
  tally.closing_edge = closing_edge;
  tally.counts.assign(d, BigInt(0));

  std::vector<std::int64_t> prev(d), cur(d);
  encode_small(cell, 0, prev);
  const std::uint64_t last = closing_edge ? nodes : nodes - 1;
  for (std::uint64_t u = 1; u <= last; ++u) {
    encode_small(cell, u, cur);
    ++tally.counts[step_axis_between(prev, cur, u - 1)];
    std::swap(prev, cur);
  }
  return tally;
}

BigInt RunHistogram::total_edges() const {
  BigInt sum = 0;
  for (const auto& axis : runs)
    for (const auto& [length, count] : axis) sum += BigInt(length) * count;
  return sum;
}

RunHistogram run_histogram(const Cell& cell, int levels,
                           std::uint64_t node_budget) {
  const std::uint64_t nodes = checked_pattern_size(cell, levels, node_budget);
  const int d = cell.rank();

  RunHistogram hist;
  hist.runs.assign(d, {});

  std::vector<std::int64_t> prev(d), cur(d);
  encode_small(cell, 0, prev);
  int run_axis = -1;
  std::uint64_t run_length = 0;
  for (std::uint64_t u = 1; u < nodes; ++u) {
    encode_small(cell, u, cur);
    const int axis = step_axis_between(prev, cur, u - 1);
    if (axis == run_axis) {
      ++run_length;
    } else {
      if (run_axis >= 0) ++hist.runs[run_axis][run_length];
      run_axis = axis;
      run_length = 1;
    }
    std::swap(prev, cur);
  }
  if (run_axis >= 0) ++hist.runs[run_axis][run_length];
  return hist;
}

LatticePoint z_encode(const BigInt& u, int rank) {
  if (rank < 2) throw argument_error("rank must be at least 2");
  if (u < 0) throw domain_error("z_encode requires a non-negative scalar");
  LatticePoint out(rank, BigInt(0));
  const std::size_t bits = mpz_sizeinbase(u.get_mpz_t(), 2);
  for (std::size_t b = 0; b < bits; ++b)
    if (mpz_tstbit(u.get_mpz_t(), b))
      mpz_setbit(out[b % rank].get_mpz_t(), b / rank);
  return out;
}

BigInt z_decode(const LatticePoint& v) {
  const int rank = static_cast<int>(v.size());
  if (rank < 2) throw argument_error("rank must be at least 2");
  BigInt u = 0;
  for (int j = 0; j < rank; ++j) {
    if (v[j] < 0)
      throw domain_error("z_decode requires non-negative coordinates");
    const std::size_t bits = mpz_sizeinbase(v[j].get_mpz_t(), 2);
    for (std::size_t b = 0; b < bits; ++b)
      if (mpz_tstbit(v[j].get_mpz_t(), b))
        mpz_setbit(u.get_mpz_t(), b * rank + j);
  }
  return u;
}

void z_encode_small(std::uint64_t u, int rank, std::span<std::int64_t> out) {
  for (auto& c : out) c = 0;
  for (int b = 0; u != 0; ++b, u >>= 1)
    if (u & 1u) out[b % rank] |= std::int64_t{1} << (b / rank);
}

int default_domain_levels(int side, int rank) {
  const double target = 1048576.0;  // 2^20
  int m = 1;
  double nodes = std::pow(static_cast<double>(side), rank);
  double total = nodes;
  while (total < target) {
    total *= nodes;
    ++m;
  }
  return m;
}

DimredSeries dimred_profile(const PointFn& fn, std::string curve, int rank,
                            int max_gap, std::uint64_t samples,
                            std::uint64_t domain, std::uint64_t seed) {
  if (max_gap < 1) throw argument_error("max_gap must be at least 1");
  if (samples < 1) throw argument_error("samples must be at least 1");
  if (domain <= static_cast<std::uint64_t>(max_gap) + samples)
    throw argument_error("domain too small for the requested sampling");

  DimredSeries series;
  series.curve = std::move(curve);
  series.rank = rank;
  series.samples = samples;
  series.seed = seed;
  series.mean_distance.resize(max_gap);

  std::vector<std::int64_t> a(rank), b(rank);
  for (int g = 1; g <= max_gap; ++g) {
    const std::uint64_t stream = mix64(seed ^ (0x9E3779B97F4A7C15ull *
                                               static_cast<std::uint64_t>(g)));
    const std::uint64_t range = domain - static_cast<std::uint64_t>(g);
    double sum = 0.0;
    for (std::uint64_t k = 0; k < samples; ++k) {
      const std::uint64_t v1 = reduce_to_range(mix64(stream + k), range);
      fn(v1, a);
      fn(v1 + static_cast<std::uint64_t>(g), b);
      std::int64_t sq = 0;
      for (int j = 0; j < rank; ++j) {
        const std::int64_t dj = b[j] - a[j];
        sq += dj * dj;
      }
      sum += std::sqrt(static_cast<double>(sq));
    }
    series.mean_distance[g - 1] = sum / static_cast<double>(samples);
  }
  return series;
}

DimredSeries dimred_profile(const Cell& cell, std::string curve, int max_gap,
                            std::uint64_t samples, int domain_levels,
                            std::uint64_t seed) {
  std::uint64_t domain = 1;
  for (int i = 0; i < domain_levels; ++i) domain *= cell.node_count();
  return dimred_profile(
      [&cell](std::uint64_t u, std::span<std::int64_t> out) {
        encode_small(cell, u, out);
      },
      std::move(curve), cell.rank(), max_gap, samples, domain, seed);
}

DimredSeries dimred_profile_z(int rank, int max_gap, std::uint64_t samples,
                              int domain_levels, std::uint64_t seed) {
  std::uint64_t domain = 1;
  for (int i = 0; i < domain_levels * rank; ++i) domain *= 2;
  return dimred_profile(
      [rank](std::uint64_t u, std::span<std::int64_t> out) {
        z_encode_small(u, rank, out);
      },
      "z", rank, max_gap, samples, domain, seed);
}

double loglog_slope(const DimredSeries& series) {
  const int n = series.gaps();
  if (n < 10) throw argument_error("slope fit needs at least 10 gaps");
  double sx = 0, sy = 0;
  for (int i = 0; i < n; ++i) {
    if (!(series.mean_distance[i] > 0))
      throw argument_error("degenerate series: non-positive mean");
    sx += std::log(static_cast<double>(i + 1));
    sy += std::log(series.mean_distance[i]);
  }
  const double mx = sx / n, my = sy / n;
  double sxx = 0, sxy = 0;
  for (int i = 0; i < n; ++i) {
    const double dx = std::log(static_cast<double>(i + 1)) - mx;
    sxy += dx * (std::log(series.mean_distance[i]) - my);
    sxx += dx * dx;
  }
  if (sxx == 0) throw argument_error("degenerate series: no gap spread");
  return sxy / sxx;
}

void write_tally_csv(std::ostream& out, const Cell& cell, const Tally& tally) {
  BigInt nodes = 1;
  for (int i = 0; i < tally.levels; ++i)
    nodes *= static_cast<unsigned long>(cell.node_count());

  out << "nodes,axis,count,percent\n";
  const Rational node_count(nodes);
  for (std::size_t j = 0; j < tally.counts.size(); ++j) {
    const Rational share = Rational(tally.counts[j] * 1000) / node_count;
    // percent with one decimal, correctly rounded
    const long milli = std::lround(mpq_get_d(share.get_mpq_t()));
    char buf[32];
    std::snprintf(buf, sizeof buf, "%ld.%ld", milli / 10, milli % 10);
    out << nodes << ',' << j << ',' << tally.counts[j] << ',' << buf << '\n';
  }
}

void write_dimred_csv(std::ostream& out, const DimredSeries& series, int side,
                      std::string_view variant) {
  out << "curve,d,s,variant,gap,mean_distance,samples,seed\n";
  for (int g = 1; g <= series.gaps(); ++g) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.6g", series.mean_distance[g - 1]);
    out << series.curve << ',' << series.rank << ',' << side << ',' << variant
        << ',' << g << ',' << buf << ',' << series.samples << ','
        << series.seed << '\n';
  }
}

}  // namespace sfc
