// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <functional>
#include <iosfwd>
#include <map>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "sfc/cell.hpp"
#include "sfc/types.hpp"

namespace sfc {

// Per-axis edge counts of the complete pattern with side^(rank*levels)
// nodes. With the closing edge the step to the following pattern is counted
// as well, making the total equal the node count.
struct Tally {
  std::vector<BigInt> counts;
  int levels = 0;
  bool closing_edge = false;

  BigInt total() const;
};

Tally edge_tally(const Cell& cell, int levels, bool closing_edge = false,
                 std::uint64_t node_budget = kDefaultNodeBudget);

// Maximal straight runs of collinear consecutive edges, per axis, keyed by
// run length.
struct RunHistogram {
  std::vector<std::map<std::uint64_t, std::uint64_t>> runs;

  // Sum over axes of length * count; equals the pattern's edge count.
  BigInt total_edges() const;
};

RunHistogram run_histogram(const Cell& cell, int levels,
                           std::uint64_t node_budget = kDefaultNodeBudget);

// Bit-interleaved baseline: coordinate j takes scalar bits j, j+d, j+2d, ...
// with coordinate 0 holding the least significant bit.
LatticePoint z_encode(const BigInt& u, int rank);
BigInt z_decode(const LatticePoint& v);
void z_encode_small(std::uint64_t u, int rank, std::span<std::int64_t> out);

// Mean Euclidean displacement per scalar gap, over seeded samples.
struct DimredSeries {
  std::string curve;
  int rank = 0;
  std::uint64_t samples = 0;
  std::uint64_t seed = 0;
  std::vector<double> mean_distance;  // index g-1 holds gap g

  int gaps() const { return static_cast<int>(mean_distance.size()); }
};

inline constexpr std::uint64_t kDefaultDimredSeed = 0x5fc5fc;
inline constexpr std::uint64_t kDefaultDimredSamples = 4096;

// Smallest m with side^(rank*m) >= 2^20.
int default_domain_levels(int side, int rank);

using PointFn = std::function<void(std::uint64_t, std::span<std::int64_t>)>;

// Core sampler over an arbitrary scalar->point map on [0, domain). For each
// gap g it draws `samples` scalars from [0, domain-g) with a counter-based
// generator split by gap, so results are independent of evaluation order.
DimredSeries dimred_profile(const PointFn& fn, std::string curve, int rank,
                            int max_gap, std::uint64_t samples,
                            std::uint64_t domain, std::uint64_t seed);

DimredSeries dimred_profile(const Cell& cell, std::string curve, int max_gap,
                            std::uint64_t samples, int domain_levels,
                            std::uint64_t seed = kDefaultDimredSeed);

DimredSeries dimred_profile_z(int rank, int max_gap, std::uint64_t samples,
                              int domain_levels,
                              std::uint64_t seed = kDefaultDimredSeed);

// Ordinary least-squares slope of log(mean displacement) against log(gap).
// Needs at least 10 gaps and positive means.
double loglog_slope(const DimredSeries& series);

// CSV emitters. Headers: "nodes,axis,count,percent" for tallies (percent of
// the node count, one decimal) and "curve,d,s,variant,gap,mean_distance,
// samples,seed" for profiles (mean to 6 significant digits).
void write_tally_csv(std::ostream& out, const Cell& cell, const Tally& tally);
void write_dimred_csv(std::ostream& out, const DimredSeries& series, int side,
                      std::string_view variant);

}  // namespace sfc
