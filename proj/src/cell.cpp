// SPDX-License-Identifier: Apache-2.0
#include "sfc/cell.hpp"

#include <algorithm>
#include <bit>
#include <cstdlib>
#include <limits>
#include <numeric>
#include <utility>

#include "sfc/recurrence.hpp"

namespace sfc {
namespace {

// side^rank, or nullopt on overflow past `cap`.
std::optional<std::uint64_t> checked_pow(std::uint64_t base, int exp,
                                         std::uint64_t cap) {
  std::uint64_t v = 1;
  for (int i = 0; i < exp; ++i) {
    if (v > cap / base) return std::nullopt;
    v *= base;
  }
  return v;
}

std::size_t point_code(std::span<const std::int32_t> point, int side) {
  std::size_t code = 0;
  for (std::int32_t c : point) code = code * side + static_cast<std::size_t>(c);
  return code;
}

}  // namespace

PathSequence::PathSequence(int rank, int side, std::vector<std::int32_t> coords)
    : rank_(rank), side_(side), coords_(std::move(coords)) {
  if (rank < 2 || side < 2)
    throw argument_error("path rank and side must both be at least 2");
  if (rank > 63) throw argument_error("path rank exceeds 63");
  auto nodes = checked_pow(static_cast<std::uint64_t>(side), rank,
                           std::numeric_limits<std::uint64_t>::max() / 2);
  if (!nodes || coords_.size() != *nodes * static_cast<std::uint64_t>(rank))
    throw argument_error("path node count does not equal side^rank");
}

PathSequence make_serpentine_path(int rank, int side,
                                  std::uint64_t node_budget) {
  if (rank < 2 || side < 2)
    throw argument_error("serpentine path needs rank >= 2 and side >= 2");
  auto nodes = checked_pow(static_cast<std::uint64_t>(side), rank, node_budget);
  if (!nodes)
    throw budget_error("side^rank exceeds the node budget of " +
                       std::to_string(node_budget));

  // Stage r holds side^r nodes carrying the final r innermost coordinates;
  // each pass adjoins the next coordinate at the front, reversing odd copies.
  std::vector<std::int32_t> cur;  // rank 0: a single empty tuple
  std::size_t n = 1;
  for (int r = 1; r <= rank; ++r) {
    std::vector<std::int32_t> next;
    next.reserve(n * static_cast<std::size_t>(side) * r);
    for (int copy = 0; copy < side; ++copy) {
      const bool reversed = (copy % 2) == 1;
      for (std::size_t i = 0; i < n; ++i) {
        const std::size_t src = reversed ? n - 1 - i : i;
        next.push_back(copy);
        const auto* row = cur.data() + src * (r - 1);
        next.insert(next.end(), row, row + (r - 1));
      }
    }
    cur = std::move(next);
    n *= static_cast<std::size_t>(side);
  }
  return PathSequence(rank, side, std::move(cur));
}

CellClass validate_path(const PathSequence& path) {
  const int d = path.rank();
  const int s = path.side();
  const std::size_t n = path.size();

  for (int j = 0; j < d; ++j)
    if (path.coord(0, j) != 0)
      throw validation_error("entry node is not the origin", 0);

  std::vector<char> seen(n, 0);
  for (std::size_t t = 0; t < n; ++t) {
    for (int j = 0; j < d; ++j) {
      const std::int32_t c = path.coord(t, j);
      if (c < 0 || c >= s)
        throw validation_error("coordinate out of range at node " +
                                   std::to_string(t),
                               t);
    }
    const std::size_t code = point_code(path.node(t), s);
    if (seen[code])
      throw validation_error("node " + std::to_string(t) +
                                 " repeats an earlier lattice point",
                             t);
    seen[code] = 1;
  }
  // n distinct in-range nodes out of exactly n lattice points: nothing is
  // missing either.

  for (std::size_t t = 1; t < n; ++t) {
    int changed = 0;
    std::int32_t delta = 0;
    for (int j = 0; j < d; ++j) {
      const std::int32_t dj = path.coord(t, j) - path.coord(t - 1, j);
      if (dj != 0) {
        ++changed;
        delta = dj;
      }
    }
    if (changed != 1 || (delta != 1 && delta != -1))
      throw validation_error("step " + std::to_string(t - 1) +
                                 " is not a unit axis-parallel move",
                             t - 1);
  }

  const std::size_t last = n - 1;
  int at_far = 0, at_zero = 0, far_axis = -1;
  for (int j = 0; j < d; ++j) {
    const std::int32_t c = path.coord(last, j);
    if (c == s - 1) {
      ++at_far;
      far_axis = j;
    } else if (c == 0) {
      ++at_zero;
    }
  }
  if (at_far == d) return {CornerKind::DiagonalCorners, -1};
  if (at_far == 1 && at_zero == d - 1)
    return {CornerKind::AdjacentCorners, far_axis};
  throw validation_error(
      "exit node is neither the opposite corner nor an adjacent corner", last);
}

OrientationTables derive_orientations(const PathSequence& path,
                                      const CellClass& cls) {
  const int d = path.rank();
  const int s = path.side();
  const std::size_t n = path.size();
  const std::uint64_t all = (d == 64) ? ~0ull : ((1ull << d) - 1);

  OrientationTables tables;
  tables.entry.assign(n, 0);
  tables.exit.assign(n, 0);
  tables.net_axis.assign(n, 0);
  tables.step_axis.assign(n, 0);

  // Step axis and direction for each edge of the path.
  std::vector<std::int8_t> step_sign(n, 0);
  for (std::size_t t = 0; t + 1 < n; ++t) {
    for (int j = 0; j < d; ++j) {
      const std::int32_t dj = path.coord(t + 1, j) - path.coord(t, j);
      if (dj != 0) {
        tables.step_axis[t] = j;
        step_sign[t] = static_cast<std::int8_t>(dj);
        break;
      }
    }
  }
  tables.step_axis[n - 1] = tables.step_axis[n - 2];
  step_sign[n - 1] = step_sign[n - 2];

  if (cls.kind == CornerKind::DiagonalCorners) {
    // Entry and exit must have opposite parity on every axis; the entry of
    // each node is its predecessor's exit shifted by the connecting step.
    for (std::size_t t = 0; t < n; ++t) {
      if (t > 0)
        tables.entry[t] =
            tables.exit[t - 1] ^ (1ull << tables.step_axis[t - 1]);
      tables.exit[t] = ~tables.entry[t] & all;
    }
    return tables;
  }

  // Adjacent-corner cells: the exit differs from the entry on exactly one
  // axis. The first node exits toward the second; the last node's exit is
  // fixed by the cell's own exit corner. In between, net travel follows the
  // outgoing step when the entry parity allows it, and falls back to the
  // incoming step's axis when it does not.
  for (std::size_t t = 0; t < n; ++t) {
    if (t > 0)
      tables.entry[t] = tables.exit[t - 1] ^ (1ull << tables.step_axis[t - 1]);

    int flip_axis;
    if (t == 0) {
      flip_axis = tables.step_axis[0];
    } else if (t == n - 1) {
      tables.exit[t] = 1ull << cls.travel_axis;
      const std::uint64_t diff = tables.exit[t] ^ tables.entry[t];
      if (std::popcount(diff) != 1)
        throw orientation_error(
            "exit rules give an inconsistent last-node orientation", t);
      tables.net_axis[t] = std::countr_zero(diff);
      continue;
    } else {
      const int k = tables.step_axis[t];
      const bool entry_far = (tables.entry[t] >> k) & 1u;
      const bool toward = (!entry_far && step_sign[t] > 0) ||
                          (entry_far && step_sign[t] < 0);
      flip_axis = toward ? k : tables.step_axis[t - 1];
    }
    tables.exit[t] = tables.entry[t] ^ (1ull << flip_axis);
    tables.net_axis[t] = flip_axis;
  }
  return tables;
}

Cell::Cell(PathSequence path, CellClass cls, AlignmentVariant variant,
           OrientationTables tables, std::vector<std::int32_t> rotation,
           std::vector<std::int32_t> inverse)
    : path_(std::move(path)),
      class_(cls),
      variant_(variant),
      tables_(std::move(tables)),
      rotation_(std::move(rotation)),
      inverse_(std::move(inverse)) {}

Cell Cell::build(PathSequence path, AlignmentVariant variant) {
  const CellClass cls = validate_path(path);
  const bool adjacent_variant = variant == AlignmentVariant::Adjacent;
  if (adjacent_variant != (cls.kind == CornerKind::AdjacentCorners))
    throw argument_error(
        "alignment variant is incompatible with the cell's corner class");

  OrientationTables tables = derive_orientations(path, cls);

  const int d = path.rank();
  const std::size_t n = path.size();
  std::vector<std::int32_t> rotation(n, 0);
  switch (variant) {
    case AlignmentVariant::Adjacent:
      for (std::size_t t = 0; t < n; ++t) {
        int r = (cls.travel_axis - tables.net_axis[t]) % d;
        if (r < 0) r += d;
        rotation[t] = r;
      }
      break;
    case AlignmentVariant::PlainDiagonal:
      break;
    case AlignmentVariant::PrecessDiagonal:
      for (std::size_t t = 0; t < n; ++t)
        rotation[t] = static_cast<std::int32_t>(t % d);
      break;
    case AlignmentVariant::PrecessOffsetDiagonal:
      for (std::size_t t = 0; t < n; ++t)
        rotation[t] = static_cast<std::int32_t>((t + 1) % d);
      break;
  }

  std::vector<std::int32_t> inverse(n, 0);
  for (std::size_t t = 0; t < n; ++t)
    inverse[point_code(path.node(t), path.side())] =
        static_cast<std::int32_t>(t);

  return Cell(std::move(path), cls, variant, std::move(tables),
              std::move(rotation), std::move(inverse));
}

std::size_t Cell::path_index(std::span<const std::int32_t> point) const {
  return static_cast<std::size_t>(inverse_[point_code(point, side())]);
}

std::optional<std::uint64_t> verify_recurrence_compatibility(
    const Cell& cell, std::uint64_t max_points) {
  if (max_points < 2) return std::nullopt;
  const int d = cell.rank();
  std::vector<std::int64_t> prev(d), cur(d);
  encode_small(cell, 0, prev);
  for (std::uint64_t u = 1; u < max_points; ++u) {
    encode_small(cell, u, cur);
    std::int64_t l1 = 0;
    for (int j = 0; j < d; ++j) l1 += std::abs(cur[j] - prev[j]);
    if (l1 != 1) return u - 1;
    std::swap(prev, cur);
  }
  return std::nullopt;
}

CellDiagnostics diagnostics(const Cell& cell) {
  const int d = cell.rank();
  CellDiagnostics report;
  report.cls = cell.corner_class();

  // side^rank mod rank, via modular exponentiation to stay in range.
  std::uint64_t pow_mod = 1;
  for (int i = 0; i < d; ++i)
    pow_mod = (pow_mod * static_cast<std::uint64_t>(cell.side())) %
              static_cast<std::uint64_t>(d);
  report.isotropy_feasible = (pow_mod + 1) % static_cast<std::uint64_t>(d) == 0;
  report.runs_can_align = pow_mod == 0;

  report.edge_counts.assign(d, 0);
  for (std::size_t t = 0; t + 1 < cell.node_count(); ++t)
    ++report.edge_counts[cell.tables().step_axis[t]];
  return report;
}

}  // namespace sfc
