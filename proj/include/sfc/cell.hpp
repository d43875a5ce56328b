// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "sfc/types.hpp"

namespace sfc {

// A Manhattan Hamiltonian path on the side^rank lattice: every point of
// {0..side-1}^rank exactly once, consecutive nodes one unit step apart,
// starting at the origin. Construction only checks shape; validate_path
// checks the full invariants.
class PathSequence {
 public:
  // `coords` is node-major: node t occupies coords[t*rank .. t*rank+rank).
  PathSequence(int rank, int side, std::vector<std::int32_t> coords);

  int rank() const noexcept { return rank_; }
  int side() const noexcept { return side_; }
  std::size_t size() const noexcept { return coords_.size() / rank_; }

  std::int32_t coord(std::size_t t, int axis) const {
    return coords_[t * rank_ + axis];
  }
  std::span<const std::int32_t> node(std::size_t t) const {
    return {coords_.data() + t * rank_, static_cast<std::size_t>(rank_)};
  }
  const std::vector<std::int32_t>& coords() const noexcept { return coords_; }

 private:
  int rank_;
  int side_;
  std::vector<std::int32_t> coords_;
};

enum class CornerKind {
  DiagonalCorners,  // exit at (side-1, ..., side-1)
  AdjacentCorners,  // exit one axis away from the origin
};

struct CellClass {
  CornerKind kind;
  // Index of the single nonzero exit coordinate; meaningful only for
  // AdjacentCorners.
  int travel_axis = -1;
};

enum class AlignmentVariant {
  Adjacent,               // adjacent-corner cells: rotation by travel axis - net axis
  PlainDiagonal,          // diagonal cells, no rotation
  PrecessDiagonal,        // diagonal cells, rotation count = node index
  PrecessOffsetDiagonal,  // diagonal cells, rotation count = node index + 1
};

// Entry/exit orientations per node, as bitmasks over axes (bit j set means
// the curve enters/leaves the sub-cell at the far side of axis j).
struct OrientationTables {
  std::vector<std::uint64_t> entry;  // entry[0] == 0 always
  std::vector<std::uint64_t> exit;
  // Axis on which exit[t] and entry[t] differ (adjacent-corner cells only;
  // diagonal cells differ on every axis and leave this zeroed).
  std::vector<std::int32_t> net_axis;
  // Axis of the path step leaving node t, with the last entry copied from
  // its predecessor.
  std::vector<std::int32_t> step_axis;
};

// Generates the serpentine path: full-length runs along the innermost axis,
// alternating direction, one new axis adjoined at the front per rank.
// Coordinate 0 is the outermost (slowest-varying) axis.
PathSequence make_serpentine_path(int rank, int side,
                                  std::uint64_t node_budget = kDefaultNodeBudget);

// Checks every PathSequence invariant and classifies the exit corner.
// Throws validation_error (with the first offending index) otherwise.
CellClass validate_path(const PathSequence& path);

// Computes the entry/exit orientation tables. Throws orientation_error if
// the exit rules yield an inconsistent table (the "bad cell" detector for
// adjacent-corner paths).
OrientationTables derive_orientations(const PathSequence& path,
                                      const CellClass& cls);

struct CellTestAccess;

// Immutable precomputed kernel consumed by every recurrence: the path, its
// classification, orientation tables, per-node rotation counts and the
// path-index inverse. Safe to share across threads once built.
class Cell {
 public:
  static Cell build(PathSequence path, AlignmentVariant variant);

  int rank() const noexcept { return path_.rank(); }
  int side() const noexcept { return path_.side(); }
  std::size_t node_count() const noexcept { return path_.size(); }

  const PathSequence& path() const noexcept { return path_; }
  const CellClass& corner_class() const noexcept { return class_; }
  AlignmentVariant variant() const noexcept { return variant_; }
  const OrientationTables& tables() const noexcept { return tables_; }

  std::int32_t coord(std::size_t t, int axis) const {
    return path_.coord(t, axis);
  }
  std::uint64_t entry_mask(std::size_t t) const { return tables_.entry[t]; }
  bool entry_bit(std::size_t t, int axis) const {
    return (tables_.entry[t] >> axis) & 1u;
  }
  std::uint64_t exit_mask(std::size_t t) const { return tables_.exit[t]; }
  // Cyclic rotation count applied when aligning the sub-cell at node t.
  int rotation(std::size_t t) const { return rotation_[t]; }
  const std::vector<std::int32_t>& rotations() const noexcept {
    return rotation_;
  }

  // Inverse of the path: lattice point -> node index.
  std::size_t path_index(std::span<const std::int32_t> point) const;

 private:
  Cell(PathSequence path, CellClass cls, AlignmentVariant variant,
       OrientationTables tables, std::vector<std::int32_t> rotation,
       std::vector<std::int32_t> inverse);

  friend struct CellTestAccess;

  PathSequence path_;
  CellClass class_;
  AlignmentVariant variant_;
  OrientationTables tables_;
  std::vector<std::int32_t> rotation_;
  std::vector<std::int32_t> inverse_;  // mixed-radix point code -> t
};

inline Cell build_cell(PathSequence path, AlignmentVariant variant) {
  return Cell::build(std::move(path), variant);
}

// Walks Q over consecutive scalars below max_points and reports the first u
// where Q(u) -> Q(u+1) is not a unit step, or nullopt if the cell is
// compatible with the recurrence over that range. Failure is a returned
// witness, not an exception.
std::optional<std::uint64_t> verify_recurrence_compatibility(
    const Cell& cell, std::uint64_t max_points);

struct CellDiagnostics {
  CellClass cls;
  // side^rank + 1 == 0 (mod rank): necessary condition for an isotropic
  // precessing pattern.
  bool isotropy_feasible;
  // side^rank == 0 (mod rank): straight runs can align across parent cells.
  bool runs_can_align;
  // Edges of the cell's own path, tallied by axis.
  std::vector<std::uint64_t> edge_counts;
};

CellDiagnostics diagnostics(const Cell& cell);

}  // namespace sfc
