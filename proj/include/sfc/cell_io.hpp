// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <iosfwd>
#include <string>
#include <string_view>

#include "sfc/cell.hpp"
#include "sfc/types.hpp"

namespace sfc {

// File I/O failed (missing file, unreadable stream).
class io_error : public error {
 public:
  using error::error;
};

// Cell file format: first significant line "<rank> <side>", then exactly
// side^rank lines of rank space-separated coordinates in path order. Lines
// starting with '#' and blank lines are ignored. Parsed paths are fully
// validated.
PathSequence parse_cell_file(std::istream& in,
                             std::uint64_t node_budget = kDefaultNodeBudget);
PathSequence parse_cell_text(std::string_view text,
                             std::uint64_t node_budget = kDefaultNodeBudget);

std::string render_cell_file(const PathSequence& path);

PathSequence load_cell_file(const std::string& filename,
                            std::uint64_t node_budget = kDefaultNodeBudget);
void save_cell_file(const std::string& filename, const PathSequence& path);

}  // namespace sfc
