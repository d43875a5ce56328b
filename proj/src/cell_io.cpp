// SPDX-License-Identifier: Apache-2.0
#include "sfc/cell_io.hpp"

#include <charconv>
#include <fstream>
#include <sstream>
#include <vector>

namespace sfc {
namespace {

bool significant(std::string_view line) {
  for (char c : line) {
    if (c == '#') return false;
    if (c != ' ' && c != '\t' && c != '\r') return true;
  }
  return false;
}

std::vector<std::int64_t> parse_ints(std::string_view line, std::size_t lineno) {
  std::vector<std::int64_t> out;
  const char* p = line.data();
  const char* end = p + line.size();
  while (p != end) {
    if (*p == ' ' || *p == '\t' || *p == '\r') {
      ++p;
      continue;
    }
    std::int64_t value = 0;
    auto [next, ec] = std::from_chars(p, end, value);
    if (ec != std::errc())
      throw parse_error("line " + std::to_string(lineno) +
                            ": expected a decimal integer",
                        lineno);
    out.push_back(value);
    p = next;
  }
  return out;
}

}  // namespace

PathSequence parse_cell_file(std::istream& in, std::uint64_t node_budget) {
  std::string line;
  std::size_t lineno = 0;

  int rank = 0, side = 0;
  std::uint64_t expected = 0;
  bool have_header = false;
  std::vector<std::int32_t> coords;
  std::uint64_t nodes = 0;

  while (std::getline(in, line)) {
    ++lineno;
    if (!significant(line)) continue;
    const auto values = parse_ints(line, lineno);

    if (!have_header) {
      if (values.size() != 2)
        throw parse_error("line " + std::to_string(lineno) +
                              ": header must be '<rank> <side>'",
                          lineno);
      if (values[0] < 2 || values[0] > 63 || values[1] < 2)
        throw parse_error("line " + std::to_string(lineno) +
                              ": rank and side must both be at least 2",
                          lineno);
      rank = static_cast<int>(values[0]);
      side = static_cast<int>(values[1]);
      expected = 1;
      for (int i = 0; i < rank; ++i) {
        if (expected > node_budget / static_cast<std::uint64_t>(side))
          throw budget_error("side^rank exceeds the node budget of " +
                             std::to_string(node_budget));
        expected *= static_cast<std::uint64_t>(side);
      }
      coords.reserve(expected * static_cast<std::uint64_t>(rank));
      have_header = true;
      continue;
    }

    if (nodes == expected)
      throw parse_error("line " + std::to_string(lineno) + ": expected only " +
                            std::to_string(expected) + " nodes",
                        lineno);
    if (values.size() != static_cast<std::size_t>(rank))
      throw parse_error("line " + std::to_string(lineno) + ": expected " +
                            std::to_string(rank) + " coordinates",
                        lineno);
    for (std::int64_t v : values) {
      if (v < 0 || v >= side)
        throw parse_error("line " + std::to_string(lineno) +
                              ": coordinate out of [0, side)",
                          lineno);
      coords.push_back(static_cast<std::int32_t>(v));
    }
    ++nodes;
  }

  if (!have_header) throw parse_error("missing '<rank> <side>' header", lineno);
  if (nodes != expected)
    throw parse_error("expected " + std::to_string(expected) +
                          " nodes, got " + std::to_string(nodes),
                      lineno);

  PathSequence path(rank, side, std::move(coords));
  validate_path(path);
  return path;
}

PathSequence parse_cell_text(std::string_view text, std::uint64_t node_budget) {
  std::istringstream in{std::string(text)};
  return parse_cell_file(in, node_budget);
}

std::string render_cell_file(const PathSequence& path) {
  std::ostringstream out;
  out << path.rank() << ' ' << path.side() << '\n';
  for (std::size_t t = 0; t < path.size(); ++t) {
    for (int j = 0; j < path.rank(); ++j) {
      if (j) out << ' ';
      out << path.coord(t, j);
    }
    out << '\n';
  }
  return out.str();
}

PathSequence load_cell_file(const std::string& filename,
                            std::uint64_t node_budget) {
  std::ifstream in(filename);
  if (!in) throw io_error("cannot open cell file: " + filename);
  return parse_cell_file(in, node_budget);
}

void save_cell_file(const std::string& filename, const PathSequence& path) {
  std::ofstream out(filename);
  if (!out) throw io_error("cannot write cell file: " + filename);
  out << render_cell_file(path);
  if (!out) throw io_error("write failed: " + filename);
}

}  // namespace sfc
