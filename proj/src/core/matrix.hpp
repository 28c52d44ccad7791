#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "core/errors.hpp"

namespace pcc {

enum class Cell : std::uint8_t { Zero = 0, One = 1, Star = 2 };

inline char cell_char(Cell c) { return c == Cell::Zero ? '0' : (c == Cell::One ? '1' : '*'); }
Cell cell_from_char(char ch);

// Concept class over a finite point set. Rows are concepts, columns are points.
// Duplicate rows are preserved; set-like operations deduplicate internally.
struct PartialMatrix {
  std::size_t n_points = 0;
  std::vector<std::vector<Cell>> rows;
  std::vector<std::string> point_labels;    // empty or one per point
  std::vector<std::string> concept_labels;  // empty or one per row

  std::size_t n_concepts() const { return rows.size(); }
  Cell at(std::size_t row, std::size_t point) const { return rows[row][point]; }
  bool is_total() const;
};

// Star-free concept class.
struct TotalMatrix {
  std::size_t n_points = 0;
  std::vector<std::vector<std::uint8_t>> rows;
  std::vector<std::string> point_labels;
  std::vector<std::string> concept_labels;

  std::size_t n_concepts() const { return rows.size(); }
  PartialMatrix as_partial() const;
};

// Throws InvalidArgument if any cell is a Star.
TotalMatrix to_total(const PartialMatrix& m);

// 0/1 pattern matched as an order-preserving submatrix (no permutations).
struct Pattern {
  std::size_t n_rows = 0, n_cols = 0;
  std::vector<std::vector<std::uint8_t>> cells;
};

// Rows given as strings over {0,1}; all rows must have equal positive length.
Pattern pattern_from_strings(const std::vector<std::string>& rows);

// Text format: header "pcc v1 <n_points> <n_concepts>", then one row of
// 0/1/* characters per concept. parse_pcc throws ParseError with a 1-based
// line number.
PartialMatrix parse_pcc(const std::string& text);
std::string format_pcc(const PartialMatrix& m);
std::string format_pcc(const TotalMatrix& m);

// Keeps the chosen columns in the given order; indices must be in range and
// pairwise distinct.
PartialMatrix restrict_points(const PartialMatrix& m, const std::vector<std::size_t>& points);

// Transpose: points and concepts exchange roles. Involution.
PartialMatrix dual(const PartialMatrix& m);

struct PatternWitness {
  std::vector<std::size_t> rows, cols;  // strictly increasing, 0-based
};

// True iff some strictly increasing row/column selection of m equals p
// cell-for-cell. Stars never match.
std::optional<PatternWitness> contains_pattern(const PartialMatrix& m, const Pattern& p);

struct DisambiguationCheck {
  bool ok = false;
  // On failure: first concept with no consistent completion in t, and the
  // point at which its last candidate rows die.
  std::size_t row = 0, point = 0;
};

// True iff every concept of m agrees with some row of t on all non-Star cells.
DisambiguationCheck is_disambiguation(const PartialMatrix& m, const TotalMatrix& t);

std::size_t distinct_rows(const TotalMatrix& t);
std::size_t distinct_cols(const TotalMatrix& t);

// Rows of m as strings over {0,1,*}.
std::vector<std::string> row_strings(const PartialMatrix& m);

}  // namespace pcc
