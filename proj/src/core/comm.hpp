#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "core/errors.hpp"

namespace pcc {

// Total Boolean two-party matrix; rows belong to one side, columns to the
// other. Labels, when present, are the players' input bit strings.
struct CommMatrix {
  std::size_t n_rows = 0, n_cols = 0;
  std::vector<std::vector<std::uint8_t>> cells;
  std::vector<std::string> row_labels, col_labels;

  std::uint8_t at(std::size_t r, std::size_t c) const { return cells[r][c]; }
};

// Text format: header "comm v1 <rows> <cols>", then one 0/1 row per line.
CommMatrix parse_comm(const std::string& text);
std::string format_comm(const CommMatrix& m);

// Boolean function as a truth table of length 2^n, input index read
// most-significant-bit first.
struct BoolFunction {
  unsigned n = 0;
  std::vector<std::uint8_t> table;

  std::uint8_t eval(std::uint32_t x) const { return table[x]; }
  // bit of input x at coordinate j (0-based, leftmost coordinate first)
  static int bit(std::uint32_t x, unsigned n, unsigned j) { return (x >> (n - 1 - j)) & 1; }
};

BoolFunction make_boolfun(unsigned n, const std::string& table);

// Text format: header "bf v1 <n>", then the 2^n-character truth table.
BoolFunction parse_bf(const std::string& text);
std::string format_bf(const BoolFunction& f);

}  // namespace pcc
