#pragma once

#include <string>
#include <vector>

#include "core/matrix.hpp"

namespace pcc::testing {

// Builds a class from rows over {0,1,*}.
inline PartialMatrix mat(const std::vector<std::string>& rows) {
  PartialMatrix m;
  m.n_points = rows.empty() ? 0 : rows[0].size();
  for (const auto& s : rows) {
    std::vector<Cell> row(s.size());
    for (std::size_t i = 0; i < s.size(); ++i) row[i] = cell_from_char(s[i]);
    m.rows.push_back(std::move(row));
  }
  return m;
}

inline PartialMatrix take_rows(const PartialMatrix& m, const std::vector<std::size_t>& idx) {
  PartialMatrix out;
  out.n_points = m.n_points;
  for (std::size_t r : idx) out.rows.push_back(m.rows[r]);
  return out;
}

// The 12x6 reference instance (r=1, d=2) and its expected deterministic fill.
inline const char* kRef12 =
    "pcc v1 6 12\n"
    "11000*\n"
    "1100*0\n"
    "10100*\n"
    "1010*1\n"
    "10011*\n"
    "1001*0\n"
    "01101*\n"
    "0110*1\n"
    "0101**\n"
    "0101**\n"
    "0011**\n"
    "0011**\n";

inline const char* kRef12Soa =
    "pcc v1 6 12\n"
    "110000\n"
    "110000\n"
    "101001\n"
    "101001\n"
    "100110\n"
    "100110\n"
    "011011\n"
    "011011\n"
    "010100\n"
    "010100\n"
    "001100\n"
    "001100\n";

}  // namespace pcc::testing
