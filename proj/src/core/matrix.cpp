#include "core/matrix.hpp"

#include <algorithm>
#include <set>
#include <sstream>
#include <unordered_set>

#include "core/budget.hpp"

namespace pcc {

Cell cell_from_char(char ch) {
  switch (ch) {
    case '0':
      return Cell::Zero;
    case '1':
      return Cell::One;
    case '*':
      return Cell::Star;
    default:
      throw InvalidArgument(std::string("invalid cell character '") + ch + "'");
  }
}

bool PartialMatrix::is_total() const {
  for (const auto& r : rows)
    for (Cell c : r)
      if (c == Cell::Star) return false;
  return true;
}

PartialMatrix TotalMatrix::as_partial() const {
  PartialMatrix m;
  m.n_points = n_points;
  m.point_labels = point_labels;
  m.concept_labels = concept_labels;
  m.rows.reserve(rows.size());
  for (const auto& r : rows) {
    std::vector<Cell> row(r.size());
    for (std::size_t i = 0; i < r.size(); ++i) row[i] = r[i] ? Cell::One : Cell::Zero;
    m.rows.push_back(std::move(row));
  }
  return m;
}

TotalMatrix to_total(const PartialMatrix& m) {
  TotalMatrix t;
  t.n_points = m.n_points;
  t.point_labels = m.point_labels;
  t.concept_labels = m.concept_labels;
  t.rows.reserve(m.rows.size());
  for (std::size_t r = 0; r < m.rows.size(); ++r) {
    std::vector<std::uint8_t> row(m.n_points);
    for (std::size_t p = 0; p < m.n_points; ++p) {
      const Cell c = m.rows[r][p];
      if (c == Cell::Star)
        throw InvalidArgument("matrix is not total: Star at row " + std::to_string(r + 1) +
                              ", point " + std::to_string(p + 1));
      row[p] = c == Cell::One ? 1 : 0;
    }
    t.rows.push_back(std::move(row));
  }
  return t;
}

Pattern pattern_from_strings(const std::vector<std::string>& rows) {
  if (rows.empty() || rows[0].empty()) throw InvalidArgument("pattern must be at least 1x1");
  Pattern p;
  p.n_rows = rows.size();
  p.n_cols = rows[0].size();
  for (const auto& s : rows) {
    if (s.size() != p.n_cols) throw InvalidArgument("pattern rows differ in length");
    std::vector<std::uint8_t> row(s.size());
    for (std::size_t i = 0; i < s.size(); ++i) {
      if (s[i] != '0' && s[i] != '1') throw InvalidArgument("pattern cells must be 0/1");
      row[i] = s[i] == '1';
    }
    p.cells.push_back(std::move(row));
  }
  return p;
}

namespace {

std::vector<std::string> split_lines(const std::string& text) {
  std::vector<std::string> lines;
  std::string cur;
  for (char ch : text) {
    if (ch == '\n') {
      lines.push_back(cur);
      cur.clear();
    } else if (ch != '\r') {
      cur.push_back(ch);
    }
  }
  if (!cur.empty()) lines.push_back(cur);
  return lines;
}

bool parse_count(const std::string& tok, std::size_t& out) {
  if (tok.empty()) return false;
  std::size_t v = 0;
  for (char ch : tok) {
    if (ch < '0' || ch > '9') return false;
    v = v * 10 + static_cast<std::size_t>(ch - '0');
    if (v > 100'000'000) return false;
  }
  out = v;
  return true;
}

}  // namespace

PartialMatrix parse_pcc(const std::string& text) {
  const auto lines = split_lines(text);
  if (lines.empty()) throw ParseError(1, "empty input, expected 'pcc v1 <n_points> <n_concepts>'");
  std::istringstream hdr(lines[0]);
  std::string magic, version, a, b, extra;
  hdr >> magic >> version >> a >> b;
  if (magic != "pcc" || version != "v1" || (hdr >> extra))
    throw ParseError(1, "bad header, expected 'pcc v1 <n_points> <n_concepts>'");
  std::size_t n_points = 0, n_concepts = 0;
  if (!parse_count(a, n_points) || !parse_count(b, n_concepts))
    throw ParseError(1, "bad counts in header");

  PartialMatrix m;
  m.n_points = n_points;
  for (std::size_t r = 0; r < n_concepts; ++r) {
    const std::size_t lineno = r + 2;
    if (lineno > lines.size()) throw ParseError(lines.size() + 1, "missing concept row");
    const std::string& line = lines[lineno - 1];
    if (line.size() != n_points)
      throw ParseError(lineno, "row has " + std::to_string(line.size()) + " cells, expected " +
                                   std::to_string(n_points));
    std::vector<Cell> row(n_points);
    for (std::size_t p = 0; p < n_points; ++p) {
      if (line[p] != '0' && line[p] != '1' && line[p] != '*')
        throw ParseError(lineno, std::string("invalid cell character '") + line[p] + "'");
      row[p] = cell_from_char(line[p]);
    }
    m.rows.push_back(std::move(row));
  }
  for (std::size_t i = n_concepts + 1; i < lines.size(); ++i)
    if (!lines[i].empty()) throw ParseError(i + 1, "unexpected trailing content");
  return m;
}

std::string format_pcc(const PartialMatrix& m) {
  std::string out = "pcc v1 " + std::to_string(m.n_points) + " " + std::to_string(m.n_concepts()) + "\n";
  for (const auto& r : m.rows) {
    for (Cell c : r) out.push_back(cell_char(c));
    out.push_back('\n');
  }
  return out;
}

std::string format_pcc(const TotalMatrix& m) { return format_pcc(m.as_partial()); }

PartialMatrix restrict_points(const PartialMatrix& m, const std::vector<std::size_t>& points) {
  std::unordered_set<std::size_t> seen;
  for (std::size_t p : points) {
    if (p >= m.n_points)
      throw InvalidArgument("restrict: point index " + std::to_string(p + 1) + " out of range");
    if (!seen.insert(p).second)
      throw InvalidArgument("restrict: duplicate point index " + std::to_string(p + 1));
  }
  PartialMatrix out;
  out.n_points = points.size();
  if (!m.point_labels.empty()) {
    out.point_labels.reserve(points.size());
    for (std::size_t p : points) out.point_labels.push_back(m.point_labels[p]);
  }
  out.concept_labels = m.concept_labels;
  out.rows.reserve(m.rows.size());
  for (const auto& r : m.rows) {
    std::vector<Cell> row(points.size());
    for (std::size_t i = 0; i < points.size(); ++i) row[i] = r[points[i]];
    out.rows.push_back(std::move(row));
  }
  return out;
}

PartialMatrix dual(const PartialMatrix& m) {
  PartialMatrix out;
  out.n_points = m.n_concepts();
  out.point_labels = m.concept_labels;
  out.concept_labels = m.point_labels;
  out.rows.assign(m.n_points, std::vector<Cell>(m.n_concepts()));
  for (std::size_t r = 0; r < m.n_concepts(); ++r)
    for (std::size_t p = 0; p < m.n_points; ++p) out.rows[p][r] = m.rows[r][p];
  return out;
}

namespace {

bool row_matches(const PartialMatrix& m, std::size_t row, const Pattern& p, std::size_t prow,
                 const std::vector<std::size_t>& cols) {
  for (std::size_t j = 0; j < cols.size(); ++j) {
    const Cell c = m.rows[row][cols[j]];
    if (c == Cell::Star) return false;
    if ((c == Cell::One) != (p.cells[prow][j] == 1)) return false;
  }
  return true;
}

// Advances a k-combination of [0, n) in lexicographic order.
bool next_combination(std::vector<std::size_t>& c, std::size_t n) {
  const std::size_t k = c.size();
  std::size_t i = k;
  while (i > 0) {
    --i;
    if (c[i] != i + n - k) {
      ++c[i];
      for (std::size_t j = i + 1; j < k; ++j) c[j] = c[j - 1] + 1;
      return true;
    }
  }
  return false;
}

}  // namespace

std::optional<PatternWitness> contains_pattern(const PartialMatrix& m, const Pattern& p) {
  if (p.n_rows > m.n_concepts() || p.n_cols > m.n_points) return std::nullopt;
  // Column tuples in lexicographic order; rows matched greedily (first fit is
  // complete for the existence question since rows must only increase).
  std::vector<std::size_t> cols(p.n_cols);
  for (std::size_t i = 0; i < p.n_cols; ++i) cols[i] = i;
  do {
    budget::tick();
    PatternWitness w;
    w.cols = cols;
    std::size_t next_row = 0;
    bool ok = true;
    for (std::size_t pr = 0; pr < p.n_rows; ++pr) {
      bool found = false;
      for (std::size_t r = next_row; r < m.n_concepts(); ++r) {
        if (row_matches(m, r, p, pr, cols)) {
          w.rows.push_back(r);
          next_row = r + 1;
          found = true;
          break;
        }
      }
      if (!found) {
        ok = false;
        break;
      }
    }
    if (ok) return w;
  } while (next_combination(cols, m.n_points));
  return std::nullopt;
}

DisambiguationCheck is_disambiguation(const PartialMatrix& m, const TotalMatrix& t) {
  if (m.n_points != t.n_points)
    throw InvalidArgument("is_disambiguation: point counts differ (" + std::to_string(m.n_points) +
                          " vs " + std::to_string(t.n_points) + ")");
  for (std::size_t r = 0; r < m.n_concepts(); ++r) {
    std::vector<std::size_t> cands(t.n_concepts());
    for (std::size_t i = 0; i < cands.size(); ++i) cands[i] = i;
    if (cands.empty()) return {false, r, 0};
    for (std::size_t p = 0; p < m.n_points; ++p) {
      const Cell c = m.rows[r][p];
      if (c == Cell::Star) continue;
      const std::uint8_t want = c == Cell::One ? 1 : 0;
      std::vector<std::size_t> kept;
      for (std::size_t i : cands)
        if (t.rows[i][p] == want) kept.push_back(i);
      if (kept.empty()) return {false, r, p};
      cands.swap(kept);
    }
  }
  DisambiguationCheck ok;
  ok.ok = true;
  return ok;
}

std::size_t distinct_rows(const TotalMatrix& t) {
  std::set<std::vector<std::uint8_t>> seen(t.rows.begin(), t.rows.end());
  return seen.size();
}

std::size_t distinct_cols(const TotalMatrix& t) {
  std::set<std::vector<std::uint8_t>> seen;
  for (std::size_t p = 0; p < t.n_points; ++p) {
    std::vector<std::uint8_t> col(t.n_concepts());
    for (std::size_t r = 0; r < t.n_concepts(); ++r) col[r] = t.rows[r][p];
    seen.insert(std::move(col));
  }
  return seen.size();
}

std::vector<std::string> row_strings(const PartialMatrix& m) {
  std::vector<std::string> out;
  out.reserve(m.rows.size());
  for (const auto& r : m.rows) {
    std::string s(r.size(), '0');
    for (std::size_t i = 0; i < r.size(); ++i) s[i] = cell_char(r[i]);
    out.push_back(std::move(s));
  }
  return out;
}

}  // namespace pcc
