#include "core/comm.hpp"

#include <sstream>

namespace pcc {

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

}  // namespace

CommMatrix parse_comm(const std::string& text) {
  const auto lines = split_lines(text);
  if (lines.empty()) throw ParseError(1, "empty input, expected 'comm v1 <rows> <cols>'");
  std::istringstream hdr(lines[0]);
  std::string magic, version, extra;
  long long rows = -1, cols = -1;
  hdr >> magic >> version >> rows >> cols;
  if (magic != "comm" || version != "v1" || rows < 0 || cols < 0 || (hdr >> extra))
    throw ParseError(1, "bad header, expected 'comm v1 <rows> <cols>'");

  CommMatrix m;
  m.n_rows = static_cast<std::size_t>(rows);
  m.n_cols = static_cast<std::size_t>(cols);
  for (std::size_t r = 0; r < m.n_rows; ++r) {
    const std::size_t lineno = r + 2;
    if (lineno > lines.size()) throw ParseError(lines.size() + 1, "missing matrix row");
    const std::string& line = lines[lineno - 1];
    if (line.size() != m.n_cols)
      throw ParseError(lineno, "row has " + std::to_string(line.size()) + " cells, expected " +
                                   std::to_string(m.n_cols));
    std::vector<std::uint8_t> row(m.n_cols);
    for (std::size_t c = 0; c < m.n_cols; ++c) {
      if (line[c] != '0' && line[c] != '1')
        throw ParseError(lineno, std::string("invalid cell character '") + line[c] + "'");
      row[c] = line[c] == '1';
    }
    m.cells.push_back(std::move(row));
  }
  for (std::size_t i = m.n_rows + 1; i < lines.size(); ++i)
    if (!lines[i].empty()) throw ParseError(i + 1, "unexpected trailing content");
  return m;
}

std::string format_comm(const CommMatrix& m) {
  std::string out = "comm v1 " + std::to_string(m.n_rows) + " " + std::to_string(m.n_cols) + "\n";
  for (const auto& row : m.cells) {
    for (std::uint8_t c : row) out.push_back(c ? '1' : '0');
    out.push_back('\n');
  }
  return out;
}

BoolFunction make_boolfun(unsigned n, const std::string& table) {
  if (n > 24) throw InvalidArgument("boolean function arity too large");
  if (table.size() != (std::size_t{1} << n))
    throw InvalidArgument("truth table length must be 2^n");
  BoolFunction f;
  f.n = n;
  f.table.resize(table.size());
  for (std::size_t i = 0; i < table.size(); ++i) {
    if (table[i] != '0' && table[i] != '1')
      throw InvalidArgument("truth table must be over 0/1");
    f.table[i] = table[i] == '1';
  }
  return f;
}

BoolFunction parse_bf(const std::string& text) {
  const auto lines = split_lines(text);
  if (lines.empty()) throw ParseError(1, "empty input, expected 'bf v1 <n>'");
  std::istringstream hdr(lines[0]);
  std::string magic, version, extra;
  long long n = -1;
  hdr >> magic >> version >> n;
  if (magic != "bf" || version != "v1" || n < 0 || n > 24 || (hdr >> extra))
    throw ParseError(1, "bad header, expected 'bf v1 <n>'");
  if (lines.size() < 2) throw ParseError(2, "missing truth table line");
  for (std::size_t i = 2; i < lines.size(); ++i)
    if (!lines[i].empty()) throw ParseError(i + 1, "unexpected trailing content");
  try {
    return make_boolfun(static_cast<unsigned>(n), lines[1]);
  } catch (const InvalidArgument& e) {
    throw ParseError(2, e.what());
  }
}

std::string format_bf(const BoolFunction& f) {
  std::string out = "bf v1 " + std::to_string(f.n) + "\n";
  for (std::uint8_t v : f.table) out.push_back(v ? '1' : '0');
  out.push_back('\n');
  return out;
}

}  // namespace pcc
