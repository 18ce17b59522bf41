#include "powergraph/table_io.hpp"

#include <charconv>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>

namespace powergraph {

namespace {

[[noreturn]] void bad(std::size_t line, const std::string& msg) {
  throw GroupError(GroupErrorKind::BadFile, "line " + std::to_string(line) + ": " + msg);
}

std::uint64_t parse_index(const std::string& tok, std::size_t line) {
  std::uint64_t v = 0;
  const auto [p, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
  if (ec != std::errc{} || p != tok.data() + tok.size())
    bad(line, "expected a non-negative integer, got '" + tok + "'");
  return v;
}

} // namespace

FiniteGroup read_cayley_table(std::istream& in, std::string label, std::size_t bound) {
  std::size_t n = 0;
  bool have_n = false;
  std::vector<Elem> table;
  std::string text;
  std::size_t line = 0;
  while (std::getline(in, text)) {
    ++line;
    const auto first = text.find_first_not_of(" \t\r");
    if (first == std::string::npos || text[first] == '#')
      continue;
    std::istringstream row(text);
    std::string tok;
    std::vector<std::uint64_t> values;
    while (row >> tok)
      values.push_back(parse_index(tok, line));
    if (!have_n) {
      if (values.size() != 1 || values[0] == 0)
        bad(line, "first line must hold the group order");
      n = values[0];
      if (n > bound)
        throw GroupError(GroupErrorKind::ExceedsBound,
                         "order " + std::to_string(n) + " exceeds bound " + std::to_string(bound));
      have_n = true;
      table.reserve(n * n);
      continue;
    }
    if (table.size() == n * n)
      bad(line, "more than " + std::to_string(n) + " rows");
    if (values.size() != n)
      bad(line, "row has " + std::to_string(values.size()) + " entries, expected " +
                    std::to_string(n));
    for (auto v : values) {
      if (v >= n)
        bad(line, "index " + std::to_string(v) + " out of range");
      table.push_back(static_cast<Elem>(v));
    }
  }
  if (!have_n)
    bad(line, "empty table file");
  if (table.size() != n * n)
    bad(line, "expected " + std::to_string(n) + " rows, got " + std::to_string(table.size() / n));
  return FiniteGroup::from_table(std::move(table), std::move(label), bound);
}

FiniteGroup load_cayley_table(const std::string& path, std::size_t bound) {
  std::ifstream in(path);
  if (!in)
    throw GroupError(GroupErrorKind::BadFile, "cannot open " + path);
  return read_cayley_table(in, "file:" + path, bound);
}

void write_cayley_table(std::ostream& out, const FiniteGroup& g) {
  const std::size_t n = g.order();
  out << "# " << g.label() << '\n' << n << '\n';
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j)
      out << (j ? " " : "") << g.mul(static_cast<Elem>(i), static_cast<Elem>(j));
    out << '\n';
  }
}

} // namespace powergraph
