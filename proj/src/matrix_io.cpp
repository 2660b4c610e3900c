#include "sdc/matrix_io.hpp"

#include <charconv>
#include <iterator>
#include <istream>
#include <optional>
#include <sstream>
#include <vector>

namespace sdc {

ParseError::ParseError(const std::string& what, std::size_t line, std::size_t column)
    : std::invalid_argument(column ? "line " + std::to_string(line) + ", column " + std::to_string(column) + ": " + what
                                   : "line " + std::to_string(line) + ": " + what),
      line_(line),
      column_(column) {}

namespace {

struct Line {
  std::size_t number;  // 1-based
  std::string_view text;
  std::size_t indent;  // characters stripped from the left
};

bool is_blank(char c) { return c == ' ' || c == '\t' || c == '\r' || c == '\v' || c == '\f'; }

std::vector<Line> split_lines(std::string_view text) {
  std::vector<Line> lines;
  std::size_t number = 1;
  while (!text.empty()) {
    const std::size_t eol = text.find('\n');
    std::string_view raw = text.substr(0, eol);
    text = eol == std::string_view::npos ? std::string_view{} : text.substr(eol + 1);
    std::size_t indent = 0;
    while (indent < raw.size() && is_blank(raw[indent])) ++indent;
    std::string_view body = raw.substr(indent);
    while (!body.empty() && is_blank(body.back())) body.remove_suffix(1);
    lines.push_back({number++, body, indent});
  }
  while (!lines.empty() && lines.back().text.empty()) lines.pop_back();
  return lines;
}

std::optional<std::size_t> parse_size(std::string_view tok) {
  std::size_t v = 0;
  const auto [p, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
  if (ec != std::errc{} || p != tok.data() + tok.size()) return std::nullopt;
  return v;
}

struct Header {
  std::size_t n;
  std::size_t k;
  bool data_like;  // both tokens are single 0/1 symbols
};

std::optional<Header> header_candidate(std::string_view s) {
  const std::size_t sp = s.find_first_of(" \t");
  if (sp == std::string_view::npos) return std::nullopt;
  std::size_t rest = sp;
  while (rest < s.size() && is_blank(s[rest])) ++rest;
  const std::string_view a = s.substr(0, sp);
  const std::string_view b = s.substr(rest);
  if (b.find_first_of(" \t") != std::string_view::npos) return std::nullopt;
  const auto n = parse_size(a);
  const auto k = parse_size(b);
  if (!n || !k) return std::nullopt;
  auto bit = [](std::string_view t) { return t == "0" || t == "1"; };
  return Header{*n, *k, bit(a) && bit(b)};
}

/// Symbols of one data row, with the 1-based column of any bad character.
BitVector parse_row(const Line& line, std::size_t expected) {
  std::string bits;
  bits.reserve(line.text.size());
  for (std::size_t i = 0; i < line.text.size(); ++i) {
    const char c = line.text[i];
    if (c == '0' || c == '1')
      bits.push_back(c);
    else if (c != ' ')
      throw ParseError(std::string("invalid symbol '") + c + "' (expected 0, 1 or space)", line.number,
                       line.indent + i + 1);
  }
  if (bits.empty()) throw ParseError("empty row", line.number);
  if (expected != 0 && bits.size() != expected)
    throw ParseError("ragged row: " + std::to_string(bits.size()) + " symbols, expected " + std::to_string(expected),
                     line.number);
  if (bits.size() > kMaxLength) throw ParseError("row longer than 65536 symbols", line.number);
  return BitVector::from_string(bits);
}

std::size_t count_symbols(std::string_view s) {
  std::size_t n = 0;
  for (char c : s) n += (c == '0' || c == '1');
  return n;
}

bool rows_fit(const std::vector<Line>& lines, std::size_t first, const Header& h) {
  if (lines.size() - first != h.k || h.n == 0) return false;
  for (std::size_t i = first; i < lines.size(); ++i) {
    const auto s = lines[i].text;
    if (s.find_first_not_of("01 ") != std::string_view::npos || count_symbols(s) != h.n) return false;
  }
  return true;
}

}  // namespace

BitMatrix parse_matrix(std::string_view text) {
  const std::vector<Line> lines = split_lines(text);
  if (lines.empty()) throw ParseError("empty input: no header and no rows", 1);

  std::size_t first = 0;
  std::optional<Header> header = header_candidate(lines.front().text);
  if (header) {
    if (header->data_like && !rows_fit(lines, 1, *header)) {
      header.reset();  // e.g. "1 1": a spaced data row
    } else {
      first = 1;
      if (header->n == 0 || header->n > kMaxLength) throw ParseError("header: n must be in [1, 65536]", 1);
      if (lines.size() - 1 != header->k)
        throw ParseError("header declares " + std::to_string(header->k) + " rows but " +
                             std::to_string(lines.size() - 1) + " follow",
                         1);
    }
  }

  std::size_t ncols = header ? header->n : 0;
  std::vector<BitVector> rows;
  for (std::size_t i = first; i < lines.size(); ++i) {
    BitVector r = parse_row(lines[i], ncols);
    if (ncols == 0) ncols = r.size();
    rows.push_back(std::move(r));
  }
  return BitMatrix(ncols, std::move(rows));
}

BitMatrix read_matrix(std::istream& in) {
  const std::string text{std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
  return parse_matrix(text);
}

std::string serialize_matrix(const BitMatrix& m, bool spaced) {
  std::ostringstream out;
  out << m.ncols() << ' ' << m.nrows() << '\n';
  for (const auto& r : m.rows()) {
    for (std::size_t j = 0; j < r.size(); ++j) {
      if (spaced && j != 0) out << ' ';
      out << (r.get(j) ? '1' : '0');
    }
    out << '\n';
  }
  return out.str();
}

}  // namespace sdc
