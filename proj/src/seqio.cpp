#include "erseq/seqio.hpp"

#include <cctype>
#include <sstream>

namespace erseq::seqio {

namespace {

bool is_space(char c) { return c == ' ' || c == '\t' || c == '\r'; }

std::string_view trim(std::string_view s, std::size_t* dropped_front = nullptr) {
  std::size_t front = 0;
  while (front < s.size() && is_space(s[front])) ++front;
  std::size_t back = s.size();
  while (back > front && is_space(s[back - 1])) --back;
  if (dropped_front) *dropped_front = front;
  return s.substr(front, back - front);
}

bool looks_like_integer(std::string_view token) {
  if (token.empty()) return false;
  std::size_t i = (token[0] == '-' || token[0] == '+') ? 1 : 0;
  if (i == token.size()) return false;
  for (; i < token.size(); ++i)
    if (!std::isdigit(static_cast<unsigned char>(token[i]))) return false;
  return true;
}

Integer parse_integer_token(std::string_view token, std::size_t line, std::size_t column) {
  if (!looks_like_integer(token))
    throw ParseError(line, column, "expected an integer, got \"" + std::string(token) + "\"");
  return Integer(std::string(token));
}

std::vector<std::string_view> split(std::string_view text, char sep) {
  std::vector<std::string_view> parts;
  std::size_t start = 0;
  while (true) {
    const std::size_t pos = text.find(sep, start);
    if (pos == std::string_view::npos) {
      parts.push_back(text.substr(start));
      return parts;
    }
    parts.push_back(text.substr(start, pos - start));
    start = pos + 1;
  }
}

std::vector<std::string_view> split_lines(std::string_view text) {
  auto lines = split(text, '\n');
  while (!lines.empty() && trim(lines.back()).empty()) lines.pop_back();
  return lines;
}

Sequence parse_csv(std::string_view text) {
  const auto lines = split_lines(text);
  std::size_t data_line = 0;  // 1-based
  for (std::size_t i = 0; i < lines.size(); ++i) {
    if (trim(lines[i]).empty()) continue;
    if (data_line != 0)
      throw ParseError(i + 1, 1, "csv input must be a single line of comma-separated values");
    data_line = i + 1;
  }
  if (data_line == 0) throw ParseError(1, 1, "empty input");

  const std::string_view line = lines[data_line - 1];
  std::vector<Integer> terms;
  std::size_t column = 1;
  for (std::string_view raw : split(line, ',')) {
    std::size_t dropped = 0;
    const std::string_view token = trim(raw, &dropped);
    terms.push_back(parse_integer_token(token, data_line, column + dropped));
    column += raw.size() + 1;
  }
  return Sequence(std::move(terms));
}

Sequence parse_bfile(std::string_view text) {
  std::vector<Integer> terms;
  const auto lines = split(text, '\n');
  for (std::size_t i = 0; i < lines.size(); ++i) {
    std::size_t dropped = 0;
    const std::string_view line = trim(lines[i], &dropped);
    if (line.empty() || line[0] == '#') continue;

    const std::size_t gap = line.find_first_of(" \t");
    if (gap == std::string_view::npos)
      throw ParseError(i + 1, dropped + 1, "expected \"index value\"");
    std::size_t value_start = gap;
    while (value_start < line.size() && is_space(line[value_start])) ++value_start;
    const std::string_view index_token = line.substr(0, gap);
    const std::string_view value_token = line.substr(value_start);
    if (value_token.find_first_of(" \t") != std::string_view::npos)
      throw ParseError(i + 1, dropped + value_start + 1, "trailing content after value");

    const Integer index = parse_integer_token(index_token, i + 1, dropped + 1);
    if (index != Integer(static_cast<unsigned long>(terms.size() + 1)))
      throw ParseError(i + 1, dropped + 1,
                       "indices must be contiguous from 1; expected " +
                           std::to_string(terms.size() + 1) + ", got " + index.get_str());
    terms.push_back(parse_integer_token(value_token, i + 1, dropped + value_start + 1));
  }
  if (terms.empty()) throw ParseError(1, 1, "empty input");
  return Sequence(std::move(terms));
}

}  // namespace

Sequence parse_sequence(std::string_view text, Format format) {
  return format == Format::csv ? parse_csv(text) : parse_bfile(text);
}

std::string render_sequence(const Sequence& s, Format format) {
  std::ostringstream os;
  if (format == Format::csv) {
    os << s << '\n';
  } else {
    for (std::size_t n = 1; n <= s.size(); ++n) os << n << ' ' << s.at(n) << '\n';
  }
  return os.str();
}

Rational parse_rational(std::string_view text) {
  const std::string_view trimmed = trim(text);
  const std::size_t slash = trimmed.find('/');
  Integer num, den = 1;
  if (slash == std::string_view::npos) {
    num = parse_integer_token(trimmed, 1, 1);
  } else {
    num = parse_integer_token(trim(trimmed.substr(0, slash)), 1, 1);
    den = parse_integer_token(trim(trimmed.substr(slash + 1)), 1, slash + 2);
    if (den == 0) throw ParseError(1, slash + 2, "zero denominator");
  }
  Rational q(num, den);
  q.canonicalize();
  return q;
}

std::pair<std::size_t, std::vector<Integer>> parse_matrix(std::string_view text) {
  const auto rows = split(trim(text), ';');
  const std::size_t dim = rows.size();
  std::vector<Integer> entries;
  std::size_t column = 1;
  for (std::size_t r = 0; r < rows.size(); ++r) {
    const auto cells = split(rows[r], ',');
    if (cells.size() != dim)
      throw ParseError(1, column,
                       "matrix must be square: row " + std::to_string(r + 1) + " has " +
                           std::to_string(cells.size()) + " entries, expected " +
                           std::to_string(dim));
    for (std::string_view cell : cells) {
      std::size_t dropped = 0;
      const std::string_view token = trim(cell, &dropped);
      entries.push_back(parse_integer_token(token, 1, column + dropped));
      column += cell.size() + 1;
    }
  }
  return {dim, std::move(entries)};
}

std::vector<Integer> parse_integer_list(std::string_view text) {
  const std::string_view trimmed = trim(text);
  if (trimmed.empty()) return {};
  std::vector<Integer> out;
  std::size_t column = 1;
  for (std::string_view raw : split(trimmed, ',')) {
    std::size_t dropped = 0;
    out.push_back(parse_integer_token(trim(raw, &dropped), 1, column + dropped));
    column += raw.size() + 1;
  }
  return out;
}

std::map<Integer, Integer> parse_prime_value_map(std::string_view text) {
  std::map<Integer, Integer> out;
  const std::string_view trimmed = trim(text);
  if (trimmed.empty()) return out;
  std::size_t column = 1;
  for (std::string_view raw : split(trimmed, ',')) {
    const std::size_t colon = raw.find(':');
    if (colon == std::string_view::npos)
      throw ParseError(1, column, "expected \"prime:value\", got \"" + std::string(raw) + "\"");
    std::size_t dropped = 0;
    const Integer p = parse_integer_token(trim(raw.substr(0, colon), &dropped), 1, column + dropped);
    const Integer v = parse_integer_token(trim(raw.substr(colon + 1)), 1, column + colon + 2);
    out[p] = v;
    column += raw.size() + 1;
  }
  return out;
}

}  // namespace erseq::seqio
