#pragma once

#include <cstddef>
#include <map>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "erseq/sequence.hpp"

namespace erseq::seqio {

enum class Format { csv, bfile };

// Carries 1-based line/column of the offending token.
struct ParseError : std::runtime_error {
  ParseError(std::size_t line, std::size_t column, const std::string& message)
      : std::runtime_error("parse error at line " + std::to_string(line) + ", column " +
                           std::to_string(column) + ": " + message),
        line(line),
        column(column) {}

  std::size_t line;
  std::size_t column;
};

// csv: a single line of comma-separated values for indices 1..N.
// bfile: "n value" lines, '#' comment lines allowed, indices contiguous
// from 1 (a gap is a parse error).
Sequence parse_sequence(std::string_view text, Format format);

// Inverse of parse_sequence for both formats: parse(render(s)) == s.
// The rendering ends with a newline.
std::string render_sequence(const Sequence& s, Format format);

// "p" or "p/q"; the result is canonical (lowest terms, positive denominator).
Rational parse_rational(std::string_view text);

// "a,b;c,d" row-major; must be square. Returns (dimension, entries).
std::pair<std::size_t, std::vector<Integer>> parse_matrix(std::string_view text);

// "2,3,5"; empty string means the empty list.
std::vector<Integer> parse_integer_list(std::string_view text);

// "2:3,3:1" prime->value pairs.
std::map<Integer, Integer> parse_prime_value_map(std::string_view text);

}  // namespace erseq::seqio
