#pragma once

#include <cstddef>
#include <initializer_list>
#include <ostream>
#include <utility>
#include <vector>

#include "erseq/arith.hpp"

namespace erseq {

// A finite 1-indexed prefix a_1, ..., a_N of an integer sequence. There is no
// index-0 term; at(1) is the first term.
class Sequence {
 public:
  Sequence() = default;
  explicit Sequence(std::vector<Integer> terms) : terms_(std::move(terms)) {}
  Sequence(std::initializer_list<Integer> terms) : terms_(terms) {}

  static Sequence zeros(std::size_t n) { return Sequence(std::vector<Integer>(n, Integer(0))); }
  static Sequence ones(std::size_t n) { return Sequence(std::vector<Integer>(n, Integer(1))); }
  // (1, 0, 0, ...): a single fixed point and nothing else.
  static Sequence delta(std::size_t n) {
    Sequence s = zeros(n);
    if (n > 0) s.at(1) = 1;
    return s;
  }

  std::size_t size() const noexcept { return terms_.size(); }
  bool empty() const noexcept { return terms_.empty(); }

  const Integer& at(std::size_t n) const { return terms_.at(n - 1); }
  Integer& at(std::size_t n) { return terms_.at(n - 1); }

  void push_back(Integer v) { terms_.push_back(std::move(v)); }

  Sequence prefix(std::size_t n) const {
    if (n > terms_.size()) n = terms_.size();
    return Sequence(std::vector<Integer>(terms_.begin(), terms_.begin() + n));
  }

  const std::vector<Integer>& terms() const noexcept { return terms_; }

  friend bool operator==(const Sequence&, const Sequence&) = default;

 private:
  std::vector<Integer> terms_;
};

inline std::ostream& operator<<(std::ostream& os, const Sequence& s) {
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (i > 0) os << ',';
    os << s.terms()[i];
  }
  return os;
}

}  // namespace erseq
