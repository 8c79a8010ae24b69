#pragma once

#include <initializer_list>
#include <set>
#include <string>

namespace asimkit {

// Finite set of unary letter indices P_n (n >= 1). The binary letter R and
// identity are always implicitly present.
class Vocabulary {
 public:
  using const_iterator = std::set<int>::const_iterator;

  Vocabulary() = default;
  Vocabulary(std::initializer_list<int> letters);

  void insert(int letter);
  [[nodiscard]] bool contains(int letter) const { return letters_.count(letter) != 0; }
  [[nodiscard]] bool empty() const { return letters_.empty(); }
  [[nodiscard]] std::size_t size() const { return letters_.size(); }
  [[nodiscard]] const_iterator begin() const { return letters_.begin(); }
  [[nodiscard]] const_iterator end() const { return letters_.end(); }

  [[nodiscard]] bool subset_of(const Vocabulary& other) const;
  [[nodiscard]] Vocabulary united(const Vocabulary& other) const;

  // "{1, 2}"
  [[nodiscard]] std::string to_string() const;

  friend bool operator==(const Vocabulary&, const Vocabulary&) = default;

 private:
  std::set<int> letters_;
};

}  // namespace asimkit
