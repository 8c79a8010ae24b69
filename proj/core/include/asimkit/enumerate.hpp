#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "asimkit/model.hpp"

namespace asimkit {

struct EnumerationOptions {
  std::size_t max_worlds = 1;
  Vocabulary sigma;
  bool intuitionistic_only = false;
  // Yielding more models than this throws BudgetExceeded.
  std::size_t cap = 1'000'000;
};

// Streams every model with 1..max_worlds worlds over sigma, one per
// isomorphism class, smallest domains first.
//
// A model on n worlds is encoded as the bit string formed by, for each world
// in turn, its letter flags (increasing letter order) followed by its row of
// the adjacency matrix. The representative of a class is the labelling whose
// encoding is lexicographically least; within one size classes appear in
// increasing encoding order. Worlds are named w0, w1, ...
class ModelEnumerator {
 public:
  // Throws PreconditionError for max_worlds == 0 and BudgetExceeded when the
  // encoding of the largest size does not fit in 62 bits.
  explicit ModelEnumerator(EnumerationOptions options);

  [[nodiscard]] std::optional<Model> next();
  [[nodiscard]] std::size_t yielded() const { return yielded_; }

 private:
  [[nodiscard]] bool is_canonical() const;
  [[nodiscard]] bool passes_filter() const;
  void decode(std::uint64_t code);

  EnumerationOptions options_;
  std::vector<int> letters_;
  std::size_t worlds_ = 1;
  std::uint64_t code_ = 0;
  std::uint64_t limit_ = 0;
  std::vector<std::vector<std::size_t>> permutations_;
  std::vector<bool> adjacency_;
  std::vector<std::vector<bool>> flags_;  // [world][letter position]
  std::size_t yielded_ = 0;
};

[[nodiscard]] std::vector<Model> enumerate_models(std::size_t max_worlds, const Vocabulary& sigma,
                                                  bool intuitionistic_only,
                                                  std::size_t cap = 1'000'000);

}  // namespace asimkit
