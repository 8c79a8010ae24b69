#include "asimkit/enumerate.hpp"

#include <algorithm>
#include <numeric>

#include "asimkit/error.hpp"

namespace asimkit {
namespace {

constexpr std::size_t kMaxCodeBits = 62;

std::size_t code_bits(std::size_t worlds, std::size_t letters) { return worlds * (letters + worlds); }

}  // namespace

ModelEnumerator::ModelEnumerator(EnumerationOptions options) : options_(std::move(options)) {
  if (options_.max_worlds == 0) throw PreconditionError("max_worlds must be at least 1");
  letters_.assign(options_.sigma.begin(), options_.sigma.end());
  if (code_bits(options_.max_worlds, letters_.size()) > kMaxCodeBits) {
    throw BudgetExceeded("enumeration of " + std::to_string(options_.max_worlds) + "-world models over " +
                         std::to_string(letters_.size()) + " letters is too large");
  }
  worlds_ = 0;
  code_ = 0;
  limit_ = 0;
}

void ModelEnumerator::decode(std::uint64_t code) {
  const std::size_t n = worlds_;
  const std::size_t letters = letters_.size();
  const std::size_t total = code_bits(n, letters);
  std::size_t position = 0;
  auto bit = [&]() { return ((code >> (total - 1 - position++)) & 1U) != 0; };
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t l = 0; l < letters; ++l) flags_[i][l] = bit();
    for (std::size_t j = 0; j < n; ++j) adjacency_[i * n + j] = bit();
  }
}

bool ModelEnumerator::is_canonical() const {
  const std::size_t n = worlds_;
  const std::size_t letters = letters_.size();
  for (const auto& perm : permutations_) {
    // Compare the relabelled encoding against ours, most significant bit first.
    int order = 0;
    for (std::size_t i = 0; i < n && order == 0; ++i) {
      const std::size_t pi = perm[i];
      for (std::size_t l = 0; l < letters && order == 0; ++l) {
        order = static_cast<int>(flags_[pi][l]) - static_cast<int>(flags_[i][l]);
      }
      for (std::size_t j = 0; j < n && order == 0; ++j) {
        order = static_cast<int>(adjacency_[pi * n + perm[j]]) - static_cast<int>(adjacency_[i * n + j]);
      }
    }
    if (order < 0) return false;
  }
  return true;
}

bool ModelEnumerator::passes_filter() const {
  if (!options_.intuitionistic_only) return true;
  const std::size_t n = worlds_;
  for (std::size_t i = 0; i < n; ++i) {
    if (!adjacency_[i * n + i]) return false;
  }
  for (std::size_t u = 0; u < n; ++u) {
    for (std::size_t v = 0; v < n; ++v) {
      if (!adjacency_[u * n + v]) continue;
      for (std::size_t w = 0; w < n; ++w) {
        if (adjacency_[v * n + w] && !adjacency_[u * n + w]) return false;
      }
      for (std::size_t l = 0; l < letters_.size(); ++l) {
        if (flags_[u][l] && !flags_[v][l]) return false;
      }
    }
  }
  return true;
}

std::optional<Model> ModelEnumerator::next() {
  while (true) {
    if (code_ >= limit_) {
      if (worlds_ >= options_.max_worlds) return std::nullopt;
      ++worlds_;
      code_ = 0;
      limit_ = std::uint64_t{1} << code_bits(worlds_, letters_.size());
      adjacency_.assign(worlds_ * worlds_, false);
      flags_.assign(worlds_, std::vector<bool>(letters_.size(), false));
      permutations_.clear();
      std::vector<std::size_t> perm(worlds_);
      std::iota(perm.begin(), perm.end(), 0);
      while (std::next_permutation(perm.begin(), perm.end())) permutations_.push_back(perm);
    }
    decode(code_++);
    if (!passes_filter() || !is_canonical()) continue;

    if (yielded_ >= options_.cap) {
      throw BudgetExceeded("model enumeration exceeded the cap of " + std::to_string(options_.cap) + " models");
    }
    ++yielded_;
    std::vector<std::string> names;
    for (std::size_t i = 0; i < worlds_; ++i) names.push_back("w" + std::to_string(i));
    std::map<int, std::vector<bool>> extension;
    for (std::size_t l = 0; l < letters_.size(); ++l) {
      auto& flags = extension[letters_[l]];
      for (std::size_t i = 0; i < worlds_; ++i) flags.push_back(flags_[i][l]);
    }
    return Model(std::move(names), adjacency_, extension, options_.sigma);
  }
}

std::vector<Model> enumerate_models(std::size_t max_worlds, const Vocabulary& sigma, bool intuitionistic_only,
                                    std::size_t cap) {
  ModelEnumerator enumerator({max_worlds, sigma, intuitionistic_only, cap});
  std::vector<Model> out;
  while (auto model = enumerator.next()) out.push_back(std::move(*model));
  return out;
}

}  // namespace asimkit
