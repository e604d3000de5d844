#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace promo {

/// A permutation of [n] in one-line notation; letters are 1-based.
using Word = std::vector<int>;

struct WordHash {
  std::size_t operator()(const Word& w) const noexcept;
};

Word identity_word(int n);

bool is_permutation(const Word& w);

/// position[letter] = 1-based position of `letter` in `w`; index 0 unused.
std::vector<int> positions(const Word& w);

/// Number of inversions (pairs of positions i < j with w_i > w_j).
int inversion_count(const Word& w);

/// One-line notation. Letters are concatenated when every letter is a single
/// digit, otherwise separated by spaces.
std::string format_word(const Word& w);

/// Accepts "2413", "2 4 1 3" or "2,4,1,3". Concatenated digits are only
/// accepted when no letter exceeds 9.
Word parse_word(std::string_view text);

/// Lexicographically sorted, duplicate free list of words with an index.
class Basis {
 public:
  Basis() = default;
  explicit Basis(std::vector<Word> words);

  std::size_t size() const { return words_.size(); }
  bool empty() const { return words_.empty(); }
  const Word& operator[](std::size_t i) const { return words_[i]; }
  const std::vector<Word>& words() const { return words_; }

  std::optional<std::size_t> find(const Word& w) const;
  bool contains(const Word& w) const { return index_.count(w) != 0; }

 private:
  std::vector<Word> words_;
  std::unordered_map<Word, std::size_t, WordHash> index_;
};

}  // namespace promo
