#include "promo/word.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>

#include "promo/error.hpp"

namespace promo {

std::size_t WordHash::operator()(const Word& w) const noexcept {
  std::size_t h = 0xcbf29ce484222325ULL;
  for (int letter : w) {
    h ^= static_cast<std::size_t>(letter);
    h *= 0x100000001b3ULL;
  }
  return h;
}

Word identity_word(int n) {
  Word w(static_cast<std::size_t>(n));
  std::iota(w.begin(), w.end(), 1);
  return w;
}

bool is_permutation(const Word& w) {
  std::vector<bool> seen(w.size() + 1, false);
  for (int letter : w) {
    if (letter < 1 || letter > static_cast<int>(w.size()) || seen[letter]) {
      return false;
    }
    seen[letter] = true;
  }
  return true;
}

std::vector<int> positions(const Word& w) {
  std::vector<int> pos(w.size() + 1, 0);
  for (std::size_t i = 0; i < w.size(); ++i) pos[w[i]] = static_cast<int>(i) + 1;
  return pos;
}

int inversion_count(const Word& w) {
  int count = 0;
  for (std::size_t i = 0; i < w.size(); ++i) {
    for (std::size_t j = i + 1; j < w.size(); ++j) {
      if (w[i] > w[j]) ++count;
    }
  }
  return count;
}

std::string format_word(const Word& w) {
  bool compact = std::all_of(w.begin(), w.end(), [](int x) { return x >= 0 && x <= 9; });
  std::string out;
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (!compact && i > 0) out += ' ';
    out += std::to_string(w[i]);
  }
  return out;
}

Word parse_word(std::string_view text) {
  Word w;
  bool separated = text.find_first_of(" ,\t") != std::string_view::npos;
  if (!separated) {
    for (char c : text) {
      if (!std::isdigit(static_cast<unsigned char>(c))) {
        throw Error(ErrorKind::MalformedInput,
                    "bad letter in word '" + std::string(text) + "'");
      }
      w.push_back(c - '0');
    }
  } else {
    std::string token;
    auto flush = [&] {
      if (token.empty()) return;
      w.push_back(std::stoi(token));
      token.clear();
    };
    for (char c : text) {
      if (std::isdigit(static_cast<unsigned char>(c))) {
        token += c;
      } else if (c == ' ' || c == ',' || c == '\t') {
        flush();
      } else {
        throw Error(ErrorKind::MalformedInput,
                    "bad character in word '" + std::string(text) + "'");
      }
    }
    flush();
  }
  if (w.empty()) throw Error(ErrorKind::MalformedInput, "empty word");
  return w;
}

Basis::Basis(std::vector<Word> words) : words_(std::move(words)) {
  std::sort(words_.begin(), words_.end());
  words_.erase(std::unique(words_.begin(), words_.end()), words_.end());
  index_.reserve(words_.size());
  for (std::size_t i = 0; i < words_.size(); ++i) index_.emplace(words_[i], i);
}

std::optional<std::size_t> Basis::find(const Word& w) const {
  auto it = index_.find(w);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

}  // namespace promo
