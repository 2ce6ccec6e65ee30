#include "svtab/permutation.hpp"

#include <sstream>

#include "svtab/error.hpp"

namespace svtab {

Permutation::Permutation(std::vector<int> word) : word_(std::move(word)) {
  std::vector<char> seen(word_.size() + 1, 0);
  for (int x : word_) {
    if (x < 1 || x > size() || seen[x]) {
      throw Error(Errc::InvalidArgument, "not a permutation of 1.." + std::to_string(size()));
    }
    seen[x] = 1;
  }
}

Permutation Permutation::identity(int m) {
  std::vector<int> word(m);
  for (int i = 0; i < m; ++i) word[i] = i + 1;
  return Permutation(std::move(word));
}

Permutation Permutation::parse(const std::string& text) {
  std::istringstream in(text);
  std::vector<int> word;
  std::string token;
  while (in >> token) {
    try {
      std::size_t used = 0;
      word.push_back(std::stoi(token, &used));
      if (used != token.size()) throw std::invalid_argument(token);
    } catch (const std::exception&) {
      throw Error(Errc::ParseError, "bad permutation entry '" + token + "'");
    }
  }
  return Permutation(std::move(word));
}

// Scanning left to right, a 321 appears exactly when a value falls below the
// largest value that already sits to the right of something bigger.
bool Permutation::avoids_321() const {
  int prefix_max = 0;
  int largest_inverted = 0;
  for (int x : word_) {
    if (x < largest_inverted) return false;
    if (x < prefix_max) {
      largest_inverted = std::max(largest_inverted, x);
    } else {
      prefix_max = x;
    }
  }
  return true;
}

std::string Permutation::to_string() const {
  std::string out;
  for (std::size_t i = 0; i < word_.size(); ++i) {
    if (i) out += ' ';
    out += std::to_string(word_[i]);
  }
  return out;
}

}  // namespace svtab
