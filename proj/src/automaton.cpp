#include "gorquiv/automaton.hpp"

#include <queue>

namespace gorquiv {

namespace {
constexpr std::size_t kNone = static_cast<std::size_t>(-1);
}

FactorAutomaton::FactorAutomaton(
    std::size_t alphabet_size,
    const std::vector<std::vector<std::size_t>>& patterns)
    : alphabet_(alphabet_size) {
  // Trie first, with kNone for missing edges.
  std::vector<std::size_t> trie(alphabet_, kNone);
  accepting_.push_back(false);
  for (const auto& p : patterns) {
    std::size_t s = 0;
    for (std::size_t letter : p) {
      std::size_t& nxt = trie[s * alphabet_ + letter];
      if (nxt == kNone) {
        nxt = accepting_.size();
        accepting_.push_back(false);
        trie.resize(trie.size() + alphabet_, kNone);
      }
      s = trie[s * alphabet_ + letter];
    }
    accepting_[s] = true;
  }

  // Breadth-first completion into a full transition function.
  delta_.assign(trie.size(), 0);
  std::vector<std::size_t> fail(accepting_.size(), 0);
  std::queue<std::size_t> q;
  for (std::size_t a = 0; a < alphabet_; ++a) {
    std::size_t child = trie[a];
    if (child == kNone) {
      delta_[a] = 0;
    } else {
      delta_[a] = child;
      fail[child] = 0;
      q.push(child);
    }
  }
  while (!q.empty()) {
    std::size_t s = q.front();
    q.pop();
    if (accepting_[fail[s]]) {
      accepting_[s] = true;
    }
    for (std::size_t a = 0; a < alphabet_; ++a) {
      std::size_t child = trie[s * alphabet_ + a];
      if (child == kNone) {
        delta_[s * alphabet_ + a] = delta_[fail[s] * alphabet_ + a];
      } else {
        delta_[s * alphabet_ + a] = child;
        fail[child] = delta_[fail[s] * alphabet_ + a];
        q.push(child);
      }
    }
  }
}

bool FactorAutomaton::contains_pattern(
    const std::vector<std::size_t>& word) const {
  State s = root();
  for (std::size_t letter : word) {
    s = next(s, letter);
    if (accepting(s)) {
      return true;
    }
  }
  return false;
}

}  // namespace gorquiv
