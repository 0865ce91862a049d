#pragma once

#include <cstddef>
#include <vector>

namespace gorquiv {

// Aho-Corasick automaton over a finite integer alphabet (arrow indices).
// A word contains some pattern as a contiguous factor iff the run of the
// automaton over the word visits an accepting state.
class FactorAutomaton {
 public:
  using State = std::size_t;

  FactorAutomaton(std::size_t alphabet_size,
                  const std::vector<std::vector<std::size_t>>& patterns);

  State root() const { return 0; }
  State next(State s, std::size_t letter) const {
    return delta_[s * alphabet_ + letter];
  }
  // True if some pattern ends at this state.
  bool accepting(State s) const { return accepting_[s]; }
  std::size_t num_states() const { return accepting_.size(); }

  // True iff `word` has some pattern as a factor.
  bool contains_pattern(const std::vector<std::size_t>& word) const;

 private:
  std::size_t alphabet_;
  std::vector<State> delta_;
  std::vector<bool> accepting_;
};

}  // namespace gorquiv
