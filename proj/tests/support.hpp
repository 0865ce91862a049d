#pragma once

#include <algorithm>
#include <string>
#include <vector>

#include "gorquiv/dsl.hpp"
#include "gorquiv/presentation.hpp"

namespace testing {

inline gorquiv::MonomialPresentation fixture(const std::string& name) {
  return gorquiv::load_presentation(std::string(GORQUIV_FIXTURES) + "/" + name +
                                    ".quiver");
}

inline gorquiv::VertexIndex vx(const gorquiv::MonomialPresentation& p,
                               const std::string& id) {
  return p.quiver().vertex(id);
}

// Words in arrow indices that compose, by brute force over all sequences.
inline bool composes(const gorquiv::Quiver& q, const std::vector<std::size_t>& w) {
  for (std::size_t i = 1; i < w.size(); ++i) {
    if (q.arrow(w[i - 1]).target != q.arrow(w[i]).source) {
      return false;
    }
  }
  return true;
}

inline bool has_factor(const std::vector<std::size_t>& w,
                       const std::vector<std::size_t>& f) {
  return std::search(w.begin(), w.end(), f.begin(), f.end()) != w.end();
}

inline bool word_is_zero(const std::vector<std::size_t>& w,
                         const std::vector<std::vector<std::size_t>>& rels) {
  return std::any_of(rels.begin(), rels.end(),
                     [&](const auto& r) { return has_factor(w, r); });
}

// Number of nonzero paths of length <= max_len, trivial paths included.
// Extends words one arrow at a time without any automaton.
inline std::size_t count_nonzero_paths(
    const gorquiv::Quiver& q, const std::vector<std::vector<std::size_t>>& rels,
    std::size_t max_len) {
  std::size_t count = q.num_vertices();
  std::vector<std::vector<std::size_t>> layer;
  for (std::size_t a = 0; a < q.num_arrows(); ++a) {
    layer.push_back({a});
  }
  for (std::size_t len = 1; len <= max_len && !layer.empty(); ++len) {
    std::vector<std::vector<std::size_t>> next;
    for (const auto& w : layer) {
      if (word_is_zero(w, rels)) {
        continue;
      }
      ++count;
      for (std::size_t a = 0; a < q.num_arrows(); ++a) {
        auto e = w;
        e.push_back(a);
        if (composes(q, e)) {
          next.push_back(std::move(e));
        }
      }
    }
    layer = std::move(next);
  }
  return count;
}

// Depth-first search for a nonzero path with exactly `len` arrows.
inline bool has_nonzero_path(const gorquiv::Quiver& q,
                             const std::vector<std::vector<std::size_t>>& rels,
                             std::vector<std::size_t>& w, std::size_t len) {
  if (w.size() == len) {
    return true;
  }
  for (std::size_t a = 0; a < q.num_arrows(); ++a) {
    w.push_back(a);
    if (composes(q, w) && !word_is_zero(w, rels) &&
        has_nonzero_path(q, rels, w, len)) {
      w.pop_back();
      return true;
    }
    w.pop_back();
  }
  return false;
}

// Finite-dimensional iff no nonzero path longer than `bound`, where
// `bound` is at least the number of arrow words shorter than the longest
// relation (a longer nonzero path repeats such a suffix and can be pumped).
inline bool finite_by_length(const gorquiv::Quiver& q,
                             const std::vector<std::vector<std::size_t>>& rels,
                             std::size_t bound) {
  std::vector<std::size_t> w;
  return !has_nonzero_path(q, rels, w, bound + 1);
}

inline std::vector<std::vector<std::size_t>> relation_words(
    const gorquiv::MonomialPresentation& p) {
  std::vector<std::vector<std::size_t>> out;
  for (const auto& r : p.minimal_relations()) {
    out.push_back(r.arrows);
  }
  return out;
}

}  // namespace testing
