// subpower - finite semigroups and the subpower membership problem

#include "subpower/words.hpp"

#include <algorithm>  // for includes
#include <set>        // for set

#include "subpower/exception.hpp"  // for InputError

namespace subpower {

  namespace {
    using Edges = std::set<std::pair<Letter, Letter>>;

    // Adds the 2-grams of prefix + [begin, end) where `prefix` is the letter
    // preceding the range.
    void add_edges(Edges&                    edges,
                   Letter                    prefix,
                   Word::const_iterator      begin,
                   Word::const_iterator      end) {
      Letter prev = prefix;
      for (auto it = begin; it != end; ++it) {
        edges.emplace(prev, *it);
        prev = *it;
      }
    }

    bool adds_new_edge(Edges const&         edges,
                       Letter               prefix,
                       Word::const_iterator begin,
                       Word::const_iterator end) {
      Letter prev = prefix;
      for (auto it = begin; it != end; ++it) {
        if (edges.count({prev, *it}) == 0) {
          return true;
        }
        prev = *it;
      }
      return false;
    }

    // One pass of the reduction for the letter x.
    Word reduce_letter(Word const& f, Letter x) {
      std::vector<std::size_t> pos;
      for (std::size_t p = 0; p < f.size(); ++p) {
        if (f[p] == x) {
          pos.push_back(p);
        }
      }
      if (pos.size() < 2) {
        return f;
      }
      // v_1 = f[0 .. pos[0]], v_r = f[pos[r-2]+1 .. pos[r-1]] for r = 2..m,
      // v_{m+1} = f[pos[m-1]+1 ..].
      Word  g(f.begin(), f.begin() + pos[0] + 1);
      Edges prefix;
      add_edges(prefix, f[0], f.begin() + 1, f.begin() + pos[0] + 1);
      for (std::size_t r = 1; r < pos.size(); ++r) {
        auto begin = f.begin() + pos[r - 1] + 1;
        auto end   = f.begin() + pos[r] + 1;
        if (adds_new_edge(prefix, x, begin, end)) {
          g.insert(g.end(), begin, end);
        }
        add_edges(prefix, x, begin, end);
      }
      g.insert(g.end(), f.begin() + pos.back() + 1, f.end());
      return g;
    }
  }  // namespace

  WordEdgeSet edge_set(Word const& word) {
    if (word.empty()) {
      throw InputError("edge_set: empty word");
    }
    WordEdgeSet out{word.front(), word.back(), {}};
    add_edges(out.edges, word.front(), word.begin() + 1, word.end());
    return out;
  }

  bool words_equivalent_rees(Word const& f, Word const& g) {
    if (f.empty() || g.empty()) {
      throw InputError("words_equivalent_rees: empty word");
    }
    return edge_set(f) == edge_set(g);
  }

  std::size_t distinct_letters(Word const& w) {
    return std::set<Letter>(w.begin(), w.end()).size();
  }

  Word shorten_word(Word const& f) {
    if (f.empty()) {
      throw InputError("shorten_word: empty word");
    }
    Word g = f;
    for (Letter x : std::set<Letter>(f.begin(), f.end())) {
      g = reduce_letter(g, x);
    }
    return g;
  }

}  // namespace subpower
