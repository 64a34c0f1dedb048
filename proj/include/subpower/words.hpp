// subpower - finite semigroups and the subpower membership problem
//
// Words over a finite alphabet and the identities satisfied by every
// combinatorial Rees matrix semigroup: two words with the same first letter,
// the same last letter and the same set of adjacent 2-grams evaluate equally.

#ifndef SUBPOWER_WORDS_HPP_
#define SUBPOWER_WORDS_HPP_

#include <cstddef>  // for size_t
#include <set>      // for set
#include <utility>  // for pair
#include <vector>   // for vector

namespace subpower {

  using Letter = std::size_t;
  using Word   = std::vector<Letter>;

  struct WordEdgeSet {
    Letter                             first;
    Letter                             last;
    std::set<std::pair<Letter, Letter>> edges;

    bool operator==(WordEdgeSet const&) const = default;
  };

  //! \throws InputError if `word` is empty.
  WordEdgeSet edge_set(Word const& word);

  //! Equal endpoints and equal 2-gram sets. Sufficient for the two words to
  //! agree in every combinatorial Rees matrix semigroup.
  bool words_equivalent_rees(Word const& f, Word const& g);

  //! For each letter x in ascending order, splits the current word after
  //! every occurrence of x and drops each interior segment whose 2-grams
  //! (read after the preceding x) are already present in the prefix. The
  //! result is equivalent to `f` and has length at most k(k^2 + 1), where k
  //! is the number of distinct letters of `f`.
  Word shorten_word(Word const& f);

  //! k(k^2 + 1)
  constexpr std::size_t shortened_length_bound(std::size_t k) noexcept {
    return k * (k * k + 1);
  }

  std::size_t distinct_letters(Word const& w);

}  // namespace subpower

#endif  // SUBPOWER_WORDS_HPP_
