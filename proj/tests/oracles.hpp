// subpower - finite semigroups and the subpower membership problem
//
// Brute-force reference implementations used only by the tests. None of
// these call into the library code paths they are compared against.

#ifndef SUBPOWER_TESTS_ORACLES_HPP_
#define SUBPOWER_TESTS_ORACLES_HPP_

#include <algorithm>  // for sort, includes
#include <cstddef>    // for size_t
#include <map>        // for map
#include <set>        // for set
#include <vector>     // for vector

#include "subpower/semigroup.hpp"
#include "subpower/smp.hpp"

namespace subpower::oracle {

  using ElementSet = std::set<Element>;

  // x S^1
  inline ElementSet right_ideal(FiniteSemigroup const& S, Element x) {
    ElementSet out{x};
    for (Element a = 0; a < S.size(); ++a) {
      out.insert(S.product(x, a));
    }
    return out;
  }

  // S^1 x
  inline ElementSet left_ideal(FiniteSemigroup const& S, Element x) {
    ElementSet out{x};
    for (Element a = 0; a < S.size(); ++a) {
      out.insert(S.product(a, x));
    }
    return out;
  }

  // S^1 x S^1
  inline ElementSet two_sided_ideal(FiniteSemigroup const& S, Element x) {
    ElementSet out;
    for (Element y : left_ideal(S, x)) {
      for (Element z : right_ideal(S, y)) {
        out.insert(z);
      }
    }
    return out;
  }

  // Partition of the elements by equality of the given ideal, classes
  // numbered by least element.
  template <typename Ideal>
  std::vector<std::size_t> partition_by(FiniteSemigroup const& S, Ideal ideal) {
    std::map<ElementSet, std::size_t> ids;
    std::vector<std::size_t>          out;
    for (Element x = 0; x < S.size(); ++x) {
      auto [it, _] = ids.emplace(ideal(S, x), ids.size());
      out.push_back(it->second);
    }
    return out;
  }

  inline bool same_partition(std::vector<std::size_t> const& a,
                             std::vector<std::size_t> const& b) {
    if (a.size() != b.size()) {
      return false;
    }
    for (std::size_t x = 0; x < a.size(); ++x) {
      for (std::size_t y = 0; y < a.size(); ++y) {
        if ((a[x] == a[y]) != (b[x] == b[y])) {
          return false;
        }
      }
    }
    return true;
  }

  // x <=_J y by ideal inclusion.
  inline bool j_leq(FiniteSemigroup const& S, Element x, Element y) {
    auto ix = two_sided_ideal(S, x);
    auto iy = two_sided_ideal(S, y);
    return std::includes(iy.begin(), iy.end(), ix.begin(), ix.end());
  }

  // x reappears among x^2, x^3, ...
  inline bool generates_group(FiniteSemigroup const& S, Element x) {
    Element p = x;
    for (std::size_t k = 0; k <= S.size(); ++k) {
      p = S.product(p, x);
      if (p == x) {
        return true;
      }
    }
    return false;
  }

  inline bool has_zero_divisors(FiniteSemigroup const& S, Element zero) {
    for (Element s = 0; s < S.size(); ++s) {
      for (Element t = 0; t < S.size(); ++t) {
        if (s != zero && t != zero && S.product(s, t) == zero) {
          return true;
        }
      }
    }
    return false;
  }

  inline PowerTuple mul(FiniteSemigroup const& S,
                        PowerTuple const&      a,
                        PowerTuple const&      b) {
    PowerTuple c{a.coords};
    for (std::size_t i = 0; i < a.n(); ++i) {
      c.coords[i] = S.product(a.coords[i], b.coords[i]);
    }
    return c;
  }

  // Fixed-point closure <A> computed by repeated pairwise products.
  inline std::set<std::vector<Element>> closure(SmpInstance const& inst) {
    std::set<std::vector<Element>> out;
    for (auto const& g : inst.generators) {
      out.insert(g.coords);
    }
    bool grew = true;
    while (grew) {
      grew = false;
      std::vector<std::vector<Element>> current(out.begin(), out.end());
      for (auto const& x : current) {
        for (auto const& y : current) {
          auto z = mul(*inst.ambient, PowerTuple{x}, PowerTuple{y}).coords;
          grew |= out.insert(z).second;
        }
      }
    }
    return out;
  }

  inline bool member(SmpInstance const& inst) {
    return closure(inst).count(inst.target.coords) != 0;
  }

  inline Element evaluate(FiniteSemigroup const&       S,
                          std::vector<std::size_t> const& word,
                          std::vector<Element> const&     assignment) {
    Element x = assignment[word[0]];
    for (std::size_t i = 1; i < word.size(); ++i) {
      x = S.product(x, assignment[word[i]]);
    }
    return x;
  }

}  // namespace subpower::oracle

#endif  // SUBPOWER_TESTS_ORACLES_HPP_
