// subpower - finite semigroups and the subpower membership problem
//
// Green's relations of a finite semigroup. The R-, L- and J-classes are the
// strongly connected components of the right, left and two-sided Cayley
// graphs (edges x -> xa, x -> ax); reachability includes the empty path, so
// the ideals are computed over S^1 without materialising the identity.

#ifndef SUBPOWER_GREENS_HPP_
#define SUBPOWER_GREENS_HPP_

#include <cstddef>  // for size_t
#include <vector>   // for vector

#include "semigroup.hpp"  // for FiniteSemigroup, Element

namespace subpower {

  //! Class ids are numbered 0, 1, ... in order of their least element.
  struct GreensStructure {
    std::vector<std::size_t> r_class;
    std::vector<std::size_t> l_class;
    std::vector<std::size_t> j_class;
    std::vector<std::size_t> h_class;
    std::vector<std::size_t> d_class;  // join of R and L

    std::size_t nr_r_classes = 0;
    std::size_t nr_l_classes = 0;
    std::size_t nr_j_classes = 0;
    std::size_t nr_h_classes = 0;
    std::size_t nr_d_classes = 0;

    //! j_below[c][d] holds iff J-class c is strictly below J-class d.
    std::vector<std::vector<bool>> j_below;

    //! x <_J y
    bool j_less(Element x, Element y) const {
      return j_below[j_class[x]][j_class[y]];
    }

    //! x <=_J y
    bool j_leq(Element x, Element y) const {
      return j_class[x] == j_class[y] || j_less(x, y);
    }

    bool j_equivalent(Element x, Element y) const {
      return j_class[x] == j_class[y];
    }

    //! Sizes of the J-classes, indexed by class id.
    std::vector<std::size_t> j_class_sizes() const;
  };

  GreensStructure compute_greens(FiniteSemigroup const& S);

  //! True iff s lies in a subgroup of S, tested as s^2 J s.
  bool generates_group(FiniteSemigroup const&  S,
                       GreensStructure const& greens,
                       Element                s);
  bool generates_group(FiniteSemigroup const& S, Element s);

  //! True iff the H-class of x contains an idempotent.
  bool is_group_h_class(FiniteSemigroup const&  S,
                        GreensStructure const& greens,
                        Element                x);

}  // namespace subpower

#endif  // SUBPOWER_GREENS_HPP_
