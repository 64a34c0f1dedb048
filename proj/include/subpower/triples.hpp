// subpower - finite semigroups and the subpower membership problem
//
// Element triples that certify hardness of the subpower membership problem,
// and their verification by direct multiplication.

#ifndef SUBPOWER_TRIPLES_HPP_
#define SUBPOWER_TRIPLES_HPP_

#include "greens.hpp"     // for GreensStructure
#include "semigroup.hpp"  // for FiniteSemigroup, Element

namespace subpower {

  //! rs = st = s and s does not generate a group (NP-hardness).
  struct NpHardTriple {
    Element r, s, t;
    bool    operator==(NpHardTriple const&) const = default;
  };

  //! sts = s, s does not generate a group, sn = s and tn = t
  //! (PSPACE-completeness).
  struct PspaceTriple {
    Element s, t, n;
    bool    operator==(PspaceTriple const&) const = default;
  };

  bool is_nphard_triple(FiniteSemigroup const&  S,
                        GreensStructure const& greens,
                        NpHardTriple           triple);

  bool is_pspace_triple(FiniteSemigroup const&  S,
                        GreensStructure const& greens,
                        PspaceTriple           triple);

  //! The stronger hypotheses used directly by the Q3SAT construction:
  //! sts = s, tst = t, s^2 <_J s, t^2 <_J s, sn = s, tn = t.
  bool is_strong_pspace_triple(FiniteSemigroup const&  S,
                               GreensStructure const& greens,
                               PspaceTriple           triple);

}  // namespace subpower

#endif  // SUBPOWER_TRIPLES_HPP_
