// subpower - finite semigroups and the subpower membership problem

#include "subpower/triples.hpp"

namespace subpower {

  namespace {
    bool valid(FiniteSemigroup const& S, std::initializer_list<Element> xs) {
      for (Element x : xs) {
        if (!S.contains(x)) {
          return false;
        }
      }
      return true;
    }
  }  // namespace

  bool is_nphard_triple(FiniteSemigroup const&  S,
                        GreensStructure const& greens,
                        NpHardTriple           tr) {
    if (!valid(S, {tr.r, tr.s, tr.t})) {
      return false;
    }
    return S.product(tr.r, tr.s) == tr.s && S.product(tr.s, tr.t) == tr.s
           && !generates_group(S, greens, tr.s);
  }

  bool is_pspace_triple(FiniteSemigroup const&  S,
                        GreensStructure const& greens,
                        PspaceTriple           tr) {
    if (!valid(S, {tr.s, tr.t, tr.n})) {
      return false;
    }
    return S.product(S.product(tr.s, tr.t), tr.s) == tr.s
           && !generates_group(S, greens, tr.s)
           && S.product(tr.s, tr.n) == tr.s && S.product(tr.t, tr.n) == tr.t;
  }

  bool is_strong_pspace_triple(FiniteSemigroup const&  S,
                               GreensStructure const& greens,
                               PspaceTriple           tr) {
    if (!valid(S, {tr.s, tr.t, tr.n})) {
      return false;
    }
    auto const [s, t, n] = tr;
    return S.product(S.product(s, t), s) == s
           && S.product(S.product(t, s), t) == t
           && greens.j_less(S.product(s, s), s)
           && greens.j_less(S.product(t, t), s) && S.product(s, n) == s
           && S.product(t, n) == t;
  }

}  // namespace subpower
