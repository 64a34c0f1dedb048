// subpower - finite semigroups and the subpower membership problem
//
// Complexity classification of the subpower membership problem. Every
// verdict carries evidence that verify_verdict re-checks by multiplication.

#ifndef SUBPOWER_CLASSIFY_HPP_
#define SUBPOWER_CLASSIFY_HPP_

#include <optional>     // for optional
#include <string>       // for string
#include <string_view>  // for string_view
#include <utility>      // for pair
#include <vector>       // for vector

#include "greens.hpp"     // for GreensStructure
#include "rees.hpp"       // for ReesStructure, Block, BlockViolation
#include "semigroup.hpp"  // for FiniteSemigroup, Element
#include "triples.hpp"    // for NpHardTriple, PspaceTriple

namespace subpower {

  enum class Complexity {
    ptime,
    np_complete,
    pspace_complete,
    np_hard_in_pspace,
    in_pspace_unknown
  };

  std::string_view           to_string(Complexity c);
  std::optional<Complexity>  complexity_from_string(std::string_view s);

  //! Identifiers of the results a verdict rests on.
  namespace basis {
    inline constexpr std::string_view rees_one_block = "rees-one-block-ptime";
    inline constexpr std::string_view rees_not_one_block
        = "rees-not-one-block-np-complete";
    inline constexpr std::string_view rees1_regular_band
        = "rees-identity-regular-band-ptime";
    inline constexpr std::string_view rees1_one_block_with_zero
        = "rees-identity-one-block-np-complete";
    inline constexpr std::string_view rees1_not_one_block
        = "rees-identity-not-one-block-pspace-complete";
    inline constexpr std::string_view pspace_triple = "pspace-triple";
    inline constexpr std::string_view monoid_mixed_j_class
        = "monoid-mixed-j-class";
    inline constexpr std::string_view nphard_triple  = "np-hardness-triple";
    inline constexpr std::string_view mixed_j_class  = "mixed-j-class";
    inline constexpr std::string_view pspace_upper_bound = "pspace-upper-bound";
  }  // namespace basis

  struct Evidence {
    //! Named elements, e.g. {"r", 0}, {"s", 1}, {"t", 3}.
    std::vector<std::pair<std::string, Element>> elements;
    std::optional<Block>                         block;
    std::optional<BlockViolation>                violation;
    bool                                         regular_band = false;

    std::optional<Element> element(std::string_view name) const;
  };

  struct ComplexityVerdict {
    Complexity  klass;
    std::string theorem;
    Evidence    evidence;
  };

  struct HardnessIdempotents {
    Element e, f, g;
    bool    operator==(HardnessIdempotents const&) const = default;
  };

  //! First (r, s, t) in lexicographic index order with s non-group and
  //! rs = st = s.
  std::optional<NpHardTriple> find_nphard_triple(FiniteSemigroup const& S);
  std::optional<NpHardTriple> find_nphard_triple(FiniteSemigroup const&  S,
                                                 GreensStructure const& greens);

  //! \throws InputError unless rs = st = s with s non-group.
  HardnessIdempotents hardness_idempotents(FiniteSemigroup const& S,
                                           NpHardTriple           triple);

  //! First (s, t, n) in lexicographic index order with sts = s, s non-group,
  //! sn = s and tn = t.
  std::optional<PspaceTriple> find_pspace_triple(FiniteSemigroup const& S);
  std::optional<PspaceTriple> find_pspace_triple(FiniteSemigroup const&  S,
                                                 GreensStructure const& greens);

  //! First s whose H-class is not a group while its J-class contains an
  //! idempotent.
  std::optional<Element> mixed_jclass(FiniteSemigroup const&  S,
                                      GreensStructure const& greens);
  std::optional<Element> mixed_jclass(FiniteSemigroup const& S);

  //! Idempotent and satisfying xyxzx = xyzx.
  bool is_regular_band(FiniteSemigroup const& S);

  //! \throws InputError if R has an adjoined identity.
  ComplexityVerdict classify_rees(ReesStructure const& R);

  //! \throws InputError if R has no adjoined identity.
  ComplexityVerdict classify_rees_identity(ReesStructure const& R);

  //! Bounds only: PSPACE_COMPLETE, NP_HARD_IN_PSPACE or IN_PSPACE_UNKNOWN.
  ComplexityVerdict classify_general(FiniteSemigroup const& S);

  //! Re-checks the element evidence of `verdict` against S. Verdicts with
  //! block or violation evidence need the matrix and are rejected here.
  bool verify_verdict(FiniteSemigroup const& S, ComplexityVerdict const& verdict);

  //! As above, and also checks block or violation evidence against the
  //! matrix of R.
  bool verify_verdict(ReesStructure const& R, ComplexityVerdict const& verdict);

}  // namespace subpower

#endif  // SUBPOWER_CLASSIFY_HPP_
