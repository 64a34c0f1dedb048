// subpower - finite semigroups and the subpower membership problem
//
// Instances of the subpower membership problem: given generators a_1, ...,
// a_k and a target b in S^n, is b in the subsemigroup of S^n generated by
// the a_i? Solvers here return witnesses, i.e. words over generator indices
// whose left-to-right product is the target.

#ifndef SUBPOWER_SMP_HPP_
#define SUBPOWER_SMP_HPP_

#include <cstddef>   // for size_t
#include <memory>    // for shared_ptr
#include <optional>  // for optional
#include <vector>    // for vector

#include "rees.hpp"       // for ReesStructure
#include "semigroup.hpp"  // for FiniteSemigroup, PowerTuple

namespace subpower {

  struct SmpInstance {
    std::shared_ptr<FiniteSemigroup const> ambient;
    //! Set when the ambient is known to be build_rees(*rees).
    std::optional<ReesStructure> rees;
    std::vector<PowerTuple>      generators;
    PowerTuple                   target;

    std::size_t n() const noexcept {
      return target.n();
    }

    //! \throws InputError if there are no generators, a tuple has the wrong
    //! length or a bad coordinate, or `rees` does not describe `ambient`.
    void validate() const;
  };

  bool operator==(SmpInstance const& x, SmpInstance const& y);

  struct Witness {
    std::vector<std::size_t> word;
    bool operator==(Witness const&) const = default;
  };

  inline constexpr std::size_t default_state_budget = 20'000'000;

  struct ClosureOptions {
    std::size_t budget = default_state_budget;
    //! Stop as soon as the target is discovered. When false the whole
    //! closure is enumerated and closure_size is exact.
    bool stop_at_target = true;
  };

  struct ClosureResult {
    bool                   member = false;
    std::optional<Witness> witness;
    //! Number of distinct tuples discovered; equals |<A>| when `complete`.
    std::size_t closure_size = 0;
    bool        complete     = false;
  };

  //! Breadth-first search over <A>: states are tuples, successors are
  //! state * a for each generator a in index order. The witness is a
  //! shortest word, ties broken by the lexicographically least word.
  //!
  //! \throws BudgetExceeded if more than options.budget states are needed.
  ClosureResult solve_closure(SmpInstance const& inst, ClosureOptions options = {});

  //! Left-to-right product of the indexed generators.
  //! \throws InputError for an empty word or an invalid index.
  PowerTuple evaluate_witness(SmpInstance const& inst, Witness const& w);

  bool check_witness(SmpInstance const& inst, Witness const& w);

  //! Polynomial-time decision for S_P with P one-block, without identity.
  //! \throws InputError if the ambient is not build_rees(R), R carries an
  //! identity, or P does not have one block.
  bool solve_one_block(SmpInstance const& inst, ReesStructure const& R);

  //! As solve_one_block, also returning the witness found: [b], [a1, a2] or
  //! a1 followed by the factors of d followed by a2.
  std::optional<Witness> solve_one_block_witness(SmpInstance const&   inst,
                                                 ReesStructure const& R);

  //! For ambient S_P (no identity): if the target is a member, a witness of
  //! length at most |A|(|A|^2 + 1), obtained by shortening the closure
  //! witness; the shorter of the two is returned.
  std::optional<Witness> np_certificate(SmpInstance const&   inst,
                                        ReesStructure const& R,
                                        ClosureOptions       options = {});

  //! For ambient S_P^1 with P one-block and a valid witness w: the subword of
  //! w at the positions that fix each coordinate (a pair of factors
  //! multiplying to 0 at zero coordinates; first and last non-identity
  //! factors at the others). The result has length at most 2n. Returns w
  //! unchanged if |w| < 2 and its first factor if the target is
  //! all-identity.
  Witness compress_witness_one_block_identity(SmpInstance const&   inst,
                                              ReesStructure const& R,
                                              Witness const&       w);

}  // namespace subpower

#endif  // SUBPOWER_SMP_HPP_
