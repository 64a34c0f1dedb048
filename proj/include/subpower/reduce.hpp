// subpower - finite semigroups and the subpower membership problem
//
// Hardness reductions to the subpower membership problem: SAT via an
// NP-hardness triple (r, s, t), and Q3SAT via a PSPACE triple (s, t, n). The
// brute-force evaluators for the source problems live here too.
//
// Literals are signed integers. In a CNF, v and -v are x_v and not x_v. In a
// Q3SAT formula with n variable pairs, |v| <= n is the universal x_|v| and
// n < |v| <= 2n is the existential y_(|v| - n).

#ifndef SUBPOWER_REDUCE_HPP_
#define SUBPOWER_REDUCE_HPP_

#include <array>     // for array
#include <cstddef>   // for size_t
#include <iosfwd>    // for istream, ostream
#include <memory>    // for shared_ptr
#include <optional>  // for optional
#include <span>      // for span
#include <vector>    // for vector

#include "semigroup.hpp"  // for FiniteSemigroup
#include "smp.hpp"        // for SmpInstance, Witness
#include "triples.hpp"    // for NpHardTriple, PspaceTriple

namespace subpower {

  using Literal = int;

  struct CnfFormula {
    std::size_t                       var_count = 0;
    std::vector<std::vector<Literal>> clauses;

    //! \throws InputError for out-of-range or zero literals, empty clauses,
    //! or a variable occurring in no clause.
    void validate() const;
    bool operator==(CnfFormula const&) const = default;
  };

  struct Q3SatFormula {
    std::size_t                         n = 0;
    std::vector<std::array<Literal, 3>> clauses;

    //! \throws InputError for out-of-range or zero literals or n == 0.
    void validate() const;
    bool operator==(Q3SatFormula const&) const = default;
  };

  //! DIMACS "p cnf" input; comment lines start with 'c'. With `validate`
  //! off, variables occurring in no clause are accepted.
  CnfFormula parse_dimacs(std::istream& in, bool validate = true);
  void       write_dimacs(std::ostream& out, CnfFormula const& f);

  //! "q3sat n m" followed by m lines of three literals.
  Q3SatFormula parse_q3sat(std::istream& in);
  void         write_q3sat(std::ostream& out, Q3SatFormula const& f);

  //! assignment[v - 1] is the value of x_v.
  bool eval_cnf(CnfFormula const& f, std::vector<bool> const& assignment);

  //! A satisfying assignment (least in binary counting order), if any.
  std::optional<std::vector<bool>> brute_force_sat(CnfFormula const& f);

  //! Evaluates forall x_1 exists y_1 ... forall x_n exists y_n by game-tree
  //! search.
  bool eval_q3sat(Q3SatFormula const& f);

  //! Drops the variables that occur in no clause and renumbers the rest.
  //! `dropped` lists the removed (original, 1-based) variables.
  struct NormalizedCnf {
    CnfFormula               formula;
    std::vector<std::size_t> dropped;
  };
  NormalizedCnf normalize_cnf(CnfFormula const& f);

  enum class Quantifier { forall, exists };

  //! Pads an arbitrary quantifier prefix to strict forall/exists alternation
  //! with dummy variables that occur in no clause. Literals of `clauses`
  //! refer to prefix positions (1-based).
  Q3SatFormula balance_prefix(std::span<Quantifier const>                 prefix,
                              std::vector<std::array<Literal, 3>> const& clauses);

  //! The SAT reduction over S^(k+m): 2k generators a_j^0 (indices 0..k-1)
  //! and a_j^1 (indices k..2k-1), target (s, ..., s, g, ..., g).
  //! \throws InputError if the triple does not re-verify or the formula is
  //! invalid.
  SmpInstance sat_to_smp(std::shared_ptr<FiniteSemigroup const> S,
                         NpHardTriple                           triple,
                         CnfFormula const&                      f);

  //! The witness a_1^{z_1} ... a_k^{z_k} for an assignment z.
  Witness sat_witness(CnfFormula const& f, std::vector<bool> const& assignment);

  struct LiftedSquare {
    std::shared_ptr<FiniteSemigroup const> square;
    PspaceTriple                           triple;
  };

  //! S x S with s' = (s, tst), t' = (tst, s), n' = (n, n). The lifted triple
  //! satisfies is_strong_pspace_triple.
  //! \throws InputError if (s, t, n) is not a PSPACE triple.
  LiftedSquare pair_lift(FiniteSemigroup const& S, PspaceTriple triple);

  enum class LiftMode {
    automatic,  // lift only when the triple is not strong
    always,
    never
  };

  struct Q3SatReduction {
    SmpInstance  instance;
    PspaceTriple triple;  // the triple used, in the ambient of `instance`
    bool         lifted = false;
  };

  //! Positions of the generators in a Q3SAT reduction instance. All indices
  //! j, k are 0-based.
  struct Q3SatLayout {
    std::size_t n, m;

    std::size_t a() const noexcept {
      return 0;
    }
    std::size_t b(std::size_t j) const noexcept {
      return 1 + j;
    }
    std::size_t c_plus(std::size_t j) const noexcept {
      return 1 + n + j;
    }
    std::size_t c_minus(std::size_t j) const noexcept {
      return 1 + 2 * n + j;
    }
    std::size_t c_zero(std::size_t j) const noexcept {
      return 1 + 3 * n + j;
    }
    std::size_t d(std::size_t j, std::size_t k) const noexcept {
      return 1 + 4 * n + 3 * j + k;
    }
    std::size_t e(std::size_t j) const noexcept {
      return 1 + 4 * n + 3 * m + j;
    }
    std::size_t nr_generators() const noexcept {
      return 1 + 5 * n + 3 * m;
    }
    std::size_t length() const noexcept {
      return 3 * n + m + 1;
    }
  };

  //! The Q3SAT reduction over S^(3n+m+1) (or (S x S)^(3n+m+1) when lifted).
  //! \throws InputError if the triple does not satisfy the conditions
  //! required by `mode`, or the formula is invalid.
  Q3SatReduction q3sat_to_smp(std::shared_ptr<FiniteSemigroup const> S,
                              PspaceTriple                           triple,
                              Q3SatFormula const&                    f,
                              LiftMode mode = LiftMode::automatic);

  //! The explicit product for a true formula: a run through all universal
  //! assignments in lexicographic order, existential values chosen by a
  //! winning strategy, followed by the closing e_j. Nothing if f is false.
  std::optional<Witness> q3sat_witness(Q3SatFormula const& f);

}  // namespace subpower

#endif  // SUBPOWER_REDUCE_HPP_
