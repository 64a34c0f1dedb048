// subpower - finite semigroups and the subpower membership problem
//
// Combinatorial Rees matrix semigroups S_P over a 0-1 matrix P indexed by
// Lambda x I, optionally with an adjoined identity.
//
// Element layout of build_rees: the pairs [i, lambda] in row-major (i, lambda)
// order, i.e. [i, lambda] has index i * rows() + lambda, then 0, then 1 (if
// the identity is adjoined). Indices are 0-based internally; names are
// 1-based, e.g. "[1,2]".

#ifndef SUBPOWER_REES_HPP_
#define SUBPOWER_REES_HPP_

#include <cstddef>   // for size_t
#include <cstdint>   // for uint8_t
#include <optional>  // for optional
#include <span>      // for span
#include <string>    // for string
#include <vector>    // for vector

#include "semigroup.hpp"  // for FiniteSemigroup, Element

namespace subpower {

  //! The rectangle Delta x J carrying the 1-entries of a one-block matrix.
  struct Block {
    std::vector<std::size_t> cols;  // J, a subset of I
    std::vector<std::size_t> rows;  // Delta, a subset of Lambda
    bool operator==(Block const&) const = default;
  };

  //! A pattern showing that P does not have one block:
  //! P(lambda, i) = P(mu, j) = 1 and P(mu, i) = 0.
  struct BlockViolation {
    std::size_t i, j, lambda, mu;
    bool        operator==(BlockViolation const&) const = default;
  };

  class ReesStructure {
   public:
    //! matrix[lambda][i] = P(lambda, i).
    //! \throws InputError if the matrix is empty, ragged or not 0-1.
    explicit ReesStructure(std::vector<std::vector<std::uint8_t>> matrix,
                           bool adjoin_identity = false);

    std::size_t rows() const noexcept {
      return _matrix.size();
    }

    std::size_t cols() const noexcept {
      return _matrix.front().size();
    }

    bool entry(std::size_t lambda, std::size_t i) const {
      return _matrix[lambda][i] != 0;
    }

    std::vector<std::vector<std::uint8_t>> const& matrix() const noexcept {
      return _matrix;
    }

    bool adjoin_identity() const noexcept {
      return _adjoin_identity;
    }

    std::optional<Block> const& block() const noexcept {
      return _block;
    }

    ReesStructure with_identity(bool flag) const {
      return ReesStructure(_matrix, flag);
    }

    bool all_ones() const;
    bool has_zero_entry() const;

    bool operator==(ReesStructure const& that) const {
      return _matrix == that._matrix
             && _adjoin_identity == that._adjoin_identity;
    }

   private:
    std::vector<std::vector<std::uint8_t>> _matrix;
    bool                                   _adjoin_identity;
    std::optional<Block>                   _block;
  };

  struct ReesElement {
    enum class Kind { pair, zero, one };

    Kind        kind   = Kind::zero;
    std::size_t i      = 0;
    std::size_t lambda = 0;

    static ReesElement make_pair(std::size_t i, std::size_t lambda) {
      return {Kind::pair, i, lambda};
    }
    static ReesElement make_zero() {
      return {Kind::zero, 0, 0};
    }
    static ReesElement make_one() {
      return {Kind::one, 0, 0};
    }

    bool operator==(ReesElement const&) const = default;
  };

  FiniteSemigroup build_rees(ReesStructure const& R);

  //! Number of elements of build_rees(R).
  std::size_t rees_size(ReesStructure const& R);

  Element     rees_index(ReesStructure const& R, ReesElement x);
  ReesElement rees_element(ReesStructure const& R, Element x);
  std::string rees_name(ReesStructure const& R, ReesElement x);

  //! Returns (J, Delta) iff the 1-entries of P form the rectangle Delta x J.
  std::optional<Block> one_block(ReesStructure const& R);

  //! The first violating pattern (scanning zero entries (mu, i) in row-major
  //! order), or nothing iff P has one block.
  std::optional<BlockViolation> block_violation(ReesStructure const& R);

  //! Every row and every column of P contains a 1.
  bool is_zero_simple_matrix(ReesStructure const& R);

  //! Some entry of P is 0. For 0-simple matrices this is equivalent to S_P
  //! having zero divisors.
  bool has_zero_divisors(ReesStructure const& R);

  ReesElement rees_multiply(ReesStructure const& R, ReesElement a, ReesElement b);

  //! O(k) product: 0 iff some adjacent pair of non-identity factors
  //! multiplies to 0, otherwise [first i, last lambda].
  ReesElement rees_product(ReesStructure const&      R,
                           std::span<ReesElement const> factors);

  //! True iff `S` is exactly build_rees(R).
  bool is_rees_table(ReesStructure const& R, FiniteSemigroup const& S);

}  // namespace subpower

#endif  // SUBPOWER_REES_HPP_
