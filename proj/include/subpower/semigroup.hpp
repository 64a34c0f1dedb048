// subpower - finite semigroups and the subpower membership problem
//
// This file declares FiniteSemigroup, a semigroup given by its Cayley table
// over the dense index set {0, ..., size - 1}, together with PowerTuple (an
// element of a direct power S^n) and the elementwise structural operations.

#ifndef SUBPOWER_SEMIGROUP_HPP_
#define SUBPOWER_SEMIGROUP_HPP_

#include <array>        // for array
#include <cassert>      // for assert
#include <cstddef>      // for size_t
#include <cstdint>      // for uint32_t
#include <optional>     // for optional
#include <span>         // for span
#include <string>       // for string
#include <string_view>  // for string_view
#include <vector>       // for vector

namespace subpower {

  //! Index of an element of a FiniteSemigroup.
  using Element = std::uint32_t;

  //! Controls the O(size^3) associativity check run by the FiniteSemigroup
  //! constructor. `automatic` checks when size <= 64.
  enum class AssociativityCheck { automatic, always, never };

  class FiniteSemigroup {
   public:
    static constexpr std::size_t auto_check_limit = 64;

    //! `table` is row-major with the row being the left factor, so
    //! table[a * size + b] is the product ab. Empty `names` means the
    //! decimal indices are used as names.
    //!
    //! \throws InputError if the table has the wrong shape, contains an
    //! out-of-range entry, fails the associativity check, or if `identity`
    //! or `zero` do not behave as claimed.
    FiniteSemigroup(std::size_t                size,
                    std::vector<Element>       table,
                    std::vector<std::string>   names    = {},
                    std::optional<Element>     identity = std::nullopt,
                    std::optional<Element>     zero     = std::nullopt,
                    AssociativityCheck         check = AssociativityCheck::automatic);

    //! Builds a semigroup from a table given as rows.
    static FiniteSemigroup
    from_rows(std::vector<std::vector<Element>> const& rows,
              std::vector<std::string>                 names    = {},
              std::optional<Element>                   identity = std::nullopt,
              std::optional<Element>                   zero     = std::nullopt,
              AssociativityCheck check = AssociativityCheck::automatic);

    std::size_t size() const noexcept {
      return _size;
    }

    //! Unchecked product.
    Element product(Element a, Element b) const noexcept {
      assert(a < _size && b < _size);
      return _table[static_cast<std::size_t>(a) * _size + b];
    }

    std::span<Element const> table() const noexcept {
      return _table;
    }

    std::vector<std::string> const& names() const noexcept {
      return _names;
    }

    std::string const& name(Element x) const;

    std::optional<Element> find(std::string_view name) const;

    //! The identity and zero recorded at construction.
    std::optional<Element> identity() const noexcept {
      return _identity;
    }

    std::optional<Element> zero() const noexcept {
      return _zero;
    }

    bool contains(Element x) const noexcept {
      return x < _size;
    }

    bool operator==(FiniteSemigroup const&) const = default;

   private:
    std::size_t              _size;
    std::vector<Element>     _table;
    std::vector<std::string> _names;
    std::optional<Element>   _identity;
    std::optional<Element>   _zero;
  };

  //! Returns a triple (a, b, c) with (ab)c != a(bc), or nothing.
  std::optional<std::array<Element, 3>>
  associativity_violation(std::size_t size, std::span<Element const> table);

  //! Checked table lookup.
  //! \throws InputError if a or b is out of range.
  Element multiply(FiniteSemigroup const& S, Element a, Element b);

  //! Left-to-right product of a nonempty sequence of elements.
  Element multiply(FiniteSemigroup const& S, std::span<Element const> factors);

  //! Searches the table for a two-sided identity / zero (the first by index).
  std::optional<Element> find_identity(FiniteSemigroup const& S);
  std::optional<Element> find_zero(FiniteSemigroup const& S);

  bool is_idempotent(FiniteSemigroup const& S, Element x);

  //! The powers x, x^2, ... up to (excluding) the first repetition.
  std::vector<Element> cyclic_subsemigroup(FiniteSemigroup const& S, Element x);

  //! The unique idempotent of the cyclic subsemigroup generated by x.
  Element idempotent_power(FiniteSemigroup const& S, Element x);

  //! Returns the least u (by index) with sus = s, if any.
  std::optional<Element> is_regular(FiniteSemigroup const& S, Element s);

  //! A copy of S with a fresh identity appended as the last element, even
  //! if S already has an identity. The zero of S, if any, is kept.
  FiniteSemigroup adjoin_identity(FiniteSemigroup const& S);

  //! Componentwise product S x T. The pair (a, b) has index a * |T| + b.
  //! \throws InputError if |S| * |T| exceeds max_product_size.
  inline constexpr std::size_t max_product_size = 4096;
  FiniteSemigroup direct_product(FiniteSemigroup const& S,
                                 FiniteSemigroup const& T);

  inline Element product_pair(FiniteSemigroup const& T, Element a, Element b) {
    return static_cast<Element>(a * T.size() + b);
  }

  //! An element of the direct power S^n.
  struct PowerTuple {
    std::vector<Element> coords;

    std::size_t n() const noexcept {
      return coords.size();
    }

    bool operator==(PowerTuple const&) const = default;
  };

  //! \throws InputError if some coordinate is not an element of S.
  void validate_tuple(FiniteSemigroup const& S, PowerTuple const& a);

  //! Coordinatewise product.
  //! \throws InputError on length mismatch or invalid coordinates.
  PowerTuple tuple_multiply(FiniteSemigroup const& S,
                            PowerTuple const&      a,
                            PowerTuple const&      b);

  //! The n-tuple all of whose coordinates are x.
  PowerTuple constant_tuple(std::size_t n, Element x);

}  // namespace subpower

#endif  // SUBPOWER_SEMIGROUP_HPP_
