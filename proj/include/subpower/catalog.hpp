// subpower - finite semigroups and the subpower membership problem
//
// Named semigroups. Catalog specs are strings of the form name[:param...]:
//
//   brandt_b2, a2, brandt_b2_1, a2_1
//   full_transformation:N      (1 <= N <= 4)
//   symmetric_inverse:N        (1 <= N <= 3)
//   matrix_semigroup:2:Q       (Q in {2, 3})
//   rees:ROWS, rees_1:ROWS     (ROWS like "10/01", one digit per entry)
//   cyclic_group:N, z2         (N <= 64)
//   left_zero:N, null:N        (N <= 64)
//   rees_z2, rees_z2_1         (M[Z_2; 2, 2; (1 1; 1 c)] and with identity)

#ifndef SUBPOWER_CATALOG_HPP_
#define SUBPOWER_CATALOG_HPP_

#include <cstddef>      // for size_t
#include <cstdint>      // for uint8_t
#include <optional>     // for optional
#include <string>       // for string
#include <string_view>  // for string_view
#include <vector>       // for vector

#include "rees.hpp"       // for ReesStructure
#include "semigroup.hpp"  // for FiniteSemigroup
#include "triples.hpp"    // for PspaceTriple

namespace subpower {

  struct CatalogEntry {
    std::string                  name;
    FiniteSemigroup              semigroup;
    std::optional<ReesStructure> rees;
    //! The distinguished (s, t, n) where a standard one is known.
    std::optional<PspaceTriple> pspace_triple;
  };

  //! \throws InputError for unknown names or unsupported parameters.
  CatalogEntry catalog(std::string_view spec);

  //! Every fixed-parameter catalog spec, e.g. for enumeration in tests.
  std::vector<std::string> catalog_names();

  //! T_n, maps ordered lexicographically by their image tuple; the product
  //! fg applies f first.
  FiniteSemigroup full_transformation(std::size_t n);

  //! I_n, partial injections ordered lexicographically with "undefined"
  //! smallest; composition as in full_transformation.
  FiniteSemigroup symmetric_inverse(std::size_t n);

  //! All n x n matrices over Z_q, entries in row-major lexicographic order.
  FiniteSemigroup matrix_semigroup(std::size_t n, std::size_t q);

  FiniteSemigroup cyclic_group(std::size_t n);
  FiniteSemigroup left_zero_semigroup(std::size_t n);
  FiniteSemigroup null_semigroup(std::size_t n);

  //! Rees matrix semigroup over Z_2 without zero, on 2 x 2 with
  //! sandwich matrix (1 1; 1 c).
  FiniteSemigroup rees_over_z2();

  //! Parses "10/01" into a 0-1 matrix.
  std::vector<std::vector<std::uint8_t>> parse_matrix_rows(std::string_view s);

}  // namespace subpower

#endif  // SUBPOWER_CATALOG_HPP_
