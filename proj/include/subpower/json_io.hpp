// subpower - finite semigroups and the subpower membership problem
//
// JSON encodings:
//
//   semigroup  {"names": [str...], "table": [[int...]...],
//               "identity": int|null, "zero": int|null}
//   rees       {"matrix": [[0|1...]...], "adjoin_identity": bool}
//   instance   {"semigroup": <semigroup, rees or catalog name>, "n": int,
//               "generators": [[int...]...], "target": [int...]}
//   result     {"member": bool, "witness": [int...]|null, "closure_size": int}
//   verdict    {"class": str, "theorem": str, "evidence": {...}}

#ifndef SUBPOWER_JSON_IO_HPP_
#define SUBPOWER_JSON_IO_HPP_

#include <memory>    // for shared_ptr
#include <optional>  // for optional

#include "json.hpp"  // for nlohmann::json

#include "classify.hpp"   // for ComplexityVerdict
#include "rees.hpp"       // for ReesStructure
#include "semigroup.hpp"  // for FiniteSemigroup
#include "smp.hpp"        // for SmpInstance, ClosureResult
#include "triples.hpp"    // for PspaceTriple

namespace subpower {

  using json = nlohmann::json;

  json            semigroup_to_json(FiniteSemigroup const& S);
  FiniteSemigroup semigroup_from_json(json const& j);

  json          rees_to_json(ReesStructure const& R);
  ReesStructure rees_from_json(json const& j);

  //! A semigroup resolved from a catalog name, Rees JSON or semigroup JSON.
  struct Ambient {
    std::shared_ptr<FiniteSemigroup const> semigroup;
    std::optional<ReesStructure>           rees;
    std::optional<PspaceTriple>            pspace_triple;
  };

  //! \throws InputError if `j` is none of the accepted forms.
  Ambient ambient_from_json(json const& j);

  //! The semigroup is written as Rees JSON when the instance carries a Rees
  //! structure and as semigroup JSON otherwise.
  json        instance_to_json(SmpInstance const& inst);
  SmpInstance instance_from_json(json const& j);

  json closure_result_to_json(ClosureResult const& r);

  //! Evidence elements are written by name.
  json verdict_to_json(FiniteSemigroup const& S, ComplexityVerdict const& v);

}  // namespace subpower

#endif  // SUBPOWER_JSON_IO_HPP_
