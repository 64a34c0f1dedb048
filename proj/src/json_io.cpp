// subpower - finite semigroups and the subpower membership problem

#include "subpower/json_io.hpp"

#include <string>  // for string, to_string

#include "subpower/catalog.hpp"    // for catalog
#include "subpower/exception.hpp"  // for InputError

namespace subpower {

  namespace {
    json const& field(json const& j, char const* key) {
      if (!j.is_object() || !j.contains(key)) {
        throw InputError(std::string("missing JSON field \"") + key + "\"");
      }
      return j.at(key);
    }

    template <typename T>
    T get(json const& j, char const* what) {
      try {
        return j.get<T>();
      } catch (json::exception const& e) {
        throw InputError(std::string("invalid JSON for ") + what + ": " + e.what());
      }
    }

    std::optional<Element> optional_element(json const& j, char const* key) {
      if (!j.contains(key) || j.at(key).is_null()) {
        return std::nullopt;
      }
      return get<Element>(j.at(key), key);
    }

    json optional_to_json(std::optional<Element> x) {
      return x ? json(*x) : json(nullptr);
    }

    PowerTuple tuple_from_json(json const& j, char const* what) {
      return PowerTuple{get<std::vector<Element>>(j, what)};
    }

    std::vector<std::size_t> one_based(std::vector<std::size_t> v) {
      for (auto& x : v) {
        ++x;
      }
      return v;
    }
  }  // namespace

  json semigroup_to_json(FiniteSemigroup const& S) {
    json rows = json::array();
    for (Element a = 0; a < S.size(); ++a) {
      json row = json::array();
      for (Element b = 0; b < S.size(); ++b) {
        row.push_back(S.product(a, b));
      }
      rows.push_back(std::move(row));
    }
    return json{{"names", S.names()},
                {"table", std::move(rows)},
                {"identity", optional_to_json(S.identity())},
                {"zero", optional_to_json(S.zero())}};
  }

  FiniteSemigroup semigroup_from_json(json const& j) {
    auto rows = get<std::vector<std::vector<Element>>>(field(j, "table"), "table");
    std::vector<std::string> names;
    if (j.contains("names") && !j.at("names").is_null()) {
      names = get<std::vector<std::string>>(j.at("names"), "names");
    }
    return FiniteSemigroup::from_rows(rows,
                                      std::move(names),
                                      optional_element(j, "identity"),
                                      optional_element(j, "zero"));
  }

  json rees_to_json(ReesStructure const& R) {
    json rows = json::array();
    for (auto const& row : R.matrix()) {
      json r = json::array();
      for (auto x : row) {
        r.push_back(static_cast<int>(x));
      }
      rows.push_back(std::move(r));
    }
    return json{{"matrix", std::move(rows)},
                {"adjoin_identity", R.adjoin_identity()}};
  }

  ReesStructure rees_from_json(json const& j) {
    auto rows = get<std::vector<std::vector<int>>>(field(j, "matrix"), "matrix");
    std::vector<std::vector<std::uint8_t>> matrix;
    for (auto const& row : rows) {
      std::vector<std::uint8_t> r;
      for (int x : row) {
        if (x != 0 && x != 1) {
          throw InputError("Rees matrix entries must be 0 or 1, got "
                           + std::to_string(x));
        }
        r.push_back(static_cast<std::uint8_t>(x));
      }
      matrix.push_back(std::move(r));
    }
    bool identity = false;
    if (j.contains("adjoin_identity")) {
      identity = get<bool>(j.at("adjoin_identity"), "adjoin_identity");
    }
    return ReesStructure(std::move(matrix), identity);
  }

  Ambient ambient_from_json(json const& j) {
    Ambient out;
    if (j.is_string()) {
      auto entry    = catalog(j.get<std::string>());
      out.semigroup = std::make_shared<FiniteSemigroup const>(
          std::move(entry.semigroup));
      out.rees          = std::move(entry.rees);
      out.pspace_triple = entry.pspace_triple;
    } else if (j.is_object() && j.contains("matrix")) {
      out.rees      = rees_from_json(j);
      out.semigroup = std::make_shared<FiniteSemigroup const>(build_rees(*out.rees));
    } else if (j.is_object()) {
      out.semigroup
          = std::make_shared<FiniteSemigroup const>(semigroup_from_json(j));
    } else {
      throw InputError("a semigroup must be a catalog name, a Rees matrix "
                       "object or a table object");
    }
    return out;
  }

  json instance_to_json(SmpInstance const& inst) {
    json gens = json::array();
    for (auto const& g : inst.generators) {
      gens.push_back(g.coords);
    }
    return json{{"semigroup",
                 inst.rees ? rees_to_json(*inst.rees)
                           : semigroup_to_json(*inst.ambient)},
                {"n", inst.n()},
                {"generators", std::move(gens)},
                {"target", inst.target.coords}};
  }

  SmpInstance instance_from_json(json const& j) {
    auto        ambient = ambient_from_json(field(j, "semigroup"));
    SmpInstance inst;
    inst.ambient = std::move(ambient.semigroup);
    inst.rees    = std::move(ambient.rees);
    for (auto const& g : get<std::vector<json>>(field(j, "generators"), "generators")) {
      inst.generators.push_back(tuple_from_json(g, "generator"));
    }
    inst.target = tuple_from_json(field(j, "target"), "target");
    if (j.contains("n")) {
      auto n = get<std::size_t>(j.at("n"), "n");
      if (n != inst.target.n()) {
        throw InputError("instance declares n = " + std::to_string(n)
                         + " but the target has length "
                         + std::to_string(inst.target.n()));
      }
    }
    inst.validate();
    return inst;
  }

  json closure_result_to_json(ClosureResult const& r) {
    return json{{"member", r.member},
                {"witness", r.witness ? json(r.witness->word) : json(nullptr)},
                {"closure_size", r.closure_size}};
  }

  json verdict_to_json(FiniteSemigroup const& S, ComplexityVerdict const& v) {
    json ev = json::object();
    for (auto const& [key, x] : v.evidence.elements) {
      ev[key] = json{{"index", x}, {"name", S.name(x)}};
    }
    if (v.evidence.block) {
      ev["block"] = json{{"I", one_based(v.evidence.block->cols)},
                         {"Lambda", one_based(v.evidence.block->rows)}};
    }
    if (auto const& bv = v.evidence.violation) {
      ev["violation"] = json{
          {"i", bv->i + 1}, {"j", bv->j + 1}, {"lambda", bv->lambda + 1}, {"mu", bv->mu + 1}};
    }
    if (v.evidence.regular_band) {
      ev["regular_band"] = true;
    }
    return json{{"class", std::string(to_string(v.klass))},
                {"theorem", v.theorem},
                {"evidence", std::move(ev)}};
  }

}  // namespace subpower
