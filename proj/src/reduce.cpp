// subpower - finite semigroups and the subpower membership problem

#include "subpower/reduce.hpp"

#include <algorithm>  // for find, fill_n
#include <cstdlib>    // for abs
#include <stdexcept>  // for logic_error
#include <string>     // for to_string

#include "subpower/classify.hpp"   // for hardness_idempotents
#include "subpower/exception.hpp"  // for InputError
#include "subpower/greens.hpp"     // for compute_greens

namespace subpower {

  namespace {
    bool contains(std::vector<Literal> const& clause, Literal l) {
      return std::find(clause.begin(), clause.end(), l) != clause.end();
    }
  }  // namespace

  SmpInstance sat_to_smp(std::shared_ptr<FiniteSemigroup const> S,
                         NpHardTriple                           triple,
                         CnfFormula const&                      f) {
    if (!S) {
      throw InputError("sat_to_smp: no semigroup");
    }
    f.validate();
    if (f.var_count == 0) {
      throw InputError("sat_to_smp: the formula has no variables");
    }
    auto const [e, fi, g] = hardness_idempotents(*S, triple);
    std::size_t const k = f.var_count, m = f.clauses.size();

    SmpInstance inst;
    inst.ambient = S;
    inst.generators.resize(2 * k);
    for (std::size_t z = 0; z < 2; ++z) {
      for (std::size_t j = 0; j < k; ++j) {
        auto& coords = inst.generators[z * k + j].coords;
        coords.resize(k + m);
        for (std::size_t i = 0; i < k; ++i) {
          coords[i] = i < j ? fi : i == j ? triple.s : e;
        }
        auto const lit = static_cast<Literal>(z == 1 ? j + 1 : -(j + 1));
        for (std::size_t i = 0; i < m; ++i) {
          coords[k + i] = contains(f.clauses[i], lit) ? g : e;
        }
      }
    }
    inst.target.coords.assign(k + m, g);
    std::fill_n(inst.target.coords.begin(), k, triple.s);
    return inst;
  }

  Witness sat_witness(CnfFormula const& f, std::vector<bool> const& assignment) {
    if (assignment.size() < f.var_count) {
      throw InputError("sat_witness: the assignment is too short");
    }
    Witness w;
    for (std::size_t j = 0; j < f.var_count; ++j) {
      w.word.push_back(assignment[j] ? f.var_count + j : j);
    }
    return w;
  }

  LiftedSquare pair_lift(FiniteSemigroup const& S, PspaceTriple triple) {
    if (!is_pspace_triple(S, compute_greens(S), triple)) {
      throw InputError("pair_lift: need sts = s, s not generating a group, "
                       "sn = s and tn = t");
    }
    auto const [s, t, n] = triple;
    Element const tst    = S.product(S.product(t, s), t);
    auto square = std::make_shared<FiniteSemigroup const>(direct_product(S, S));
    PspaceTriple lifted{product_pair(S, s, tst),
                        product_pair(S, tst, s),
                        product_pair(S, n, n)};
    if (!is_strong_pspace_triple(*square, compute_greens(*square), lifted)) {
      throw std::logic_error("pair_lift: lifted triple is not strong");
    }
    return LiftedSquare{std::move(square), lifted};
  }

  Q3SatReduction q3sat_to_smp(std::shared_ptr<FiniteSemigroup const> S,
                              PspaceTriple                           triple,
                              Q3SatFormula const&                    f,
                              LiftMode                               mode) {
    if (!S) {
      throw InputError("q3sat_to_smp: no semigroup");
    }
    f.validate();
    auto const greens = compute_greens(*S);
    bool const strong = is_strong_pspace_triple(*S, greens, triple);
    bool       lift   = mode == LiftMode::always;
    if (mode == LiftMode::never && !strong) {
      throw InputError("q3sat_to_smp: without lifting the triple needs "
                       "sts = s, tst = t, s^2 and t^2 J-below s, sn = s, "
                       "tn = t");
    }
    if (mode == LiftMode::automatic && !strong) {
      lift = true;
    }
    Q3SatReduction out;
    out.triple = triple;
    out.lifted = lift;
    if (lift) {
      auto lifted = pair_lift(*S, triple);  // re-checks the weak conditions
      S           = lifted.square;
      out.triple  = lifted.triple;
    }

    auto const& T = *S;
    auto const [s, t, n] = out.triple;
    Element const st = T.product(s, t), ts = T.product(t, s);
    std::size_t const nn = f.n, m = f.clauses.size();
    Q3SatLayout const layout{nn, m};
    std::size_t const len  = layout.length();
    std::size_t const last = len - 1;

    std::vector<PowerTuple> G(layout.nr_generators(),
                              constant_tuple(len, n));
    G[layout.a()] = constant_tuple(len, s);
    for (std::size_t j = 0; j < nn; ++j) {
      auto& b = G[layout.b(j)].coords;
      b[j]    = t;
      for (std::size_t i = j + 1; i < nn; ++i) {
        b[i] = s;
      }
      for (std::size_t i = 0; i < nn + m; ++i) {
        b[2 * nn + i] = i < j ? st : s;
      }
      b[last] = ts;

      for (auto c : {layout.c_plus(j), layout.c_minus(j), layout.c_zero(j)}) {
        G[c].coords[2 * nn + j] = t;
        G[c].coords[last]       = ts;
      }
      G[layout.c_plus(j)].coords[nn + j]  = t;
      G[layout.c_minus(j)].coords[nn + j] = s;

      auto& e = G[layout.e(j)].coords;
      for (std::size_t i = 0; i < nn; ++i) {
        e[i] = st;
      }
      e[nn + j] = t;
      for (std::size_t i = 0; i < m; ++i) {
        e[3 * nn + i] = st;
      }
      e[last] = ts;
    }
    for (std::size_t j = 0; j < m; ++j) {
      for (std::size_t k = 0; k < 3; ++k) {
        auto&         d   = G[layout.d(j, k)].coords;
        Literal const lit = f.clauses[j][k];
        // x_v sits at position v - 1 and y_v at n + v - 1, as literals do.
        d[static_cast<std::size_t>(std::abs(lit)) - 1] = lit > 0 ? st : ts;
        for (std::size_t i = 0; i < nn; ++i) {
          d[2 * nn + i] = st;
        }
        d[3 * nn + j] = t;
        d[last]       = ts;
      }
    }

    out.instance.ambient    = S;
    out.instance.generators = std::move(G);
    out.instance.target     = constant_tuple(len, st);
    out.instance.target.coords[last] = s;
    return out;
  }

}  // namespace subpower
