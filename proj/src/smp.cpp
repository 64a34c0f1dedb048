// subpower - finite semigroups and the subpower membership problem

#include "subpower/smp.hpp"

#include <algorithm>  // for reverse, find
#include <cstdint>    // for uint32_t, uint64_t
#include <limits>     // for numeric_limits
#include <stdexcept>  // for logic_error
#include <string>     // for to_string

#include "absl/container/flat_hash_set.h"

#include "subpower/exception.hpp"  // for InputError, BudgetExceeded
#include "subpower/words.hpp"      // for shorten_word

namespace subpower {

  namespace {
    constexpr std::uint32_t no_parent = std::numeric_limits<std::uint32_t>::max();

    // Mixed-radix encoding of a tuple as one 64-bit integer.
    struct PackedCodec {
      using key_type = std::uint64_t;
      std::size_t   n;
      std::uint64_t radix;

      static bool fits(std::size_t n, std::uint64_t radix) {
        std::uint64_t cap = 1;
        for (std::size_t i = 0; i < n; ++i) {
          if (cap > std::numeric_limits<std::uint64_t>::max() / radix) {
            return false;
          }
          cap *= radix;
        }
        return true;
      }

      key_type encode(std::span<Element const> c) const {
        key_type k = 0;
        for (std::size_t i = n; i-- > 0;) {
          k = k * radix + c[i];
        }
        return k;
      }

      void decode(key_type k, std::span<Element> out) const {
        for (std::size_t i = 0; i < n; ++i) {
          out[i] = static_cast<Element>(k % radix);
          k /= radix;
        }
      }
    };

    struct WideCodec {
      using key_type = std::vector<Element>;

      key_type encode(std::span<Element const> c) const {
        return key_type(c.begin(), c.end());
      }

      void decode(key_type const& k, std::span<Element> out) const {
        std::copy(k.begin(), k.end(), out.begin());
      }
    };

    template <typename Codec>
    ClosureResult closure_search(SmpInstance const&    inst,
                                 ClosureOptions const& options,
                                 Codec const&          codec) {
      using Key            = typename Codec::key_type;
      auto const&       S  = *inst.ambient;
      std::size_t const n  = inst.n();
      auto const&       gens = inst.generators;
      Key const         target = codec.encode(inst.target.coords);

      std::vector<Key>           states;
      std::vector<std::uint32_t> parent;
      std::vector<std::uint32_t> via;
      absl::flat_hash_set<Key>   seen;
      std::optional<std::size_t> found;

      auto discover = [&](Key key, std::uint32_t from, std::size_t gen) {
        if (seen.contains(key)) {
          return;
        }
        if (states.size() >= options.budget) {
          throw BudgetExceeded(options.budget);
        }
        seen.insert(key);
        if (!found && key == target) {
          found = states.size();
        }
        states.push_back(std::move(key));
        parent.push_back(from);
        via.push_back(static_cast<std::uint32_t>(gen));
      };
      auto done = [&] { return found && options.stop_at_target; };

      for (std::size_t g = 0; g < gens.size() && !done(); ++g) {
        discover(codec.encode(gens[g].coords), no_parent, g);
      }
      std::vector<Element> current(n), next(n);
      std::size_t          id = 0;
      for (; id < states.size() && !done(); ++id) {
        codec.decode(states[id], current);
        for (std::size_t g = 0; g < gens.size() && !done(); ++g) {
          auto const& gen = gens[g].coords;
          for (std::size_t i = 0; i < n; ++i) {
            next[i] = S.product(current[i], gen[i]);
          }
          discover(codec.encode(next), static_cast<std::uint32_t>(id), g);
        }
      }

      ClosureResult result;
      result.member       = found.has_value();
      result.closure_size = states.size();
      result.complete     = !done() || id == states.size();
      if (found) {
        Witness w;
        for (auto v = static_cast<std::uint32_t>(*found); v != no_parent;
             v      = parent[v]) {
          w.word.push_back(via[v]);
        }
        std::reverse(w.word.begin(), w.word.end());
        result.witness = std::move(w);
      }
      return result;
    }

    void require_rees_ambient(SmpInstance const&   inst,
                              ReesStructure const& R,
                              bool                 identity,
                              char const*          who) {
      if (R.adjoin_identity() != identity) {
        throw InputError(std::string(who) + ": the Rees structure must "
                         + (identity ? "" : "not ") + "have an adjoined identity");
      }
      if (!is_rees_table(R, *inst.ambient)) {
        throw InputError(std::string(who)
                         + ": the ambient semigroup is not the Rees matrix "
                           "semigroup of the given matrix");
      }
    }

    PowerTuple mul(FiniteSemigroup const& S, PowerTuple const& a, PowerTuple const& b) {
      PowerTuple c{a.coords};
      for (std::size_t i = 0; i < c.n(); ++i) {
        c.coords[i] = S.product(a.coords[i], b.coords[i]);
      }
      return c;
    }
  }  // namespace

  void SmpInstance::validate() const {
    if (!ambient) {
      throw InputError("instance has no ambient semigroup");
    }
    if (generators.empty()) {
      throw InputError("instance has no generators");
    }
    if (target.n() == 0) {
      throw InputError("instance tuples must have at least one coordinate");
    }
    validate_tuple(*ambient, target);
    for (std::size_t g = 0; g < generators.size(); ++g) {
      if (generators[g].n() != target.n()) {
        throw InputError("generator " + std::to_string(g) + " has length "
                         + std::to_string(generators[g].n()) + ", expected "
                         + std::to_string(target.n()));
      }
      validate_tuple(*ambient, generators[g]);
    }
    if (rees && !is_rees_table(*rees, *ambient)) {
      throw InputError("declared Rees structure does not match the ambient");
    }
  }

  bool operator==(SmpInstance const& x, SmpInstance const& y) {
    return (x.ambient == y.ambient
            || (x.ambient && y.ambient && *x.ambient == *y.ambient))
           && x.rees == y.rees && x.generators == y.generators
           && x.target == y.target;
  }

  ClosureResult solve_closure(SmpInstance const& inst, ClosureOptions options) {
    inst.validate();
    options.budget
        = std::min<std::size_t>(options.budget, no_parent - std::size_t(1));
    auto const radix = inst.ambient->size();
    if (PackedCodec::fits(inst.n(), radix)) {
      return closure_search(inst, options, PackedCodec{inst.n(), radix});
    }
    return closure_search(inst, options, WideCodec{});
  }

  PowerTuple evaluate_witness(SmpInstance const& inst, Witness const& w) {
    if (w.word.empty()) {
      throw InputError("witness word is empty");
    }
    for (auto g : w.word) {
      if (g >= inst.generators.size()) {
        throw InputError("witness refers to generator " + std::to_string(g)
                         + " but there are only "
                         + std::to_string(inst.generators.size()));
      }
    }
    PowerTuple x = inst.generators[w.word[0]];
    for (std::size_t k = 1; k < w.word.size(); ++k) {
      x = tuple_multiply(*inst.ambient, x, inst.generators[w.word[k]]);
    }
    return x;
  }

  bool check_witness(SmpInstance const& inst, Witness const& w) {
    return evaluate_witness(inst, w) == inst.target;
  }

  std::optional<Witness> solve_one_block_witness(SmpInstance const&   inst,
                                                 ReesStructure const& R) {
    inst.validate();
    require_rees_ambient(inst, R, false, "solve_one_block");
    auto const& block = R.block();
    if (!block) {
      throw InputError("solve_one_block: the matrix does not have one block");
    }
    auto const& S = *inst.ambient;
    auto const& A = inst.generators;
    auto const& b = inst.target;

    for (std::size_t g = 0; g < A.size(); ++g) {
      if (A[g] == b) {
        return Witness{{g}};
      }
    }

    std::vector<bool> in_cols(R.cols(), false), in_rows(R.rows(), false);
    for (auto i : block->cols) {
      in_cols[i] = true;
    }
    for (auto l : block->rows) {
      in_rows[l] = true;
    }
    Element const zero = rees_index(R, ReesElement::make_zero());
    // Coordinates where the target is nonzero play the role of the prefix
    // [m]; the order of coordinates is irrelevant to the test.
    std::vector<std::size_t> support;
    for (std::size_t i = 0; i < b.n(); ++i) {
      if (b.coords[i] != zero) {
        support.push_back(i);
      }
    }
    auto inside_block = [&](Element x) {
      if (x == zero) {
        return false;
      }
      auto e = rees_element(R, x);
      return in_cols[e.i] && in_rows[e.lambda];
    };

    std::vector<std::size_t> qualifying;
    for (std::size_t g = 0; g < A.size(); ++g) {
      bool ok = true;
      for (auto i : support) {
        ok = ok && inside_block(A[g].coords[i]);
      }
      if (ok) {
        qualifying.push_back(g);
      }
    }

    std::optional<PowerTuple> d;
    for (auto g : qualifying) {
      d = d ? mul(S, *d, A[g]) : A[g];
    }
    for (std::size_t g1 = 0; g1 < A.size(); ++g1) {
      PowerTuple left = d ? mul(S, A[g1], *d) : A[g1];
      for (std::size_t g2 = 0; g2 < A.size(); ++g2) {
        if (mul(S, left, A[g2]) == b) {
          Witness w{{g1}};
          if (d) {
            w.word.insert(w.word.end(), qualifying.begin(), qualifying.end());
          }
          w.word.push_back(g2);
          return w;
        }
      }
    }
    return std::nullopt;
  }

  bool solve_one_block(SmpInstance const& inst, ReesStructure const& R) {
    return solve_one_block_witness(inst, R).has_value();
  }

  std::optional<Witness> np_certificate(SmpInstance const&   inst,
                                        ReesStructure const& R,
                                        ClosureOptions       options) {
    inst.validate();
    require_rees_ambient(inst, R, false, "np_certificate");
    auto result = solve_closure(inst, options);
    if (!result.member) {
      return std::nullopt;
    }
    Witness shortened{shorten_word(result.witness->word)};
    if (!check_witness(inst, shortened)) {
      throw std::logic_error("np_certificate: shortened word does not "
                             "evaluate to the target");
    }
    if (shortened.word.size() < result.witness->word.size()) {
      return shortened;
    }
    return result.witness;
  }

  Witness compress_witness_one_block_identity(SmpInstance const&   inst,
                                              ReesStructure const& R,
                                              Witness const&       w) {
    inst.validate();
    require_rees_ambient(inst, R, true, "compress_witness");
    if (!R.block()) {
      throw InputError("compress_witness: the matrix does not have one block");
    }
    if (!check_witness(inst, w)) {
      throw InputError("compress_witness: the word is not a witness");
    }
    Element const one  = rees_index(R, ReesElement::make_one());
    Element const zero = rees_index(R, ReesElement::make_zero());
    auto const&   S    = *inst.ambient;
    auto const&   b    = inst.target;
    if (w.word.size() < 2) {
      return w;
    }
    if (b == constant_tuple(b.n(), one)) {
      // Only 1 * 1 = 1, so every factor is the all-identity tuple.
      return Witness{{w.word.front()}};
    }
    auto factor = [&](std::size_t pos, std::size_t i) {
      return inst.generators[w.word[pos]].coords[i];
    };
    std::size_t const k = w.word.size();
    std::vector<bool> keep(k, false);
    for (std::size_t i = 0; i < b.n(); ++i) {
      if (b.coords[i] == one) {
        continue;
      }
      if (b.coords[i] == zero) {
        // A pair l < r multiplying to 0 with only identities between them.
        std::optional<std::size_t> last;
        for (std::size_t p = 0; p < k; ++p) {
          Element x = factor(p, i);
          if (x == one) {
            continue;
          }
          if (x == zero) {
            if (p + 1 < k) {
              keep[p] = keep[p + 1] = true;
            } else {
              keep[p - 1] = keep[p] = true;
            }
            break;
          }
          if (last && S.product(factor(*last, i), x) == zero) {
            keep[*last] = keep[p] = true;
            break;
          }
          last = p;
        }
      } else {
        std::optional<std::size_t> first, last;
        for (std::size_t p = 0; p < k; ++p) {
          if (factor(p, i) != one) {
            first = first.value_or(p);
            last  = p;
          }
        }
        keep[*first] = keep[*last] = true;
      }
    }
    Witness out;
    for (std::size_t p = 0; p < k; ++p) {
      if (keep[p]) {
        out.word.push_back(w.word[p]);
      }
    }
    if (!check_witness(inst, out)) {
      throw std::logic_error("compress_witness: compressed word does not "
                             "evaluate to the target");
    }
    return out;
  }

}  // namespace subpower
