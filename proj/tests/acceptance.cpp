// subpower - finite semigroups and the subpower membership problem
//
// Prints one PASS/FAIL line per acceptance criterion; exits nonzero if any
// criterion fails.

#include <algorithm>   // for find
#include <array>       // for array
#include <chrono>      // for steady_clock, duration
#include <cstdio>      // for printf
#include <functional>  // for function
#include <memory>      // for make_shared
#include <random>      // for mt19937
#include <string>      // for string
#include <vector>      // for vector

#include "oracles.hpp"

#include "subpower/catalog.hpp"
#include "subpower/classify.hpp"
#include "subpower/greens.hpp"
#include "subpower/reduce.hpp"
#include "subpower/rees.hpp"
#include "subpower/smp.hpp"
#include "subpower/triples.hpp"
#include "subpower/words.hpp"

namespace subpower {
  namespace {

    using Matrix = std::vector<std::vector<std::uint8_t>>;

    // Failure count and a description of the first failure.
    struct Tally {
      std::size_t checked = 0, failed = 0;
      std::string first;

      void check(bool ok, std::string const& what) {
        ++checked;
        if (!ok && failed++ == 0) {
          first = what;
        }
      }
    };

    PowerTuple random_tuple(std::mt19937& rng, std::size_t size, std::size_t n) {
      PowerTuple t;
      for (std::size_t i = 0; i < n; ++i) {
        t.coords.push_back(static_cast<Element>(rng() % size));
      }
      return t;
    }

    // Every tuple in S^n, in lexicographic order.
    std::vector<PowerTuple> all_tuples(std::size_t size, std::size_t n) {
      std::vector<PowerTuple> out{PowerTuple{}};
      for (std::size_t i = 0; i < n; ++i) {
        std::vector<PowerTuple> next;
        for (auto const& t : out) {
          for (Element x = 0; x < size; ++x) {
            auto u = t;
            u.coords.push_back(x);
            next.push_back(u);
          }
        }
        out = std::move(next);
      }
      return out;
    }

    ReesStructure random_one_block(std::mt19937& rng, bool identity) {
      std::size_t       rows = 1 + rng() % 3, cols = 1 + rng() % 3;
      std::vector<bool> rs(rows), cs(cols);
      for (auto&& r : rs) {
        r = rng() % 3 != 0;
      }
      for (auto&& c : cs) {
        c = rng() % 3 != 0;
      }
      Matrix m(rows, std::vector<std::uint8_t>(cols, 0));
      for (std::size_t l = 0; l < rows; ++l) {
        for (std::size_t i = 0; i < cols; ++i) {
          m[l][i] = rs[l] && cs[i];
        }
      }
      return ReesStructure(m, identity);
    }

    SmpInstance rees_instance(ReesStructure const& R) {
      SmpInstance inst;
      inst.ambient = std::make_shared<FiniteSemigroup const>(build_rees(R));
      inst.rees    = R;
      return inst;
    }

    std::string describe(SmpInstance const& inst) {
      std::string s = "generators";
      for (auto const& g : inst.generators) {
        s += " (";
        for (auto x : g.coords) {
          s += " " + inst.ambient->name(x);
        }
        s += " )";
      }
      s += " target (";
      for (auto x : inst.target.coords) {
        s += " " + inst.ambient->name(x);
      }
      return s + " )";
    }

    Tally one_block_equivalence() {
      Tally t;
      auto  agree = [&](SmpInstance const& inst) {
        bool fast = solve_one_block(inst, *inst.rees);
        t.check(fast == solve_closure(inst).member, describe(inst));
      };
      for (unsigned bits = 0; bits < 16; ++bits) {
        ReesStructure R({{std::uint8_t(bits & 1), std::uint8_t(bits >> 1 & 1)},
                         {std::uint8_t(bits >> 2 & 1), std::uint8_t(bits >> 3 & 1)}});
        if (!R.block()) {
          continue;
        }
        auto inst = rees_instance(R);
        auto size = inst.ambient->size();
        for (std::size_t n = 1; n <= 2; ++n) {
          auto tuples = all_tuples(size, n);
          for (auto const& b : tuples) {
            inst.target = b;
            for (std::size_t g1 = 0; g1 < tuples.size(); ++g1) {
              inst.generators = {tuples[g1]};
              agree(inst);
              for (std::size_t g2 = g1 + 1; g2 < tuples.size(); ++g2) {
                inst.generators = {tuples[g1], tuples[g2]};
                agree(inst);
              }
            }
          }
        }
      }
      std::mt19937 rng(1);
      for (int trial = 0; trial < 2000; ++trial) {
        auto inst = rees_instance(random_one_block(rng, false));
        auto size = inst.ambient->size();
        auto n    = 1 + rng() % 4;
        auto k    = 1 + rng() % 4;
        for (std::size_t g = 0; g < k; ++g) {
          inst.generators.push_back(random_tuple(rng, size, n));
        }
        inst.target = random_tuple(rng, size, n);
        agree(inst);
      }
      return t;
    }

    // Every clause over the literals of k variables with 1 or 2 literals,
    // as sorted literal lists.
    std::vector<std::vector<Literal>> small_clauses(std::size_t k) {
      std::vector<Literal> lits;
      for (std::size_t v = 1; v <= k; ++v) {
        lits.push_back(static_cast<Literal>(v));
        lits.push_back(-static_cast<Literal>(v));
      }
      std::vector<std::vector<Literal>> out;
      for (std::size_t a = 0; a < lits.size(); ++a) {
        out.push_back({lits[a]});
        for (std::size_t b = a + 1; b < lits.size(); ++b) {
          out.push_back({lits[a], lits[b]});
        }
      }
      return out;
    }

    bool every_variable_occurs(CnfFormula const& f) {
      std::vector<bool> seen(f.var_count, false);
      for (auto const& c : f.clauses) {
        for (auto l : c) {
          seen[static_cast<std::size_t>(l < 0 ? -l : l) - 1] = true;
        }
      }
      return std::find(seen.begin(), seen.end(), false) == seen.end();
    }

    Tally sat_equivalence() {
      Tally t;
      auto  B  = std::make_shared<FiniteSemigroup const>(catalog("brandt_b2").semigroup);
      NpHardTriple triple{*B->find("[1,1]"), *B->find("[1,2]"), *B->find("[2,2]")};
      for (std::size_t k = 1; k <= 3; ++k) {
        auto clauses = small_clauses(k);
        std::vector<CnfFormula> formulas;
        for (std::size_t a = 0; a < clauses.size(); ++a) {
          formulas.push_back({k, {clauses[a]}});
          for (std::size_t b = a; b < clauses.size(); ++b) {
            formulas.push_back({k, {clauses[a], clauses[b]}});
          }
        }
        for (auto const& f : formulas) {
          if (!every_variable_occurs(f)) {
            continue;
          }
          bool sat    = brute_force_sat(f).has_value();
          bool member = solve_closure(sat_to_smp(B, triple, f)).member;
          t.check(sat == member, "k = " + std::to_string(k) + ", m = "
                                     + std::to_string(f.clauses.size()));
        }
      }
      return t;
    }

    Tally q3sat_equivalence() {
      Tally t;
      auto  B = std::make_shared<FiniteSemigroup const>(catalog("brandt_b2_1").semigroup);
      PspaceTriple triple{*B->find("[1,2]"), *B->find("[2,1]"), *B->find("1")};
      std::vector<Literal>                lits{1, -1, 2, -2};
      std::vector<std::array<Literal, 3>> clauses;
      for (std::size_t a = 0; a < 4; ++a) {
        for (std::size_t b = a; b < 4; ++b) {
          for (std::size_t c = b; c < 4; ++c) {
            clauses.push_back({lits[a], lits[b], lits[c]});
          }
        }
      }
      auto run = [&](Q3SatFormula const& f) {
        auto red    = q3sat_to_smp(B, triple, f, LiftMode::never);
        bool member = solve_closure(red.instance).member;
        bool truth  = eval_q3sat(f);
        t.check(truth == member, "n = " + std::to_string(f.n) + ", m = "
                                     + std::to_string(f.clauses.size()));
        if (auto w = q3sat_witness(f)) {
          t.check(check_witness(red.instance, *w), "explicit witness");
        }
      };
      for (std::size_t a = 0; a < clauses.size(); ++a) {
        run({1, {clauses[a]}});
        for (std::size_t b = a; b < clauses.size(); ++b) {
          run({1, {clauses[a], clauses[b]}});
        }
      }
      run({2, {{1, 3, 4}}});
      run({2, {{2, 2, 2}}});
      return t;
    }

    Tally word_shortening() {
      Tally        t;
      std::mt19937 rng(3);
      auto         B = catalog("brandt_b2").semigroup;
      auto         A = catalog("a2").semigroup;
      for (int trial = 0; trial < 1000; ++trial) {
        std::size_t k   = 1 + rng() % 4;
        std::size_t len = 1 + rng() % 60;
        Word        f;
        for (std::size_t i = 0; i < len; ++i) {
          f.push_back(rng() % k);
        }
        auto g = shorten_word(f);
        t.check(g.size() <= shortened_length_bound(distinct_letters(f)), "length bound");
        t.check(words_equivalent_rees(f, g), "edge sets");
        for (auto const* S : {&B, &A}) {
          for (int a = 0; a < 100; ++a) {
            std::vector<Element> assignment;
            for (std::size_t x = 0; x < k; ++x) {
              assignment.push_back(static_cast<Element>(rng() % S->size()));
            }
            t.check(oracle::evaluate(*S, f, assignment) == oracle::evaluate(*S, g, assignment),
                    "evaluation");
          }
        }
      }
      return t;
    }

    Tally witness_compression() {
      Tally        t;
      std::mt19937 rng(4);
      std::size_t  instances = 0;
      while (instances < 500) {
        auto R = random_one_block(rng, true);
        auto inst = rees_instance(R);
        auto size = inst.ambient->size();
        auto n    = 1 + rng() % 4;
        auto k    = 1 + rng() % 4;
        for (std::size_t g = 0; g < k; ++g) {
          inst.generators.push_back(random_tuple(rng, size, n));
        }
        Witness w;
        auto    len = 1 + rng() % 12;
        for (std::size_t i = 0; i < len; ++i) {
          w.word.push_back(rng() % k);
        }
        inst.target = evaluate_witness(inst, w);
        ++instances;
        for (auto const& word : {w, *solve_closure(inst).witness}) {
          auto c = compress_witness_one_block_identity(inst, R, word);
          t.check(c.word.size() <= 2 * n, describe(inst));
          t.check(check_witness(inst, c), describe(inst));
        }
      }
      return t;
    }

    Tally classification_table() {
      Tally t;
      auto  expect = [&](std::string const& what, ComplexityVerdict const& v,
                        Complexity want, bool verified) {
        t.check(v.klass == want && verified,
                what + " -> " + std::string(to_string(v.klass)));
      };
      auto rees = [&](std::string const& what, ReesStructure const& R, Complexity want) {
        auto v = R.adjoin_identity() ? classify_rees_identity(R) : classify_rees(R);
        expect(what, v, want, verify_verdict(R, v));
      };
      auto general = [&](std::string const& spec, Complexity want) {
        auto S = catalog(spec).semigroup;
        auto v = classify_general(S);
        expect(spec, v, want, verify_verdict(S, v));
      };
      Matrix identity{{1, 0}, {0, 1}}, a2{{1, 1}, {1, 0}}, ones{{1, 1}, {1, 1}};
      rees("B2", ReesStructure(identity), Complexity::np_complete);
      rees("A2", ReesStructure(a2), Complexity::np_complete);
      rees("B2^1", ReesStructure(identity, true), Complexity::pspace_complete);
      rees("A2^1", ReesStructure(a2, true), Complexity::pspace_complete);
      rees("all-ones S_P", ReesStructure(ones), Complexity::ptime);
      rees("all-ones S_P^1", ReesStructure(ones, true), Complexity::ptime);
      rees("one-block with zero, S_P^1", ReesStructure({{1, 0}, {0, 0}}, true),
           Complexity::np_complete);
      general("full_transformation:3", Complexity::pspace_complete);
      general("symmetric_inverse:2", Complexity::pspace_complete);
      general("matrix_semigroup:2:2", Complexity::pspace_complete);
      general("z2", Complexity::in_pspace_unknown);
      return t;
    }

    Tally structural_suite() {
      Tally        t;
      std::mt19937 rng(7);
      for (auto const& name : catalog_names()) {
        auto S = catalog(name).semigroup;
        t.check(!associativity_violation(S.size(), S.table()), name + ": associativity");
        auto G = compute_greens(S);
        t.check(oracle::same_partition(G.d_class, G.j_class), name + ": D = J");
        for (Element x = 0; x < S.size(); ++x) {
          t.check(generates_group(S, G, x) == oracle::generates_group(S, x),
                  name + ": group generation");
          for (Element y = 0; y < S.size(); ++y) {
            bool h = G.r_class[x] == G.r_class[y] && G.l_class[x] == G.l_class[y];
            t.check((G.h_class[x] == G.h_class[y]) == h, name + ": H = L meet R");
          }
        }
        auto triple = find_nphard_triple(S);
        if (!triple) {
          continue;
        }
        auto    idem = hardness_idempotents(S, *triple);
        Element s    = triple->s;
        t.check(S.product(idem.e, s) == s && S.product(s, idem.f) == s,
                name + ": es = sf = s");
        std::array<Element, 3> letters{s, idem.e, idem.f};
        for (int trial = 0; trial < 10000; ++trial) {
          std::size_t          len = 2 + rng() % 11;
          std::vector<Element> w;
          for (std::size_t i = 0; i < len; ++i) {
            w.push_back(letters[rng() % 3]);
          }
          std::size_t p = rng() % len, q = rng() % (len - 1);
          w[p] = s;
          w[q < p ? q : q + 1] = s;
          t.check(multiply(S, w) != s, name + ": product in s, e, f equals s");
        }
      }
      return t;
    }

    struct Criterion {
      char const*            name;
      double                 limit_seconds;  // 0 for no limit
      std::function<Tally()> run;
    };

  }  // namespace
}  // namespace subpower

int main() {
  using namespace subpower;
  std::vector<Criterion> criteria{
      {"one-block solver agrees with closure search", 30, one_block_equivalence},
      {"SAT reduction equivalence", 60, sat_equivalence},
      {"Q3SAT reduction equivalence", 120, q3sat_equivalence},
      {"word shortening", 10, word_shortening},
      {"witness compression", 0, witness_compression},
      {"classification table", 0, classification_table},
      {"structural suite", 60, structural_suite},
  };
  int failures = 0;
  for (std::size_t c = 0; c < criteria.size(); ++c) {
    auto const& crit  = criteria[c];
    auto        start = std::chrono::steady_clock::now();
    Tally       tally;
    std::string error;
    try {
      tally = crit.run();
    } catch (std::exception const& e) {
      error = e.what();
    }
    std::chrono::duration<double> elapsed = std::chrono::steady_clock::now() - start;
    bool in_time = crit.limit_seconds == 0 || elapsed.count() < crit.limit_seconds;
    bool ok      = error.empty() && tally.failed == 0 && in_time;
    std::printf("%s %zu %s: %zu checks, %zu failed, %.2f s", ok ? "PASS" : "FAIL",
                c + 1, crit.name, tally.checked, tally.failed, elapsed.count());
    if (!error.empty()) {
      std::printf(" (exception: %s)", error.c_str());
    } else if (tally.failed != 0) {
      std::printf(" (first: %s)", tally.first.c_str());
    } else if (!in_time) {
      std::printf(" (limit %.0f s)", crit.limit_seconds);
    }
    std::printf("\n");
    failures += ok ? 0 : 1;
  }
  return failures == 0 ? 0 : 1;
}
