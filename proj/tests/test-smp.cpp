// subpower - finite semigroups and the subpower membership problem

#include <memory>  // for make_shared
#include <random>  // for mt19937

#include "catch_amalgamated.hpp"

#include "oracles.hpp"

#include "subpower/catalog.hpp"
#include "subpower/exception.hpp"
#include "subpower/smp.hpp"
#include "subpower/words.hpp"

namespace subpower {

  namespace {
    using Matrix = std::vector<std::vector<std::uint8_t>>;

    SmpInstance make(ReesStructure const&                             R,
                     std::vector<std::vector<std::string>> const& gens,
                     std::vector<std::string> const&                  target) {
      SmpInstance inst;
      inst.ambient = std::make_shared<FiniteSemigroup const>(build_rees(R));
      inst.rees    = R;
      auto tuple   = [&](std::vector<std::string> const& names) {
        PowerTuple t;
        for (auto const& name : names) {
          t.coords.push_back(*inst.ambient->find(name));
        }
        return t;
      };
      for (auto const& g : gens) {
        inst.generators.push_back(tuple(g));
      }
      inst.target = tuple(target);
      return inst;
    }

    SmpInstance random_instance(std::mt19937&        rng,
                                ReesStructure const& R,
                                std::size_t          n,
                                std::size_t          nr_gens) {
      SmpInstance inst;
      inst.ambient = std::make_shared<FiniteSemigroup const>(build_rees(R));
      inst.rees    = R;
      auto size    = inst.ambient->size();
      auto random_tuple = [&] {
        PowerTuple t;
        for (std::size_t i = 0; i < n; ++i) {
          t.coords.push_back(static_cast<Element>(rng() % size));
        }
        return t;
      };
      for (std::size_t g = 0; g < nr_gens; ++g) {
        inst.generators.push_back(random_tuple());
      }
      inst.target = random_tuple();
      return inst;
    }

    // Random one-block matrix: a random rectangle of ones.
    ReesStructure random_one_block(std::mt19937& rng, bool identity) {
      std::size_t rows = 1 + rng() % 3, cols = 1 + rng() % 3;
      Matrix      m(rows, std::vector<std::uint8_t>(cols, 0));
      std::vector<bool> rs(rows), cs(cols);
      for (auto&& r : rs) {
        r = rng() % 3 != 0;
      }
      for (auto&& c : cs) {
        c = rng() % 3 != 0;
      }
      for (std::size_t l = 0; l < rows; ++l) {
        for (std::size_t i = 0; i < cols; ++i) {
          m[l][i] = rs[l] && cs[i];
        }
      }
      return ReesStructure(m, identity);
    }
  }  // namespace

  TEST_CASE("smp 001: closure search basics", "[smp]") {
    ReesStructure R({{1, 0}, {0, 0}});
    auto inst = make(R, {{"[1,1]", "[1,2]"}}, {"[1,1]", "[1,2]"});
    auto res  = solve_closure(inst);
    CHECK(res.member);
    CHECK(res.witness == Witness{{0}});

    inst.target = make(R, {{"[1,1]", "0"}}, {"[1,1]", "0"}).target;
    res         = solve_closure(inst);
    CHECK(res.member);
    CHECK(res.witness == Witness{{0, 0}});

    inst.target = make(R, {{"[1,2]", "0"}}, {"[1,2]", "0"}).target;
    res         = solve_closure(inst);
    CHECK(!res.member);
    CHECK(!res.witness.has_value());
    CHECK(res.closure_size == 2);
    CHECK(res.complete);
  }

  TEST_CASE("smp 002: witnesses are shortest with the least index word",
            "[smp]") {
    ReesStructure R({{1, 1}, {1, 1}});
    // a0 a1 and a3 a1 both reach the target.
    auto inst = make(R,
                     {{"[1,2]", "[2,2]"},
                      {"[2,1]", "[1,1]"},
                      {"[2,2]", "[2,2]"},
                      {"[1,1]", "[2,2]"}},
                     {"[1,1]", "[2,1]"});
    auto res = solve_closure(inst);
    REQUIRE(res.member);
    CHECK(res.witness == Witness{{0, 1}});
    CHECK(check_witness(inst, *res.witness));
  }

  TEST_CASE("smp 003: budgets", "[smp]") {
    auto S = std::make_shared<FiniteSemigroup const>(catalog("full_transformation:3").semigroup);
    SmpInstance inst;
    inst.ambient = S;
    for (Element g = 0; g < 5; ++g) {
      inst.generators.push_back(PowerTuple{{g, static_cast<Element>(26 - g), 13}});
    }
    inst.target = PowerTuple{{5, 5, 5}};
    CHECK_THROWS_AS(solve_closure(inst, ClosureOptions{10}), BudgetExceeded);
    auto full = solve_closure(inst, ClosureOptions{1000000, false});
    CHECK(full.complete);
    CHECK(full.closure_size <= 27 * 27 * 27);
    CHECK(full.closure_size > 10);
    try {
      solve_closure(inst, ClosureOptions{3});
    } catch (BudgetExceeded const& e) {
      CHECK(e.budget() == 3);
      CHECK(std::string(e.what()).find("budget exceeded") != std::string::npos);
    }
  }

  TEST_CASE("smp 004: invalid instances and witnesses", "[smp]") {
    ReesStructure R(Matrix{{1}});
    auto inst = make(R, {{"[1,1]", "0"}}, {"[1,1]", "0"});
    CHECK_THROWS_AS(check_witness(inst, Witness{{1}}), InputError);
    CHECK_THROWS_AS(check_witness(inst, Witness{}), InputError);
    CHECK(check_witness(inst, Witness{{0, 0}}));
    auto bad = inst;
    bad.generators.push_back(PowerTuple{{0}});
    CHECK_THROWS_AS(bad.validate(), InputError);
    bad = inst;
    bad.generators.clear();
    CHECK_THROWS_AS(solve_closure(bad), InputError);
    bad = inst;
    bad.target.coords[0] = 9;
    CHECK_THROWS_AS(solve_closure(bad), InputError);
  }

  TEST_CASE("smp 005: closure search agrees with the fixed-point oracle",
            "[smp][property]") {
    std::mt19937 rng(42);
    for (int trial = 0; trial < 200; ++trial) {
      auto name = std::vector<std::string>{"brandt_b2", "a2", "brandt_b2_1", "z2",
                                           "symmetric_inverse:2"}[rng() % 5];
      auto S = std::make_shared<FiniteSemigroup const>(catalog(name).semigroup);
      SmpInstance inst;
      inst.ambient = S;
      std::size_t n = 1 + rng() % 3, k = 1 + rng() % 3;
      for (std::size_t g = 0; g <= k; ++g) {
        PowerTuple t;
        for (std::size_t i = 0; i < n; ++i) {
          t.coords.push_back(static_cast<Element>(rng() % S->size()));
        }
        (g < k ? inst.generators.emplace_back() : inst.target) = t;
      }
      auto res = solve_closure(inst);
      CHECK(res.member == oracle::member(inst));
      if (res.witness) {
        CHECK(check_witness(inst, *res.witness));
      }
      auto all = solve_closure(inst, ClosureOptions{default_state_budget, false});
      CHECK(all.closure_size == oracle::closure(inst).size());
      CHECK(all.member == res.member);
      if (res.witness) {
        CHECK(all.witness == res.witness);
      }
    }
  }

  TEST_CASE("smp 006: wide states beyond 64-bit packing", "[smp]") {
    auto S = std::make_shared<FiniteSemigroup const>(catalog("brandt_b2").semigroup);
    SmpInstance inst;
    inst.ambient = S;
    // 5^28 does not fit in 64 bits.
    inst.generators.push_back(constant_tuple(28, 0));
    inst.generators.push_back(constant_tuple(28, 1));
    inst.target = constant_tuple(28, 4);
    auto res = solve_closure(inst);
    REQUIRE(res.member);
    CHECK(res.witness == Witness{{1, 0}});
  }

  TEST_CASE("smp 007: the one-block solver on the worked example", "[smp]") {
    ReesStructure R({{1, 0}, {0, 0}});
    auto inst = make(R, {{"[1,1]", "[1,2]"}}, {"[1,1]", "0"});
    CHECK(solve_one_block(inst, R));
    auto w = solve_one_block_witness(inst, R);
    REQUIRE(w.has_value());
    CHECK(check_witness(inst, *w));
    inst.target = make(R, {{"[1,2]", "0"}}, {"[1,2]", "0"}).target;
    CHECK(!solve_one_block(inst, R));
    inst.target = inst.generators[0];
    CHECK(solve_one_block_witness(inst, R) == Witness{{0}});
  }

  TEST_CASE("smp 008: the one-block solver rejects unsuitable ambients", "[smp]") {
    ReesStructure B({{1, 0}, {0, 1}});
    auto inst = make(B, {{"[1,1]"}}, {"[1,1]"});
    CHECK_THROWS_AS(solve_one_block(inst, B), InputError);
    ReesStructure P(Matrix{{1}});
    CHECK_THROWS_AS(solve_one_block(inst, P), InputError);
    ReesStructure P1({{1}}, true);
    auto inst1 = make(P1, {{"[1,1]"}}, {"1"});
    CHECK_THROWS_AS(solve_one_block(inst1, P1), InputError);
  }

  TEST_CASE("smp 009: one-block solver agrees with closure search",
            "[smp][property]") {
    std::mt19937 rng(2026);
    for (int trial = 0; trial < 500; ++trial) {
      auto R    = random_one_block(rng, false);
      auto inst = random_instance(rng, R, 1 + rng() % 4, 1 + rng() % 4);
      if (rng() % 2 == 0) {
        // Make members common: the target is a random product.
        Witness w;
        for (std::size_t k = 0, len = 1 + rng() % 5; k < len; ++k) {
          w.word.push_back(rng() % inst.generators.size());
        }
        inst.target = evaluate_witness(inst, w);
      }
      auto const fast = solve_one_block_witness(inst, R);
      auto const slow = solve_closure(inst);
      CHECK(fast.has_value() == slow.member);
      if (fast) {
        CHECK(check_witness(inst, *fast));
      }
    }
  }

  TEST_CASE("smp 010: certificates from shortened witnesses", "[smp][property]") {
    std::mt19937 rng(5);
    ReesStructure B({{1, 0}, {0, 1}});
    for (int trial = 0; trial < 200; ++trial) {
      auto inst = random_instance(rng, B, 1 + rng() % 3, 1 + rng() % 4);
      auto cert = np_certificate(inst, B);
      auto res  = solve_closure(inst);
      CHECK(cert.has_value() == res.member);
      if (cert) {
        auto k = inst.generators.size();
        CHECK(check_witness(inst, *cert));
        CHECK(cert->word.size() <= shortened_length_bound(k));
        CHECK(cert->word.size() <= res.witness->word.size());
      }
    }
    CHECK_THROWS_AS(np_certificate(make(B, {{"0"}}, {"0"}), ReesStructure(Matrix{{1}})),
                    InputError);
  }

  TEST_CASE("smp 011: witness compression with an identity", "[smp]") {
    ReesStructure R({{1}}, true);
    auto inst = make(R, {{"[1,1]", "1"}, {"1", "1"}}, {"[1,1]", "1"});
    Witness w{{0, 1, 1, 0}};
    REQUIRE(check_witness(inst, w));
    CHECK(compress_witness_one_block_identity(inst, R, w) == Witness{{0, 0}});
    CHECK(compress_witness_one_block_identity(inst, R, Witness{{0}}) == Witness{{0}});
    CHECK_THROWS_AS(compress_witness_one_block_identity(inst, R, Witness{{1}}), InputError);
    ReesStructure B({{1, 0}, {0, 1}}, true);
    auto instB = make(B, {{"[1,1]"}}, {"[1,1]"});
    CHECK_THROWS_AS(compress_witness_one_block_identity(instB, B, Witness{{0}}),
                    InputError);
  }

  TEST_CASE("smp 012: compressed witnesses are short and valid",
            "[smp][property]") {
    std::mt19937 rng(99);
    int          members = 0;
    for (int trial = 0; trial < 300; ++trial) {
      auto R    = random_one_block(rng, true);
      auto inst = random_instance(rng, R, 1 + rng() % 4, 1 + rng() % 4);
      Witness w;
      for (std::size_t k = 0, len = 1 + rng() % 12; k < len; ++k) {
        w.word.push_back(rng() % inst.generators.size());
      }
      inst.target = evaluate_witness(inst, w);
      auto c      = compress_witness_one_block_identity(inst, R, w);
      CHECK(check_witness(inst, c));
      CHECK(c.word.size() <= 2 * inst.n());
      CHECK(c.word.size() <= w.word.size());
      ++members;
    }
    CHECK(members == 300);
  }

}  // namespace subpower
