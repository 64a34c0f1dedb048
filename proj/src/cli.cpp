// subpower - finite semigroups and the subpower membership problem

#include "subpower/cli.hpp"

#include <charconv>    // for from_chars
#include <filesystem>  // for exists
#include <fstream>     // for ifstream, ofstream
#include <iostream>    // for ostream
#include <memory>      // for make_shared
#include <sstream>     // for ostringstream
#include <stdexcept>   // for exception

#include "CLI11.hpp"

#include "subpower/catalog.hpp"    // for catalog_names
#include "subpower/classify.hpp"   // for classify_*
#include "subpower/exception.hpp"  // for InputError, BudgetExceeded
#include "subpower/greens.hpp"     // for compute_greens
#include "subpower/json_io.hpp"    // for json, ambient_from_json
#include "subpower/reduce.hpp"     // for sat_to_smp, q3sat_to_smp
#include "subpower/smp.hpp"        // for solve_closure
#include "subpower/words.hpp"      // for shorten_word

namespace subpower {

  namespace {
    struct Config {
      std::string              input;
      std::string              out_path;
      std::string              semigroup;
      std::vector<std::string> triple;
      std::string              lift = "auto";
      std::size_t              budget    = default_state_budget;
      std::size_t              k         = 0;
      std::vector<std::size_t> word;
      bool                     json      = false;
      bool                     verify    = false;
      bool                     normalize = false;
    };

    json read_json_file(std::string const& path) {
      std::ifstream in(path);
      if (!in) {
        throw InputError("cannot open \"" + path + "\"");
      }
      try {
        return json::parse(in);
      } catch (json::parse_error const& e) {
        throw InputError("\"" + path + "\" is not valid JSON: " + e.what());
      }
    }

    std::ifstream open_input(std::string const& path) {
      std::ifstream in(path);
      if (!in) {
        throw InputError("cannot open \"" + path + "\"");
      }
      return in;
    }

    // A catalog spec, or a path to a semigroup or Rees JSON file.
    Ambient load_ambient(std::string const& arg) {
      if (std::filesystem::exists(arg)) {
        return ambient_from_json(read_json_file(arg));
      }
      return ambient_from_json(json(arg));
    }

    Element parse_element(FiniteSemigroup const& S, std::string const& text) {
      if (auto x = S.find(text)) {
        return *x;
      }
      Element x{};
      auto [end, ec] = std::from_chars(text.data(), text.data() + text.size(), x);
      if (ec != std::errc() || end != text.data() + text.size() || !S.contains(x)) {
        throw InputError("\"" + text + "\" is neither an element name nor an "
                         "element index");
      }
      return x;
    }

    // Sends `text` to --out when given, else to `out`.
    void emit(Config const& cfg, std::ostream& out, std::string const& text) {
      if (cfg.out_path.empty()) {
        out << text;
        return;
      }
      std::ofstream file(cfg.out_path);
      if (!file || !(file << text)) {
        throw InputError("cannot write \"" + cfg.out_path + "\"");
      }
    }

    std::string join(std::vector<std::size_t> const& xs, std::size_t offset = 0) {
      std::string s;
      for (auto x : xs) {
        s += (s.empty() ? "" : " ") + std::to_string(x + offset);
      }
      return s;
    }

    int cmd_solve(Config const& cfg, std::ostream& out, std::ostream& err) {
      auto inst = instance_from_json(read_json_file(cfg.input));
      bool const one_block
          = inst.rees && !inst.rees->adjoin_identity() && inst.rees->block();
      ClosureResult result;
      if (one_block) {
        auto w         = solve_one_block_witness(inst, *inst.rees);
        result.member  = w.has_value();
        result.witness = std::move(w);
      } else {
        result = solve_closure(inst, ClosureOptions{cfg.budget});
      }
      if (cfg.verify) {
        if (result.witness && !check_witness(inst, *result.witness)) {
          err << "error: the witness does not evaluate to the target\n";
          return exit_error;
        }
        if (one_block) {
          auto check = solve_closure(inst, ClosureOptions{cfg.budget});
          if (check.member != result.member) {
            err << "error: one-block solver and closure search disagree\n";
            return exit_error;
          }
        }
      }
      std::ostringstream text;
      if (cfg.json) {
        auto j = closure_result_to_json(result);
        j["solver"] = one_block ? "one_block" : "closure";
        text << j.dump(2) << '\n';
      } else {
        text << "member: " << (result.member ? "yes" : "no") << '\n';
        if (result.witness) {
          text << "witness: " << join(result.witness->word) << '\n';
        }
        text << "solver: " << (one_block ? "one_block" : "closure") << '\n';
        if (!one_block) {
          text << "closure_size: " << result.closure_size << '\n';
        }
      }
      emit(cfg, out, text.str());
      return result.member ? exit_member : exit_non_member;
    }

    int cmd_classify(Config const& cfg, std::ostream& out, std::ostream& err) {
      auto const        amb = load_ambient(cfg.input);
      ComplexityVerdict v   = !amb.rees                    ? classify_general(*amb.semigroup)
                              : amb.rees->adjoin_identity() ? classify_rees_identity(*amb.rees)
                                                            : classify_rees(*amb.rees);
      if (cfg.verify) {
        bool ok = amb.rees ? verify_verdict(*amb.rees, v)
                           : verify_verdict(*amb.semigroup, v);
        if (!ok) {
          err << "error: the verdict evidence does not re-verify\n";
          return exit_error;
        }
      }
      auto               j = verdict_to_json(*amb.semigroup, v);
      std::ostringstream text;
      if (cfg.json) {
        text << j.dump(2) << '\n';
      } else {
        text << "class: " << to_string(v.klass) << '\n'
             << "basis: " << v.theorem << '\n';
        for (auto const& [key, x] : v.evidence.elements) {
          text << key << ": " << amb.semigroup->name(x) << '\n';
        }
        if (v.evidence.block) {
          text << "block: I = {" << join(v.evidence.block->cols, 1)
               << "}, Lambda = {" << join(v.evidence.block->rows, 1) << "}\n";
        }
        if (auto const& bv = v.evidence.violation) {
          text << "violation: P(" << bv->lambda + 1 << "," << bv->i + 1
               << ") = P(" << bv->mu + 1 << "," << bv->j + 1 << ") = 1, P("
               << bv->mu + 1 << "," << bv->i + 1 << ") = 0\n";
        }
        if (v.evidence.regular_band) {
          text << "regular band: yes\n";
        }
      }
      emit(cfg, out, text.str());
      return 0;
    }

    // Where a verification report goes: stdout is taken by the instance
    // unless --out is given.
    std::ostream& report_stream(Config const& cfg, std::ostream& out, std::ostream& err) {
      return cfg.out_path.empty() ? err : out;
    }

    int cmd_reduce_sat(Config const& cfg, std::ostream& out, std::ostream& err) {
      auto in = open_input(cfg.input);
      auto f  = parse_dimacs(in, !cfg.normalize);
      if (cfg.normalize) {
        auto norm = normalize_cnf(f);
        for (auto v : norm.dropped) {
          err << "note: dropped variable " << v << ", which occurs in no clause\n";
        }
        f = std::move(norm.formula);
        f.validate();
      }
      auto amb = load_ambient(cfg.semigroup.empty() ? "brandt_b2" : cfg.semigroup);
      auto const& S = *amb.semigroup;
      NpHardTriple triple{};
      if (cfg.triple.empty()) {
        auto found = find_nphard_triple(S);
        if (!found) {
          throw InputError("the semigroup has no triple rs = st = s with s "
                           "not generating a group");
        }
        triple = *found;
      } else {
        triple = {parse_element(S, cfg.triple[0]),
                  parse_element(S, cfg.triple[1]),
                  parse_element(S, cfg.triple[2])};
      }
      auto inst = sat_to_smp(amb.semigroup, triple, f);
      inst.rees = amb.rees;
      emit(cfg, out, instance_to_json(inst).dump() + '\n');
      if (!cfg.verify) {
        return 0;
      }
      auto& report = report_stream(cfg, out, err);
      auto  sat    = brute_force_sat(f);
      auto  result = solve_closure(inst, ClosureOptions{cfg.budget});
      bool  ok     = sat.has_value() == result.member;
      if (ok && sat) {
        ok = check_witness(inst, sat_witness(f, *sat));
      }
      report << "satisfiable: " << (sat ? "yes" : "no") << '\n'
             << "member: " << (result.member ? "yes" : "no") << '\n'
             << "equivalence: " << (ok ? "verified" : "FAILED") << '\n';
      return ok ? 0 : exit_error;
    }

    int cmd_reduce_q3sat(Config const& cfg, std::ostream& out, std::ostream& err) {
      auto in  = open_input(cfg.input);
      auto f   = parse_q3sat(in);
      auto amb = load_ambient(cfg.semigroup.empty() ? "brandt_b2_1" : cfg.semigroup);
      auto const& S = *amb.semigroup;
      PspaceTriple triple{};
      if (!cfg.triple.empty()) {
        triple = {parse_element(S, cfg.triple[0]),
                  parse_element(S, cfg.triple[1]),
                  parse_element(S, cfg.triple[2])};
      } else if (amb.pspace_triple) {
        triple = *amb.pspace_triple;
      } else if (auto found = find_pspace_triple(S)) {
        triple = *found;
      } else {
        throw InputError("the semigroup has no triple with sts = s, s not "
                         "generating a group, sn = s and tn = t");
      }
      LiftMode mode = cfg.lift == "always" ? LiftMode::always
                      : cfg.lift == "never" ? LiftMode::never
                                            : LiftMode::automatic;
      auto red = q3sat_to_smp(amb.semigroup, triple, f, mode);
      if (!red.lifted) {
        red.instance.rees = amb.rees;
      }
      emit(cfg, out, instance_to_json(red.instance).dump() + '\n');
      if (!cfg.verify) {
        return 0;
      }
      auto& report = report_stream(cfg, out, err);
      bool  truth  = eval_q3sat(f);
      auto  result = solve_closure(red.instance, ClosureOptions{cfg.budget});
      bool  ok     = truth == result.member;
      if (ok && truth) {
        ok = check_witness(red.instance, *q3sat_witness(f));
      }
      report << "lifted: " << (red.lifted ? "yes" : "no") << '\n'
             << "true: " << (truth ? "yes" : "no") << '\n'
             << "member: " << (result.member ? "yes" : "no") << '\n'
             << "equivalence: " << (ok ? "verified" : "FAILED") << '\n';
      return ok ? 0 : exit_error;
    }

    int cmd_greens(Config const& cfg, std::ostream& out) {
      auto const  amb    = load_ambient(cfg.input);
      auto const& S      = *amb.semigroup;
      auto const  greens = compute_greens(S);
      auto const  sizes  = greens.j_class_sizes();
      std::ostringstream text;
      if (cfg.json) {
        json j{{"size", S.size()},
               {"r_classes", greens.r_class},
               {"l_classes", greens.l_class},
               {"h_classes", greens.h_class},
               {"d_classes", greens.d_class},
               {"j_classes", greens.j_class},
               {"j_class_sizes", sizes}};
        text << j.dump(2) << '\n';
      } else {
        text << "elements: " << S.size() << '\n'
             << "R-classes: " << greens.nr_r_classes << '\n'
             << "L-classes: " << greens.nr_l_classes << '\n'
             << "H-classes: " << greens.nr_h_classes << '\n'
             << "D-classes: " << greens.nr_d_classes << '\n'
             << "J-classes: " << greens.nr_j_classes << '\n'
             << "J-class sizes: " << join(sizes) << '\n';
      }
      emit(cfg, out, text.str());
      return 0;
    }

    int cmd_shorten(Config const& cfg, std::ostream& out) {
      std::size_t k = cfg.k;
      Word        w;
      for (auto x : cfg.word) {
        if (x == 0 || (k != 0 && x > k)) {
          throw InputError("letter " + std::to_string(x) + " is outside 1.."
                           + (k != 0 ? std::to_string(k) : std::string("k")));
        }
        w.push_back(x - 1);
      }
      if (k == 0) {
        k = distinct_letters(w);
      }
      auto const short_word = shorten_word(w);
      std::ostringstream text;
      if (cfg.json) {
        json j{{"input", cfg.word},
               {"output", json::array()},
               {"bound", shortened_length_bound(k)}};
        for (auto x : short_word) {
          j["output"].push_back(x + 1);
        }
        text << j.dump(2) << '\n';
      } else {
        text << join(short_word, 1) << '\n';
      }
      emit(cfg, out, text.str());
      return 0;
    }

    int cmd_catalog(Config const& cfg, std::ostream& out) {
      std::ostringstream text;
      if (cfg.input.empty()) {
        for (auto const& name : catalog_names()) {
          text << name << '\n';
        }
        emit(cfg, out, text.str());
        return 0;
      }
      auto const  entry = catalog(cfg.input);
      auto const& S     = entry.semigroup;
      if (cfg.json) {
        auto j = entry.rees ? rees_to_json(*entry.rees) : semigroup_to_json(S);
        text << j.dump() << '\n';
      } else {
        text << "name: " << entry.name << '\n' << "size: " << S.size() << '\n';
        text << "identity: " << (S.identity() ? S.name(*S.identity()) : "none") << '\n';
        text << "zero: " << (S.zero() ? S.name(*S.zero()) : "none") << '\n';
        if (auto tr = entry.pspace_triple) {
          text << "pspace triple: s = " << S.name(tr->s) << ", t = " << S.name(tr->t)
               << ", n = " << S.name(tr->n) << '\n';
        }
        text << "elements:";
        for (auto const& name : S.names()) {
          text << ' ' << name;
        }
        text << '\n';
      }
      emit(cfg, out, text.str());
      return 0;
    }
  }  // namespace

  int run_cli(std::vector<std::string> const& args, std::ostream& out, std::ostream& err) {
    Config   cfg;
    CLI::App app{"Finite semigroups and the subpower membership problem", "subpower"};
    app.require_subcommand(1);
    app.set_help_all_flag("--help-all", "Show help for all subcommands");

    auto add_common = [&](CLI::App* sub) {
      sub->add_flag("--json", cfg.json, "Print the JSON format");
      sub->add_option("--out", cfg.out_path, "Write the result to PATH");
    };
    auto add_budget = [&](CLI::App* sub) {
      sub->add_option("--budget", cfg.budget, "Closure search state budget")
          ->check(CLI::PositiveNumber);
    };

    auto* solve = app.add_subcommand("solve", "Decide membership for an instance file");
    solve->add_option("instance", cfg.input, "Instance JSON file")->required();
    solve->add_flag("--verify", cfg.verify, "Re-check the witness and the solver");
    add_budget(solve);
    add_common(solve);

    auto* classify = app.add_subcommand("classify", "Classify a semigroup");
    classify->add_option("semigroup", cfg.input, "Catalog name or JSON file")->required();
    classify->add_flag("--verify", cfg.verify, "Re-check the evidence");
    add_common(classify);

    auto* rsat = app.add_subcommand("reduce-sat", "Reduce a DIMACS CNF to an instance");
    rsat->add_option("formula", cfg.input, "DIMACS file")->required();
    rsat->add_option("--semigroup", cfg.semigroup, "Catalog name or JSON file");
    rsat->add_option("--triple", cfg.triple, "Elements r s t")->expected(3);
    rsat->add_flag("--normalize", cfg.normalize, "Drop variables occurring in no clause");
    rsat->add_flag("--verify", cfg.verify, "Check satisfiability against membership");
    add_budget(rsat);
    rsat->add_option("--out", cfg.out_path, "Write the instance to PATH");

    auto* rq = app.add_subcommand("reduce-q3sat", "Reduce a Q3SAT formula to an instance");
    rq->add_option("formula", cfg.input, "Q3SAT file")->required();
    rq->add_option("--semigroup", cfg.semigroup, "Catalog name or JSON file");
    rq->add_option("--triple", cfg.triple, "Elements s t n")->expected(3);
    rq->add_option("--lift", cfg.lift, "Pair lifting: auto, always or never")
        ->check(CLI::IsMember({"auto", "always", "never"}));
    rq->add_flag("--verify", cfg.verify, "Check truth against membership");
    add_budget(rq);
    rq->add_option("--out", cfg.out_path, "Write the instance to PATH");

    auto* greens = app.add_subcommand("greens", "Report Green's classes");
    greens->add_option("semigroup", cfg.input, "Catalog name or JSON file")->required();
    add_common(greens);

    auto* shorten = app.add_subcommand("shorten", "Shorten a word over letters 1..k");
    shorten->add_option("word", cfg.word, "Letters")->required();
    shorten->add_option("-k,--letters", cfg.k, "Alphabet size");
    add_common(shorten);

    auto* cat = app.add_subcommand("catalog", "List the catalog or show one entry");
    cat->add_option("name", cfg.input, "Catalog name");
    add_common(cat);

    std::vector<std::string> argv_store{"subpower"};
    argv_store.insert(argv_store.end(), args.begin(), args.end());
    std::vector<char const*> argv;
    for (auto const& a : argv_store) {
      argv.push_back(a.c_str());
    }
    try {
      app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (CLI::ParseError const& e) {
      int code = app.exit(e, out, err);
      return code == 0 ? 0 : exit_error;
    }

    try {
      if (solve->parsed()) {
        return cmd_solve(cfg, out, err);
      }
      if (classify->parsed()) {
        return cmd_classify(cfg, out, err);
      }
      if (rsat->parsed()) {
        return cmd_reduce_sat(cfg, out, err);
      }
      if (rq->parsed()) {
        return cmd_reduce_q3sat(cfg, out, err);
      }
      if (greens->parsed()) {
        return cmd_greens(cfg, out);
      }
      if (shorten->parsed()) {
        return cmd_shorten(cfg, out);
      }
      return cmd_catalog(cfg, out);
    } catch (std::exception const& e) {
      err << "error: " << e.what() << '\n';
    }
    return exit_error;
  }

}  // namespace subpower
