// subpower - finite semigroups and the subpower membership problem

#include <algorithm>  // for max
#include <cstdint>    // for uint64_t
#include <cstdlib>    // for abs
#include <istream>  // for istream
#include <ostream>  // for ostream
#include <sstream>  // for istringstream
#include <string>   // for string, getline, to_string

#include "subpower/exception.hpp"  // for InputError
#include "subpower/reduce.hpp"

namespace subpower {

  namespace {
    std::size_t var_of(Literal l) {
      return static_cast<std::size_t>(std::abs(l));
    }

    bool literal_true(Literal l, std::vector<bool> const& values) {
      bool v = values[var_of(l) - 1];
      return l > 0 ? v : !v;
    }

    // Next non-comment, non-blank line; false at end of input.
    bool next_line(std::istream& in, std::string& line) {
      while (std::getline(in, line)) {
        auto pos = line.find_first_not_of(" \t\r");
        if (pos == std::string::npos || line[pos] == 'c') {
          continue;
        }
        return true;
      }
      return false;
    }

    // values holds x_1..x_n then y_1..y_n; level counts assigned pairs.
    bool q3sat_game(Q3SatFormula const& f, std::vector<bool>& values, std::size_t level) {
      if (level == f.n) {
        for (auto const& clause : f.clauses) {
          bool sat = false;
          for (auto l : clause) {
            sat = sat || literal_true(l, values);
          }
          if (!sat) {
            return false;
          }
        }
        return true;
      }
      for (bool x : {false, true}) {
        values[level] = x;
        bool any      = false;
        for (bool y : {false, true}) {
          values[f.n + level] = y;
          if (q3sat_game(f, values, level + 1)) {
            any = true;
            break;
          }
        }
        if (!any) {
          return false;
        }
      }
      return true;
    }
  }  // namespace

  void CnfFormula::validate() const {
    std::vector<bool> seen(var_count, false);
    for (std::size_t c = 0; c < clauses.size(); ++c) {
      if (clauses[c].empty()) {
        throw InputError("clause " + std::to_string(c + 1) + " is empty");
      }
      for (auto l : clauses[c]) {
        if (l == 0 || var_of(l) > var_count) {
          throw InputError("literal " + std::to_string(l) + " in clause "
                           + std::to_string(c + 1) + " is out of range");
        }
        seen[var_of(l) - 1] = true;
      }
    }
    for (std::size_t v = 0; v < var_count; ++v) {
      if (!seen[v]) {
        throw InputError("variable " + std::to_string(v + 1)
                         + " occurs in no clause");
      }
    }
  }

  void Q3SatFormula::validate() const {
    if (n == 0) {
      throw InputError("a Q3SAT formula needs at least one variable pair");
    }
    for (std::size_t c = 0; c < clauses.size(); ++c) {
      for (auto l : clauses[c]) {
        if (l == 0 || var_of(l) > 2 * n) {
          throw InputError("literal " + std::to_string(l) + " in clause "
                           + std::to_string(c + 1) + " is out of range");
        }
      }
    }
  }

  CnfFormula parse_dimacs(std::istream& in, bool validate) {
    std::string line;
    if (!next_line(in, line)) {
      throw InputError("DIMACS input has no problem line");
    }
    std::istringstream header(line);
    std::string        p, cnf;
    long long          vars = -1, count = -1;
    if (!(header >> p >> cnf >> vars >> count) || p != "p" || cnf != "cnf"
        || vars < 0 || count < 0) {
      throw InputError("expected \"p cnf VARS CLAUSES\", got \"" + line + "\"");
    }
    CnfFormula f;
    f.var_count = static_cast<std::size_t>(vars);
    std::vector<Literal> clause;
    while (next_line(in, line)) {
      if (line.find_first_not_of(" \t\r") == line.find('%')) {
        break;
      }
      std::istringstream body(line);
      std::string        token;
      while (body >> token) {
        Literal l;
        try {
          std::size_t used = 0;
          l                = std::stoi(token, &used);
          if (used != token.size()) {
            throw std::invalid_argument(token);
          }
        } catch (std::exception const&) {
          throw InputError("invalid DIMACS literal \"" + token + "\"");
        }
        if (l == 0) {
          f.clauses.push_back(std::move(clause));
          clause.clear();
        } else {
          clause.push_back(l);
        }
      }
    }
    if (!clause.empty()) {
      f.clauses.push_back(std::move(clause));
    }
    if (f.clauses.size() != static_cast<std::size_t>(count)) {
      throw InputError("DIMACS header declares " + std::to_string(count)
                       + " clauses but " + std::to_string(f.clauses.size())
                       + " were read");
    }
    if (validate) {
      f.validate();
    }
    return f;
  }

  void write_dimacs(std::ostream& out, CnfFormula const& f) {
    out << "p cnf " << f.var_count << ' ' << f.clauses.size() << '\n';
    for (auto const& clause : f.clauses) {
      for (auto l : clause) {
        out << l << ' ';
      }
      out << "0\n";
    }
  }

  Q3SatFormula parse_q3sat(std::istream& in) {
    std::string line;
    if (!next_line(in, line)) {
      throw InputError("Q3SAT input has no header line");
    }
    std::istringstream header(line);
    std::string        tag;
    long long          n = -1, m = -1;
    if (!(header >> tag >> n >> m) || tag != "q3sat" || n < 0 || m < 0) {
      throw InputError("expected \"q3sat N M\", got \"" + line + "\"");
    }
    Q3SatFormula f;
    f.n = static_cast<std::size_t>(n);
    for (long long c = 0; c < m; ++c) {
      if (!next_line(in, line)) {
        throw InputError("Q3SAT input ends after " + std::to_string(c)
                         + " of " + std::to_string(m) + " clauses");
      }
      std::istringstream    body(line);
      std::array<Literal, 3> clause{};
      std::string            extra;
      if (!(body >> clause[0] >> clause[1] >> clause[2]) || (body >> extra)) {
        throw InputError("a Q3SAT clause needs exactly three literals, got \""
                         + line + "\"");
      }
      f.clauses.push_back(clause);
    }
    if (next_line(in, line)) {
      throw InputError("unexpected content after the last Q3SAT clause");
    }
    f.validate();
    return f;
  }

  void write_q3sat(std::ostream& out, Q3SatFormula const& f) {
    out << "q3sat " << f.n << ' ' << f.clauses.size() << '\n';
    for (auto const& c : f.clauses) {
      out << c[0] << ' ' << c[1] << ' ' << c[2] << '\n';
    }
  }

  bool eval_cnf(CnfFormula const& f, std::vector<bool> const& assignment) {
    if (assignment.size() < f.var_count) {
      throw InputError("assignment covers " + std::to_string(assignment.size())
                       + " of " + std::to_string(f.var_count) + " variables");
    }
    for (auto const& clause : f.clauses) {
      bool sat = false;
      for (auto l : clause) {
        sat = sat || literal_true(l, assignment);
      }
      if (!sat) {
        return false;
      }
    }
    return true;
  }

  std::optional<std::vector<bool>> brute_force_sat(CnfFormula const& f) {
    if (f.var_count >= 63) {
      throw InputError("brute_force_sat supports at most 62 variables");
    }
    std::vector<bool> values(f.var_count);
    for (std::uint64_t bits = 0; bits < (std::uint64_t(1) << f.var_count); ++bits) {
      for (std::size_t v = 0; v < f.var_count; ++v) {
        values[v] = (bits >> v) & 1;
      }
      if (eval_cnf(f, values)) {
        return values;
      }
    }
    return std::nullopt;
  }

  bool eval_q3sat(Q3SatFormula const& f) {
    f.validate();
    std::vector<bool> values(2 * f.n, false);
    return q3sat_game(f, values, 0);
  }

  NormalizedCnf normalize_cnf(CnfFormula const& f) {
    std::vector<std::size_t> renumber(f.var_count + 1, 0);
    for (auto const& clause : f.clauses) {
      for (auto l : clause) {
        if (l == 0 || var_of(l) > f.var_count) {
          throw InputError("literal " + std::to_string(l) + " is out of range");
        }
        renumber[var_of(l)] = 1;
      }
    }
    NormalizedCnf out;
    for (std::size_t v = 1; v <= f.var_count; ++v) {
      if (renumber[v] != 0) {
        renumber[v] = ++out.formula.var_count;
      } else {
        out.dropped.push_back(v);
      }
    }
    for (auto const& clause : f.clauses) {
      std::vector<Literal> mapped;
      for (auto l : clause) {
        auto v = static_cast<Literal>(renumber[var_of(l)]);
        mapped.push_back(l > 0 ? v : -v);
      }
      out.formula.clauses.push_back(std::move(mapped));
    }
    return out;
  }

  Q3SatFormula balance_prefix(std::span<Quantifier const>                 prefix,
                              std::vector<std::array<Literal, 3>> const& clauses) {
    // Pair index and side (false: universal) of every prefix position.
    std::vector<std::pair<std::size_t, bool>> slot;
    std::size_t pairs = 0;
    bool        want_exists = false;
    for (auto q : prefix) {
      if (q == Quantifier::forall) {
        // A pending existential is left as a dummy.
        ++pairs;
        slot.emplace_back(pairs - 1, false);
        want_exists = true;
      } else {
        if (!want_exists) {
          ++pairs;  // dummy universal
        }
        slot.emplace_back(pairs - 1, true);
        want_exists = false;
      }
    }
    Q3SatFormula f;
    f.n = std::max<std::size_t>(pairs, 1);
    for (auto const& clause : clauses) {
      std::array<Literal, 3> mapped{};
      for (std::size_t k = 0; k < 3; ++k) {
        auto l = clause[k];
        if (l == 0 || var_of(l) > prefix.size()) {
          throw InputError("literal " + std::to_string(l)
                           + " does not refer to a prefix position");
        }
        auto [pair, exists] = slot[var_of(l) - 1];
        auto v = static_cast<Literal>(pair + 1 + (exists ? f.n : 0));
        mapped[k] = l > 0 ? v : -v;
      }
      f.clauses.push_back(mapped);
    }
    return f;
  }

}  // namespace subpower

namespace subpower {

  namespace {
    // Values of x_1..x_n, y_1..y_n under the winning strategy that prefers
    // y_i = false, for the universal assignment xs.
    std::vector<bool> strategy(Q3SatFormula const& f, std::vector<bool> const& xs) {
      std::vector<bool> values(2 * f.n, false);
      for (std::size_t i = 0; i < f.n; ++i) {
        values[i] = xs[i];
        for (bool y : {false, true}) {
          values[f.n + i] = y;
          // q3sat_game overwrites the positions after level i + 1.
          auto probe = values;
          if (q3sat_game(f, probe, i + 1)) {
            break;
          }
        }
      }
      return values;
    }

    std::size_t satisfied_literal(std::array<Literal, 3> const& clause,
                                  std::vector<bool> const&      values) {
      for (std::size_t k = 0; k < 3; ++k) {
        if (literal_true(clause[k], values)) {
          return k;
        }
      }
      return 3;
    }
  }  // namespace

  std::optional<Witness> q3sat_witness(Q3SatFormula const& f) {
    if (!eval_q3sat(f)) {
      return std::nullopt;
    }
    Q3SatLayout const layout{f.n, f.clauses.size()};
    std::size_t const n = f.n;
    Witness           w;
    auto close_clauses = [&](std::vector<bool> const& values) {
      for (std::size_t j = 0; j < f.clauses.size(); ++j) {
        w.word.push_back(layout.d(j, satisfied_literal(f.clauses[j], values)));
      }
    };

    std::vector<bool> xs(n, false);
    auto              rho = strategy(f, xs);
    w.word.push_back(layout.a());
    for (std::size_t i = 0; i < n; ++i) {
      w.word.push_back(rho[n + i] ? layout.c_plus(i) : layout.c_zero(i));
    }
    close_clauses(rho);

    while (true) {
      std::size_t j = n;
      for (std::size_t i = n; i-- > 0;) {
        if (!xs[i]) {
          j = i;
          break;
        }
      }
      if (j == n) {
        break;
      }
      xs[j] = true;
      for (std::size_t i = j + 1; i < n; ++i) {
        xs[i] = false;
      }
      auto next = strategy(f, xs);
      w.word.push_back(layout.b(j));
      for (std::size_t i = j; i < n; ++i) {
        bool before = rho[n + i], after = next[n + i];
        w.word.push_back(before == after ? layout.c_zero(i)
                         : after         ? layout.c_plus(i)
                                         : layout.c_minus(i));
      }
      rho = std::move(next);
      close_clauses(rho);
    }
    for (std::size_t i = 0; i < n; ++i) {
      if (!rho[n + i]) {
        w.word.push_back(layout.e(i));
      }
    }
    return w;
  }

}  // namespace subpower
