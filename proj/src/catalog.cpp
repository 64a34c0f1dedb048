// subpower - finite semigroups and the subpower membership problem

#include "subpower/catalog.hpp"

#include <algorithm>   // for lower_bound, sort
#include <charconv>    // for from_chars
#include <functional>  // for function
#include <string>    // for string, to_string
#include <utility>   // for move

#include "subpower/exception.hpp"  // for InputError

namespace subpower {

  namespace {
    using Map = std::vector<std::size_t>;

    std::string map_name(Map const& f, std::size_t undefined) {
      std::string out = "[";
      for (std::size_t x = 0; x < f.size(); ++x) {
        out += (x ? "," : "");
        out += f[x] == undefined ? std::string("-") : std::to_string(f[x] + 1);
      }
      return out + "]";
    }

    // All tuples in {0, ..., base - 1}^n in lexicographic order.
    std::vector<Map> all_tuples(std::size_t n, std::size_t base) {
      std::vector<Map> out;
      Map              f(n, 0);
      while (true) {
        out.push_back(f);
        std::size_t x = n;
        while (x > 0 && f[x - 1] == base - 1) {
          f[--x] = 0;
        }
        if (x == 0) {
          return out;
        }
        ++f[x - 1];
      }
    }

    // Semigroup of maps closed under right-action composition (f first).
    // `undefined` is the value used for points outside the domain.
    FiniteSemigroup map_semigroup(std::vector<Map> const& maps,
                                  std::size_t             undefined) {
      std::size_t const n = maps.size();
      auto index = [&](Map const& f) {
        auto lo = std::lower_bound(maps.begin(), maps.end(), f);
        return static_cast<Element>(lo - maps.begin());
      };
      std::vector<Element>     table(n * n);
      std::vector<std::string> names;
      std::optional<Element>   identity, zero;
      for (Element a = 0; a < n; ++a) {
        names.push_back(map_name(maps[a], undefined));
        for (Element b = 0; b < n; ++b) {
          Map fg(maps[a].size());
          for (std::size_t x = 0; x < fg.size(); ++x) {
            fg[x] = maps[a][x] == undefined ? undefined : maps[b][maps[a][x]];
          }
          table[a * n + b] = index(fg);
        }
      }
      FiniteSemigroup S(
          n, table, names, std::nullopt, std::nullopt, AssociativityCheck::never);
      return FiniteSemigroup(n,
                             std::move(table),
                             std::move(names),
                             find_identity(S),
                             find_zero(S),
                             AssociativityCheck::automatic);
    }

    std::size_t parse_size(std::string_view s, std::string_view what) {
      std::size_t value = 0;
      auto [ptr, ec]    = std::from_chars(s.data(), s.data() + s.size(), value);
      if (ec != std::errc() || ptr != s.data() + s.size()) {
        throw InputError("catalog: invalid parameter '" + std::string(s)
                         + "' for " + std::string(what));
      }
      return value;
    }

    std::vector<std::string_view> split(std::string_view s, char sep) {
      std::vector<std::string_view> out;
      while (true) {
        auto pos = s.find(sep);
        out.push_back(s.substr(0, pos));
        if (pos == std::string_view::npos) {
          return out;
        }
        s.remove_prefix(pos + 1);
      }
    }

    FiniteSemigroup from_function(std::size_t                               n,
                                  std::vector<std::string>                  names,
                                  std::function<Element(Element, Element)> op) {
      std::vector<Element> table(n * n);
      for (Element a = 0; a < n; ++a) {
        for (Element b = 0; b < n; ++b) {
          table[a * n + b] = op(a, b);
        }
      }
      FiniteSemigroup S(
          n, table, names, std::nullopt, std::nullopt, AssociativityCheck::never);
      return FiniteSemigroup(n,
                             std::move(table),
                             std::move(names),
                             find_identity(S),
                             find_zero(S),
                             AssociativityCheck::automatic);
    }

    CatalogEntry rees_entry(std::string name, ReesStructure R) {
      auto S = build_rees(R);
      return CatalogEntry{std::move(name), std::move(S), std::move(R), std::nullopt};
    }

    std::vector<std::vector<std::uint8_t>> const b2_matrix = {{1, 0}, {0, 1}};
    std::vector<std::vector<std::uint8_t>> const a2_matrix = {{1, 1}, {1, 0}};
  }  // namespace

  FiniteSemigroup full_transformation(std::size_t n) {
    if (n == 0 || n > 4) {
      throw InputError("full_transformation: degree must be in 1..4");
    }
    return map_semigroup(all_tuples(n, n), n);
  }

  FiniteSemigroup symmetric_inverse(std::size_t n) {
    if (n == 0 || n > 3) {
      throw InputError("symmetric_inverse: degree must be in 1..3");
    }
    // Value 0 encodes "undefined" during enumeration so that it sorts first.
    std::vector<Map> maps;
    for (auto const& f : all_tuples(n, n + 1)) {
      std::vector<bool> hit(n + 1, false);
      bool              injective = true;
      for (auto v : f) {
        if (v != 0) {
          injective &= !hit[v];
          hit[v] = true;
        }
      }
      if (injective) {
        Map g(n);
        for (std::size_t x = 0; x < n; ++x) {
          g[x] = f[x] == 0 ? n : f[x] - 1;
        }
        maps.push_back(std::move(g));
      }
    }
    // Re-sort with "undefined" (= n) first to keep lexicographic order.
    auto key = [n](Map const& f) {
      Map k(f.size());
      for (std::size_t x = 0; x < f.size(); ++x) {
        k[x] = f[x] == n ? 0 : f[x] + 1;
      }
      return k;
    };
    std::sort(maps.begin(), maps.end(), [&](Map const& f, Map const& g) {
      return key(f) < key(g);
    });
    std::size_t const    m = maps.size();
    std::vector<Element> table(m * m);
    std::vector<std::string> names;
    auto find_map = [&](Map const& f) {
      for (Element i = 0; i < m; ++i) {
        if (maps[i] == f) {
          return i;
        }
      }
      return static_cast<Element>(m);
    };
    for (Element a = 0; a < m; ++a) {
      names.push_back(map_name(maps[a], n));
      for (Element b = 0; b < m; ++b) {
        Map fg(n);
        for (std::size_t x = 0; x < n; ++x) {
          fg[x] = maps[a][x] == n ? n : maps[b][maps[a][x]];
        }
        table[a * m + b] = find_map(fg);
      }
    }
    FiniteSemigroup S(
        m, table, names, std::nullopt, std::nullopt, AssociativityCheck::never);
    return FiniteSemigroup(m,
                           std::move(table),
                           std::move(names),
                           find_identity(S),
                           find_zero(S),
                           AssociativityCheck::automatic);
  }

  FiniteSemigroup matrix_semigroup(std::size_t n, std::size_t q) {
    if (n != 2 || (q != 2 && q != 3)) {
      throw InputError("matrix_semigroup: only 2 x 2 matrices over Z_2 or "
                       "Z_3 are supported");
    }
    auto mats = all_tuples(4, q);  // (a, b, c, d) for ((a b) (c d))
    std::vector<std::string> names;
    for (auto const& m : mats) {
      names.push_back("[[" + std::to_string(m[0]) + "," + std::to_string(m[1])
                      + "],[" + std::to_string(m[2]) + ","
                      + std::to_string(m[3]) + "]]");
    }
    return from_function(mats.size(), std::move(names), [&](Element x, Element y) {
      auto const& a = mats[x];
      auto const& b = mats[y];
      Map c = {(a[0] * b[0] + a[1] * b[2]) % q,
               (a[0] * b[1] + a[1] * b[3]) % q,
               (a[2] * b[0] + a[3] * b[2]) % q,
               (a[2] * b[1] + a[3] * b[3]) % q};
      return static_cast<Element>(((c[0] * q + c[1]) * q + c[2]) * q + c[3]);
    });
  }

  FiniteSemigroup cyclic_group(std::size_t n) {
    if (n == 0 || n > 64) {
      throw InputError("cyclic_group: order must be in 1..64");
    }
    std::vector<std::string> names{"1"};
    for (std::size_t i = 1; i < n; ++i) {
      names.push_back(n == 2 ? "c" : "c^" + std::to_string(i));
    }
    return from_function(n, std::move(names), [n](Element a, Element b) {
      return static_cast<Element>((a + b) % n);
    });
  }

  FiniteSemigroup left_zero_semigroup(std::size_t n) {
    if (n == 0 || n > 64) {
      throw InputError("left_zero: size must be in 1..64");
    }
    return from_function(n, {}, [](Element a, Element) { return a; });
  }

  FiniteSemigroup null_semigroup(std::size_t n) {
    if (n == 0 || n > 64) {
      throw InputError("null: size must be in 1..64");
    }
    return from_function(n, {}, [](Element, Element) { return Element(0); });
  }

  FiniteSemigroup rees_over_z2() {
    // (i, g, lambda) has index (2i + g) * 2 + lambda; g = 1 is c.
    auto p = [](Element lambda, Element j) -> Element {
      return lambda == 1 && j == 1 ? 1 : 0;
    };
    std::vector<std::string> names;
    for (Element x = 0; x < 8; ++x) {
      names.push_back("(" + std::to_string(x / 4 + 1) + ","
                      + ((x / 2) % 2 ? "c" : "1") + ","
                      + std::to_string(x % 2 + 1) + ")");
    }
    return from_function(8, std::move(names), [&](Element x, Element y) {
      Element g = (x / 2) % 2, lambda = x % 2;
      Element j = y / 4, h = (y / 2) % 2, mu = y % 2;
      Element k = (g + p(lambda, j) + h) % 2;
      return static_cast<Element>((2 * (x / 4) + k) * 2 + mu);
    });
  }

  std::vector<std::vector<std::uint8_t>> parse_matrix_rows(std::string_view s) {
    std::vector<std::vector<std::uint8_t>> rows;
    for (auto row : split(s, '/')) {
      std::vector<std::uint8_t> r;
      for (char c : row) {
        if (c != '0' && c != '1') {
          throw InputError("matrix rows must consist of 0 and 1, got '"
                           + std::string(s) + "'");
        }
        r.push_back(static_cast<std::uint8_t>(c - '0'));
      }
      rows.push_back(std::move(r));
    }
    return rows;
  }

  CatalogEntry catalog(std::string_view spec) {
    auto        parts = split(spec, ':');
    auto const  name  = parts[0];
    std::string label(spec);
    auto        expect_params = [&](std::size_t k) {
      if (parts.size() != k + 1) {
        throw InputError("catalog: '" + std::string(name) + "' takes "
                         + std::to_string(k) + " parameter(s)");
      }
    };

    if (name == "brandt_b2" || name == "a2" || name == "brandt_b2_1"
        || name == "a2_1") {
      expect_params(0);
      bool const b2       = name.starts_with("brandt");
      bool const identity = name.ends_with("_1");
      auto       entry
          = rees_entry(label, ReesStructure(b2 ? b2_matrix : a2_matrix, identity));
      if (identity) {
        ReesStructure const& R = *entry.rees;
        Element const one = rees_index(R, ReesElement::make_one());
        // B_2^1: s = [1,2], t = [2,1]; A_2^1: s = [2,2], t = [1,1].
        entry.pspace_triple
            = b2 ? PspaceTriple{rees_index(R, ReesElement::make_pair(0, 1)),
                                rees_index(R, ReesElement::make_pair(1, 0)),
                                one}
                 : PspaceTriple{rees_index(R, ReesElement::make_pair(1, 1)),
                                rees_index(R, ReesElement::make_pair(0, 0)),
                                one};
      }
      return entry;
    }
    if (name == "rees" || name == "rees_1") {
      expect_params(1);
      return rees_entry(label,
                        ReesStructure(parse_matrix_rows(parts[1]), name == "rees_1"));
    }
    if (name == "full_transformation") {
      expect_params(1);
      auto n = parse_size(parts[1], name);
      CatalogEntry entry{label, full_transformation(n), std::nullopt, std::nullopt};
      if (n >= 3) {
        // s: 1 -> 2, else -> 3; t: 2 -> 1, else -> 3; n = identity.
        Map s(n, 2), t(n, 2), id(n);
        s[0] = 1;
        t[1] = 0;
        for (std::size_t x = 0; x < n; ++x) {
          id[x] = x;
        }
        auto index = [n](Map const& f) {
          std::size_t k = 0;
          for (auto v : f) {
            k = k * n + v;
          }
          return static_cast<Element>(k);
        };
        entry.pspace_triple = PspaceTriple{index(s), index(t), index(id)};
      }
      return entry;
    }
    if (name == "symmetric_inverse") {
      expect_params(1);
      auto         n = parse_size(parts[1], name);
      CatalogEntry entry{label, symmetric_inverse(n), std::nullopt, std::nullopt};
      if (n >= 2) {
        auto const& S = entry.semigroup;
        std::string s = "[2", t = "[-,1", id = "[1,2";
        for (std::size_t x = 1; x < n; ++x) {
          s += ",-";
        }
        for (std::size_t x = 2; x < n; ++x) {
          t += ",-";
          id += "," + std::to_string(x + 1);
        }
        entry.pspace_triple
            = PspaceTriple{*S.find(s + "]"), *S.find(t + "]"), *S.find(id + "]")};
      }
      return entry;
    }
    if (name == "matrix_semigroup") {
      expect_params(2);
      auto n = parse_size(parts[1], name);
      auto q = parse_size(parts[2], name);
      CatalogEntry entry{label, matrix_semigroup(n, q), std::nullopt, std::nullopt};
      auto const&  S = entry.semigroup;
      entry.pspace_triple = PspaceTriple{*S.find("[[0,1],[0,0]]"),
                                         *S.find("[[0,0],[1,0]]"),
                                         *S.find("[[1,0],[0,1]]")};
      return entry;
    }
    if (name == "z2") {
      expect_params(0);
      return {label, cyclic_group(2), std::nullopt, std::nullopt};
    }
    if (name == "cyclic_group") {
      expect_params(1);
      return {label, cyclic_group(parse_size(parts[1], name)), std::nullopt, std::nullopt};
    }
    if (name == "left_zero") {
      expect_params(1);
      return {label,
              left_zero_semigroup(parse_size(parts[1], name)),
              std::nullopt,
              std::nullopt};
    }
    if (name == "null") {
      expect_params(1);
      return {label, null_semigroup(parse_size(parts[1], name)), std::nullopt, std::nullopt};
    }
    if (name == "rees_z2" || name == "rees_z2_1") {
      expect_params(0);
      auto S = rees_over_z2();
      if (name == "rees_z2_1") {
        S = adjoin_identity(S);
      }
      return {label, std::move(S), std::nullopt, std::nullopt};
    }
    throw InputError("catalog: unknown semigroup '" + std::string(spec) + "'");
  }

  std::vector<std::string> catalog_names() {
    return {"brandt_b2",
            "a2",
            "brandt_b2_1",
            "a2_1",
            "full_transformation:1",
            "full_transformation:2",
            "full_transformation:3",
            "full_transformation:4",
            "symmetric_inverse:1",
            "symmetric_inverse:2",
            "symmetric_inverse:3",
            "matrix_semigroup:2:2",
            "matrix_semigroup:2:3",
            "z2",
            "cyclic_group:3",
            "left_zero:3",
            "null:3",
            "rees_z2",
            "rees_z2_1"};
  }

}  // namespace subpower
