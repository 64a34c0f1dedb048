// subpower - finite semigroups and the subpower membership problem

#include "subpower/semigroup.hpp"

#include <algorithm>  // for adjacent_find, find, find_if, sort
#include <string>     // for string, to_string
#include <utility>    // for move

#include "subpower/exception.hpp"  // for InputError

namespace subpower {

  namespace {
    std::vector<std::string> default_names(std::size_t size) {
      std::vector<std::string> out;
      out.reserve(size);
      for (std::size_t i = 0; i < size; ++i) {
        out.push_back(std::to_string(i));
      }
      return out;
    }
  }  // namespace

  std::optional<std::array<Element, 3>>
  associativity_violation(std::size_t size, std::span<Element const> table) {
    auto at = [&](Element a, Element b) {
      return table[static_cast<std::size_t>(a) * size + b];
    };
    for (Element a = 0; a < size; ++a) {
      for (Element b = 0; b < size; ++b) {
        Element ab = at(a, b);
        for (Element c = 0; c < size; ++c) {
          if (at(ab, c) != at(a, at(b, c))) {
            return std::array<Element, 3>{a, b, c};
          }
        }
      }
    }
    return std::nullopt;
  }

  FiniteSemigroup::FiniteSemigroup(std::size_t              size,
                                   std::vector<Element>     table,
                                   std::vector<std::string> names,
                                   std::optional<Element>   identity,
                                   std::optional<Element>   zero,
                                   AssociativityCheck       check)
      : _size(size),
        _table(std::move(table)),
        _names(names.empty() ? default_names(size) : std::move(names)),
        _identity(identity),
        _zero(zero) {
    if (_size == 0) {
      throw InputError("a semigroup must have at least one element");
    }
    if (_table.size() != _size * _size) {
      throw InputError("table has " + std::to_string(_table.size())
                       + " entries, expected "
                       + std::to_string(_size * _size));
    }
    if (_names.size() != _size) {
      throw InputError("expected " + std::to_string(_size) + " names, found "
                       + std::to_string(_names.size()));
    }
    {
      auto sorted = _names;
      std::sort(sorted.begin(), sorted.end());
      auto dup = std::adjacent_find(sorted.begin(), sorted.end());
      if (dup != sorted.end()) {
        throw InputError("duplicate element name \"" + *dup + "\"");
      }
    }
    for (Element x : _table) {
      if (x >= _size) {
        throw InputError("table entry " + std::to_string(x)
                         + " is out of range");
      }
    }
    if (_identity) {
      if (*_identity >= _size) {
        throw InputError("identity index out of range");
      }
      for (Element x = 0; x < _size; ++x) {
        if (product(*_identity, x) != x || product(x, *_identity) != x) {
          throw InputError("element " + std::to_string(*_identity)
                           + " is not a two-sided identity");
        }
      }
    }
    if (_zero) {
      if (*_zero >= _size) {
        throw InputError("zero index out of range");
      }
      for (Element x = 0; x < _size; ++x) {
        if (product(*_zero, x) != *_zero || product(x, *_zero) != *_zero) {
          throw InputError("element " + std::to_string(*_zero)
                           + " is not a two-sided zero");
        }
      }
    }
    bool verify = check == AssociativityCheck::always
                  || (check == AssociativityCheck::automatic
                      && _size <= auto_check_limit);
    if (verify) {
      if (auto bad = associativity_violation(_size, _table)) {
        auto [a, b, c] = *bad;
        throw InputError("table is not associative: (ab)c != a(bc) for a="
                         + std::to_string(a) + ", b=" + std::to_string(b)
                         + ", c=" + std::to_string(c));
      }
    }
  }

  FiniteSemigroup
  FiniteSemigroup::from_rows(std::vector<std::vector<Element>> const& rows,
                             std::vector<std::string>                 names,
                             std::optional<Element>                   identity,
                             std::optional<Element>                   zero,
                             AssociativityCheck                       check) {
    std::vector<Element> table;
    table.reserve(rows.size() * rows.size());
    for (auto const& row : rows) {
      if (row.size() != rows.size()) {
        throw InputError("table is not square");
      }
      table.insert(table.end(), row.begin(), row.end());
    }
    return FiniteSemigroup(
        rows.size(), std::move(table), std::move(names), identity, zero, check);
  }

  std::string const& FiniteSemigroup::name(Element x) const {
    if (x >= _size) {
      throw InputError("element " + std::to_string(x) + " is out of range");
    }
    return _names[x];
  }

  std::optional<Element> FiniteSemigroup::find(std::string_view name) const {
    auto it = std::find(_names.begin(), _names.end(), name);
    if (it == _names.end()) {
      return std::nullopt;
    }
    return static_cast<Element>(it - _names.begin());
  }

  Element multiply(FiniteSemigroup const& S, Element a, Element b) {
    if (!S.contains(a) || !S.contains(b)) {
      throw InputError("multiply: element index out of range");
    }
    return S.product(a, b);
  }

  Element multiply(FiniteSemigroup const& S, std::span<Element const> factors) {
    if (factors.empty()) {
      throw InputError("multiply: empty product");
    }
    Element x = factors[0];
    if (!S.contains(x)) {
      throw InputError("multiply: element index out of range");
    }
    for (std::size_t i = 1; i < factors.size(); ++i) {
      x = multiply(S, x, factors[i]);
    }
    return x;
  }

  std::optional<Element> find_identity(FiniteSemigroup const& S) {
    for (Element e = 0; e < S.size(); ++e) {
      bool ok = true;
      for (Element x = 0; x < S.size() && ok; ++x) {
        ok = S.product(e, x) == x && S.product(x, e) == x;
      }
      if (ok) {
        return e;
      }
    }
    return std::nullopt;
  }

  std::optional<Element> find_zero(FiniteSemigroup const& S) {
    for (Element z = 0; z < S.size(); ++z) {
      bool ok = true;
      for (Element x = 0; x < S.size() && ok; ++x) {
        ok = S.product(z, x) == z && S.product(x, z) == z;
      }
      if (ok) {
        return z;
      }
    }
    return std::nullopt;
  }

  bool is_idempotent(FiniteSemigroup const& S, Element x) {
    return multiply(S, x, x) == x;
  }

  std::vector<Element> cyclic_subsemigroup(FiniteSemigroup const& S, Element x) {
    if (!S.contains(x)) {
      throw InputError("cyclic_subsemigroup: element index out of range");
    }
    std::vector<bool>    seen(S.size(), false);
    std::vector<Element> powers;
    for (Element p = x; !seen[p]; p = S.product(p, x)) {
      seen[p] = true;
      powers.push_back(p);
    }
    return powers;
  }

  Element idempotent_power(FiniteSemigroup const& S, Element x) {
    auto powers = cyclic_subsemigroup(S, x);
    auto it     = std::find_if(powers.begin(), powers.end(), [&S](Element p) {
      return S.product(p, p) == p;
    });
    // Every finite cyclic semigroup contains exactly one idempotent.
    return *it;
  }

  std::optional<Element> is_regular(FiniteSemigroup const& S, Element s) {
    if (!S.contains(s)) {
      throw InputError("is_regular: element index out of range");
    }
    for (Element u = 0; u < S.size(); ++u) {
      if (S.product(S.product(s, u), s) == s) {
        return u;
      }
    }
    return std::nullopt;
  }

  FiniteSemigroup adjoin_identity(FiniteSemigroup const& S) {
    std::size_t const    n   = S.size() + 1;
    Element const        one = static_cast<Element>(S.size());
    std::vector<Element> table(n * n);
    for (Element a = 0; a < n; ++a) {
      for (Element b = 0; b < n; ++b) {
        Element ab;
        if (a == one) {
          ab = b;
        } else if (b == one) {
          ab = a;
        } else {
          ab = S.product(a, b);
        }
        table[a * n + b] = ab;
      }
    }
    auto        names = S.names();
    std::string label = "1";
    while (std::find(names.begin(), names.end(), label) != names.end()) {
      label += "'";
    }
    names.push_back(label);
    return FiniteSemigroup(n,
                           std::move(table),
                           std::move(names),
                           one,
                           S.zero(),
                           AssociativityCheck::never);
  }

  FiniteSemigroup direct_product(FiniteSemigroup const& S,
                                 FiniteSemigroup const& T) {
    std::size_t const n = S.size() * T.size();
    if (n > max_product_size) {
      throw InputError("direct_product: " + std::to_string(n)
                       + " elements exceeds the supported maximum of "
                       + std::to_string(max_product_size));
    }
    std::vector<Element> table(n * n);
    for (Element a = 0; a < S.size(); ++a) {
      for (Element b = 0; b < T.size(); ++b) {
        Element x = product_pair(T, a, b);
        for (Element c = 0; c < S.size(); ++c) {
          for (Element d = 0; d < T.size(); ++d) {
            Element y = product_pair(T, c, d);
            table[static_cast<std::size_t>(x) * n + y]
                = product_pair(T, S.product(a, c), T.product(b, d));
          }
        }
      }
    }
    std::vector<std::string> names;
    names.reserve(n);
    for (Element a = 0; a < S.size(); ++a) {
      for (Element b = 0; b < T.size(); ++b) {
        names.push_back("(" + S.name(a) + "," + T.name(b) + ")");
      }
    }
    std::optional<Element> identity, zero;
    if (S.identity() && T.identity()) {
      identity = product_pair(T, *S.identity(), *T.identity());
    }
    if (S.zero() && T.zero()) {
      zero = product_pair(T, *S.zero(), *T.zero());
    }
    return FiniteSemigroup(n,
                           std::move(table),
                           std::move(names),
                           identity,
                           zero,
                           AssociativityCheck::never);
  }

  void validate_tuple(FiniteSemigroup const& S, PowerTuple const& a) {
    for (Element x : a.coords) {
      if (!S.contains(x)) {
        throw InputError("tuple coordinate " + std::to_string(x)
                         + " is not an element of the semigroup");
      }
    }
  }

  PowerTuple tuple_multiply(FiniteSemigroup const& S,
                            PowerTuple const&      a,
                            PowerTuple const&      b) {
    if (a.n() != b.n()) {
      throw InputError("tuple_multiply: lengths " + std::to_string(a.n())
                       + " and " + std::to_string(b.n()) + " differ");
    }
    validate_tuple(S, a);
    validate_tuple(S, b);
    PowerTuple c;
    c.coords.resize(a.n());
    for (std::size_t i = 0; i < a.n(); ++i) {
      c.coords[i] = S.product(a.coords[i], b.coords[i]);
    }
    return c;
  }

  PowerTuple constant_tuple(std::size_t n, Element x) {
    return PowerTuple{std::vector<Element>(n, x)};
  }

}  // namespace subpower
