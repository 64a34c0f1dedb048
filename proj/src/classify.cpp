// subpower - finite semigroups and the subpower membership problem

#include "subpower/classify.hpp"

#include <algorithm>  // for find, all_of
#include <array>      // for array

#include "subpower/exception.hpp"  // for InputError

namespace subpower {

  namespace {
    struct Name {
      Complexity       klass;
      std::string_view text;
    };

    constexpr std::array<Name, 5> names{{
        {Complexity::ptime, "PTIME"},
        {Complexity::np_complete, "NP_COMPLETE"},
        {Complexity::pspace_complete, "PSPACE_COMPLETE"},
        {Complexity::np_hard_in_pspace, "NP_HARD_IN_PSPACE"},
        {Complexity::in_pspace_unknown, "IN_PSPACE_UNKNOWN"},
    }};

    bool is_mixed(FiniteSemigroup const&  S,
                  GreensStructure const& greens,
                  Element                s) {
      if (is_group_h_class(S, greens, s)) {
        return false;
      }
      for (Element x = 0; x < S.size(); ++x) {
        if (greens.j_equivalent(x, s) && S.product(x, x) == x) {
          return true;
        }
      }
      return false;
    }

    ComplexityVerdict verdict(Complexity c, std::string_view basis) {
      return ComplexityVerdict{c, std::string(basis), {}};
    }

    void add_triple(Evidence& ev, NpHardTriple tr) {
      ev.elements = {{"r", tr.r}, {"s", tr.s}, {"t", tr.t}};
    }

    void add_triple(Evidence& ev, PspaceTriple tr) {
      ev.elements = {{"s", tr.s}, {"t", tr.t}, {"n", tr.n}};
    }

    std::optional<NpHardTriple> nphard_evidence(Evidence const& ev) {
      auto r = ev.element("r"), s = ev.element("s"), t = ev.element("t");
      if (!r || !s || !t) {
        return std::nullopt;
      }
      return NpHardTriple{*r, *s, *t};
    }

    std::optional<PspaceTriple> pspace_evidence(Evidence const& ev) {
      auto s = ev.element("s"), t = ev.element("t"), n = ev.element("n");
      if (!s || !t || !n) {
        return std::nullopt;
      }
      return PspaceTriple{*s, *t, *n};
    }

    bool block_matches(ReesStructure const& R, Block const& b) {
      std::vector<bool> in_cols(R.cols(), false), in_rows(R.rows(), false);
      for (auto i : b.cols) {
        if (i >= R.cols()) {
          return false;
        }
        in_cols[i] = true;
      }
      for (auto l : b.rows) {
        if (l >= R.rows()) {
          return false;
        }
        in_rows[l] = true;
      }
      for (std::size_t l = 0; l < R.rows(); ++l) {
        for (std::size_t i = 0; i < R.cols(); ++i) {
          if ((R.entry(l, i) == 1) != (in_cols[i] && in_rows[l])) {
            return false;
          }
        }
      }
      return true;
    }

    bool violation_matches(ReesStructure const& R, BlockViolation const& v) {
      if (v.i >= R.cols() || v.j >= R.cols() || v.lambda >= R.rows()
          || v.mu >= R.rows()) {
        return false;
      }
      return R.entry(v.lambda, v.i) == 1 && R.entry(v.mu, v.j) == 1
             && R.entry(v.mu, v.i) == 0;
    }

    // Element-level evidence, shared by both verify_verdict overloads.
    bool verify_elements(FiniteSemigroup const&   S,
                         ComplexityVerdict const& v) {
      auto const        greens = compute_greens(S);
      auto const&       ev     = v.evidence;
      std::string_view  basis  = v.theorem;
      auto const        np     = nphard_evidence(ev);
      auto const        ps     = pspace_evidence(ev);

      if (basis == basis::rees_one_block) {
        return v.klass == Complexity::ptime;
      }
      if (basis == basis::rees1_regular_band) {
        return v.klass == Complexity::ptime && ev.regular_band
               && is_regular_band(S);
      }
      if (basis == basis::rees_not_one_block
          || basis == basis::rees1_one_block_with_zero) {
        return v.klass == Complexity::np_complete && np
               && is_nphard_triple(S, greens, *np);
      }
      if (basis == basis::rees1_not_one_block || basis == basis::pspace_triple) {
        return v.klass == Complexity::pspace_complete && ps
               && is_pspace_triple(S, greens, *ps);
      }
      if (basis == basis::monoid_mixed_j_class) {
        auto s        = ev.element("s");
        auto identity = find_identity(S);
        return v.klass == Complexity::pspace_complete && s && S.contains(*s)
               && identity && is_mixed(S, greens, *s);
      }
      if (basis == basis::nphard_triple) {
        return v.klass == Complexity::np_hard_in_pspace && np
               && is_nphard_triple(S, greens, *np);
      }
      if (basis == basis::mixed_j_class) {
        auto s = ev.element("s");
        return v.klass == Complexity::np_hard_in_pspace && s && S.contains(*s)
               && is_mixed(S, greens, *s);
      }
      if (basis == basis::pspace_upper_bound) {
        return v.klass == Complexity::in_pspace_unknown;
      }
      return false;
    }
  }  // namespace

  std::string_view to_string(Complexity c) {
    for (auto const& n : names) {
      if (n.klass == c) {
        return n.text;
      }
    }
    return "UNKNOWN";
  }

  std::optional<Complexity> complexity_from_string(std::string_view s) {
    for (auto const& n : names) {
      if (n.text == s) {
        return n.klass;
      }
    }
    return std::nullopt;
  }

  std::optional<Element> Evidence::element(std::string_view name) const {
    for (auto const& [key, x] : elements) {
      if (key == name) {
        return x;
      }
    }
    return std::nullopt;
  }

  std::optional<NpHardTriple> find_nphard_triple(FiniteSemigroup const&  S,
                                                 GreensStructure const& greens) {
    std::vector<bool> group(S.size());
    for (Element s = 0; s < S.size(); ++s) {
      group[s] = generates_group(S, greens, s);
    }
    for (Element r = 0; r < S.size(); ++r) {
      for (Element s = 0; s < S.size(); ++s) {
        if (group[s] || S.product(r, s) != s) {
          continue;
        }
        for (Element t = 0; t < S.size(); ++t) {
          if (S.product(s, t) == s) {
            return NpHardTriple{r, s, t};
          }
        }
      }
    }
    return std::nullopt;
  }

  std::optional<NpHardTriple> find_nphard_triple(FiniteSemigroup const& S) {
    return find_nphard_triple(S, compute_greens(S));
  }

  HardnessIdempotents hardness_idempotents(FiniteSemigroup const& S,
                                           NpHardTriple           tr) {
    if (!is_nphard_triple(S, compute_greens(S), tr)) {
      throw InputError("hardness_idempotents: need rs = st = s with s not "
                       "generating a group");
    }
    HardnessIdempotents out{};
    if (auto u = is_regular(S, tr.s)) {
      out.e = idempotent_power(S, S.product(tr.s, *u));
      out.f = idempotent_power(S, S.product(*u, tr.s));
    } else {
      out.e = idempotent_power(S, tr.r);
      out.f = idempotent_power(S, tr.t);
    }
    out.g = idempotent_power(S, S.product(tr.s, out.e));
    return out;
  }

  std::optional<PspaceTriple> find_pspace_triple(FiniteSemigroup const&  S,
                                                 GreensStructure const& greens) {
    for (Element s = 0; s < S.size(); ++s) {
      if (generates_group(S, greens, s)) {
        continue;
      }
      for (Element t = 0; t < S.size(); ++t) {
        if (S.product(S.product(s, t), s) != s) {
          continue;
        }
        for (Element n = 0; n < S.size(); ++n) {
          if (S.product(s, n) == s && S.product(t, n) == t) {
            return PspaceTriple{s, t, n};
          }
        }
      }
    }
    return std::nullopt;
  }

  std::optional<PspaceTriple> find_pspace_triple(FiniteSemigroup const& S) {
    return find_pspace_triple(S, compute_greens(S));
  }

  std::optional<Element> mixed_jclass(FiniteSemigroup const&  S,
                                      GreensStructure const& greens) {
    std::vector<bool> has_idempotent(greens.nr_j_classes, false);
    for (Element x = 0; x < S.size(); ++x) {
      if (S.product(x, x) == x) {
        has_idempotent[greens.j_class[x]] = true;
      }
    }
    for (Element s = 0; s < S.size(); ++s) {
      if (has_idempotent[greens.j_class[s]] && !is_group_h_class(S, greens, s)) {
        return s;
      }
    }
    return std::nullopt;
  }

  std::optional<Element> mixed_jclass(FiniteSemigroup const& S) {
    return mixed_jclass(S, compute_greens(S));
  }

  bool is_regular_band(FiniteSemigroup const& S) {
    Element const n = S.size();
    for (Element x = 0; x < n; ++x) {
      if (S.product(x, x) != x) {
        return false;
      }
    }
    for (Element x = 0; x < n; ++x) {
      for (Element y = 0; y < n; ++y) {
        Element const xyx = S.product(S.product(x, y), x);
        Element const xy  = S.product(x, y);
        for (Element z = 0; z < n; ++z) {
          Element const lhs = S.product(S.product(xyx, z), x);
          Element const rhs = S.product(S.product(xy, z), x);
          if (lhs != rhs) {
            return false;
          }
        }
      }
    }
    return true;
  }

  ComplexityVerdict classify_rees(ReesStructure const& R) {
    if (R.adjoin_identity()) {
      throw InputError("classify_rees: use classify_rees_identity for a "
                       "matrix with an adjoined identity");
    }
    if (auto const& block = R.block()) {
      auto v           = verdict(Complexity::ptime, basis::rees_one_block);
      v.evidence.block = block;
      return v;
    }
    auto const bv = *block_violation(R);
    auto       v  = verdict(Complexity::np_complete, basis::rees_not_one_block);
    v.evidence.violation = bv;
    add_triple(v.evidence,
               NpHardTriple{rees_index(R, ReesElement::make_pair(bv.i, bv.lambda)),
                            rees_index(R, ReesElement::make_pair(bv.i, bv.mu)),
                            rees_index(R, ReesElement::make_pair(bv.j, bv.mu))});
    return v;
  }

  ComplexityVerdict classify_rees_identity(ReesStructure const& R) {
    if (!R.adjoin_identity()) {
      throw InputError("classify_rees_identity: the matrix has no adjoined "
                       "identity");
    }
    if (R.all_ones()) {
      auto v = verdict(Complexity::ptime, basis::rees1_regular_band);
      v.evidence.regular_band = is_regular_band(build_rees(R));
      v.evidence.block        = R.block();
      return v;
    }
    Element const one = rees_index(R, ReesElement::make_one());
    if (auto const& block = R.block()) {
      auto v = verdict(Complexity::np_complete, basis::rees1_one_block_with_zero);
      v.evidence.block = block;
      for (std::size_t l = 0; l < R.rows(); ++l) {
        for (std::size_t i = 0; i < R.cols(); ++i) {
          if (R.entry(l, i) == 0) {
            add_triple(v.evidence,
                       NpHardTriple{one,
                                    rees_index(R, ReesElement::make_pair(i, l)),
                                    one});
            return v;
          }
        }
      }
    }
    auto const bv = *block_violation(R);
    auto v = verdict(Complexity::pspace_complete, basis::rees1_not_one_block);
    v.evidence.violation = bv;
    add_triple(v.evidence,
               PspaceTriple{rees_index(R, ReesElement::make_pair(bv.i, bv.mu)),
                            rees_index(R, ReesElement::make_pair(bv.j, bv.lambda)),
                            one});
    return v;
  }

  ComplexityVerdict classify_general(FiniteSemigroup const& S) {
    auto const greens = compute_greens(S);
    if (auto tr = find_pspace_triple(S, greens)) {
      auto v = verdict(Complexity::pspace_complete, basis::pspace_triple);
      add_triple(v.evidence, *tr);
      return v;
    }
    auto const mixed = mixed_jclass(S, greens);
    if (auto identity = find_identity(S); identity && mixed) {
      auto v = verdict(Complexity::pspace_complete, basis::monoid_mixed_j_class);
      v.evidence.elements = {{"s", *mixed}, {"n", *identity}};
      return v;
    }
    if (auto tr = find_nphard_triple(S, greens)) {
      auto v = verdict(Complexity::np_hard_in_pspace, basis::nphard_triple);
      add_triple(v.evidence, *tr);
      return v;
    }
    if (mixed) {
      auto v = verdict(Complexity::np_hard_in_pspace, basis::mixed_j_class);
      v.evidence.elements = {{"s", *mixed}};
      return v;
    }
    return verdict(Complexity::in_pspace_unknown, basis::pspace_upper_bound);
  }

  bool verify_verdict(FiniteSemigroup const& S, ComplexityVerdict const& v) {
    if (v.evidence.block || v.evidence.violation) {
      return false;
    }
    return verify_elements(S, v);
  }

  bool verify_verdict(ReesStructure const& R, ComplexityVerdict const& v) {
    std::string_view basis = v.theorem;
    bool const with_identity
        = basis == basis::rees1_regular_band
          || basis == basis::rees1_one_block_with_zero
          || basis == basis::rees1_not_one_block;
    bool const without_identity
        = basis == basis::rees_one_block || basis == basis::rees_not_one_block;
    if ((with_identity && !R.adjoin_identity())
        || (without_identity && R.adjoin_identity())) {
      return false;
    }
    auto const& ev = v.evidence;
    if (basis == basis::rees_one_block || basis == basis::rees1_one_block_with_zero) {
      if (!ev.block || !block_matches(R, *ev.block)) {
        return false;
      }
    }
    if (basis == basis::rees1_one_block_with_zero && R.all_ones()) {
      return false;
    }
    if (basis == basis::rees1_regular_band && !R.all_ones()) {
      return false;
    }
    if (basis == basis::rees_not_one_block || basis == basis::rees1_not_one_block) {
      if (!ev.violation || !violation_matches(R, *ev.violation)) {
        return false;
      }
    }
    return verify_elements(build_rees(R), v);
  }

}  // namespace subpower
