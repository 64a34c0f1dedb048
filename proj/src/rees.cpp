// subpower - finite semigroups and the subpower membership problem

#include "subpower/rees.hpp"

#include <string>   // for to_string
#include <utility>  // for move

#include "subpower/exception.hpp"  // for InputError

namespace subpower {

  namespace {
    std::optional<Block> compute_block(ReesStructure const& R) {
      Block b;
      for (std::size_t i = 0; i < R.cols(); ++i) {
        for (std::size_t l = 0; l < R.rows(); ++l) {
          if (R.entry(l, i)) {
            b.cols.push_back(i);
            break;
          }
        }
      }
      for (std::size_t l = 0; l < R.rows(); ++l) {
        for (std::size_t i = 0; i < R.cols(); ++i) {
          if (R.entry(l, i)) {
            b.rows.push_back(l);
            break;
          }
        }
      }
      for (auto l : b.rows) {
        for (auto i : b.cols) {
          if (!R.entry(l, i)) {
            return std::nullopt;
          }
        }
      }
      return b;
    }
  }  // namespace

  ReesStructure::ReesStructure(std::vector<std::vector<std::uint8_t>> matrix,
                               bool adjoin_identity)
      : _matrix(std::move(matrix)), _adjoin_identity(adjoin_identity) {
    if (_matrix.empty() || _matrix.front().empty()) {
      throw InputError("Rees matrix must have at least one row and column");
    }
    for (auto const& row : _matrix) {
      if (row.size() != _matrix.front().size()) {
        throw InputError("Rees matrix rows have different lengths");
      }
      for (auto x : row) {
        if (x > 1) {
          throw InputError("Rees matrix entries must be 0 or 1");
        }
      }
    }
    _block = compute_block(*this);
  }

  bool ReesStructure::all_ones() const {
    for (auto const& row : _matrix) {
      for (auto x : row) {
        if (x == 0) {
          return false;
        }
      }
    }
    return true;
  }

  bool ReesStructure::has_zero_entry() const {
    return !all_ones();
  }

  std::size_t rees_size(ReesStructure const& R) {
    return R.rows() * R.cols() + 1 + (R.adjoin_identity() ? 1 : 0);
  }

  Element rees_index(ReesStructure const& R, ReesElement x) {
    std::size_t const pairs = R.rows() * R.cols();
    switch (x.kind) {
      case ReesElement::Kind::pair:
        if (x.i >= R.cols() || x.lambda >= R.rows()) {
          throw InputError("Rees pair index out of range");
        }
        return static_cast<Element>(x.i * R.rows() + x.lambda);
      case ReesElement::Kind::zero:
        return static_cast<Element>(pairs);
      case ReesElement::Kind::one:
        if (!R.adjoin_identity()) {
          throw InputError("Rees structure has no adjoined identity");
        }
        return static_cast<Element>(pairs + 1);
    }
    return 0;  // unreachable
  }

  ReesElement rees_element(ReesStructure const& R, Element x) {
    std::size_t const pairs = R.rows() * R.cols();
    if (x < pairs) {
      return ReesElement::make_pair(x / R.rows(), x % R.rows());
    } else if (x == pairs) {
      return ReesElement::make_zero();
    } else if (x == pairs + 1 && R.adjoin_identity()) {
      return ReesElement::make_one();
    }
    throw InputError("element " + std::to_string(x)
                     + " is not in the Rees matrix semigroup");
  }

  std::string rees_name(ReesStructure const&, ReesElement x) {
    switch (x.kind) {
      case ReesElement::Kind::pair:
        return "[" + std::to_string(x.i + 1) + ","
               + std::to_string(x.lambda + 1) + "]";
      case ReesElement::Kind::zero:
        return "0";
      case ReesElement::Kind::one:
        return "1";
    }
    return "";  // unreachable
  }

  ReesElement rees_multiply(ReesStructure const& R, ReesElement a, ReesElement b) {
    using Kind = ReesElement::Kind;
    if (a.kind == Kind::one) {
      return b;
    }
    if (b.kind == Kind::one) {
      return a;
    }
    if (a.kind == Kind::zero || b.kind == Kind::zero
        || !R.entry(a.lambda, b.i)) {
      return ReesElement::make_zero();
    }
    return ReesElement::make_pair(a.i, b.lambda);
  }

  FiniteSemigroup build_rees(ReesStructure const& R) {
    std::size_t const        n = rees_size(R);
    std::vector<ReesElement> elements;
    std::vector<std::string> names;
    elements.reserve(n);
    for (Element x = 0; x < n; ++x) {
      elements.push_back(rees_element(R, x));
      names.push_back(rees_name(R, elements.back()));
    }
    std::vector<Element> table(n * n);
    for (Element a = 0; a < n; ++a) {
      for (Element b = 0; b < n; ++b) {
        table[a * n + b]
            = rees_index(R, rees_multiply(R, elements[a], elements[b]));
      }
    }
    std::optional<Element> one;
    if (R.adjoin_identity()) {
      one = rees_index(R, ReesElement::make_one());
    }
    return FiniteSemigroup(n,
                           std::move(table),
                           std::move(names),
                           one,
                           rees_index(R, ReesElement::make_zero()));
  }

  std::optional<Block> one_block(ReesStructure const& R) {
    return R.block();
  }

  std::optional<BlockViolation> block_violation(ReesStructure const& R) {
    for (std::size_t mu = 0; mu < R.rows(); ++mu) {
      for (std::size_t i = 0; i < R.cols(); ++i) {
        if (R.entry(mu, i)) {
          continue;
        }
        std::optional<std::size_t> lambda, j;
        for (std::size_t l = 0; l < R.rows() && !lambda; ++l) {
          if (R.entry(l, i)) {
            lambda = l;
          }
        }
        for (std::size_t c = 0; c < R.cols() && !j; ++c) {
          if (R.entry(mu, c)) {
            j = c;
          }
        }
        if (lambda && j) {
          return BlockViolation{i, *j, *lambda, mu};
        }
      }
    }
    return std::nullopt;
  }

  bool is_zero_simple_matrix(ReesStructure const& R) {
    for (std::size_t l = 0; l < R.rows(); ++l) {
      bool found = false;
      for (std::size_t i = 0; i < R.cols() && !found; ++i) {
        found = R.entry(l, i);
      }
      if (!found) {
        return false;
      }
    }
    for (std::size_t i = 0; i < R.cols(); ++i) {
      bool found = false;
      for (std::size_t l = 0; l < R.rows() && !found; ++l) {
        found = R.entry(l, i);
      }
      if (!found) {
        return false;
      }
    }
    return true;
  }

  bool has_zero_divisors(ReesStructure const& R) {
    return R.has_zero_entry();
  }

  ReesElement rees_product(ReesStructure const&         R,
                           std::span<ReesElement const> factors) {
    if (factors.empty()) {
      throw InputError("rees_product: empty product");
    }
    std::optional<ReesElement> first, last;
    for (auto const& x : factors) {
      if (x.kind == ReesElement::Kind::one) {
        continue;
      }
      if (x.kind == ReesElement::Kind::zero) {
        return ReesElement::make_zero();
      }
      if (last && !R.entry(last->lambda, x.i)) {
        return ReesElement::make_zero();
      }
      if (!first) {
        first = x;
      }
      last = x;
    }
    if (!first) {
      return ReesElement::make_one();
    }
    return ReesElement::make_pair(first->i, last->lambda);
  }

  bool is_rees_table(ReesStructure const& R, FiniteSemigroup const& S) {
    if (S.size() != rees_size(R)) {
      return false;
    }
    auto const& table = S.table();
    for (Element a = 0; a < S.size(); ++a) {
      for (Element b = 0; b < S.size(); ++b) {
        if (table[a * S.size() + b]
            != rees_index(
                R, rees_multiply(R, rees_element(R, a), rees_element(R, b)))) {
          return false;
        }
      }
    }
    return true;
  }

}  // namespace subpower
