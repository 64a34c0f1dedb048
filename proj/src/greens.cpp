// subpower - finite semigroups and the subpower membership problem

#include "subpower/greens.hpp"

#include <map>      // for map
#include <numeric>  // for iota
#include <utility>  // for pair

#include <boost/graph/adjacency_list.hpp>
#include <boost/graph/strong_components.hpp>

#include "subpower/exception.hpp"  // for InputError

namespace subpower {

  namespace {
    using Graph
        = boost::adjacency_list<boost::vecS, boost::vecS, boost::directedS>;

    enum class Side { right, left, both };

    Graph cayley_graph(FiniteSemigroup const& S, Side side) {
      Graph g(S.size());
      for (Element x = 0; x < S.size(); ++x) {
        for (Element a = 0; a < S.size(); ++a) {
          if (side != Side::left) {
            boost::add_edge(x, S.product(x, a), g);
          }
          if (side != Side::right) {
            boost::add_edge(x, S.product(a, x), g);
          }
        }
      }
      return g;
    }

    // Relabels so that classes are numbered in order of their least element.
    std::size_t canonicalise(std::vector<std::size_t>& ids) {
      std::map<std::size_t, std::size_t> relabel;
      for (auto& id : ids) {
        auto [it, _] = relabel.emplace(id, relabel.size());
        id           = it->second;
      }
      return relabel.size();
    }

    std::size_t components(Graph const& g, std::vector<std::size_t>& out) {
      std::vector<int> comp(boost::num_vertices(g));
      boost::strong_components(
          g,
          boost::make_iterator_property_map(comp.begin(),
                                            boost::get(boost::vertex_index, g)));
      out.assign(comp.begin(), comp.end());
      return canonicalise(out);
    }

    std::size_t find_root(std::vector<std::size_t>& parent, std::size_t x) {
      while (parent[x] != x) {
        parent[x] = parent[parent[x]];
        x         = parent[x];
      }
      return x;
    }
  }  // namespace

  std::vector<std::size_t> GreensStructure::j_class_sizes() const {
    std::vector<std::size_t> sizes(nr_j_classes, 0);
    for (auto c : j_class) {
      ++sizes[c];
    }
    return sizes;
  }

  GreensStructure compute_greens(FiniteSemigroup const& S) {
    GreensStructure gs;
    std::size_t const n = S.size();

    gs.nr_r_classes = components(cayley_graph(S, Side::right), gs.r_class);
    gs.nr_l_classes = components(cayley_graph(S, Side::left), gs.l_class);
    gs.nr_j_classes = components(cayley_graph(S, Side::both), gs.j_class);

    std::map<std::pair<std::size_t, std::size_t>, std::size_t> h_ids;
    gs.h_class.resize(n);
    for (Element x = 0; x < n; ++x) {
      auto [it, _] = h_ids.emplace(std::pair{gs.r_class[x], gs.l_class[x]},
                                   h_ids.size());
      gs.h_class[x] = it->second;
    }
    gs.nr_h_classes = h_ids.size();

    // D is the join of R and L: union the elements of each R- and L-class.
    std::vector<std::size_t> parent(n);
    std::iota(parent.begin(), parent.end(), 0);
    std::vector<std::size_t> first_r(gs.nr_r_classes, n);
    std::vector<std::size_t> first_l(gs.nr_l_classes, n);
    for (Element x = 0; x < n; ++x) {
      for (auto [cls, first] : {std::pair{gs.r_class[x], &first_r},
                                std::pair{gs.l_class[x], &first_l}}) {
        auto& f = (*first)[cls];
        if (f == n) {
          f = x;
        } else {
          parent[find_root(parent, x)] = find_root(parent, f);
        }
      }
    }
    gs.d_class.resize(n);
    for (Element x = 0; x < n; ++x) {
      gs.d_class[x] = find_root(parent, x);
    }
    gs.nr_d_classes = canonicalise(gs.d_class);

    // Strict J-order by reachability in the condensation of the two-sided
    // Cayley graph.
    std::size_t const                     k = gs.nr_j_classes;
    std::vector<std::vector<std::size_t>> succ(k);
    {
      std::vector<std::vector<bool>> edge(k, std::vector<bool>(k, false));
      for (Element x = 0; x < n; ++x) {
        auto cx = gs.j_class[x];
        for (Element a = 0; a < n; ++a) {
          for (auto y : {S.product(x, a), S.product(a, x)}) {
            auto cy = gs.j_class[y];
            if (cy != cx && !edge[cx][cy]) {
              edge[cx][cy] = true;
              succ[cx].push_back(cy);
            }
          }
        }
      }
    }
    gs.j_below.assign(k, std::vector<bool>(k, false));
    for (std::size_t c = 0; c < k; ++c) {
      std::vector<std::size_t> stack(succ[c].begin(), succ[c].end());
      while (!stack.empty()) {
        auto d = stack.back();
        stack.pop_back();
        if (gs.j_below[d][c]) {
          continue;
        }
        gs.j_below[d][c] = true;
        stack.insert(stack.end(), succ[d].begin(), succ[d].end());
      }
    }
    return gs;
  }

  bool generates_group(FiniteSemigroup const&  S,
                       GreensStructure const& greens,
                       Element                s) {
    if (!S.contains(s)) {
      throw InputError("generates_group: element index out of range");
    }
    return greens.j_equivalent(S.product(s, s), s);
  }

  bool generates_group(FiniteSemigroup const& S, Element s) {
    return generates_group(S, compute_greens(S), s);
  }

  bool is_group_h_class(FiniteSemigroup const&  S,
                        GreensStructure const& greens,
                        Element                x) {
    for (Element y = 0; y < S.size(); ++y) {
      if (greens.h_class[y] == greens.h_class[x] && S.product(y, y) == y) {
        return true;
      }
    }
    return false;
  }

}  // namespace subpower
