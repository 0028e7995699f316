#ifndef QGP_TESTS_ORACLES_HPP_
#define QGP_TESTS_ORACLES_HPP_

// Brute-force reimplementations used to cross-check the library. They read
// only raw table cells, never the derived maps of a view.

#include <algorithm>
#include <array>
#include <map>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "qgp/carrier.hpp"
#include "qgp/constructions.hpp"

namespace qgp::oracle {

  inline bool def(StructureView const& s, index_type x, index_type y) {
    return is_defined(s.product(x, y));
  }

  // Same codomain: the same elements compose on the right.
  inline bool same_cod(StructureView const& s, index_type a, index_type b) {
    for (index_type y = 0; y < s.size(); ++y) {
      if (def(s, a, y) != def(s, b, y)) {
        return false;
      }
    }
    return true;
  }

  inline bool same_dom(StructureView const& s, index_type a, index_type b) {
    for (index_type y = 0; y < s.size(); ++y) {
      if (def(s, y, a) != def(s, y, b)) {
        return false;
      }
    }
    return true;
  }

  inline bool right_reversible(StructureView const& s) {
    auto const n = static_cast<index_type>(s.size());
    for (index_type a = 0; a < n; ++a) {
      for (index_type b = 0; b < n; ++b) {
        if (!same_cod(s, a, b)) {
          continue;
        }
        bool found = false;
        for (index_type p = 0; p < n && !found; ++p) {
          for (index_type q = 0; q < n && !found; ++q) {
            found = def(s, p, a) && s.product(p, a) == s.product(q, b);
          }
        }
        if (!found) {
          return false;
        }
      }
    }
    return true;
  }

  inline bool left_cancellative(StructureView const& s) {
    auto const n = static_cast<index_type>(s.size());
    for (index_type a = 0; a < n; ++a) {
      for (index_type x = 0; x < n; ++x) {
        for (index_type y = 0; y < n; ++y) {
          if (x != y && def(s, a, x) && s.product(a, x) == s.product(a, y)) {
            return false;
          }
        }
      }
    }
    return true;
  }

  inline bool right_cancellative(StructureView const& s) {
    auto const n = static_cast<index_type>(s.size());
    for (index_type a = 0; a < n; ++a) {
      for (index_type x = 0; x < n; ++x) {
        for (index_type y = 0; y < n; ++y) {
          if (x != y && def(s, x, a) && s.product(x, a) == s.product(y, a)) {
            return false;
          }
        }
      }
    }
    return true;
  }

  inline bool condition_c(StructureView const& s) {
    for (index_type a = 0; a < s.size(); ++a) {
      bool found = false;
      for (index_type x = 0; x < s.size() && !found; ++x) {
        found = def(s, x, a);
      }
      if (!found) {
        return false;
      }
    }
    return true;
  }

  inline bool connected_condition(StructureView const& s) {
    auto const n = static_cast<index_type>(s.size());
    for (index_type a = 0; a < n; ++a) {
      for (index_type b = 0; b < n; ++b) {
        bool found = false;
        for (index_type c = 0; c < n && !found; ++c) {
          for (index_type d = 0; d < n && !found; ++d) {
            found = same_dom(s, c, d) && same_cod(s, c, a) && same_cod(s, d, b);
          }
        }
        if (!found) {
          return false;
        }
      }
    }
    return true;
  }

  // Pairs with a common domain and the literal relation
  // (a,b) ~ (c,d) iff xa = yc and xb = yd for some x, y.
  struct PairRelation {
    std::vector<std::pair<index_type, index_type>> pairs;
    std::vector<std::vector<bool>>                 sim;
  };

  inline PairRelation direct_sim(StructureView const& s) {
    auto const   n = static_cast<index_type>(s.size());
    PairRelation out;
    for (index_type a = 0; a < n; ++a) {
      for (index_type b = 0; b < n; ++b) {
        if (same_dom(s, a, b)) {
          out.pairs.emplace_back(a, b);
        }
      }
    }
    auto const P = out.pairs.size();
    out.sim.assign(P, std::vector<bool>(P, false));
    for (std::size_t i = 0; i < P; ++i) {
      auto [a, b] = out.pairs[i];
      for (std::size_t j = 0; j < P; ++j) {
        auto [c, d] = out.pairs[j];
        for (index_type x = 0; x < n && !out.sim[i][j]; ++x) {
          for (index_type y = 0; y < n && !out.sim[i][j]; ++y) {
            auto xa = s.product(x, a), yc = s.product(y, c);
            auto xb = s.product(x, b), yd = s.product(y, d);
            out.sim[i][j] = is_known(xa) && xa == yc && is_known(xb) && xb == yd;
          }
        }
      }
    }
    return out;
  }

  // The bicyclic product (p,q)(u,v) = (p - q + s, v - u + s), s = max(q, u).
  inline std::pair<std::size_t, std::size_t> bicyclic(std::pair<std::size_t, std::size_t> x,
                                                      std::pair<std::size_t, std::size_t> y) {
    auto s = std::max(x.second, y.first);
    return {x.first - x.second + s, y.second - y.first + s};
  }

  struct BR {
    std::size_t m;
    index_type  a;
    std::size_t n;
  };

  // (m,a,n)(p,b,q) = (m-n+s, theta^(s-n)(a) theta^(s-p)(b), q-p+s).
  inline BR br_product(GroupTable const& g, std::vector<index_type> const& theta, BR x, BR y) {
    auto power = [&](index_type a, std::size_t k) {
      for (std::size_t i = 0; i < k; ++i) {
        a = theta[a];
      }
      return a;
    };
    auto s = std::max(x.n, y.m);
    return {x.m - x.n + s, g.mul(power(x.a, s - x.n), power(y.a, s - y.m)), y.n - y.m + s};
  }

  ////////////////////////////////////////////////////////////////////////
  // Random small partial algebras
  ////////////////////////////////////////////////////////////////////////

  inline std::vector<index_type> close_under_products(StructureView const&    s,
                                                      std::vector<index_type> elems) {
    std::set<index_type> in(elems.begin(), elems.end());
    bool                 grew = true;
    while (grew) {
      grew = false;
      for (auto x : std::vector<index_type>(in.begin(), in.end())) {
        for (auto y : std::vector<index_type>(in.begin(), in.end())) {
          auto xy = s.product(x, y);
          if (is_known(xy) && in.insert(xy).second) {
            grew = true;
          }
        }
      }
    }
    return {in.begin(), in.end()};
  }

  // Subcategory of a small connected groupoid generated by a random subset.
  inline StructureView random_subcategory(std::mt19937& rng) {
    auto g  = connected_groupoid(GroupTable::cyclic(1 + rng() % 3), 1 + rng() % 3);
    std::vector<index_type> pick;
    for (index_type x = 0; x < g.size(); ++x) {
      if (rng() % 5 < 2) {
        pick.push_back(x);
      }
    }
    if (pick.empty()) {
      pick.push_back(static_cast<index_type>(rng() % g.size()));
    }
    for (auto x : std::vector<index_type>(pick)) {
      pick.push_back(g.d(x));
      pick.push_back(g.r(x));
    }
    auto elems = close_under_products(g, pick);
    return view(sub_algebra(g.base(), elems, structure_kind::category), structure_kind::category);
  }

  // Subsemigroupoid of a small connected groupoid; identities not declared.
  inline StructureView random_subsemigroupoid(std::mt19937& rng) {
    auto g = connected_groupoid(GroupTable::cyclic(1 + rng() % 3), 1 + rng() % 3);
    std::vector<index_type> pick;
    for (index_type x = 0; x < g.size(); ++x) {
      if (rng() % 4 == 0) {
        pick.push_back(x);
      }
    }
    if (pick.empty()) {
      pick.push_back(static_cast<index_type>(rng() % g.size()));
    }
    auto elems = close_under_products(g, pick);
    return view(sub_algebra(g.base(), elems, structure_kind::semigroupoid),
                structure_kind::semigroupoid);
  }

  // Transformations of {0,1,2} generated by one or two random maps, with or
  // without the identity map.
  inline StructureView random_transformations(std::mt19937& rng, bool monoid) {
    using map3 = std::array<int, 3>;
    std::vector<map3> gens;
    for (int k = 0, g = 1 + static_cast<int>(rng() % 2); k < g; ++k) {
      gens.push_back({int(rng() % 3), int(rng() % 3), int(rng() % 3)});
    }
    std::set<map3> all(gens.begin(), gens.end());
    if (monoid) {
      all.insert({0, 1, 2});
    }
    auto compose = [](map3 const& f, map3 const& h) {  // f then h
      return map3{h[f[0]], h[f[1]], h[f[2]]};
    };
    bool grew = true;
    while (grew) {
      grew = false;
      for (auto const& f : std::vector<map3>(all.begin(), all.end())) {
        for (auto const& h : std::vector<map3>(all.begin(), all.end())) {
          grew |= all.insert(compose(f, h)).second;
        }
      }
    }
    std::vector<map3>        elems(all.begin(), all.end());
    std::vector<std::string> names;
    for (auto const& f : elems) {
      names.push_back("t" + std::to_string(f[0]) + std::to_string(f[1]) + std::to_string(f[2]));
    }
    auto const     kind = monoid ? structure_kind::category : structure_kind::semigroupoid;
    PartialAlgebra p(kind, names);
    for (index_type x = 0; x < elems.size(); ++x) {
      for (index_type y = 0; y < elems.size(); ++y) {
        auto fh = compose(elems[x], elems[y]);
        p.set(x, y, static_cast<index_type>(std::find(elems.begin(), elems.end(), fh) - elems.begin()));
      }
    }
    return view(std::move(p), kind);
  }

  // Free category on a random acyclic quiver with at most three vertices.
  inline StructureView random_free_category(std::mt19937& rng) {
    int const nv = 2 + static_cast<int>(rng() % 2);
    struct Arrow {
      int from, to;
    };
    std::vector<Arrow> arrows;
    for (int k = 0, na = 1 + static_cast<int>(rng() % 4); k < na; ++k) {
      int u = static_cast<int>(rng() % (nv - 1));
      int v = u + 1 + static_cast<int>(rng() % (nv - 1 - u));
      arrows.push_back({u, v});
    }
    struct Path {
      int              from, to;
      std::vector<int> arrows;
    };
    std::vector<Path> paths;
    for (int v = 0; v < nv; ++v) {
      paths.push_back({v, v, {}});
    }
    for (std::size_t i = 0; i < paths.size(); ++i) {
      for (int k = 0; k < static_cast<int>(arrows.size()); ++k) {
        if (arrows[k].from == paths[i].to) {
          auto p = paths[i];
          p.arrows.push_back(k);
          p.to = arrows[k].to;
          paths.push_back(p);
        }
      }
    }
    auto name = [&](Path const& p) {
      if (p.arrows.empty()) {
        return "i" + std::to_string(p.from);
      }
      std::string s;
      for (auto k : p.arrows) {
        s += "f" + std::to_string(k);
      }
      return s;
    };
    std::vector<std::string> names;
    for (auto const& p : paths) {
      names.push_back(name(p));
    }
    PartialAlgebra alg(structure_kind::category, names);
    for (index_type x = 0; x < paths.size(); ++x) {
      for (index_type y = 0; y < paths.size(); ++y) {
        if (paths[x].to != paths[y].from) {
          continue;
        }
        Path c{paths[x].from, paths[y].to, paths[x].arrows};
        c.arrows.insert(c.arrows.end(), paths[y].arrows.begin(), paths[y].arrows.end());
        auto nm = name(c);
        alg.set(x, y, static_cast<index_type>(std::find(names.begin(), names.end(), nm) - names.begin()));
      }
    }
    return view(std::move(alg), structure_kind::category);
  }

  // One generated algebra per seed, cycling through the generators.
  inline StructureView random_algebra(unsigned seed) {
    std::mt19937 rng(seed);
    switch (seed % 5) {
      case 0:
        return random_subcategory(rng);
      case 1:
        return random_subsemigroupoid(rng);
      case 2:
        return random_transformations(rng, true);
      case 3:
        return random_transformations(rng, false);
      default:
        return random_free_category(rng);
    }
  }

}  // namespace qgp::oracle

#endif  // QGP_TESTS_ORACLES_HPP_
