#include "qgp/constructions.hpp"

#include <algorithm>
#include <array>
#include <set>

namespace qgp {

  ////////////////////////////////////////////////////////////////////////
  // Groups and endomorphisms
  ////////////////////////////////////////////////////////////////////////

  GroupTable::GroupTable(PartialAlgebra table) : _table(std::move(table)) {
    auto const n = static_cast<index_type>(_table.size());
    if (n == 0) {
      throw axiom_violation("group", {}, "empty group");
    }
    auto N = [this](std::initializer_list<index_type> xs) {
      std::vector<std::string> out;
      for (auto x : xs) {
        out.push_back(_table.name(x));
      }
      return out;
    };
    for (index_type x = 0; x < n; ++x) {
      for (index_type y = 0; y < n; ++y) {
        if (!is_known(_table.at(x, y))) {
          throw axiom_violation("totality", N({x, y}), "group table must be total");
        }
      }
    }
    for (index_type x = 0; x < n; ++x) {
      for (index_type y = 0; y < n; ++y) {
        for (index_type z = 0; z < n; ++z) {
          if (mul(mul(x, y), z) != mul(x, mul(y, z))) {
            throw axiom_violation("associativity", N({x, y, z}), "(xy)z != x(yz)");
          }
        }
      }
    }
    _identity = UNDEFINED;
    for (index_type e = 0; e < n && _identity == UNDEFINED; ++e) {
      bool ok = true;
      for (index_type x = 0; x < n && ok; ++x) {
        ok = mul(e, x) == x && mul(x, e) == x;
      }
      if (ok) {
        _identity = e;
      }
    }
    if (_identity == UNDEFINED) {
      throw axiom_violation("identity", {}, "group has no identity");
    }
    _inverse.assign(n, UNDEFINED);
    for (index_type x = 0; x < n; ++x) {
      for (index_type y = 0; y < n; ++y) {
        if (mul(x, y) == _identity && mul(y, x) == _identity) {
          _inverse[x] = y;
          break;
        }
      }
      if (_inverse[x] == UNDEFINED) {
        throw axiom_violation("inverse", N({x}), "element has no inverse");
      }
    }
  }

  GroupTable GroupTable::cyclic(std::size_t n) {
    if (n == 0) {
      throw construction_error("cyclic group of order 0");
    }
    std::vector<std::string> names;
    for (std::size_t k = 0; k < n; ++k) {
      names.push_back(k == 0 ? "e" : k == 1 ? "a" : "a" + std::to_string(k));
    }
    PartialAlgebra p(structure_kind::semigroup, names);
    for (index_type x = 0; x < n; ++x) {
      for (index_type y = 0; y < n; ++y) {
        p.set(x, y, static_cast<index_type>((x + y) % n));
      }
    }
    return GroupTable(std::move(p));
  }

  GroupTable GroupTable::symmetric3() {
    using Perm = std::array<int, 3>;
    // (p q)(i) = q(p(i))
    auto compose = [](Perm const& p, Perm const& q) {
      return Perm{q[p[0]], q[p[1]], q[p[2]]};
    };
    Perm const              e{0, 1, 2}, r{1, 2, 0}, s{1, 0, 2};
    std::vector<Perm>       perms = {e, r, compose(r, r), s, compose(s, r), compose(compose(s, r), r)};
    std::vector<std::string> names = {"e", "r", "r2", "s", "sr", "sr2"};
    PartialAlgebra          p(structure_kind::semigroup, names);
    for (index_type x = 0; x < 6; ++x) {
      for (index_type y = 0; y < 6; ++y) {
        auto c = compose(perms[x], perms[y]);
        auto it = std::find(perms.begin(), perms.end(), c);
        p.set(x, y, static_cast<index_type>(it - perms.begin()));
      }
    }
    return GroupTable(std::move(p));
  }

  Endo::Endo(GroupTable const& g, std::vector<index_type> map) : _map(std::move(map)) {
    if (_map.size() != g.size()) {
      throw construction_error("endomorphism has the wrong size");
    }
    for (auto v : _map) {
      if (v >= g.size()) {
        throw construction_error("endomorphism value out of range");
      }
    }
    if (_map[g.identity()] != g.identity()) {
      throw construction_error("endomorphism does not fix the identity");
    }
    for (index_type x = 0; x < g.size(); ++x) {
      for (index_type y = 0; y < g.size(); ++y) {
        if (_map[g.mul(x, y)] != g.mul(_map[x], _map[y])) {
          throw construction_error("map is not multiplicative at (" + g.name(x) + ", "
                                   + g.name(y) + ")");
        }
      }
    }
  }

  Endo Endo::identity(GroupTable const& g) {
    std::vector<index_type> m(g.size());
    for (index_type x = 0; x < g.size(); ++x) {
      m[x] = x;
    }
    return Endo(g, m);
  }

  Endo Endo::trivial(GroupTable const& g) {
    return Endo(g, std::vector<index_type>(g.size(), g.identity()));
  }

  ////////////////////////////////////////////////////////////////////////
  // Groupoids and Brandt semigroups
  ////////////////////////////////////////////////////////////////////////

  namespace {

    std::string triple(std::size_t i, std::string const& g, std::size_t j) {
      return "(" + std::to_string(i) + "," + g + "," + std::to_string(j) + ")";
    }

    std::string window_name(GroupTable const& g, std::size_t m, index_type a, std::size_t n) {
      if (g.size() == 1) {
        return "(" + std::to_string(m) + "," + std::to_string(n) + ")";
      }
      return triple(m, g.name(a), n);
    }

    std::vector<std::string> grid_names(GroupTable const& g, std::size_t n, bool one_based) {
      std::vector<std::string> names;
      for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
          for (index_type a = 0; a < g.size(); ++a) {
            names.push_back(one_based ? triple(i + 1, g.name(a), j + 1)
                                      : window_name(g, i, a, j));
          }
        }
      }
      return names;
    }

    index_type grid_index(GroupTable const& g, std::size_t n, std::size_t i, index_type a, std::size_t j) {
      return static_cast<index_type>((i * n + j) * g.size() + a);
    }

  }  // namespace

  StructureView connected_groupoid(GroupTable const& g, std::size_t n) {
    if (n == 0) {
      throw construction_error("index set must be nonempty");
    }
    PartialAlgebra p(structure_kind::groupoid, grid_names(g, n, true));
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        for (std::size_t k = 0; k < n; ++k) {
          for (index_type a = 0; a < g.size(); ++a) {
            for (index_type b = 0; b < g.size(); ++b) {
              p.set(grid_index(g, n, i, a, j),
                    grid_index(g, n, j, b, k),
                    grid_index(g, n, i, g.mul(a, b), k));
            }
          }
        }
      }
    }
    return view(std::move(p), structure_kind::groupoid);
  }

  StructureView brandt(GroupTable const& g, std::size_t n) {
    if (n == 0) {
      throw construction_error("index set must be nonempty");
    }
    auto names = grid_names(g, n, true);
    names.push_back("0");
    auto const     z = static_cast<index_type>(names.size() - 1);
    PartialAlgebra p(structure_kind::inverse_semigroup, names);
    for (index_type x = 0; x <= z; ++x) {
      for (index_type y = 0; y <= z; ++y) {
        p.set(x, y, z);
      }
    }
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        for (std::size_t k = 0; k < n; ++k) {
          for (std::size_t l = 0; l < n; ++l) {
            if (j != k) {
              continue;
            }
            for (index_type a = 0; a < g.size(); ++a) {
              for (index_type b = 0; b < g.size(); ++b) {
                p.set(grid_index(g, n, i, a, j),
                      grid_index(g, n, k, b, l),
                      grid_index(g, n, i, g.mul(a, b), l));
              }
            }
          }
        }
      }
    }
    p.set_zero(z);
    return view(std::move(p), structure_kind::inverse_semigroup);
  }

  StructureView zero_direct_union(std::vector<StructureView> const& parts) {
    if (parts.empty()) {
      throw construction_error("0-direct union of no parts");
    }
    bool all_inverse = true;
    for (auto const& s : parts) {
      if (!s.zero()) {
        throw construction_error("part without a zero");
      }
      all_inverse = all_inverse && s.kind() == structure_kind::inverse_semigroup;
    }
    std::vector<std::string>                           names;
    std::set<std::string>                              used;
    std::vector<std::vector<index_type>>               pos(parts.size());
    for (std::size_t k = 0; k < parts.size(); ++k) {
      auto const& s = parts[k];
      pos[k].assign(s.size(), UNDEFINED);
      for (index_type x = 0; x < s.size(); ++x) {
        if (x == *s.zero()) {
          continue;
        }
        auto nm = s.name(x);
        if (used.count(nm)) {
          nm += "_" + std::to_string(k + 1);
          while (used.count(nm)) {
            nm += "_";
          }
        }
        used.insert(nm);
        pos[k][x] = static_cast<index_type>(names.size());
        names.push_back(nm);
      }
    }
    std::string zname = "0";
    while (used.count(zname)) {
      zname += "_";
    }
    names.push_back(zname);
    auto const     z = static_cast<index_type>(names.size() - 1);
    PartialAlgebra p(all_inverse ? structure_kind::inverse_semigroup : structure_kind::semigroup,
                     names);
    for (index_type x = 0; x <= z; ++x) {
      for (index_type y = 0; y <= z; ++y) {
        p.set(x, y, z);
      }
    }
    bool windowed = false;
    for (std::size_t k = 0; k < parts.size(); ++k) {
      auto const& s = parts[k];
      windowed      = windowed || s.windowed();
      for (index_type x = 0; x < s.size(); ++x) {
        for (index_type y = 0; y < s.size(); ++y) {
          if (pos[k][x] == UNDEFINED || pos[k][y] == UNDEFINED) {
            continue;
          }
          auto c = s.product(x, y);
          if (c == UNKNOWN) {
            p.set(pos[k][x], pos[k][y], UNKNOWN);
          } else if (c != *s.zero()) {
            p.set(pos[k][x], pos[k][y], pos[k][c]);
          }
        }
      }
    }
    p.set_windowed(windowed);
    p.set_zero(z);
    auto k = p.kind();
    return view(std::move(p), k);
  }

  ////////////////////////////////////////////////////////////////////////
  // Bruck-Reilly
  ////////////////////////////////////////////////////////////////////////

  index_type theta_power(Endo const& theta, index_type a, std::size_t k) {
    for (std::size_t i = 0; i < k; ++i) {
      a = theta(a);
    }
    return a;
  }

  BRElement bruck_reilly_product(GroupTable const& g,
                                 Endo const&       theta,
                                 BRElement const&  x,
                                 BRElement const&  y) {
    auto const s = std::max(x.n, y.m);
    return {x.m - x.n + s,
            g.mul(theta_power(theta, x.a, s - x.n), theta_power(theta, y.a, s - y.m)),
            y.n - y.m + s};
  }

  index_type window_index(GroupTable const& g, std::size_t n_max, BRElement const& x) {
    return grid_index(g, n_max + 1, x.m, x.a, x.n);
  }

  StructureView bruck_reilly_window(GroupTable const& g, Endo const& theta, std::size_t n_max) {
    auto const     w = n_max + 1;
    PartialAlgebra p(structure_kind::inverse_semigroup, grid_names(g, w, false));
    p.set_windowed(true);
    // pw[k][a] = a theta^k
    std::vector<std::vector<index_type>> pw(w, std::vector<index_type>(g.size()));
    for (index_type a = 0; a < g.size(); ++a) {
      pw[0][a] = a;
    }
    for (std::size_t k = 1; k < w; ++k) {
      for (index_type a = 0; a < g.size(); ++a) {
        pw[k][a] = theta(pw[k - 1][a]);
      }
    }
    for (std::size_t m = 0; m < w; ++m) {
      for (std::size_t n = 0; n < w; ++n) {
        for (std::size_t q = 0; q < w; ++q) {
          for (std::size_t r = 0; r < w; ++r) {
            auto const s  = std::max(n, q);
            auto const lm = m - n + s;
            auto const rn = r - q + s;
            for (index_type a = 0; a < g.size(); ++a) {
              for (index_type b = 0; b < g.size(); ++b) {
                auto x = grid_index(g, w, m, a, n);
                auto y = grid_index(g, w, q, b, r);
                if (lm > n_max || rn > n_max) {
                  p.set(x, y, UNKNOWN);
                } else {
                  p.set(x, y, grid_index(g, w, lm, g.mul(pw[s - n][a], pw[s - q][b]), rn));
                }
              }
            }
          }
        }
      }
    }
    return view(std::move(p), structure_kind::inverse_semigroup);
  }

  InductiveGroupoid omega_groupoid_window(GroupTable const& g, std::size_t n_max) {
    return omega_groupoid_window(g, Endo::identity(g), n_max);
  }

  InductiveGroupoid omega_groupoid_window(GroupTable const& g,
                                          Endo const&       theta,
                                          std::size_t       n_max) {
    auto const     w = n_max + 1;
    PartialAlgebra p(structure_kind::groupoid, grid_names(g, w, false));
    p.set_windowed(true);
    for (std::size_t i = 0; i < w; ++i) {
      for (std::size_t j = 0; j < w; ++j) {
        for (std::size_t k = 0; k < w; ++k) {
          for (index_type a = 0; a < g.size(); ++a) {
            for (index_type b = 0; b < g.size(); ++b) {
              p.set(grid_index(g, w, i, a, j),
                    grid_index(g, w, j, b, k),
                    grid_index(g, w, i, g.mul(a, b), k));
            }
          }
        }
      }
    }
    Relation ord(p.size());
    for (std::size_t m = 0; m < w; ++m) {
      for (std::size_t n = 0; n < w; ++n) {
        for (std::size_t q = 0; q <= m; ++q) {
          auto const k = m - q;
          if (n < k) {
            continue;
          }
          auto const r = n - k;
          for (index_type b = 0; b < g.size(); ++b) {
            ord.set(grid_index(g, w, m, theta_power(theta, b, k), n), grid_index(g, w, q, b, r));
          }
        }
      }
    }
    p.set_order(std::move(ord));
    return make_inductive(view(std::move(p), structure_kind::groupoid));
  }

  StructureView additive_window(std::size_t n_max, bool with_zero) {
    std::size_t const        lo = with_zero ? 0 : 1;
    std::vector<std::string> names;
    for (std::size_t k = lo; k <= n_max; ++k) {
      names.push_back(std::to_string(k));
    }
    auto const     kind = with_zero ? structure_kind::category : structure_kind::semigroupoid;
    PartialAlgebra p(kind, names);
    p.set_windowed(true);
    for (std::size_t a = lo; a <= n_max; ++a) {
      for (std::size_t b = lo; b <= n_max; ++b) {
        p.set(static_cast<index_type>(a - lo),
              static_cast<index_type>(b - lo),
              a + b <= n_max ? static_cast<index_type>(a + b - lo) : UNKNOWN);
      }
    }
    return view(std::move(p), kind);
  }

  ////////////////////////////////////////////////////////////////////////
  // Omega indexing
  ////////////////////////////////////////////////////////////////////////

  OmegaIndexing omega_indexing(StructureView const& ambient, std::vector<index_type> const& s) {
    if (ambient.kind() != structure_kind::inverse_semigroup) {
      throw incompatible_kind("omega indexing needs an inverse semigroup window");
    }
    auto es = idempotents(ambient);
    for (auto e : es) {
      for (auto f : es) {
        auto ef = ambient.product(e, f);
        if (ef != e && ef != f) {
          throw incompatible_kind("idempotents " + ambient.name(e) + ", " + ambient.name(f)
                                  + " do not form a chain");
        }
      }
    }
    // depth(e) = number of idempotents strictly above e
    std::vector<std::size_t> depth(ambient.size(), 0);
    for (auto e : es) {
      for (auto f : es) {
        if (f != e && ambient.product(e, f) == e) {
          ++depth[e];
        }
      }
    }
    OmegaIndexing out;
    out.depth    = es.size();
    out.elements = s;
    for (auto a : s) {
      auto d = ambient.d(a), r = ambient.r(a);
      if (!is_known(d) || !is_known(r)) {
        throw incompatible_kind("no inverse known for " + ambient.name(a));
      }
      out.phi.emplace_back(depth[d], depth[r]);
      out.H[out.phi.back()].push_back(a);
    }
    return out;
  }

  namespace {
    using Pair = std::pair<std::size_t, std::size_t>;

    Pair bicyclic(Pair x, Pair y) {
      auto s = std::max(x.second, y.first);
      return {x.first - x.second + s, y.second - y.first + s};
    }

    std::string pair_name(Pair p) {
      return "(" + std::to_string(p.first) + "," + std::to_string(p.second) + ")";
    }
  }  // namespace

  CheckReport check_omega_a(StructureView const& ambient, OmegaIndexing const& idx) {
    (void) ambient;
    auto const n = idx.elements.size();
    for (std::size_t i = 0; i < idx.depth; ++i) {
      for (std::size_t j = 0; j < idx.depth; ++j) {
        bool found = false;
        for (std::size_t a = 0; a < n && !found; ++a) {
          Pair ainv{idx.l(a), idx.r(a)};
          for (std::size_t b = 0; b < n && !found; ++b) {
            found = bicyclic(ainv, idx.phi[b]) == Pair{i, j};
          }
        }
        if (!found) {
          return CheckReport::make_fails("omega-a",
                                         {pair_name({i, j})},
                                         "bicyclic element is not (a phi)^-1 (b phi) for a, b in S");
        }
      }
    }
    return CheckReport::make_holds("omega-a", "holds on the window");
  }

  CheckReport check_omega_b(StructureView const& ambient, OmegaIndexing const& idx) {
    auto const n = idx.elements.size();
    auto const& E = idx.elements;
    for (std::size_t x = 0; x < n; ++x) {
      for (std::size_t y = 0; y < n; ++y) {
        if (x == y) {
          continue;
        }
        for (std::size_t a = 0; a < n; ++a) {
          if (idx.l(x) >= idx.r(a) && idx.l(y) >= idx.r(a)) {
            auto xa = ambient.product(E[x], E[a]), ya = ambient.product(E[y], E[a]);
            if (is_known(xa) && xa == ya) {
              return CheckReport::make_fails("omega-b",
                                             ambient.names({E[x], E[y], E[a]}),
                                             "l(x), l(y) >= r(a) and xa = ya with x != y");
            }
          }
          if (idx.r(x) >= idx.l(a) && idx.r(y) >= idx.l(a)) {
            auto ax = ambient.product(E[a], E[x]), ay = ambient.product(E[a], E[y]);
            if (is_known(ax) && ax == ay) {
              return CheckReport::make_fails("omega-b",
                                             ambient.names({E[x], E[y], E[a]}),
                                             "r(x), r(y) >= l(a) and ax = ay with x != y");
            }
          }
        }
      }
    }
    return CheckReport::make_holds("omega-b", "holds on the window");
  }

  CheckReport check_omega_c(StructureView const& ambient,
                            OmegaIndexing const& idx,
                            h_class_reading      reading) {
    auto const  n = idx.elements.size();
    auto const& E = idx.elements;
    for (std::size_t b = 0; b < n; ++b) {
      for (std::size_t c = 0; c < n; ++c) {
        auto const m  = std::max(idx.l(b), idx.l(c));
        auto const lx = idx.r(b) - idx.l(b) + m;
        auto const ly = idx.r(c) - idx.l(c) + m;
        bool       found = false;
        for (std::size_t x = 0; x < n && !found; ++x) {
          if (idx.l(x) != lx) {
            continue;
          }
          auto xb = ambient.product(E[x], E[b]);
          if (!is_known(xb)) {
            continue;
          }
          for (std::size_t y = 0; y < n && !found; ++y) {
            if (idx.l(y) != ly) {
              continue;
            }
            if (reading == h_class_reading::literal && idx.r(y) != idx.r(x)) {
              continue;
            }
            found = ambient.product(E[y], E[c]) == xb;
          }
        }
        if (!found) {
          auto w = ambient.names({E[b], E[c]});
          if (ambient.windowed()) {
            return CheckReport::make_inconclusive(
                "omega-c",
                "no x, y in the prescribed H-classes with xb = yc inside the window for ("
                    + w[0] + ", " + w[1] + ")");
          }
          return CheckReport::make_fails(
              "omega-c", w, "no x, y in the prescribed H-classes with xb = yc");
        }
      }
    }
    return CheckReport::make_holds("omega-c", ambient.windowed() ? "holds on the window" : "");
  }

}  // namespace qgp
