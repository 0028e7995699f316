#include "qgp/bridges.hpp"

#include <algorithm>
#include <map>

#include "qgp/axioms.hpp"
#include "qgp/union_find.hpp"

namespace qgp {

  namespace {

    StructureView inverse_view_of(StructureView const& q) {
      if (q.kind() == structure_kind::inverse_semigroup) {
        return q;
      }
      if (q.kind() != structure_kind::semigroup) {
        throw incompatible_kind("expected an inverse semigroup, got "
                                + std::string(to_string(q.kind())));
      }
      auto r = check(q, "inverse-semigroup");
      if (!r.holds()) {
        throw precondition_failed(r);
      }
      return view(q.base_ptr(), structure_kind::inverse_semigroup);
    }

    void raise(CheckReport const& r) {
      if (r.fails()) {
        throw precondition_failed(r);
      }
      if (r.inconclusive()) {
        throw window_exhausted(r.property + ": " + r.detail);
      }
    }

    void check_closed(std::vector<index_type> const& s, StructureView const& q) {
      std::vector<bool> in(q.size(), false);
      for (auto x : s) {
        in[x] = true;
      }
      for (auto x : s) {
        for (auto y : s) {
          auto xy = q.product(x, y);
          if (is_known(xy) && !in[xy]) {
            throw not_a_subsemigroup(q.names({x, y}),
                                     "product " + q.name(xy) + " is not in the subset");
          }
        }
      }
    }

    std::vector<index_type> sorted_unique(std::vector<index_type> v) {
      std::sort(v.begin(), v.end());
      v.erase(std::unique(v.begin(), v.end()), v.end());
      return v;
    }

  }  // namespace

  StructureView adjoin_zero(StructureView const& g) {
    if (g.kind() != structure_kind::groupoid) {
      throw incompatible_kind("adjoin_zero needs a groupoid");
    }
    std::string zname = "0";
    while (g.base().find(zname)) {
      zname += "_";
    }
    auto names = g.base().names();
    names.push_back(zname);
    auto const     n = static_cast<index_type>(g.size());
    PartialAlgebra p(structure_kind::inverse_semigroup, names);
    p.set_windowed(g.windowed());
    for (index_type x = 0; x <= n; ++x) {
      for (index_type y = 0; y <= n; ++y) {
        auto c = (x < n && y < n) ? g.product(x, y) : UNDEFINED;
        p.set(x, y, is_defined(c) ? c : n);
      }
    }
    p.set_zero(n);
    return view(std::move(p), structure_kind::inverse_semigroup);
  }

  StructureView strip_zero(StructureView const& q) {
    if (q.kind() != structure_kind::semigroup && q.kind() != structure_kind::inverse_semigroup) {
      throw incompatible_kind("strip_zero needs an inverse semigroup with zero");
    }
    if (!q.zero()) {
      throw incompatible_kind("strip_zero needs a zero");
    }
    raise(check(q, "categorical-at-0"));
    auto       iq = inverse_view_of(q);
    auto const z  = *iq.zero();
    std::vector<index_type> keep;
    for (index_type x = 0; x < iq.size(); ++x) {
      if (x != z) {
        keep.push_back(x);
      }
    }
    std::vector<std::string> names;
    for (auto x : keep) {
      names.push_back(iq.name(x));
    }
    PartialAlgebra p(structure_kind::groupoid, names);
    p.set_windowed(iq.windowed());
    auto pos = [z](index_type x) { return x < z ? x : x - 1; };
    for (index_type i = 0; i < keep.size(); ++i) {
      for (index_type j = 0; j < keep.size(); ++j) {
        auto x = keep[i], y = keep[j];
        if (is_known(iq.r(x)) && iq.r(x) == iq.d(y)) {
          auto c = iq.product(x, y);
          p.set(i, j, is_known(c) ? pos(c) : c);
        }
      }
    }
    return view(std::move(p), structure_kind::groupoid);
  }

  std::vector<index_type> embed_subsemigroup(PartialAlgebra const& s, StructureView const& q) {
    std::vector<index_type> m;
    for (auto const& nm : s.names()) {
      auto i = q.base().find(nm);
      if (!i) {
        throw not_a_subsemigroup({nm}, "element is not in the ambient semigroup");
      }
      m.push_back(*i);
    }
    for (index_type x = 0; x < s.size(); ++x) {
      for (index_type y = 0; y < s.size(); ++y) {
        auto c = s.at(x, y);
        auto d = q.product(m[x], m[y]);
        if (is_known(c) && is_known(d) && m[c] != d) {
          throw not_a_subsemigroup({s.name(x), s.name(y)},
                                   "product disagrees with the ambient table");
        }
      }
    }
    check_closed(m, q);
    return m;
  }

  StructureView augment(std::vector<index_type> const& s, StructureView const& q) {
    auto iq = inverse_view_of(q);
    raise(check(iq, "primitive"));
    check_closed(s, iq);
    auto const z = *iq.zero();
    auto       c = s;
    for (auto e : idempotents(iq)) {
      c.push_back(e);
    }
    c = sorted_unique(c);
    c.erase(std::remove(c.begin(), c.end(), z), c.end());
    auto                    g = strip_zero(iq);
    std::vector<index_type> gi;
    for (auto x : c) {
      gi.push_back(g.index(iq.name(x)));
    }
    return view(sub_algebra(g.base(), gi, structure_kind::category), structure_kind::category);
  }

  IOrderResult check_left_i_order(std::vector<index_type> const& s_in,
                                  StructureView const&           q_in,
                                  bool                           straight) {
    auto        q    = inverse_view_of(q_in);
    auto        s    = sorted_unique(s_in);
    std::string prop = straight ? "straight-left-i-order" : "left-i-order";
    check_closed(s, q);
    IOrderWitness w;
    w.straight = straight;
    for (index_type t = 0; t < q.size(); ++t) {
      bool found = false;
      for (auto a : s) {
        auto ai = q.inv(a);
        if (!is_known(ai)) {
          continue;
        }
        for (auto b : s) {
          if (straight && !(is_known(q.d(a)) && q.d(a) == q.d(b))) {
            continue;
          }
          if (q.product(ai, b) == t) {
            w.pairs.emplace_back(a, b);
            found = true;
            break;
          }
        }
        if (found) {
          break;
        }
      }
      if (!found) {
        std::string detail = "no a, b in S with a^-1 b = " + q.name(t);
        if (straight) {
          detail += " and aa^-1 = bb^-1";
        }
        if (q.windowed()) {
          return {CheckReport::make_inconclusive(prop, detail + " inside the window"),
                  std::nullopt};
        }
        return {CheckReport::make_fails(prop, {q.name(t)}, detail), std::nullopt};
      }
    }
    return {CheckReport::make_holds(prop, q.windowed() ? "holds on the window" : ""), w};
  }

  ////////////////////////////////////////////////////////////////////////
  // Inductive groupoids
  ////////////////////////////////////////////////////////////////////////

  InductiveGroupoid::InductiveGroupoid(StructureView g, std::vector<index_type> meet, bool star)
      : _g(std::move(g)), _meet(std::move(meet)), _star(star) {}

  index_type InductiveGroupoid::restriction(index_type x, index_type e) const {
    auto const& ord = order();
    index_type  out = UNDEFINED;
    for (index_type t = 0; t < _g.size(); ++t) {
      if (ord(t, x) && _g.d(t) == e) {
        if (out != UNDEFINED) {
          return UNDEFINED;
        }
        out = t;
      }
    }
    return out;
  }

  index_type InductiveGroupoid::corestriction(index_type e, index_type x) const {
    auto const& ord = order();
    index_type  out = UNDEFINED;
    for (index_type t = 0; t < _g.size(); ++t) {
      if (ord(t, x) && _g.r(t) == e) {
        if (out != UNDEFINED) {
          return UNDEFINED;
        }
        out = t;
      }
    }
    return out;
  }

  InductiveGroupoid to_inductive(StructureView const& q_in, bool keep_zero) {
    auto q = inverse_view_of(q_in);
    std::vector<index_type> keep;
    for (index_type x = 0; x < q.size(); ++x) {
      if (keep_zero || !q.zero() || x != *q.zero()) {
        keep.push_back(x);
      }
    }
    std::vector<index_type> pos(q.size(), UNDEFINED);
    std::vector<std::string> names;
    for (index_type i = 0; i < keep.size(); ++i) {
      pos[keep[i]] = i;
      names.push_back(q.name(keep[i]));
    }
    auto const     m = static_cast<index_type>(keep.size());
    PartialAlgebra p(structure_kind::groupoid, names);
    p.set_windowed(q.windowed());
    Relation ord(m);
    for (index_type i = 0; i < m; ++i) {
      auto x = keep[i];
      for (index_type j = 0; j < m; ++j) {
        auto y = keep[j];
        if (is_known(q.r(x)) && q.r(x) == q.d(y)) {
          auto c = q.product(x, y);
          p.set(i, j, is_known(c) ? pos[c] : c);
        }
        // x <= y iff x = (xx^-1) y
        ord.set(i, j, is_known(q.d(x)) && q.product(q.d(x), y) == x);
      }
    }
    p.set_order(ord);
    auto g = view(std::move(p), structure_kind::groupoid);

    std::vector<index_type> meet(m * m, UNDEFINED);
    bool                    star = false;
    for (auto e : g.identities()) {
      for (auto f : g.identities()) {
        auto ef = q.product(keep[e], keep[f]);
        if (is_known(ef) && pos[ef] != UNDEFINED) {
          meet[e * m + f] = pos[ef];
        } else {
          star = true;
        }
      }
    }
    return InductiveGroupoid(std::move(g), std::move(meet), star);
  }

  InductiveGroupoid make_inductive(StructureView const& g) {
    if (g.kind() != structure_kind::groupoid || !g.order()) {
      throw incompatible_kind("make_inductive needs a groupoid with an order");
    }
    auto const& ord  = *g.order();
    auto const  n    = static_cast<index_type>(g.size());
    auto const& ids  = g.identities();
    bool        star = false;
    std::vector<index_type> meet(n * n, UNDEFINED);
    for (auto e : ids) {
      for (auto f : ids) {
        index_type glb = UNDEFINED;
        for (auto h : ids) {
          if (!ord(h, e) || !ord(h, f)) {
            continue;
          }
          bool greatest = std::all_of(ids.begin(), ids.end(), [&](index_type k) {
            return !(ord(k, e) && ord(k, f)) || ord(k, h);
          });
          if (greatest) {
            glb = h;
          }
        }
        meet[e * n + f] = glb;
        star            = star || glb == UNDEFINED;
      }
    }
    return InductiveGroupoid(g, std::move(meet), star);
  }

  index_type pseudoproduct(InductiveGroupoid const& g, index_type x, index_type y) {
    auto const& v = g.groupoid();
    auto        e = g.meet(v.r(x), v.d(y));
    if (e == UNDEFINED) {
      return UNDEFINED;
    }
    auto xe = g.corestriction(e, x);
    auto ey = g.restriction(y, e);
    if (xe == UNDEFINED || ey == UNDEFINED) {
      return v.windowed() ? UNKNOWN : UNDEFINED;
    }
    return v.product(xe, ey);
  }

  CheckReport check_restriction_law(InductiveGroupoid const& g) {
    auto const& v   = g.groupoid();
    auto const& ord = g.order();
    for (index_type a = 0; a < v.size(); ++a) {
      for (auto e : v.identities()) {
        if (!ord(e, v.r(a))) {
          continue;
        }
        auto left  = g.restriction(v.inv(a), e);
        auto right = g.corestriction(e, a);
        if (left == UNDEFINED || right == UNDEFINED) {
          if (v.windowed()) {
            continue;
          }
          return CheckReport::make_fails(
              "restriction-law", v.names({a, e}), "restriction or corestriction missing");
        }
        if (v.inv(left) != right) {
          return CheckReport::make_fails(
              "restriction-law", v.names({a, e}), "(a^-1|e)^-1 != (e|a)");
        }
      }
    }
    return CheckReport::make_holds("restriction-law",
                                   v.windowed() ? "holds on the window" : "");
  }

  StraightBridge straight_bridge(std::vector<index_type> const& s_in, StructureView const& q_in) {
    auto q = inverse_view_of(q_in);
    auto s = sorted_unique(s_in);
    auto r = check_left_i_order(s, q, true);
    raise(r.report);
    auto ind = to_inductive(q, true);
    auto c   = s;
    for (auto e : idempotents(q)) {
      c.push_back(e);
    }
    c               = sorted_unique(c);
    auto const& gb  = ind.groupoid().base();
    auto        cat = view(sub_algebra(gb, c, structure_kind::category), structure_kind::category);
    auto        sp  = sub_algebra(gb, s, structure_kind::semigroupoid);
    sp.set_order(std::nullopt);
    auto sg = view(std::move(sp), structure_kind::semigroupoid);
    return {std::move(cat), std::move(sg), *r.witness};
  }

  std::vector<std::vector<index_type>> component_elements(StructureView const& g) {
    if (!g.has_identities()) {
      throw incompatible_kind("components need a category or groupoid");
    }
    auto const n = static_cast<index_type>(g.size());
    UnionFind  uf(n);
    for (index_type x = 0; x < n; ++x) {
      uf.unite(g.d(x), g.r(x));
    }
    std::map<index_type, std::size_t>    slot;
    std::vector<std::vector<index_type>> out;
    for (index_type x = 0; x < n; ++x) {
      auto root   = uf.find(g.d(x));
      auto [it, fresh] = slot.emplace(root, out.size());
      if (fresh) {
        out.emplace_back();
      }
      out[it->second].push_back(x);
    }
    return out;
  }

  std::vector<StructureView> connected_components(StructureView const& g) {
    std::vector<StructureView> out;
    for (auto const& comp : component_elements(g)) {
      out.push_back(view(sub_algebra(g.base(), comp, g.kind()), g.kind()));
    }
    return out;
  }

  std::vector<StructureView> split_left_order(StructureView const&           g,
                                              std::vector<index_type> const& c) {
    std::vector<bool> in(g.size(), false);
    for (auto x : c) {
      in[x] = true;
    }
    std::vector<StructureView> out;
    for (auto const& comp : component_elements(g)) {
      std::vector<index_type> part;
      for (auto x : comp) {
        if (in[x]) {
          part.push_back(x);
        }
      }
      if (!part.empty()) {
        auto p = sub_algebra(g.base(), part, structure_kind::category);
        p.set_order(std::nullopt);
        out.push_back(view(std::move(p), structure_kind::category));
      }
    }
    return out;
  }

}  // namespace qgp
