#include "qgp/morphisms.hpp"

#include <algorithm>
#include <numeric>
#include <string>

namespace qgp {

  std::string_view to_string(morphism_kind k) noexcept {
    switch (k) {
      case morphism_kind::homomorphism:
        return "homomorphism";
      case morphism_kind::embedding:
        return "embedding";
      case morphism_kind::isomorphism:
        return "isomorphism";
    }
    return "homomorphism";
  }

  bool parse_morphism_kind(std::string_view s, morphism_kind& out) noexcept {
    for (auto k :
         {morphism_kind::homomorphism, morphism_kind::embedding, morphism_kind::isomorphism}) {
      if (s == to_string(k)) {
        out = k;
        return true;
      }
    }
    return false;
  }

  Morphism identity_morphism(StructureView const& s) {
    std::vector<index_type> map(s.size());
    std::iota(map.begin(), map.end(), index_type(0));
    return {s, s, std::move(map), morphism_kind::isomorphism};
  }

  namespace {

    // Source products must be matched by target products. Unknown source
    // cells are skipped.
    CheckReport check_multiplicative(std::string const&             prop,
                                     StructureView const&           s,
                                     StructureView const&           t,
                                     std::vector<index_type> const& map) {
      auto const n = static_cast<index_type>(s.size());
      for (index_type x = 0; x < n; ++x) {
        for (index_type y = 0; y < n; ++y) {
          auto xy = s.product(x, y);
          if (!is_known(xy)) {
            continue;
          }
          auto img = t.product(map[x], map[y]);
          if (img == UNKNOWN) {
            continue;
          }
          if (img != map[xy]) {
            return CheckReport::make_fails(
                prop,
                s.names({x, y}),
                "image of " + s.name(xy) + " is " + t.name(map[xy]) + " but the images multiply to "
                    + (is_defined(img) ? t.name(img) : std::string("undefined")));
          }
        }
      }
      return CheckReport::make_holds(prop);
    }

  }  // namespace

  CheckReport verify(Morphism const& m) {
    std::string const prop(to_string(m.kind));
    auto const&       s = m.source;
    auto const&       t = m.target;
    auto const        n = static_cast<index_type>(s.size());
    if (m.map.size() != s.size()) {
      return CheckReport::make_fails(prop, {}, "map does not cover the source");
    }
    for (index_type x = 0; x < n; ++x) {
      if (m.map[x] >= t.size()) {
        return CheckReport::make_fails(prop, {s.name(x)}, "image outside the target");
      }
    }
    if (auto r = check_multiplicative(prop, s, t, m.map); !r.holds()) {
      return r;
    }
    if (s.has_identities() && t.has_identities()) {
      for (index_type x = 0; x < n; ++x) {
        auto fx = m.map[x];
        if (m.map[s.d(x)] != t.d(fx) || m.map[s.r(x)] != t.r(fx)) {
          return CheckReport::make_fails(prop, {s.name(x)}, "d or r not preserved");
        }
      }
    }
    if (s.has_inverses() && t.has_inverses()) {
      for (index_type x = 0; x < n; ++x) {
        auto sx = s.inv(x), tx = t.inv(m.map[x]);
        if (is_known(sx) && is_known(tx) && m.map[sx] != tx) {
          return CheckReport::make_fails(prop, {s.name(x)}, "inverse not preserved");
        }
      }
    }
    if (m.kind == morphism_kind::homomorphism) {
      return CheckReport::make_holds(prop);
    }
    std::vector<index_type> pre(t.size(), UNDEFINED);
    for (index_type x = 0; x < n; ++x) {
      if (pre[m.map[x]] != UNDEFINED) {
        return CheckReport::make_fails(
            prop, s.names({pre[m.map[x]], x}), "two elements share the image " + t.name(m.map[x]));
      }
      pre[m.map[x]] = x;
    }
    if (m.kind == morphism_kind::embedding) {
      return CheckReport::make_holds(prop);
    }
    for (index_type u = 0; u < t.size(); ++u) {
      if (pre[u] == UNDEFINED) {
        return CheckReport::make_fails(prop, {t.name(u)}, "not in the image");
      }
    }
    if (auto r = check_multiplicative(prop, t, s, pre); !r.holds()) {
      r.detail = "inverse map: " + r.detail;
      return r;
    }
    return CheckReport::make_holds(prop);
  }

  namespace {

    // Backtracking over injective maps a -> b with forward propagation of
    // products. In iso mode definedness must match both ways and element
    // profiles must agree.
    class MapSearch {
     public:
      MapSearch(StructureView const& a, StructureView const& b, bool iso)
          : _a(a),
            _b(b),
            _iso(iso),
            _map(a.size(), UNDEFINED),
            _used(b.size(), UNDEFINED) {
        if (iso) {
          _pa = profiles(a);
          _pb = profiles(b);
        }
      }

      bool profiles_match() const {
        auto x = _pa, y = _pb;
        std::sort(x.begin(), x.end());
        std::sort(y.begin(), y.end());
        return x == y;
      }

      bool fix(index_type x, index_type w) {
        return assign(x, w) && propagate();
      }

      // Calls found(map) for each completion in lexicographic order until
      // it returns false.
      template <typename F>
      bool search(F&& found) {
        auto x = next_free();
        if (x == UNDEFINED) {
          return found(_map);
        }
        for (index_type w = 0; w < _b.size(); ++w) {
          if (_used[w] != UNDEFINED) {
            continue;
          }
          auto mark = _trail.size();
          if (assign(x, w) && propagate()) {
            if (!search(found)) {
              return false;
            }
          }
          undo(mark);
        }
        return true;
      }

     private:
      using profile = std::vector<std::size_t>;

      static std::vector<profile> profiles(StructureView const& s) {
        auto const           n = static_cast<index_type>(s.size());
        std::vector<profile> out(n);
        for (index_type x = 0; x < n; ++x) {
          std::size_t row = 0, col = 0, loops = 0;
          for (index_type y = 0; y < n; ++y) {
            row += s.defined(x, y);
            col += s.defined(y, x);
          }
          // distinct powers x, x^2, ... until undefined, unknown or repeat
          std::vector<bool> seen(n, false);
          std::size_t       powers = 0;
          for (auto p = x; is_known(p) && !seen[p]; p = s.product(p, x)) {
            seen[p] = true;
            ++powers;
          }
          loops = s.defined(x, x);
          out[x] = {s.has_identities() && s.is_identity(x), row, col, loops, powers};
        }
        return out;
      }

      index_type next_free() const {
        for (index_type x = 0; x < _map.size(); ++x) {
          if (_map[x] == UNDEFINED) {
            return x;
          }
        }
        return UNDEFINED;
      }

      bool assign(index_type x, index_type w) {
        if (_map[x] == w) {
          return true;
        }
        if (_map[x] != UNDEFINED || _used[w] != UNDEFINED) {
          return false;
        }
        if (_iso && _pa[x] != _pb[w]) {
          return false;
        }
        _map[x]  = w;
        _used[w] = x;
        _trail.push_back(x);
        _queue.push_back(x);
        return true;
      }

      bool check_pair(index_type u, index_type v) {
        auto z = _a.product(u, v);
        auto w = _b.product(_map[u], _map[v]);
        if (_iso) {
          if (is_defined(z) != is_defined(w) || is_known(z) != is_known(w)) {
            return false;
          }
        } else if (is_known(z) && !is_defined(w)) {
          return false;
        }
        if (is_known(z) && is_known(w)) {
          return assign(z, w);
        }
        return true;
      }

      bool propagate() {
        while (!_queue.empty()) {
          auto x = _queue.back();
          _queue.pop_back();
          for (index_type y = 0; y < _map.size(); ++y) {
            if (_map[y] == UNDEFINED) {
              continue;
            }
            if (!check_pair(x, y) || !check_pair(y, x)) {
              _queue.clear();
              return false;
            }
          }
        }
        return true;
      }

      void undo(std::size_t mark) {
        while (_trail.size() > mark) {
          auto x = _trail.back();
          _trail.pop_back();
          _used[_map[x]] = UNDEFINED;
          _map[x]        = UNDEFINED;
        }
      }

      StructureView const&    _a;
      StructureView const&    _b;
      bool                    _iso;
      std::vector<index_type> _map, _used, _trail, _queue;
      std::vector<profile>    _pa, _pb;
    };

  }  // namespace

  IsoResult find_isomorphism(StructureView const&           a,
                             StructureView const&           b,
                             std::vector<index_type> const& fixed) {
    std::string const prop = "isomorphism";
    if (a.size() != b.size()) {
      return {CheckReport::make_fails(prop, {}, "sizes differ"), std::nullopt};
    }
    MapSearch ms(a, b, true);
    if (!ms.profiles_match()) {
      return {CheckReport::make_fails(prop, {}, "element profiles differ"), std::nullopt};
    }
    for (index_type x = 0; x < fixed.size(); ++x) {
      if (fixed[x] == UNDEFINED) {
        continue;
      }
      if (fixed[x] >= b.size() || !ms.fix(x, fixed[x])) {
        return {CheckReport::make_fails(prop, {a.name(x)}, "fixed map cannot be extended"),
                std::nullopt};
      }
    }
    std::optional<Morphism> result;
    ms.search([&](std::vector<index_type> const& map) {
      result = Morphism{a, b, map, morphism_kind::isomorphism};
      return false;
    });
    if (!result) {
      return {CheckReport::make_fails(prop, {}, "no isomorphism after exhaustive search"),
              std::nullopt};
    }
    auto r = verify(*result);
    if (!r.holds()) {
      throw construction_error("isomorphism search produced a non-isomorphism: " + r.detail);
    }
    return {r, result};
  }

  namespace {

    void require_extension_inputs(StructureView const&           g,
                                  std::vector<index_type> const& c_in_g,
                                  Morphism const&                phi) {
      if (!g.has_inverses() || !phi.target.has_inverses()) {
        throw incompatible_kind("extension needs groupoids g and target");
      }
      if (c_in_g.size() != phi.source.size()) {
        throw error("inclusion does not cover the source of phi");
      }
      auto hom = phi;
      hom.kind = morphism_kind::homomorphism;
      if (auto r = verify(hom); !r.holds()) {
        throw precondition_failed(r);
      }
    }

  }  // namespace

  Morphism extend_embedding(StructureView const&           g,
                            std::vector<index_type> const& c_in_g,
                            Morphism const&                phi) {
    require_extension_inputs(g, c_in_g, phi);
    auto const& c  = phi.source;
    auto const& t  = phi.target;
    auto const  n  = static_cast<index_type>(g.size());
    auto const  nc = static_cast<index_type>(c.size());

    // Least representation a^-1 b of each element, then every other
    // representation must agree.
    std::vector<std::pair<index_type, index_type>> rep(n, {UNDEFINED, UNDEFINED});
    std::vector<index_type>                        psi(n, UNDEFINED);
    for (index_type a = 0; a < nc; ++a) {
      for (index_type b = 0; b < nc; ++b) {
        auto q = g.product(g.inv(c_in_g[a]), c_in_g[b]);
        if (!is_known(q)) {
          continue;
        }
        auto v = t.product(t.inv(phi.map[a]), phi.map[b]);
        if (rep[q].first == UNDEFINED) {
          rep[q] = {a, b};
          psi[q] = v;
        }
        if (!is_known(v) || v != psi[q]) {
          throw well_definedness_violation(
              c.names({rep[q].first, rep[q].second, a, b}),
              "representations of " + g.name(q) + " have different images");
        }
      }
    }
    for (index_type q = 0; q < n; ++q) {
      if (rep[q].first == UNDEFINED) {
        throw precondition_failed(CheckReport::make_fails(
            "left-order", {g.name(q)}, "not of the form a^-1 b with a, b in the subcategory"));
      }
    }
    std::vector<index_type> pre(t.size(), UNDEFINED);
    for (index_type x = 0; x < nc; ++x) {
      if (pre[phi.map[x]] != UNDEFINED) {
        throw well_definedness_violation(c.names({pre[phi.map[x]], x}),
                                         "phi is not injective");
      }
      pre[phi.map[x]] = x;
    }
    Morphism out{g, t, std::move(psi), morphism_kind::embedding};
    if (auto r = verify(out); !r.holds()) {
      throw construction_error("extension is not an embedding: " + r.detail);
    }
    return out;
  }

  Morphism extend_embedding(FractionGroupoid const& f, Morphism const& phi) {
    return extend_embedding(f.to_view(), f.theta, phi);
  }

  std::size_t count_extensions(StructureView const&           g,
                               std::vector<index_type> const& c_in_g,
                               Morphism const&                phi,
                               std::size_t                    limit) {
    MapSearch ms(g, phi.target, false);
    for (index_type x = 0; x < c_in_g.size(); ++x) {
      if (!ms.fix(c_in_g[x], phi.map[x])) {
        return 0;
      }
    }
    std::size_t count = 0;
    ms.search([&](std::vector<index_type> const& map) {
      Morphism m{g, phi.target, map, morphism_kind::embedding};
      if (verify(m).holds()) {
        ++count;
      }
      return count < limit;
    });
    return count;
  }

}  // namespace qgp
