#include "qgp/fractions.hpp"

#include <algorithm>
#include <optional>

#include "qgp/axioms.hpp"
#include "qgp/union_find.hpp"

namespace qgp {

  std::string_view to_string(fraction_mode m) noexcept {
    return m == fraction_mode::category ? "category" : "semigroupoid";
  }

  index_type FractionGroupoid::pair_index(index_type a, index_type b) const {
    return _pair_at[a * input.size() + b];
  }

  index_type FractionGroupoid::class_of(index_type a, index_type b) const {
    auto p = pair_index(a, b);
    return p == UNDEFINED ? UNDEFINED : class_of_pair[p];
  }

  std::string FractionGroupoid::class_name(index_type k) const {
    return "q(" + input.name(reps[k].first) + "," + input.name(reps[k].second) + ")";
  }

  bool FractionGroupoid::is_identity_class(index_type k) const {
    return reps[k].first == reps[k].second;
  }

  PartialAlgebra FractionGroupoid::to_algebra() const {
    std::vector<std::string> names;
    for (index_type k = 0; k < num_classes(); ++k) {
      names.push_back(class_name(k));
    }
    auto const     m = static_cast<index_type>(num_classes());
    PartialAlgebra p(structure_kind::groupoid, names);
    p.set_windowed(windowed());
    for (index_type x = 0; x < m; ++x) {
      for (index_type y = 0; y < m; ++y) {
        if (!windowed()) {
          p.set(x, y, class_table[x * m + y]);
          continue;
        }
        try {
          p.set(x, y, multiply_classes(*this, x, y));
        } catch (window_exhausted const&) {
          p.set(x, y, UNKNOWN);
        }
      }
    }
    return p;
  }

  StructureView FractionGroupoid::to_view() const {
    return view(to_algebra(), structure_kind::groupoid);
  }

  namespace {

    // A window cannot refute an existential hypothesis, so only Fails
    // aborts there; on complete carriers Inconclusive cannot occur.
    void require(std::vector<CheckReport>& out, CheckReport r) {
      if (r.fails()) {
        throw precondition_failed(r);
      }
      out.push_back(std::move(r));
    }

    std::vector<std::vector<index_type>> class_members(FractionGroupoid const& f) {
      std::vector<std::vector<index_type>> out(f.num_classes());
      for (index_type p = 0; p < f.pairs.size(); ++p) {
        out[f.class_of_pair[p]].push_back(p);
      }
      return out;
    }

    // ldiv[c * n + v] = all y with yc = v, ascending.
    std::vector<std::vector<index_type>> left_divisors(StructureView const& s) {
      auto const n = static_cast<index_type>(s.size());
      std::vector<std::vector<index_type>> out(n * n);
      for (index_type c = 0; c < n; ++c) {
        for (index_type y = 0; y < n; ++y) {
          auto v = s.product(y, c);
          if (is_known(v)) {
            out[c * n + v].push_back(y);
          }
        }
      }
      return out;
    }

    std::string pair_text(StructureView const& s, FractionPair p) {
      return "(" + s.name(p.first) + "," + s.name(p.second) + ")";
    }

  }  // namespace

  FractionGroupoid localize(StructureView const& s, fraction_mode mode) {
    std::vector<CheckReport> pre;
    if (mode == fraction_mode::category) {
      if (s.kind() != structure_kind::category && s.kind() != structure_kind::groupoid) {
        throw incompatible_kind("category localization needs a category, got "
                                + std::string(to_string(s.kind())));
      }
      require(pre, check(s, "right-reversible"));
      require(pre, check(s, "left-cancellative"));
      require(pre, check(s, "right-cancellative"));
    } else {
      require(pre, check(s, "right-reversible"));
      require(pre, check(s, "cancellative"));
      require(pre, check(s, "condition-c"));
    }

    auto const       n = static_cast<index_type>(s.size());
    FractionGroupoid f;
    f.input = s;
    f.mode  = mode;
    f.preconditions = std::move(pre);
    f._pair_at.assign(n * n, UNDEFINED);
    for (index_type a = 0; a < n; ++a) {
      for (index_type b = 0; b < n; ++b) {
        if (s.dom(a) == s.dom(b)) {
          f._pair_at[a * n + b] = static_cast<index_type>(f.pairs.size());
          f.pairs.emplace_back(a, b);
        }
      }
    }

    // (a, b) ~ (xa, xb) generates ~.
    UnionFind uf(f.pairs.size());
    for (index_type p = 0; p < f.pairs.size(); ++p) {
      auto [a, b] = f.pairs[p];
      for (index_type x = 0; x < n; ++x) {
        auto xa = s.product(x, a), xb = s.product(x, b);
        if (is_known(xa) && is_known(xb)) {
          uf.unite(p, f.pair_index(xa, xb));
        }
      }
    }
    std::vector<index_type> root_class(f.pairs.size(), UNDEFINED);
    f.class_of_pair.resize(f.pairs.size());
    for (index_type p = 0; p < f.pairs.size(); ++p) {
      auto r = uf.find(p);
      if (root_class[r] == UNDEFINED) {
        root_class[r] = static_cast<index_type>(f.reps.size());
        f.reps.push_back(f.pairs[r]);
        f.left_object.push_back(s.cod(f.pairs[r].first));
        f.right_object.push_back(s.cod(f.pairs[r].second));
      }
      f.class_of_pair[p] = root_class[r];
    }
    auto const m = static_cast<index_type>(f.num_classes());
    f.inv.resize(m);
    for (index_type k = 0; k < m; ++k) {
      f.inv[k] = f.class_of(f.reps[k].second, f.reps[k].first);
    }

    f.theta.assign(n, UNKNOWN);
    for (index_type a = 0; a < n; ++a) {
      if (mode == fraction_mode::category) {
        f.theta[a] = f.class_of(s.d(a), a);
        continue;
      }
      for (index_type x = 0; x < n; ++x) {
        if (s.defined(x, a)) {
          auto xa = s.product(x, a);
          if (is_known(xa)) {
            f.theta[a] = f.class_of(x, xa);
          }
          break;
        }
      }
    }

    if (s.windowed()) {
      return f;
    }

    // Each pair has a direct witness to its representative.
    auto ldiv = left_divisors(s);
    f.rep_witness.assign(f.pairs.size(), {UNDEFINED, UNDEFINED});
    for (index_type p = 0; p < f.pairs.size(); ++p) {
      auto [a, b] = f.pairs[p];
      auto [c, d] = f.reps[f.class_of_pair[p]];
      for (index_type x = 0; x < n && f.rep_witness[p].first == UNDEFINED; ++x) {
        auto xa = s.product(x, a), xb = s.product(x, b);
        if (!is_known(xa) || !is_known(xb)) {
          continue;
        }
        for (auto y : ldiv[c * n + xa]) {
          if (s.product(y, d) == xb) {
            f.rep_witness[p] = {x, y};
            break;
          }
        }
      }
      if (f.rep_witness[p].first == UNDEFINED) {
        throw construction_error("no direct witness between " + pair_text(s, f.pairs[p])
                                 + " and " + pair_text(s, {c, d}));
      }
    }

    // Class table from representatives, then re-verified for every choice
    // of representatives and witnesses.
    f.class_table.assign(m * m, UNDEFINED);
    auto members = class_members(f);
    for (index_type p = 0; p < m; ++p) {
      for (index_type q = 0; q < m; ++q) {
        if (f.right_object[p] != f.left_object[q]) {
          continue;
        }
        auto [a, b] = f.reps[p];
        auto [c, d] = f.reps[q];
        for (index_type x = 0; x < n && f.class_table[p * m + q] == UNDEFINED; ++x) {
          auto xb = s.product(x, b);
          if (!is_known(xb)) {
            continue;
          }
          auto const& ys = ldiv[c * n + xb];
          if (!ys.empty()) {
            f.class_table[p * m + q] = f.class_of(s.product(x, a), s.product(ys.front(), d));
          }
        }
        if (f.class_table[p * m + q] == UNDEFINED) {
          throw construction_error("no witness for the product of " + f.class_name(p) + " and "
                                   + f.class_name(q));
        }
        auto const expect = f.class_table[p * m + q];
        for (auto pp : members[p]) {
          auto [a2, b2] = f.pairs[pp];
          for (auto qq : members[q]) {
            auto [c2, d2] = f.pairs[qq];
            for (index_type x = 0; x < n; ++x) {
              auto xb = s.product(x, b2);
              if (!is_known(xb)) {
                continue;
              }
              for (auto y : ldiv[c2 * n + xb]) {
                if (f.class_of(s.product(x, a2), s.product(y, d2)) != expect) {
                  throw construction_error(
                      "product not well defined: " + pair_text(s, f.pairs[pp]) + " times "
                      + pair_text(s, f.pairs[qq]) + " with witness ("
                      + s.name(x) + "," + s.name(y) + ")");
                }
              }
            }
          }
        }
      }
    }
    for (index_type p = 0; p < m; ++p) {
      for (index_type q = 0; q < m; ++q) {
        auto pq = f.class_table[p * m + q];
        if (pq == UNDEFINED) {
          continue;
        }
        for (index_type r = 0; r < m; ++r) {
          auto qr = f.class_table[q * m + r];
          if (qr == UNDEFINED) {
            continue;
          }
          if (f.class_table[pq * m + r] != f.class_table[p * m + qr]) {
            throw construction_error("class product not associative at " + f.class_name(p)
                                     + ", " + f.class_name(q) + ", " + f.class_name(r));
          }
        }
      }
    }
    try {
      (void) f.to_view();
    } catch (axiom_violation const& e) {
      throw construction_error(std::string("quotient is not a groupoid: ") + e.what());
    }
    // theta is injective and multiplicative.
    for (index_type a = 0; a < n; ++a) {
      for (index_type b = 0; b < n; ++b) {
        if (a != b && f.theta[a] == f.theta[b]) {
          throw construction_error("theta identifies " + s.name(a) + " and " + s.name(b));
        }
        auto ab = s.product(a, b);
        if (is_known(ab) && f.class_table[f.theta[a] * m + f.theta[b]] != f.theta[ab]) {
          throw construction_error("theta not multiplicative at (" + s.name(a) + ", "
                                   + s.name(b) + ")");
        }
      }
    }
    return f;
  }

  FractionGroupoid localize_category(StructureView const& c) {
    return localize(c, fraction_mode::category);
  }

  FractionGroupoid localize_semigroupoid(StructureView const& s) {
    return localize(s, fraction_mode::semigroupoid);
  }

  index_type multiply_classes(FractionGroupoid const& f, index_type p, index_type q) {
    if (f.right_object[p] != f.left_object[q]) {
      return UNDEFINED;
    }
    auto const m = static_cast<index_type>(f.num_classes());
    if (!f.windowed()) {
      return f.class_table[p * m + q];
    }
    auto const& s = f.input;
    auto const  n = static_cast<index_type>(s.size());
    std::vector<index_type> pp, qq;
    for (index_type i = 0; i < f.pairs.size(); ++i) {
      if (f.class_of_pair[i] == p) {
        pp.push_back(i);
      }
      if (f.class_of_pair[i] == q) {
        qq.push_back(i);
      }
    }
    for (auto i : pp) {
      auto [a, b] = f.pairs[i];
      for (auto j : qq) {
        auto [c, d] = f.pairs[j];
        for (index_type x = 0; x < n; ++x) {
          auto xb = s.product(x, b), xa = s.product(x, a);
          if (!is_known(xb) || !is_known(xa)) {
            continue;
          }
          for (index_type y = 0; y < n; ++y) {
            if (s.product(y, c) != xb) {
              continue;
            }
            auto yd = s.product(y, d);
            if (is_known(yd)) {
              return f.class_of(xa, yd);
            }
          }
        }
      }
    }
    throw window_exhausted("no witness inside the window for " + f.class_name(p) + " . "
                           + f.class_name(q));
  }

  CheckReport verify_quotient(FractionGroupoid const& f) {
    std::string const prop = "quotient";
    if (f.windowed()) {
      return CheckReport::make_inconclusive(prop, "refused on a windowed carrier");
    }
    auto const& s  = f.input;
    auto const  n  = static_cast<index_type>(s.size());
    auto const  m  = static_cast<index_type>(f.num_classes());
    auto const& T  = f.class_table;
    auto        qf = [&](index_type a, index_type b) {  // theta(a)^-1 theta(b)
      return T[f.inv[f.theta[a]] * m + f.theta[b]];
    };

    // Three equivalent descriptions of [a,b] = [c,d].
    auto const        P = f.pairs.size();
    std::vector<std::vector<bool>> multiples(P, std::vector<bool>(P, false));
    for (index_type p = 0; p < P; ++p) {
      auto [a, b] = f.pairs[p];
      for (index_type x = 0; x < n; ++x) {
        auto xa = s.product(x, a), xb = s.product(x, b);
        if (is_known(xa) && is_known(xb)) {
          multiples[p][f.pair_index(xa, xb)] = true;
        }
      }
    }
    for (index_type p = 0; p < P; ++p) {
      auto [a, b] = f.pairs[p];
      for (index_type q = 0; q < P; ++q) {
        auto [c, d] = f.pairs[q];
        bool eq_table = qf(a, b) == qf(c, d);
        bool eq_witness = false;
        for (index_type t = 0; t < P && !eq_witness; ++t) {
          eq_witness = multiples[p][t] && multiples[q][t];
        }
        bool eq_bicond = s.cod(a) == s.cod(c) && s.cod(b) == s.cod(d);
        for (index_type t = 0; t < n && eq_bicond; ++t) {
          auto ta = s.product(t, a);
          if (!is_known(ta)) {
            continue;
          }
          for (index_type r = 0; r < n && eq_bicond; ++r) {
            if (s.product(r, c) != ta) {
              continue;
            }
            auto tb = s.product(t, b), rd = s.product(r, d);
            eq_bicond = is_known(tb) && tb == rd;
          }
        }
        if (eq_table != eq_witness || eq_witness != eq_bicond) {
          return CheckReport::make_fails(
              prop,
              s.names({a, b, c, d}),
              std::string("descriptions of [a,b] = [c,d] disagree: table ")
                  + (eq_table ? "yes" : "no") + ", witness " + (eq_witness ? "yes" : "no")
                  + ", biconditional " + (eq_bicond ? "yes" : "no"));
        }
      }
    }
    // Groupoid laws of the class table, then identities.
    std::optional<StructureView> gv;
    try {
      gv = f.to_view();
    } catch (axiom_violation const& e) {
      return CheckReport::make_fails(prop, e.witness(), e.what());
    }
    auto const& g = *gv;

    // Identity classes are exactly the theta(a)^-1 theta(a).
    std::vector<bool> from_theta(m, false);
    for (index_type a = 0; a < n; ++a) {
      auto e = qf(a, a);
      if (e == UNDEFINED) {
        return CheckReport::make_fails(prop, {s.name(a)}, "theta(a)^-1 theta(a) undefined");
      }
      from_theta[e] = true;
    }
    for (index_type k = 0; k < m; ++k) {
      if (from_theta[k] != g.is_identity(k)) {
        return CheckReport::make_fails(
            prop,
            {f.class_name(k)},
            g.is_identity(k) ? "identity class not of the form theta(a)^-1 theta(a)"
                             : "theta(a)^-1 theta(a) is not an identity");
      }
    }
    // Every class is theta(a)^-1 theta(b) for its representative.
    for (index_type k = 0; k < m; ++k) {
      if (qf(f.reps[k].first, f.reps[k].second) != k) {
        return CheckReport::make_fails(
            prop, {f.class_name(k)}, "class differs from theta(a)^-1 theta(b)");
      }
    }

    return CheckReport::make_holds(prop);
  }

  CheckReport verify_quotient(FractionGroupoid const&        f,
                              StructureView const&           ambient,
                              std::vector<index_type> const& into) {
    auto r = verify_quotient(f);
    if (!r.holds()) {
      return r;
    }
    if (!ambient.has_inverses()) {
      throw incompatible_kind("ambient must be a groupoid");
    }
    auto const& s  = f.input;
    auto        aq = [&](FractionPair p) {
      return ambient.product(ambient.inv(into[p.first]), into[p.second]);
    };
    for (index_type p = 0; p < f.pairs.size(); ++p) {
      for (index_type q = 0; q < f.pairs.size(); ++q) {
        bool same_class   = f.class_of_pair[p] == f.class_of_pair[q];
        bool same_ambient = aq(f.pairs[p]) == aq(f.pairs[q]);
        if (same_class != same_ambient) {
          auto [a, b] = f.pairs[p];
          auto [c, d] = f.pairs[q];
          return CheckReport::make_fails(
              "quotient", s.names({a, b, c, d}), "class equality disagrees with a^-1 b in the ambient groupoid");
        }
      }
    }
    return CheckReport::make_holds("quotient");
  }

}  // namespace qgp
