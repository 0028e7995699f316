#ifndef QGP_BRIDGES_HPP_
#define QGP_BRIDGES_HPP_

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "carrier.hpp"
#include "report.hpp"

namespace qgp {

  // G u {0} with every undefined product sent to 0. The new zero is named
  // "0", or "0_", "0__", ... if that name is taken.
  StructureView adjoin_zero(StructureView const& g);

  // Q* under the restricted product; needs Q categorical at 0.
  StructureView strip_zero(StructureView const& q);

  // Maps the elements of s into q by name and checks that s is a
  // subsemigroup agreeing with q on its products.
  std::vector<index_type> embed_subsemigroup(PartialAlgebra const& s, StructureView const& q);

  // S* u E(Q)* as a subcategory of strip_zero(q); s given by q-indices.
  StructureView augment(std::vector<index_type> const& s, StructureView const& q);

  struct IOrderWitness {
    // pairs[i] = (a, b) with q_i = a^-1 b, as q-indices.
    std::vector<std::pair<index_type, index_type>> pairs;
    bool                                           straight = false;
  };

  struct IOrderResult {
    CheckReport                  report;
    std::optional<IOrderWitness> witness;
  };

  IOrderResult check_left_i_order(std::vector<index_type> const& s,
                                  StructureView const&           q,
                                  bool                           straight);

  class InductiveGroupoid {
   public:
    InductiveGroupoid(StructureView g, std::vector<index_type> meet, bool star);

    StructureView const& groupoid() const noexcept {
      return _g;
    }
    Relation const& order() const {
      return *_g.order();
    }
    // False when some pair of identities has no meet.
    bool inductive() const noexcept {
      return !_star;
    }
    // Meet of two identities, UNDEFINED when it does not exist.
    index_type meet(index_type e, index_type f) const {
      return _meet[e * _g.size() + f];
    }
    // The unique t <= x with d(t) = e, or UNDEFINED.
    index_type restriction(index_type x, index_type e) const;
    // The unique t <= x with r(t) = e, or UNDEFINED.
    index_type corestriction(index_type e, index_type x) const;

   private:
    StructureView           _g;
    std::vector<index_type> _meet;
    bool                    _star;
  };

  // The restricted-product groupoid with the natural order; keep_zero keeps
  // 0 as an isolated bottom identity.
  InductiveGroupoid to_inductive(StructureView const& q, bool keep_zero = true);

  // Wraps an ordered groupoid whose carrier carries the order.
  InductiveGroupoid make_inductive(StructureView const& g);

  // x (x) y = (corestriction of x to e)(restriction of y to e) with
  // e = r(x) ^ d(y).
  index_type pseudoproduct(InductiveGroupoid const& g, index_type x, index_type y);

  // (a^-1 | e)^-1 = (e | a) for all identities e <= r(a).
  CheckReport check_restriction_law(InductiveGroupoid const& g);

  struct StraightBridge {
    StructureView category;      // (S u E(Q), o)
    StructureView semigroupoid;  // (S, o)
    IOrderWitness witness;
  };

  StraightBridge straight_bridge(std::vector<index_type> const& s, StructureView const& q);

  // Connected components ordered by least element.
  std::vector<std::vector<index_type>> component_elements(StructureView const& g);
  std::vector<StructureView>           connected_components(StructureView const& g);

  // C n G_i for each component G_i, c given by g-indices.
  std::vector<StructureView> split_left_order(StructureView const&           g,
                                              std::vector<index_type> const& c);

}  // namespace qgp

#endif  // QGP_BRIDGES_HPP_
