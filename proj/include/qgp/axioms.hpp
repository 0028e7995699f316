#ifndef QGP_AXIOMS_HPP_
#define QGP_AXIOMS_HPP_

#include <string>
#include <string_view>
#include <vector>

#include "carrier.hpp"
#include "report.hpp"

namespace qgp {

  struct CheckOptions {
    // Use S^1 a instead of the literal S a in the lambda relation.
    bool lambda_s1 = false;
  };

  // Property ids accepted by check().
  std::vector<std::string_view> const& property_ids();

  CheckReport check(StructureView const&   s,
                    std::string_view       property,
                    CheckOptions const&    opts = {});

  enum class relation_id { lambda, r_star, green_R, green_L, green_J, natural_order };

  std::string_view to_string(relation_id r) noexcept;
  bool             parse_relation(std::string_view s, relation_id& out) noexcept;

  struct RelationTable {
    relation_id id;
    Relation    pairs;
  };

  // lambda and r_star need a semigroup (lambda: with zero); natural_order an
  // inverse semigroup; the Green relations a groupoid, ordered by its
  // carrier order or discretely.
  RelationTable relation(StructureView const& s, relation_id id, CheckOptions const& opts = {});

  // Green's R, L or J from the generated ideals (a u aG], (a u Ga] and
  // (a u aG u Ga u GaG].
  RelationTable green_via_ideals(StructureView const& s, relation_id id);

  // Ideal generated by a, as a membership vector.
  std::vector<bool> right_ideal(StructureView const& g, index_type a);
  std::vector<bool> left_ideal(StructureView const& g, index_type a);
  std::vector<bool> two_sided_ideal(StructureView const& g, index_type a);

  // The order used for ordered-groupoid computations: the carrier order if
  // present, else equality.
  Relation groupoid_order(StructureView const& g);

  // Checks (OG1), (OG2) and (OG3) for a groupoid with its carrier order.
  CheckReport check_ordered_groupoid(StructureView const& g);

}  // namespace qgp

#endif  // QGP_AXIOMS_HPP_
