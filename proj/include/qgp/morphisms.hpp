#ifndef QGP_MORPHISMS_HPP_
#define QGP_MORPHISMS_HPP_

#include <cstddef>
#include <optional>
#include <string_view>
#include <vector>

#include "carrier.hpp"
#include "fractions.hpp"
#include "report.hpp"

namespace qgp {

  enum class morphism_kind { homomorphism, embedding, isomorphism };

  std::string_view to_string(morphism_kind k) noexcept;
  bool             parse_morphism_kind(std::string_view s, morphism_kind& out) noexcept;

  struct Morphism {
    StructureView           source;
    StructureView           target;
    std::vector<index_type> map;
    morphism_kind           kind = morphism_kind::homomorphism;
  };

  Morphism identity_morphism(StructureView const& s);

  // Multiplicativity, preservation of d, r and inverses where present, and
  // injectivity or bijectivity according to the kind.
  CheckReport verify(Morphism const& m);

  struct IsoResult {
    CheckReport             report;
    std::optional<Morphism> morphism;
  };

  // Lexicographically least isomorphism extending fixed, where fixed[x] is
  // UNDEFINED for free elements of a. An empty fixed means no constraint.
  IsoResult find_isomorphism(StructureView const&           a,
                             StructureView const&           b,
                             std::vector<index_type> const& fixed = {});

  // psi(a^-1 b) = phi(a)^-1 phi(b) for a left order c in g, where c_in_g
  // maps the elements of phi.source into g.
  Morphism extend_embedding(StructureView const&           g,
                            std::vector<index_type> const& c_in_g,
                            Morphism const&                phi);

  // Same, with c the input of a localization and theta the inclusion.
  Morphism extend_embedding(FractionGroupoid const& f, Morphism const& phi);

  // Number of embeddings g -> phi.target agreeing with phi on c, counted
  // up to limit by exhaustive search.
  std::size_t count_extensions(StructureView const&           g,
                               std::vector<index_type> const& c_in_g,
                               Morphism const&                phi,
                               std::size_t                    limit = 2);

}  // namespace qgp

#endif  // QGP_MORPHISMS_HPP_
