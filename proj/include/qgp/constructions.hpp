#ifndef QGP_CONSTRUCTIONS_HPP_
#define QGP_CONSTRUCTIONS_HPP_

#include <cstddef>
#include <map>
#include <utility>
#include <vector>

#include "bridges.hpp"
#include "carrier.hpp"
#include "report.hpp"

namespace qgp {

  class GroupTable {
   public:
    // Validates group axioms; throws axiom_violation.
    explicit GroupTable(PartialAlgebra table);

    static GroupTable cyclic(std::size_t n);
    static GroupTable trivial() {
      return cyclic(1);
    }
    // S3 as permutations of {1,2,3}, composed left to right.
    static GroupTable symmetric3();

    std::size_t size() const noexcept {
      return _table.size();
    }
    index_type mul(index_type a, index_type b) const {
      return _table.at(a, b);
    }
    index_type identity() const noexcept {
      return _identity;
    }
    index_type inverse(index_type a) const {
      return _inverse[a];
    }
    std::string const& name(index_type a) const {
      return _table.name(a);
    }
    PartialAlgebra const& table() const noexcept {
      return _table;
    }

   private:
    PartialAlgebra          _table;
    index_type              _identity = 0;
    std::vector<index_type> _inverse;
  };

  class Endo {
   public:
    // Checks that map is an endomorphism of g; throws construction_error.
    Endo(GroupTable const& g, std::vector<index_type> map);

    static Endo identity(GroupTable const& g);
    // Everything to the identity.
    static Endo trivial(GroupTable const& g);

    index_type operator()(index_type a) const {
      return _map[a];
    }
    std::vector<index_type> const& map() const noexcept {
      return _map;
    }

   private:
    std::vector<index_type> _map;
  };

  // {1..n} x G x {1..n}, (i,g,j)(j,h,k) = (i,gh,k).
  StructureView connected_groupoid(GroupTable const& g, std::size_t n);

  // B(G, {1..n}) with the zero named "0" last.
  StructureView brandt(GroupTable const& g, std::size_t n);

  StructureView zero_direct_union(std::vector<StructureView> const& parts);

  struct BRElement {
    std::size_t m;
    index_type  a;
    std::size_t n;
    bool        operator==(BRElement const&) const = default;
  };

  // Repeated application of theta.
  index_type theta_power(Endo const& theta, index_type a, std::size_t k);

  BRElement bruck_reilly_product(GroupTable const& g,
                                 Endo const&       theta,
                                 BRElement const&  x,
                                 BRElement const&  y);

  // {0..n_max} x G x {0..n_max}; products leaving the window are unknown.
  // Element names are "(m,g,n)", or "(m,n)" for the trivial group.
  StructureView bruck_reilly_window(GroupTable const& g, Endo const& theta, std::size_t n_max);

  // Element index of (m, a, n) in a window built by the two functions above.
  index_type window_index(GroupTable const& g, std::size_t n_max, BRElement const& x);

  // N0 x G x N0 cut to indices <= n_max, ordered by
  // (m,a,n) <= (p,b,q) iff m-p = n-q >= 0 and a = b theta^(m-p).
  InductiveGroupoid omega_groupoid_window(GroupTable const& g, std::size_t n_max);
  InductiveGroupoid omega_groupoid_window(GroupTable const& g,
                                          Endo const&       theta,
                                          std::size_t       n_max);

  // (N, +) on {0..n_max} as a one-object category, or (N+, +) on
  // {1..n_max} as a semigroupoid; sums beyond n_max are unknown.
  StructureView additive_window(std::size_t n_max, bool with_zero);

  struct OmegaIndexing {
    std::vector<index_type>                        elements;  // ambient indices of S
    std::vector<std::pair<std::size_t, std::size_t>> phi;     // (r(a), l(a))
    std::map<std::pair<std::size_t, std::size_t>, std::vector<index_type>> H;
    std::size_t depth = 0;  // number of idempotents in the ambient window

    std::size_t r(std::size_t i) const {
      return phi[i].first;
    }
    std::size_t l(std::size_t i) const {
      return phi[i].second;
    }
  };

  // Indexes S inside a windowed bisimple inverse omega-semigroup by the
  // depth of aa^-1 and a^-1a in the idempotent chain.
  OmegaIndexing omega_indexing(StructureView const& ambient, std::vector<index_type> const& s);

  enum class h_class_reading { literal, lenient };

  // Conditions (A), (B), (C) characterising left I-orders in bisimple
  // inverse omega-semigroups, evaluated on the window.
  CheckReport check_omega_a(StructureView const& ambient, OmegaIndexing const& idx);
  CheckReport check_omega_b(StructureView const& ambient, OmegaIndexing const& idx);
  CheckReport check_omega_c(StructureView const& ambient,
                            OmegaIndexing const& idx,
                            h_class_reading      reading = h_class_reading::literal);

}  // namespace qgp

#endif  // QGP_CONSTRUCTIONS_HPP_
