#ifndef QGP_FRACTIONS_HPP_
#define QGP_FRACTIONS_HPP_

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "carrier.hpp"
#include "report.hpp"

namespace qgp {

  enum class fraction_mode { category, semigroupoid };

  std::string_view to_string(fraction_mode m) noexcept;

  using FractionPair = std::pair<index_type, index_type>;

  struct FractionGroupoid {
    StructureView input;
    fraction_mode mode = fraction_mode::category;

    // All pairs (a, b) with a common domain, in lexicographic order.
    std::vector<FractionPair> pairs;
    // Class of each pair; classes are numbered by their least pair.
    std::vector<index_type>   class_of_pair;
    std::vector<FractionPair> reps;
    // Complete carriers: for each pair (a, b), some (x, y) with
    // x a = y c and x b = y d where (c, d) is the representative.
    std::vector<FractionPair> rep_witness;
    // Objects cod(a), cod(b) of a class [a, b].
    std::vector<index_type> left_object, right_object;
    // classes^2 cells on complete carriers, empty on windows.
    std::vector<index_type> class_table;
    // Element to class; UNKNOWN when a window hides the witness.
    std::vector<index_type> theta;
    std::vector<index_type> inv;
    // Hypothesis checks run before construction. On windows some may be
    // Inconclusive; construction proceeds unless one Fails.
    std::vector<CheckReport> preconditions;

    std::size_t num_classes() const noexcept {
      return reps.size();
    }
    bool windowed() const noexcept {
      return input.windowed();
    }
    // Pair index of (a, b), or UNDEFINED when dom(a) != dom(b).
    index_type pair_index(index_type a, index_type b) const;
    index_type class_of(index_type a, index_type b) const;
    std::string class_name(index_type k) const;
    bool        is_identity_class(index_type k) const;

    // The quotient as a groupoid table, names q(a,b). On windows, products
    // the window cannot decide are written as unknown.
    PartialAlgebra to_algebra() const;
    StructureView  to_view() const;

   private:
    friend FractionGroupoid localize(StructureView const&, fraction_mode);
    std::vector<index_type> _pair_at;  // n*n -> pair index
  };

  FractionGroupoid localize(StructureView const& s, fraction_mode mode);
  FractionGroupoid localize_category(StructureView const& c);
  FractionGroupoid localize_semigroupoid(StructureView const& s);

  // Class product or UNDEFINED; throws window_exhausted when a window
  // hides every witness.
  index_type multiply_classes(FractionGroupoid const& f, index_type p, index_type q);

  CheckReport verify_quotient(FractionGroupoid const& f);
  // Also compares classes with a^-1 b computed in an ambient groupoid;
  // into_ambient maps input elements to ambient elements.
  CheckReport verify_quotient(FractionGroupoid const&        f,
                              StructureView const&           ambient,
                              std::vector<index_type> const& into_ambient);

}  // namespace qgp

#endif  // QGP_FRACTIONS_HPP_
