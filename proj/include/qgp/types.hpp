#ifndef QGP_TYPES_HPP_
#define QGP_TYPES_HPP_

#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace qgp {

  using index_type = std::uint32_t;

  // Table cell sentinels. UNDEFINED is a structurally undefined product,
  // UNKNOWN a product that exists but whose value lies outside a window.
  inline constexpr index_type UNDEFINED = static_cast<index_type>(-1);
  inline constexpr index_type UNKNOWN   = static_cast<index_type>(-2);

  constexpr bool is_known(index_type c) noexcept {
    return c < UNKNOWN;
  }

  constexpr bool is_defined(index_type c) noexcept {
    return c != UNDEFINED;
  }

  enum class completeness { complete, windowed };

  enum class structure_kind {
    category,
    semigroupoid,
    groupoid,
    semigroup,
    inverse_semigroup
  };

  std::string_view to_string(structure_kind k) noexcept;
  bool             parse_kind(std::string_view s, structure_kind& out) noexcept;

  // Square boolean matrix, used for partial orders and relations.
  class Relation {
   public:
    Relation() = default;
    explicit Relation(std::size_t n) : _n(n), _bits(n * n, 0) {}

    static Relation identity(std::size_t n) {
      Relation r(n);
      for (std::size_t i = 0; i < n; ++i) {
        r.set(i, i);
      }
      return r;
    }

    std::size_t size() const noexcept {
      return _n;
    }

    bool operator()(std::size_t i, std::size_t j) const {
      return _bits[i * _n + j] != 0;
    }

    void set(std::size_t i, std::size_t j, bool v = true) {
      _bits[i * _n + j] = v ? 1 : 0;
    }

    bool operator==(Relation const&) const = default;

    bool is_reflexive() const;
    bool is_symmetric() const;
    bool is_antisymmetric() const;
    bool is_transitive() const;

    // Equivalence classes in order of least member; requires an equivalence.
    std::vector<std::vector<index_type>> classes() const;

   private:
    std::size_t                _n = 0;
    std::vector<std::uint8_t> _bits;
  };

}  // namespace qgp

#endif  // QGP_TYPES_HPP_
