#ifndef QGP_CARRIER_HPP_
#define QGP_CARRIER_HPP_

#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "report.hpp"
#include "types.hpp"

namespace qgp {

  // A finite set of named elements with a partial Cayley table.
  class PartialAlgebra {
   public:
    PartialAlgebra() = default;
    PartialAlgebra(structure_kind kind, std::vector<std::string> names);

    structure_kind kind() const noexcept {
      return _kind;
    }
    void set_kind(structure_kind k) noexcept {
      _kind = k;
    }

    std::size_t size() const noexcept {
      return _names.size();
    }

    std::string const& name(index_type i) const {
      return _names[i];
    }
    std::vector<std::string> const& names() const noexcept {
      return _names;
    }
    std::optional<index_type> find(std::string_view name) const;
    // Throws qgp::error for an unknown name.
    index_type index(std::string_view name) const;

    index_type at(index_type x, index_type y) const {
      return _table[x * size() + y];
    }
    void set(index_type x, index_type y, index_type v) {
      _table[x * size() + y] = v;
    }

    std::optional<std::vector<index_type>> const& identities() const noexcept {
      return _identities;
    }
    void set_identities(std::optional<std::vector<index_type>> ids) {
      _identities = std::move(ids);
    }

    std::optional<index_type> zero() const noexcept {
      return _zero;
    }
    void set_zero(std::optional<index_type> z) noexcept {
      _zero = z;
    }

    std::optional<Relation> const& order() const noexcept {
      return _order;
    }
    void set_order(std::optional<Relation> r) {
      _order = std::move(r);
    }

    bool windowed() const noexcept {
      return _completeness == completeness::windowed;
    }
    void set_windowed(bool w) noexcept {
      _completeness = w ? completeness::windowed : completeness::complete;
    }

    // Checks the type invariants; throws parse_error of kind invariant.
    void validate() const;

    bool operator==(PartialAlgebra const&) const = default;

   private:
    structure_kind                         _kind = structure_kind::semigroup;
    std::vector<std::string>               _names;
    std::unordered_map<std::string, index_type> _lookup;
    std::vector<index_type>                _table;
    std::optional<std::vector<index_type>> _identities;
    std::optional<index_type>              _zero;
    std::optional<Relation>                _order;
    completeness                           _completeness = completeness::complete;
  };

  bool valid_name(std::string_view name) noexcept;

  PartialAlgebra load(std::string_view text);
  PartialAlgebra load_file(std::string const& path);
  std::string    serialize(PartialAlgebra const& p);
  void           save_file(PartialAlgebra const& p, std::string const& path);

  // The subalgebra on elems (in the given order). Throws not_a_subsemigroup
  // if a known product of two members leaves the subset.
  PartialAlgebra sub_algebra(PartialAlgebra const&         p,
                             std::vector<index_type> const& elems,
                             structure_kind                 kind);

  // Relabels: element i of p becomes element perm[i] of the result.
  PartialAlgebra permute(PartialAlgebra const& p, std::vector<index_type> const& perm);

  struct ObjectPartition {
    std::size_t             num_objects = 0;
    std::vector<index_type> dom;
    std::vector<index_type> cod;
  };

  // Recovers objects from the definedness pattern of the table. Unknown
  // (truncated) cells count as defined.
  ObjectPartition infer_objects(PartialAlgebra const& p);

  class StructureView {
   public:
    std::shared_ptr<PartialAlgebra const> const& base_ptr() const noexcept {
      return _base;
    }
    PartialAlgebra const& base() const noexcept {
      return *_base;
    }
    structure_kind kind() const noexcept {
      return _kind;
    }
    std::size_t size() const noexcept {
      return _base->size();
    }
    std::string const& name(index_type i) const {
      return _base->name(i);
    }
    index_type index(std::string_view n) const {
      return _base->index(n);
    }
    bool windowed() const noexcept {
      return _base->windowed();
    }

    // Raw cell: an index, UNDEFINED or UNKNOWN.
    index_type product(index_type x, index_type y) const {
      return _base->at(x, y);
    }
    bool defined(index_type x, index_type y) const {
      return is_defined(_base->at(x, y));
    }

    bool has_identities() const noexcept {
      return !_d.empty();
    }
    index_type d(index_type x) const {
      return _d[x];
    }
    index_type r(index_type x) const {
      return _r[x];
    }
    bool is_identity(index_type x) const {
      return _is_identity[x];
    }
    std::vector<index_type> const& identities() const noexcept {
      return _identities;
    }

    std::size_t num_objects() const noexcept {
      return _num_objects;
    }
    index_type dom(index_type x) const {
      return _dom[x];
    }
    index_type cod(index_type x) const {
      return _cod[x];
    }

    bool has_inverses() const noexcept {
      return !_inv.empty();
    }
    index_type inv(index_type x) const {
      return _inv[x];
    }

    std::optional<index_type> zero() const noexcept {
      return _zero;
    }

    std::optional<Relation> const& order() const noexcept {
      return _base->order();
    }

    std::vector<std::string> names(std::vector<index_type> const& xs) const;

   private:
    friend StructureView view(std::shared_ptr<PartialAlgebra const>, structure_kind);

    std::shared_ptr<PartialAlgebra const> _base;
    structure_kind                        _kind = structure_kind::semigroup;
    std::vector<index_type>               _d, _r;
    std::vector<bool>                     _is_identity;
    std::vector<index_type>               _identities;
    std::size_t                           _num_objects = 0;
    std::vector<index_type>               _dom, _cod;
    std::vector<index_type>               _inv;
    std::optional<index_type>             _zero;
  };

  // Validates p as the given kind; throws axiom_violation (or a subclass)
  // naming the first violated axiom and a witness.
  StructureView view(std::shared_ptr<PartialAlgebra const> p, structure_kind kind);
  StructureView view(PartialAlgebra p, structure_kind kind);
  StructureView view(PartialAlgebra p);

  // Elements x with xx = x.
  std::vector<index_type> idempotents(StructureView const& s);

}  // namespace qgp

#endif  // QGP_CARRIER_HPP_
