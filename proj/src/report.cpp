#include "qgp/report.hpp"

#include "qgp/types.hpp"

namespace qgp {

  std::string_view to_string(verdict v) noexcept {
    switch (v) {
      case verdict::holds:
        return "Holds";
      case verdict::fails:
        return "Fails";
      case verdict::inconclusive:
        return "Inconclusive";
    }
    return "?";
  }

  std::string_view to_string(structure_kind k) noexcept {
    switch (k) {
      case structure_kind::category:
        return "category";
      case structure_kind::semigroupoid:
        return "semigroupoid";
      case structure_kind::groupoid:
        return "groupoid";
      case structure_kind::semigroup:
        return "semigroup";
      case structure_kind::inverse_semigroup:
        return "inverse-semigroup";
    }
    return "?";
  }

  bool parse_kind(std::string_view s, structure_kind& out) noexcept {
    for (auto k : {structure_kind::category,
                   structure_kind::semigroupoid,
                   structure_kind::groupoid,
                   structure_kind::semigroup,
                   structure_kind::inverse_semigroup}) {
      if (to_string(k) == s) {
        out = k;
        return true;
      }
    }
    return false;
  }

  CheckReport CheckReport::make_holds(std::string property, std::string detail) {
    return CheckReport{std::move(property), verdict::holds, {}, std::move(detail)};
  }

  CheckReport CheckReport::make_fails(std::string              property,
                                      std::vector<std::string> witness,
                                      std::string              detail) {
    return CheckReport{
        std::move(property), verdict::fails, std::move(witness), std::move(detail)};
  }

  CheckReport CheckReport::make_inconclusive(std::string property, std::string detail) {
    return CheckReport{std::move(property), verdict::inconclusive, {}, std::move(detail)};
  }

  CheckReport combine(std::string name, std::vector<CheckReport> const& parts) {
    for (auto const& p : parts) {
      if (p.fails()) {
        return CheckReport::make_fails(
            std::move(name), p.witness, p.property + ": " + p.detail);
      }
    }
    for (auto const& p : parts) {
      if (p.inconclusive()) {
        return CheckReport::make_inconclusive(std::move(name),
                                              p.property + ": " + p.detail);
      }
    }
    std::string detail;
    for (auto const& p : parts) {
      if (!p.detail.empty()) {
        detail = p.detail;
        break;
      }
    }
    return CheckReport::make_holds(std::move(name), detail);
  }

  parse_error::parse_error(parse_error_kind   k,
                           std::size_t        line,
                           std::size_t        col,
                           std::string const& msg)
      : error(line == 0 ? msg
                        : "line " + std::to_string(line) + ", column "
                              + std::to_string(col) + ": " + msg),
        _kind(k),
        _line(line),
        _col(col) {}

  namespace {
    std::string with_witness(std::string const&              axiom,
                             std::vector<std::string> const& w,
                             std::string const&              msg) {
      std::string s = axiom + " violated";
      if (!w.empty()) {
        s += " at (";
        for (std::size_t i = 0; i < w.size(); ++i) {
          s += (i ? ", " : "") + w[i];
        }
        s += ")";
      }
      if (!msg.empty()) {
        s += ": " + msg;
      }
      return s;
    }
  }  // namespace

  axiom_violation::axiom_violation(std::string              axiom,
                                   std::vector<std::string> witness,
                                   std::string const&       msg)
      : error(with_witness(axiom, witness, msg)),
        _axiom(std::move(axiom)),
        _witness(std::move(witness)) {}

  precondition_failed::precondition_failed(CheckReport r)
      : error("precondition " + r.property + " not satisfied: " + r.detail),
        _report(std::move(r)) {}

  ////////////////////////////////////////////////////////////////////////
  // Relation
  ////////////////////////////////////////////////////////////////////////

  bool Relation::is_reflexive() const {
    for (std::size_t i = 0; i < _n; ++i) {
      if (!(*this)(i, i)) {
        return false;
      }
    }
    return true;
  }

  bool Relation::is_symmetric() const {
    for (std::size_t i = 0; i < _n; ++i) {
      for (std::size_t j = 0; j < _n; ++j) {
        if ((*this)(i, j) != (*this)(j, i)) {
          return false;
        }
      }
    }
    return true;
  }

  bool Relation::is_antisymmetric() const {
    for (std::size_t i = 0; i < _n; ++i) {
      for (std::size_t j = i + 1; j < _n; ++j) {
        if ((*this)(i, j) && (*this)(j, i)) {
          return false;
        }
      }
    }
    return true;
  }

  bool Relation::is_transitive() const {
    for (std::size_t i = 0; i < _n; ++i) {
      for (std::size_t j = 0; j < _n; ++j) {
        if (!(*this)(i, j)) {
          continue;
        }
        for (std::size_t k = 0; k < _n; ++k) {
          if ((*this)(j, k) && !(*this)(i, k)) {
            return false;
          }
        }
      }
    }
    return true;
  }

  std::vector<std::vector<index_type>> Relation::classes() const {
    std::vector<std::vector<index_type>> out;
    std::vector<bool>                    seen(_n, false);
    for (std::size_t i = 0; i < _n; ++i) {
      if (seen[i]) {
        continue;
      }
      std::vector<index_type> cls;
      for (std::size_t j = i; j < _n; ++j) {
        if ((*this)(i, j)) {
          seen[j] = true;
          cls.push_back(static_cast<index_type>(j));
        }
      }
      out.push_back(std::move(cls));
    }
    return out;
  }

}  // namespace qgp
