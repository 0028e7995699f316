#ifndef QGP_REPORT_HPP_
#define QGP_REPORT_HPP_

#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace qgp {

  enum class verdict { holds, fails, inconclusive };

  std::string_view to_string(verdict v) noexcept;

  // Outcome of a decision procedure. A Fails verdict always carries a
  // witness tuple of element names that replays to a violation.
  struct CheckReport {
    std::string              property;
    verdict                  result = verdict::holds;
    std::vector<std::string> witness;
    std::string              detail;

    bool holds() const noexcept {
      return result == verdict::holds;
    }
    bool fails() const noexcept {
      return result == verdict::fails;
    }
    bool inconclusive() const noexcept {
      return result == verdict::inconclusive;
    }

    static CheckReport make_holds(std::string property, std::string detail = {});
    static CheckReport make_fails(std::string              property,
                                  std::vector<std::string> witness,
                                  std::string              detail);
    static CheckReport make_inconclusive(std::string property, std::string detail);
  };

  // Combines reports of sub-properties: first Fails wins, then first
  // Inconclusive, else Holds under the combined name.
  CheckReport combine(std::string name, std::vector<CheckReport> const& parts);

  ////////////////////////////////////////////////////////////////////////
  // Exceptions
  ////////////////////////////////////////////////////////////////////////

  class error : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
  };

  enum class parse_error_kind {
    syntax,
    duplicate_element,
    dangling_reference,
    malformed_order,
    invariant
  };

  class parse_error : public error {
   public:
    parse_error(parse_error_kind k, std::size_t line, std::size_t col, std::string const& msg);

    parse_error_kind kind() const noexcept {
      return _kind;
    }
    std::size_t line() const noexcept {
      return _line;
    }
    std::size_t column() const noexcept {
      return _col;
    }

   private:
    parse_error_kind _kind;
    std::size_t      _line;
    std::size_t      _col;
  };

  // A table violates a structural axiom; witness names the elements.
  class axiom_violation : public error {
   public:
    axiom_violation(std::string axiom, std::vector<std::string> witness, std::string const& msg);

    std::string const& axiom() const noexcept {
      return _axiom;
    }
    std::vector<std::string> const& witness() const noexcept {
      return _witness;
    }

   private:
    std::string              _axiom;
    std::vector<std::string> _witness;
  };

  class object_inference_failure : public axiom_violation {
   public:
    object_inference_failure(std::vector<std::string> witness, std::string const& msg)
        : axiom_violation("objects", std::move(witness), msg) {}
  };

  class incompatible_kind : public error {
   public:
    using error::error;
  };

  class precondition_failed : public error {
   public:
    explicit precondition_failed(CheckReport r);

    CheckReport const& report() const noexcept {
      return _report;
    }

   private:
    CheckReport _report;
  };

  class window_exhausted : public error {
   public:
    using error::error;
  };

  class well_definedness_violation : public axiom_violation {
   public:
    well_definedness_violation(std::vector<std::string> witness, std::string const& msg)
        : axiom_violation("well-defined", std::move(witness), msg) {}
  };

  class not_a_subsemigroup : public axiom_violation {
   public:
    not_a_subsemigroup(std::vector<std::string> witness, std::string const& msg)
        : axiom_violation("subsemigroup", std::move(witness), msg) {}
  };

  // A construction whose defining laws were re-verified and found broken.
  class construction_error : public error {
   public:
    using error::error;
  };

}  // namespace qgp

#endif  // QGP_REPORT_HPP_
