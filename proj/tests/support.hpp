#ifndef QGP_TESTS_SUPPORT_HPP_
#define QGP_TESTS_SUPPORT_HPP_

#include <algorithm>
#include <random>
#include <string>
#include <vector>

#include "qgp/carrier.hpp"

namespace qgp::test {

  inline std::string fixture_path(std::string const& name) {
    return std::string(QGP_FIXTURES) + "/" + name + ".alg";
  }

  inline StructureView fixture(std::string const& name) {
    return view(load_file(fixture_path(name)));
  }

  inline std::vector<std::string> const& groupoid_fixtures() {
    static std::vector<std::string> const names = {"z2",
                                                   "z3",
                                                   "s3",
                                                   "groupoid_z2_2",
                                                   "groupoid_z3_3",
                                                   "groupoid_s3_2",
                                                   "groupoid_trivial_3",
                                                   "groupoid_z4_2",
                                                   "groupoid_disjoint"};
    return names;
  }

  // Complete inverse semigroups.
  inline std::vector<std::string> const& inverse_fixtures() {
    static std::vector<std::string> const names = {"b_z2_2",
                                                   "b_trivial_2",
                                                   "b_trivial_3",
                                                   "b_z3_2",
                                                   "b_s3_2",
                                                   "z2_zero",
                                                   "zero_union",
                                                   "chain3"};
    return names;
  }

  inline std::vector<index_type> random_permutation(std::size_t n, unsigned seed) {
    std::vector<index_type> p(n);
    for (index_type i = 0; i < n; ++i) {
      p[i] = i;
    }
    std::mt19937 rng(seed);
    std::shuffle(p.begin(), p.end(), rng);
    return p;
  }

  inline std::vector<index_type> indices(StructureView const& s,
                                         std::vector<std::string> const& names) {
    std::vector<index_type> out;
    for (auto const& n : names) {
      out.push_back(s.index(n));
    }
    return out;
  }

  // Disjoint union of tables; names must not clash.
  inline PartialAlgebra disjoint_union(std::vector<PartialAlgebra> const& parts,
                                       structure_kind                     kind) {
    std::vector<std::string> names;
    for (auto const& p : parts) {
      names.insert(names.end(), p.names().begin(), p.names().end());
    }
    PartialAlgebra out(kind, names);
    index_type     off = 0;
    for (auto const& p : parts) {
      for (index_type x = 0; x < p.size(); ++x) {
        for (index_type y = 0; y < p.size(); ++y) {
          auto v = p.at(x, y);
          out.set(off + x, off + y, is_known(v) ? off + v : v);
        }
      }
      off += static_cast<index_type>(p.size());
    }
    return out;
  }

  // Same names and cells; declared identities are ignored.
  inline bool same_table(PartialAlgebra const& a, PartialAlgebra const& b) {
    if (a.names() != b.names()) {
      return false;
    }
    for (index_type x = 0; x < a.size(); ++x) {
      for (index_type y = 0; y < a.size(); ++y) {
        if (a.at(x, y) != b.at(x, y)) {
          return false;
        }
      }
    }
    return true;
  }

}  // namespace qgp::test

#endif  // QGP_TESTS_SUPPORT_HPP_
