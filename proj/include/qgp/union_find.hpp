#ifndef QGP_UNION_FIND_HPP_
#define QGP_UNION_FIND_HPP_

#include <numeric>
#include <vector>

#include "types.hpp"

namespace qgp {

  // Disjoint sets whose root is always the least member.
  class UnionFind {
   public:
    explicit UnionFind(std::size_t n) : _parent(n) {
      std::iota(_parent.begin(), _parent.end(), index_type(0));
    }

    index_type find(index_type x) {
      while (_parent[x] != x) {
        _parent[x] = _parent[_parent[x]];
        x          = _parent[x];
      }
      return x;
    }

    void unite(index_type x, index_type y) {
      x = find(x);
      y = find(y);
      if (x < y) {
        _parent[y] = x;
      } else if (y < x) {
        _parent[x] = y;
      }
    }

    std::size_t size() const noexcept {
      return _parent.size();
    }

   private:
    std::vector<index_type> _parent;
  };

}  // namespace qgp

#endif  // QGP_UNION_FIND_HPP_
