#include "qgp/carrier.hpp"

#include <algorithm>
#include <fstream>
#include <map>
#include <set>
#include <sstream>

namespace qgp {

  ////////////////////////////////////////////////////////////////////////
  // PartialAlgebra
  ////////////////////////////////////////////////////////////////////////

  PartialAlgebra::PartialAlgebra(structure_kind kind, std::vector<std::string> names)
      : _kind(kind),
        _names(std::move(names)),
        _table(_names.size() * _names.size(), UNDEFINED) {
    for (index_type i = 0; i < _names.size(); ++i) {
      if (!_lookup.emplace(_names[i], i).second) {
        throw parse_error(
            parse_error_kind::duplicate_element, 0, 0, "duplicate element " + _names[i]);
      }
    }
  }

  std::optional<index_type> PartialAlgebra::find(std::string_view name) const {
    auto it = _lookup.find(std::string(name));
    if (it == _lookup.end()) {
      return std::nullopt;
    }
    return it->second;
  }

  index_type PartialAlgebra::index(std::string_view name) const {
    auto i = find(name);
    if (!i) {
      throw error("unknown element " + std::string(name));
    }
    return *i;
  }

  void PartialAlgebra::validate() const {
    auto fail = [](std::string const& msg) {
      throw parse_error(parse_error_kind::invariant, 0, 0, msg);
    };
    auto const n = size();
    if (_table.size() != n * n) {
      fail("table is not square");
    }
    for (auto c : _table) {
      if (is_known(c) && c >= n) {
        fail("table cell out of range");
      }
    }
    if (_zero) {
      if (*_zero >= n) {
        fail("zero out of range");
      }
      for (index_type x = 0; x < n; ++x) {
        if (at(*_zero, x) != *_zero || at(x, *_zero) != *_zero) {
          fail("row and column of zero " + name(*_zero) + " must be zero, fails at "
               + name(x));
        }
      }
    }
    if (_identities) {
      for (auto e : *_identities) {
        if (e >= n) {
          fail("identity out of range");
        }
      }
    }
    if (_order) {
      if (_order->size() != n) {
        fail("order has wrong size");
      }
      if (!_order->is_reflexive() || !_order->is_antisymmetric()
          || !_order->is_transitive()) {
        throw parse_error(parse_error_kind::malformed_order,
                          0,
                          0,
                          "order is not a partial order");
      }
    }
    if (_kind == structure_kind::semigroup || _kind == structure_kind::inverse_semigroup) {
      for (index_type x = 0; x < n; ++x) {
        for (index_type y = 0; y < n; ++y) {
          if (!is_defined(at(x, y))) {
            fail("kind " + std::string(to_string(_kind)) + " needs a total table, missing "
                 + name(x) + " . " + name(y));
          }
        }
      }
    }
  }

  bool valid_name(std::string_view name) noexcept {
    if (name.empty()) {
      return false;
    }
    return std::all_of(name.begin(), name.end(), [](char c) {
      return (c >= 'A' && c <= 'Z') || (c >= 'a' && c <= 'z') || (c >= '0' && c <= '9')
             || c == '_' || c == '(' || c == ')' || c == '-' || c == ',';
    });
  }

  ////////////////////////////////////////////////////////////////////////
  // Parsing
  ////////////////////////////////////////////////////////////////////////

  namespace {

    bool is_space(char c) {
      return c == ' ' || c == '\t' || c == '\r';
    }

    struct Token {
      std::string_view text;
      std::size_t      col;  // 1-based
    };

    std::vector<Token> split_ws(std::string_view s, std::size_t col0) {
      std::vector<Token> out;
      std::size_t        i = 0;
      while (i < s.size()) {
        while (i < s.size() && is_space(s[i])) {
          ++i;
        }
        std::size_t j = i;
        while (j < s.size() && !is_space(s[j])) {
          ++j;
        }
        if (j > i) {
          out.push_back({s.substr(i, j - i), col0 + i});
        }
        i = j;
      }
      return out;
    }

    std::string_view trim(std::string_view s, std::size_t& offset) {
      std::size_t i = 0;
      while (i < s.size() && is_space(s[i])) {
        ++i;
      }
      std::size_t j = s.size();
      while (j > i && is_space(s[j - 1])) {
        --j;
      }
      offset += i;
      return s.substr(i, j - i);
    }

    struct PendingCell {
      Token       a, b, c;
      std::size_t line;
    };

    class Parser {
     public:
      explicit Parser(std::string_view text) : _text(text) {}

      PartialAlgebra run() {
        std::size_t line_no = 0;
        std::size_t pos     = 0;
        bool        in_table = false;
        while (pos <= _text.size()) {
          auto        eol  = _text.find('\n', pos);
          auto        line = _text.substr(pos, eol == std::string_view::npos ? eol : eol - pos);
          ++line_no;
          pos = (eol == std::string_view::npos) ? _text.size() + 1 : eol + 1;
          if (auto hash = line.find('#'); hash != std::string_view::npos) {
            line = line.substr(0, hash);
          }
          std::size_t off  = 1;
          auto        body = trim(line, off);
          if (body.empty()) {
            continue;
          }
          auto colon = body.find(':');
          if (colon == std::string_view::npos) {
            if (!in_table) {
              throw parse_error(
                  parse_error_kind::syntax, line_no, off, "expected 'key: value'");
            }
            table_line(body, line_no, off);
            continue;
          }
          std::size_t koff = off;
          auto        key  = trim(body.substr(0, colon), koff);
          std::size_t voff = off + colon + 1;
          auto        val  = trim(body.substr(colon + 1), voff);
          in_table         = false;
          if (key == "table") {
            in_table = true;
            if (!val.empty()) {
              table_line(val, line_no, voff);
            }
          } else if (key == "kind") {
            once(_has_kind, key, line_no, koff);
            if (!parse_kind(val, _kind)) {
              throw parse_error(parse_error_kind::syntax,
                                line_no,
                                voff,
                                "unknown kind '" + std::string(val) + "'");
            }
          } else if (key == "elements") {
            once(_has_elements, key, line_no, koff);
            for (auto const& t : split_ws(val, voff)) {
              if (!valid_name(t.text)) {
                throw parse_error(parse_error_kind::syntax,
                                  line_no,
                                  t.col,
                                  "invalid element name '" + std::string(t.text) + "'");
              }
              if (!_index.emplace(std::string(t.text), _names.size()).second) {
                throw parse_error(parse_error_kind::duplicate_element,
                                  line_no,
                                  t.col,
                                  "duplicate element '" + std::string(t.text) + "'");
              }
              _names.emplace_back(t.text);
            }
          } else if (key == "identities") {
            once(_has_identities, key, line_no, koff);
            _identity_tokens = split_ws(val, voff);
            _identity_line   = line_no;
          } else if (key == "zero") {
            once(_has_zero, key, line_no, koff);
            auto toks = split_ws(val, voff);
            if (toks.size() != 1) {
              throw parse_error(
                  parse_error_kind::syntax, line_no, voff, "zero takes exactly one name");
            }
            _zero_token = toks[0];
            _zero_line  = line_no;
          } else if (key == "window") {
            once(_has_window, key, line_no, koff);
            if (val == "complete") {
              _windowed = false;
            } else if (val == "truncated") {
              _windowed = true;
            } else {
              throw parse_error(parse_error_kind::syntax,
                                line_no,
                                voff,
                                "window must be complete or truncated");
            }
          } else if (key == "order") {
            _order_lines.push_back({val, line_no, voff});
          } else {
            throw parse_error(parse_error_kind::syntax,
                              line_no,
                              koff,
                              "unknown key '" + std::string(key) + "'");
          }
        }
        return finish();
      }

     private:
      struct OrderLine {
        std::string_view text;
        std::size_t      line;
        std::size_t      col;
      };

      void once(bool& flag, std::string_view key, std::size_t line, std::size_t col) {
        if (flag) {
          throw parse_error(parse_error_kind::syntax,
                            line,
                            col,
                            "repeated key '" + std::string(key) + "'");
        }
        flag = true;
      }

      void table_line(std::string_view body, std::size_t line, std::size_t off) {
        auto eq  = body.find('=');
        auto dot = body.find('.');
        if (eq == std::string_view::npos || dot == std::string_view::npos || dot > eq) {
          throw parse_error(
              parse_error_kind::syntax, line, off, "expected '<a> . <b> = <c>'");
        }
        std::size_t ao = off, bo = off + dot + 1, co = off + eq + 1;
        auto        a  = trim(body.substr(0, dot), ao);
        auto        b  = trim(body.substr(dot + 1, eq - dot - 1), bo);
        auto        c  = trim(body.substr(eq + 1), co);
        for (auto [t, o] : {std::pair{a, ao}, std::pair{b, bo}}) {
          if (!valid_name(t)) {
            throw parse_error(parse_error_kind::syntax,
                              line,
                              o,
                              "invalid element name '" + std::string(t) + "'");
          }
        }
        if (c != "?" && !valid_name(c)) {
          throw parse_error(parse_error_kind::syntax,
                            line,
                            co,
                            "invalid element name '" + std::string(c) + "'");
        }
        _cells.push_back({{a, ao}, {b, bo}, {c, co}, line});
      }

      index_type resolve(Token const& t, std::size_t line) const {
        auto it = _index.find(std::string(t.text));
        if (it == _index.end()) {
          throw parse_error(parse_error_kind::dangling_reference,
                            line,
                            t.col,
                            "unknown element '" + std::string(t.text) + "'");
        }
        return it->second;
      }

      // Splits "a<=b, c<=d" using the known names, which may contain commas.
      bool parse_pairs(std::string_view                              s,
                       std::size_t                                   i,
                       std::vector<std::pair<index_type, index_type>>& out) const {
        while (i < s.size() && is_space(s[i])) {
          ++i;
        }
        if (i == s.size()) {
          return !out.empty();
        }
        if (!out.empty()) {
          if (s[i] != ',') {
            return false;
          }
          ++i;
          while (i < s.size() && is_space(s[i])) {
            ++i;
          }
        }
        auto le = s.find("<=", i);
        if (le == std::string_view::npos) {
          return false;
        }
        std::size_t lo  = i;
        auto        lhs = trim(s.substr(i, le - i), lo);
        auto        li  = _index.find(std::string(lhs));
        if (li == _index.end()) {
          return false;
        }
        std::size_t j = le + 2;
        while (j < s.size() && is_space(s[j])) {
          ++j;
        }
        // Try right-hand names from longest to shortest.
        std::size_t end = j;
        while (end < s.size() && !is_space(s[end])) {
          ++end;
        }
        for (std::size_t k = end; k > j; --k) {
          auto rhs = s.substr(j, k - j);
          auto ri  = _index.find(std::string(rhs));
          if (ri == _index.end()) {
            continue;
          }
          out.emplace_back(li->second, ri->second);
          if (parse_pairs(s, k, out)) {
            return true;
          }
          out.pop_back();
        }
        return false;
      }

      PartialAlgebra finish() {
        if (!_has_kind) {
          throw parse_error(parse_error_kind::syntax, 1, 1, "missing 'kind:' line");
        }
        if (!_has_elements) {
          throw parse_error(parse_error_kind::syntax, 1, 1, "missing 'elements:' line");
        }
        PartialAlgebra p(_kind, _names);
        p.set_windowed(_windowed);
        std::map<std::pair<index_type, index_type>, index_type> seen;
        for (auto const& c : _cells) {
          auto       a = resolve(c.a, c.line);
          auto       b = resolve(c.b, c.line);
          index_type v = (c.c.text == "?") ? UNKNOWN : resolve(c.c, c.line);
          if (v == UNKNOWN && !_windowed) {
            throw parse_error(parse_error_kind::syntax,
                              c.line,
                              c.c.col,
                              "'?' cells need 'window: truncated'");
          }
          auto [it, fresh] = seen.emplace(std::pair{a, b}, v);
          if (!fresh) {
            throw parse_error(parse_error_kind::syntax,
                              c.line,
                              c.a.col,
                              "repeated cell " + std::string(c.a.text) + " . "
                                  + std::string(c.b.text));
          }
          p.set(a, b, v);
        }
        if (_has_identities) {
          std::vector<index_type> ids;
          for (auto const& t : _identity_tokens) {
            ids.push_back(resolve(t, _identity_line));
          }
          std::sort(ids.begin(), ids.end());
          ids.erase(std::unique(ids.begin(), ids.end()), ids.end());
          p.set_identities(ids);
        }
        if (_has_zero) {
          p.set_zero(resolve(_zero_token, _zero_line));
        }
        if (!_order_lines.empty()) {
          Relation r = Relation::identity(_names.size());
          for (auto const& ol : _order_lines) {
            std::vector<std::pair<index_type, index_type>> pairs;
            if (!parse_pairs(ol.text, 0, pairs)) {
              throw parse_error(parse_error_kind::malformed_order,
                                ol.line,
                                ol.col,
                                "malformed order entry '" + std::string(ol.text) + "'");
            }
            for (auto [x, y] : pairs) {
              r.set(x, y);
            }
          }
          if (!r.is_antisymmetric() || !r.is_transitive()) {
            throw parse_error(parse_error_kind::malformed_order,
                              _order_lines.front().line,
                              _order_lines.front().col,
                              "order is not antisymmetric and transitive");
          }
          p.set_order(std::move(r));
        }
        p.validate();
        return p;
      }

      std::string_view                            _text;
      bool                                        _has_kind = false, _has_elements = false;
      bool                                        _has_identities = false, _has_zero = false;
      bool                                        _has_window = false;
      structure_kind                              _kind       = structure_kind::semigroup;
      bool                                        _windowed   = false;
      std::vector<std::string>                    _names;
      std::unordered_map<std::string, index_type> _index;
      std::vector<Token>                          _identity_tokens;
      std::size_t                                 _identity_line = 0;
      Token                                       _zero_token{};
      std::size_t                                 _zero_line = 0;
      std::vector<OrderLine>                      _order_lines;
      std::vector<PendingCell>                    _cells;
    };

  }  // namespace

  PartialAlgebra load(std::string_view text) {
    return Parser(text).run();
  }

  PartialAlgebra load_file(std::string const& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
      throw error("cannot open " + path);
    }
    std::ostringstream ss;
    ss << in.rdbuf();
    return load(ss.str());
  }

  std::string serialize(PartialAlgebra const& p) {
    std::string out;
    out += "kind: ";
    out += to_string(p.kind());
    out += "\nelements:";
    for (auto const& n : p.names()) {
      out += " " + n;
    }
    out += "\n";
    if (p.identities()) {
      out += "identities:";
      for (auto e : *p.identities()) {
        out += " " + p.name(e);
      }
      out += "\n";
    }
    if (p.zero()) {
      out += "zero: " + p.name(*p.zero()) + "\n";
    }
    if (p.windowed()) {
      out += "window: truncated\n";
    }
    if (p.order()) {
      auto const& r = *p.order();
      for (index_type x = 0; x < p.size(); ++x) {
        for (index_type y = 0; y < p.size(); ++y) {
          if (x != y && r(x, y)) {
            out += "order: " + p.name(x) + "<=" + p.name(y) + "\n";
          }
        }
      }
    }
    out += "table:\n";
    for (index_type x = 0; x < p.size(); ++x) {
      for (index_type y = 0; y < p.size(); ++y) {
        auto c = p.at(x, y);
        if (c == UNDEFINED) {
          continue;
        }
        out += p.name(x) + " . " + p.name(y) + " = " + (c == UNKNOWN ? "?" : p.name(c))
               + "\n";
      }
    }
    return out;
  }

  void save_file(PartialAlgebra const& p, std::string const& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) {
      throw error("cannot write " + path);
    }
    out << serialize(p);
  }

  PartialAlgebra sub_algebra(PartialAlgebra const&         p,
                             std::vector<index_type> const& elems,
                             structure_kind                 kind) {
    std::vector<std::string> names;
    std::vector<index_type>  pos(p.size(), UNDEFINED);
    for (index_type i = 0; i < elems.size(); ++i) {
      names.push_back(p.name(elems[i]));
      pos[elems[i]] = i;
    }
    PartialAlgebra q(kind, names);
    q.set_windowed(p.windowed());
    for (index_type i = 0; i < elems.size(); ++i) {
      for (index_type j = 0; j < elems.size(); ++j) {
        auto c = p.at(elems[i], elems[j]);
        if (is_known(c)) {
          if (pos[c] == UNDEFINED) {
            throw not_a_subsemigroup({p.name(elems[i]), p.name(elems[j])},
                                     "product " + p.name(c) + " leaves the subset");
          }
          q.set(i, j, pos[c]);
        } else {
          q.set(i, j, c);
        }
      }
    }
    if (p.zero() && pos[*p.zero()] != UNDEFINED) {
      q.set_zero(pos[*p.zero()]);
    }
    if (p.order()) {
      Relation r(elems.size());
      for (index_type i = 0; i < elems.size(); ++i) {
        for (index_type j = 0; j < elems.size(); ++j) {
          r.set(i, j, (*p.order())(elems[i], elems[j]));
        }
      }
      q.set_order(std::move(r));
    }
    return q;
  }

  PartialAlgebra permute(PartialAlgebra const& p, std::vector<index_type> const& perm) {
    std::vector<std::string> names(p.size());
    for (index_type i = 0; i < p.size(); ++i) {
      names[perm[i]] = p.name(i);
    }
    PartialAlgebra q(p.kind(), names);
    q.set_windowed(p.windowed());
    for (index_type x = 0; x < p.size(); ++x) {
      for (index_type y = 0; y < p.size(); ++y) {
        auto c = p.at(x, y);
        q.set(perm[x], perm[y], is_known(c) ? perm[c] : c);
      }
    }
    if (p.identities()) {
      std::vector<index_type> ids;
      for (auto e : *p.identities()) {
        ids.push_back(perm[e]);
      }
      std::sort(ids.begin(), ids.end());
      q.set_identities(ids);
    }
    if (p.zero()) {
      q.set_zero(perm[*p.zero()]);
    }
    if (p.order()) {
      Relation r(p.size());
      for (index_type x = 0; x < p.size(); ++x) {
        for (index_type y = 0; y < p.size(); ++y) {
          r.set(perm[x], perm[y], (*p.order())(x, y));
        }
      }
      q.set_order(std::move(r));
    }
    return q;
  }

  ////////////////////////////////////////////////////////////////////////
  // Object inference
  ////////////////////////////////////////////////////////////////////////

  ObjectPartition infer_objects(PartialAlgebra const& p) {
    auto const n = static_cast<index_type>(p.size());
    auto       D = [&p](index_type x, index_type y) { return is_defined(p.at(x, y)); };

    // Rectangularity: D(x,y), D(x',y), D(x,y') force D(x',y').
    for (index_type x = 0; x < n; ++x) {
      for (index_type x2 = 0; x2 < n; ++x2) {
        for (index_type y = 0; y < n; ++y) {
          if (!D(x, y) || !D(x2, y)) {
            continue;
          }
          for (index_type y2 = 0; y2 < n; ++y2) {
            if (D(x, y2) && !D(x2, y2)) {
              throw object_inference_failure(
                  {p.name(x), p.name(x2), p.name(y), p.name(y2)},
                  "definedness pattern is not rectangular");
            }
          }
        }
      }
    }

    // Each distinct nonempty row is one object; empty rows share a sink and
    // empty columns share a source.
    ObjectPartition                         out;
    out.dom.assign(n, UNDEFINED);
    out.cod.assign(n, UNDEFINED);

    std::vector<std::vector<bool>> rows(n, std::vector<bool>(n));
    for (index_type x = 0; x < n; ++x) {
      for (index_type y = 0; y < n; ++y) {
        rows[x][y] = D(x, y);
      }
    }
    // Label objects by first appearance scanning dom(x), cod(x) for x ascending.
    std::map<std::vector<bool>, index_type> label;
    index_type                              next   = 0;
    index_type                              sink   = UNDEFINED;
    index_type                              source = UNDEFINED;
    auto row_label = [&](std::vector<bool> const& row) -> index_type {
      auto it = label.find(row);
      if (it != label.end()) {
        return it->second;
      }
      label.emplace(row, next);
      return next++;
    };
    auto column_row = [&](index_type y) -> std::optional<index_type> {
      for (index_type x = 0; x < n; ++x) {
        if (D(x, y)) {
          return x;
        }
      }
      return std::nullopt;
    };
    for (index_type x = 0; x < n; ++x) {
      if (auto w = column_row(x)) {
        out.dom[x] = row_label(rows[*w]);
      } else {
        if (source == UNDEFINED) {
          source = next++;
        }
        out.dom[x] = source;
      }
      bool empty = std::none_of(rows[x].begin(), rows[x].end(), [](bool b) { return b; });
      if (empty) {
        if (sink == UNDEFINED) {
          sink = next++;
        }
        out.cod[x] = sink;
      } else {
        out.cod[x] = row_label(rows[x]);
      }
    }
    out.num_objects = next;
    return out;
  }

  ////////////////////////////////////////////////////////////////////////
  // Views
  ////////////////////////////////////////////////////////////////////////

  std::vector<std::string> StructureView::names(std::vector<index_type> const& xs) const {
    std::vector<std::string> out;
    for (auto x : xs) {
      out.push_back(name(x));
    }
    return out;
  }

  namespace {

    using Names = std::vector<std::string>;

    void check_c1_c2(PartialAlgebra const& p) {
      auto const n = static_cast<index_type>(p.size());
      auto       N = [&p](std::initializer_list<index_type> xs) {
        Names out;
        for (auto x : xs) {
          out.push_back(p.name(x));
        }
        return out;
      };
      // (C1) x(yz) exists iff (xy)z exists, and then they agree.
      for (index_type x = 0; x < n; ++x) {
        for (index_type y = 0; y < n; ++y) {
          auto xy = p.at(x, y);
          for (index_type z = 0; z < n; ++z) {
            auto yz = p.at(y, z);
            if (xy == UNKNOWN || yz == UNKNOWN) {
              continue;
            }
            auto left  = is_defined(yz) ? p.at(x, yz) : UNDEFINED;
            auto right = is_defined(xy) ? p.at(xy, z) : UNDEFINED;
            if (is_defined(left) != is_defined(right)) {
              throw axiom_violation("C1", N({x, y, z}), "x(yz) and (xy)z differ in existence");
            }
            if (is_known(left) && is_known(right) && left != right) {
              throw axiom_violation("C1", N({x, y, z}), "x(yz) != (xy)z");
            }
          }
        }
      }
      // (C2) x(yz) exists iff xy and yz exist.
      for (index_type x = 0; x < n; ++x) {
        for (index_type y = 0; y < n; ++y) {
          auto xy = p.at(x, y);
          for (index_type z = 0; z < n; ++z) {
            auto yz = p.at(y, z);
            if (yz == UNKNOWN) {
              continue;
            }
            bool left = is_defined(yz) && is_defined(p.at(x, yz));
            if (left != (is_defined(xy) && is_defined(yz))) {
              throw axiom_violation(
                  "C2", N({x, y, z}), "x(yz) exists iff xy and yz exist fails");
            }
          }
        }
      }
    }

    bool identity_property(PartialAlgebra const& p, index_type e) {
      if (p.at(e, e) != e) {
        return false;
      }
      for (index_type x = 0; x < p.size(); ++x) {
        auto ex = p.at(e, x);
        auto xe = p.at(x, e);
        if ((is_known(ex) && ex != x) || (is_known(xe) && xe != x)) {
          return false;
        }
      }
      return true;
    }

  }  // namespace

  StructureView view(std::shared_ptr<PartialAlgebra const> pp, structure_kind kind) {
    PartialAlgebra const& p = *pp;
    p.validate();
    auto const    n = static_cast<index_type>(p.size());
    StructureView v;
    v._base = pp;
    v._kind = kind;
    auto N  = [&p](std::initializer_list<index_type> xs) {
      Names out;
      for (auto x : xs) {
        out.push_back(p.name(x));
      }
      return out;
    };

    bool const categorical = kind == structure_kind::category
                             || kind == structure_kind::groupoid
                             || kind == structure_kind::semigroupoid;
    if (categorical) {
      check_c1_c2(p);
    }

    if (kind == structure_kind::category || kind == structure_kind::groupoid) {
      std::vector<index_type> ids;
      v._is_identity.assign(n, false);
      for (index_type e = 0; e < n; ++e) {
        if (identity_property(p, e)) {
          ids.push_back(e);
          v._is_identity[e] = true;
        }
      }
      if (p.identities() && *p.identities() != ids) {
        auto const& decl = *p.identities();
        for (index_type e = 0; e < n; ++e) {
          bool in_decl = std::find(decl.begin(), decl.end(), e) != decl.end();
          if (in_decl != v._is_identity[e]) {
            throw axiom_violation("identities",
                                  N({e}),
                                  in_decl ? "declared identity is not an identity"
                                          : "identity missing from declaration");
          }
        }
      }
      v._identities = ids;
      v._d.assign(n, UNDEFINED);
      v._r.assign(n, UNDEFINED);
      // (C3) every x has identities e, f with xe and fx defined.
      for (index_type x = 0; x < n; ++x) {
        for (auto e : ids) {
          if (v._r[x] == UNDEFINED && is_defined(p.at(x, e))) {
            v._r[x] = e;
          }
          if (v._d[x] == UNDEFINED && is_defined(p.at(e, x))) {
            v._d[x] = e;
          }
        }
        if (v._r[x] == UNDEFINED || v._d[x] == UNDEFINED) {
          throw axiom_violation(
              "C3", N({x}), "no identity on the " + std::string(v._r[x] == UNDEFINED ? "right" : "left"));
        }
      }
      for (index_type x = 0; x < n; ++x) {
        for (index_type y = 0; y < n; ++y) {
          auto xy = p.at(x, y);
          if (is_defined(xy) != (v._r[x] == v._d[y])) {
            throw axiom_violation("composability", N({x, y}), "xy defined iff r(x) = d(y) fails");
          }
          if (is_known(xy) && (v._d[xy] != v._d[x] || v._r[xy] != v._r[y])) {
            throw axiom_violation("composability", N({x, y}), "d(xy) = d(x), r(xy) = r(y) fails");
          }
        }
      }
      std::vector<index_type> obj(n, UNDEFINED);
      for (index_type i = 0; i < ids.size(); ++i) {
        obj[ids[i]] = i;
      }
      v._num_objects = ids.size();
      v._dom.resize(n);
      v._cod.resize(n);
      for (index_type x = 0; x < n; ++x) {
        v._dom[x] = obj[v._d[x]];
        v._cod[x] = obj[v._r[x]];
      }
      if (kind == structure_kind::groupoid) {
        v._inv.assign(n, UNDEFINED);
        for (index_type x = 0; x < n; ++x) {
          for (index_type y = 0; y < n; ++y) {
            if (p.at(x, y) == v._d[x] && p.at(y, x) == v._r[x]) {
              v._inv[x] = y;
              break;
            }
          }
          if (v._inv[x] == UNDEFINED) {
            throw axiom_violation("inverse", N({x}), "element has no inverse");
          }
        }
      }
    } else if (kind == structure_kind::semigroupoid) {
      auto objs      = infer_objects(p);
      v._num_objects = objs.num_objects;
      v._dom         = std::move(objs.dom);
      v._cod         = std::move(objs.cod);
    } else {
      for (index_type x = 0; x < n; ++x) {
        for (index_type y = 0; y < n; ++y) {
          if (!is_defined(p.at(x, y))) {
            throw axiom_violation("totality", N({x, y}), "product undefined");
          }
        }
      }
      for (index_type x = 0; x < n; ++x) {
        for (index_type y = 0; y < n; ++y) {
          auto xy = p.at(x, y);
          if (!is_known(xy)) {
            continue;
          }
          for (index_type z = 0; z < n; ++z) {
            auto yz = p.at(y, z);
            if (!is_known(yz)) {
              continue;
            }
            auto l = p.at(x, yz), r = p.at(xy, z);
            if (is_known(l) && is_known(r) && l != r) {
              throw axiom_violation("associativity", N({x, y, z}), "(xy)z != x(yz)");
            }
          }
        }
      }
      v._num_objects = 1;
      v._dom.assign(n, 0);
      v._cod.assign(n, 0);
      if (kind == structure_kind::inverse_semigroup) {
        auto P = [&p](index_type a, index_type b) -> index_type {
          if (!is_known(a) || !is_known(b)) {
            return UNKNOWN;
          }
          return p.at(a, b);
        };
        v._inv.assign(n, UNDEFINED);
        for (index_type x = 0; x < n; ++x) {
          for (index_type y = 0; y < n; ++y) {
            if (P(P(x, y), x) == x && P(P(y, x), y) == y) {
              v._inv[x] = y;
              break;
            }
          }
          if (v._inv[x] == UNDEFINED) {
            if (!p.windowed()) {
              throw axiom_violation("regularity", N({x}), "no inverse");
            }
            v._inv[x] = UNKNOWN;
          }
        }
        std::vector<index_type> es;
        for (index_type x = 0; x < n; ++x) {
          if (p.at(x, x) == x) {
            es.push_back(x);
          }
        }
        for (auto e : es) {
          for (auto f : es) {
            auto ef = p.at(e, f), fe = p.at(f, e);
            if (is_known(ef) && is_known(fe) && ef != fe) {
              throw axiom_violation("idempotents-commute", N({e, f}), "ef != fe");
            }
          }
        }
        v._d.assign(n, UNKNOWN);
        v._r.assign(n, UNKNOWN);
        v._is_identity.assign(n, false);
        for (auto e : es) {
          v._is_identity[e] = true;
        }
        v._identities = es;
        for (index_type x = 0; x < n; ++x) {
          if (is_known(v._inv[x])) {
            v._d[x] = P(x, v._inv[x]);
            v._r[x] = P(v._inv[x], x);
          }
        }
      }
    }

    if (p.zero()) {
      v._zero = p.zero();
    } else if (!categorical && !p.windowed()) {
      // A window may make an element look absorbing; there the zero must
      // be declared.
      for (index_type z = 0; z < n; ++z) {
        bool ok = true;
        for (index_type x = 0; x < n && ok; ++x) {
          ok = p.at(z, x) == z && p.at(x, z) == z;
        }
        if (ok) {
          v._zero = z;
          break;
        }
      }
    }
    return v;
  }

  StructureView view(PartialAlgebra p, structure_kind kind) {
    return view(std::make_shared<PartialAlgebra const>(std::move(p)), kind);
  }

  StructureView view(PartialAlgebra p) {
    auto k = p.kind();
    return view(std::move(p), k);
  }

  std::vector<index_type> idempotents(StructureView const& s) {
    std::vector<index_type> out;
    for (index_type x = 0; x < s.size(); ++x) {
      if (s.product(x, x) == x) {
        out.push_back(x);
      }
    }
    return out;
  }

}  // namespace qgp
