#include "cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <map>
#include <optional>
#include <sstream>

#include "qgp/axioms.hpp"
#include "qgp/bridges.hpp"
#include "qgp/constructions.hpp"
#include "qgp/fractions.hpp"
#include "qgp/morphisms.hpp"

namespace qgp::cli {

  namespace {

    namespace fs = std::filesystem;
    using json   = nlohmann::ordered_json;

    int code_of(verdict v) {
      switch (v) {
        case verdict::holds:
          return ok;
        case verdict::fails:
          return failed;
        case verdict::inconclusive:
          return inconclusive;
      }
      return usage;
    }

    json to_json(CheckReport const& r) {
      return {{"property", r.property},
              {"verdict", std::string(to_string(r.result))},
              {"witness", r.witness},
              {"detail", r.detail}};
    }

    std::string cell_name(StructureView const& s, index_type x) {
      if (x == UNDEFINED) {
        return "undefined";
      }
      if (x == UNKNOWN) {
        return "?";
      }
      return s.name(x);
    }

    // Shared state of one invocation.
    struct Ctx {
      std::ostream& out;
      std::ostream& err;
      bool          json_mode = false;
      bool          color     = false;
      json          doc       = json::object();
      int           code      = ok;

      void raise(int c) {
        code = std::max(code, c);
      }

      std::string paint(verdict v) const {
        std::string word(to_string(v));
        if (!color) {
          return word;
        }
        char const* c = v == verdict::holds ? "\033[32m" : v == verdict::fails ? "\033[31m"
                                                                               : "\033[33m";
        return c + word + "\033[0m";
      }

      std::ostream& text() {
        static std::ostringstream sink;
        if (json_mode) {
          sink.str("");
          return sink;
        }
        return out;
      }

      void report(CheckReport const& r) {
        raise(code_of(r.result));
        if (json_mode) {
          doc["reports"].push_back(to_json(r));
          return;
        }
        out << r.property << ": " << paint(r.result);
        if (!r.witness.empty()) {
          out << " (";
          for (std::size_t i = 0; i < r.witness.size(); ++i) {
            out << (i ? ", " : "") << r.witness[i];
          }
          out << ")";
        }
        if (!r.detail.empty()) {
          out << ": " << r.detail;
        }
        out << "\n";
      }

      // Writes p to path, or to stdout in text mode when path is empty.
      void emit(PartialAlgebra const& p, std::string const& path) {
        if (!path.empty()) {
          save_file(p, path);
          doc["output"] = path;
        } else if (json_mode) {
          doc["algebra"] = serialize(p);
        } else {
          out << serialize(p);
        }
        doc["elements"] = p.size();
      }
    };

    StructureView load_view(std::string const& path, std::string const& kind) {
      auto p = load_file(path);
      if (kind.empty()) {
        return view(std::move(p));
      }
      structure_kind k;
      if (!parse_kind(kind, k)) {
        throw error("unknown kind: " + kind);
      }
      return view(std::move(p), k);
    }

    GroupTable parse_group(std::string const& s) {
      if (s == "trivial") {
        return GroupTable::trivial();
      }
      if (s == "s3") {
        return GroupTable::symmetric3();
      }
      if (s.size() > 1 && s[0] == 'z') {
        try {
          auto n = std::stoul(s.substr(1));
          if (n > 0) {
            return GroupTable::cyclic(n);
          }
        } catch (std::exception const&) {
        }
      }
      throw error("unknown group: " + s + " (expected trivial, s3 or zN)");
    }

    Endo parse_endo(GroupTable const& g, std::string const& s) {
      if (s == "identity") {
        return Endo::identity(g);
      }
      if (s == "trivial") {
        return Endo::trivial(g);
      }
      throw error("unknown endomorphism: " + s + " (expected identity or trivial)");
    }

    // "a=b" pairs by element names.
    std::vector<std::pair<std::string, std::string>> parse_assignments(
        std::vector<std::string> const& items) {
      std::vector<std::pair<std::string, std::string>> out;
      for (auto const& it : items) {
        auto eq = it.rfind('=');
        if (eq == std::string::npos || eq == 0 || eq + 1 == it.size()) {
          throw error("expected name=name, got " + it);
        }
        out.emplace_back(it.substr(0, eq), it.substr(eq + 1));
      }
      return out;
    }

    json morphism_json(Morphism const&    m,
                       std::string const& source,
                       std::string const& target,
                       bool               verified) {
      json map = json::object();
      for (index_type x = 0; x < m.map.size(); ++x) {
        map[m.source.name(x)] = m.target.name(m.map[x]);
      }
      return {{"source", source},
              {"target", target},
              {"map", map},
              {"kind", std::string(to_string(m.kind))},
              {"verified", verified}};
    }

    void print_map(Ctx& c, Morphism const& m) {
      for (index_type x = 0; x < m.map.size(); ++x) {
        c.text() << "  " << m.source.name(x) << " -> " << m.target.name(m.map[x]) << "\n";
      }
    }

    ////////////////////////////////////////////////////////////////////////
    // Verbs
    ////////////////////////////////////////////////////////////////////////

    struct Options {
      std::vector<std::string> files;
      std::vector<std::string> props;
      std::vector<std::string> fix, phi, parts;
      std::string              kind, mode = "category", output, theta_path, group = "z2";
      std::string              theta_map = "identity", rel, into, type;
      std::size_t              n         = 2;
      bool                     lambda_s1 = false, straight = false, drop_zero = false;
      bool                     oracle    = false;
    };

    void do_check(Ctx& c, Options const& o) {
      auto         s = load_view(o.files[0], o.kind);
      CheckOptions opts{o.lambda_s1};
      for (auto const& p : o.props) {
        c.report(check(s, p, opts));
      }
    }

    void do_fractions(Ctx& c, Options const& o) {
      fraction_mode mode;
      if (o.mode == "category") {
        mode = fraction_mode::category;
      } else if (o.mode == "semigroupoid") {
        mode = fraction_mode::semigroupoid;
      } else {
        throw error("unknown mode: " + o.mode);
      }
      auto s = load_view(o.files[0], o.kind);
      auto f = localize(s, mode);
      for (auto const& r : f.preconditions) {
        c.report(r);
      }
      if (!f.windowed()) {
        c.report(verify_quotient(f));
      }
      json theta = json::object();
      for (index_type a = 0; a < s.size(); ++a) {
        theta[s.name(a)] = is_known(f.theta[a]) ? json(f.class_name(f.theta[a])) : json(nullptr);
      }
      c.doc["classes"] = f.num_classes();
      c.doc["theta"]   = theta;
      c.text() << "classes: " << f.num_classes() << "\n";
      auto alg = f.to_algebra();
      c.emit(alg, o.output);
      std::string sidecar = o.theta_path;
      if (sidecar.empty() && !o.output.empty()) {
        sidecar = (fs::path(o.output).parent_path() / "theta.json").string();
      }
      if (!sidecar.empty()) {
        std::ofstream tf(sidecar, std::ios::binary);
        if (!tf) {
          throw error("cannot write " + sidecar);
        }
        tf << json{{"theta", theta}}.dump(2) << "\n";
        c.doc["theta_file"] = sidecar;
      }
    }

    void do_adjoin_zero(Ctx& c, Options const& o) {
      c.emit(adjoin_zero(load_view(o.files[0], o.kind)).base(), o.output);
    }

    void do_strip_zero(Ctx& c, Options const& o) {
      c.emit(strip_zero(load_view(o.files[0], o.kind)).base(), o.output);
    }

    void do_augment(Ctx& c, Options const& o) {
      auto q   = load_view(o.files[0], o.kind);
      auto idx = embed_subsemigroup(load_file(o.files[1]), q);
      c.emit(augment(idx, q).base(), o.output);
    }

    void do_iorder(Ctx& c, Options const& o) {
      auto q   = load_view(o.files[0], o.kind);
      auto idx = embed_subsemigroup(load_file(o.files[1]), q);
      auto res = check_left_i_order(idx, q, o.straight);
      c.report(res.report);
      if (!res.witness) {
        return;
      }
      json pairs = json::object();
      for (index_type x = 0; x < q.size(); ++x) {
        auto [a, b] = res.witness->pairs[x];
        pairs[q.name(x)] = {q.name(a), q.name(b)};
        c.text() << "  " << q.name(x) << " = " << q.name(a) << "^-1 " << q.name(b) << "\n";
      }
      c.doc["pairs"] = pairs;
    }

    InductiveGroupoid inductive_of(StructureView const& s, bool keep_zero) {
      if (s.kind() == structure_kind::inverse_semigroup) {
        return to_inductive(s, keep_zero);
      }
      if (s.kind() == structure_kind::groupoid) {
        return make_inductive(s);
      }
      throw incompatible_kind("needs an inverse semigroup or an ordered groupoid");
    }

    void do_inductive(Ctx& c, Options const& o) {
      auto ig = to_inductive(load_view(o.files[0], o.kind), !o.drop_zero);
      c.doc["inductive"] = ig.inductive();
      c.text() << (ig.inductive() ? "inductive" : "*-inductive") << "\n";
      c.report(check_restriction_law(ig));
      c.emit(ig.groupoid().base(), o.output);
    }

    void do_pseudoproduct(Ctx& c, Options const& o) {
      auto  s  = load_view(o.files[0], o.kind);
      auto  ig = inductive_of(s, true);
      auto& g  = ig.groupoid();
      if (o.files.size() == 3) {
        auto r           = pseudoproduct(ig, g.index(o.files[1]), g.index(o.files[2]));
        c.doc["product"] = cell_name(g, r);
        c.text() << cell_name(g, r) << "\n";
        if (r == UNKNOWN) {
          c.raise(inconclusive);
        }
        return;
      }
      if (o.files.size() != 1) {
        throw error("pseudoproduct takes a file and optionally two elements");
      }
      PartialAlgebra p(structure_kind::inverse_semigroup, g.base().names());
      p.set_windowed(g.windowed());
      for (index_type x = 0; x < g.size(); ++x) {
        for (index_type y = 0; y < g.size(); ++y) {
          p.set(x, y, pseudoproduct(ig, x, y));
        }
      }
      c.emit(p, o.output);
    }

    void do_construct(Ctx& c, Options const& o) {
      auto const& t = o.type;
      if (t == "zero-union") {
        std::vector<StructureView> parts;
        for (auto const& f : o.parts) {
          parts.push_back(load_view(f, ""));
        }
        c.emit(zero_direct_union(parts).base(), o.output);
        return;
      }
      if (t == "nat" || t == "natplus") {
        c.emit(additive_window(o.n, t == "nat").base(), o.output);
        return;
      }
      auto g = parse_group(o.group);
      if (t == "connected") {
        c.emit(connected_groupoid(g, o.n).base(), o.output);
      } else if (t == "brandt") {
        c.emit(brandt(g, o.n).base(), o.output);
      } else if (t == "bruck-reilly") {
        c.emit(bruck_reilly_window(g, parse_endo(g, o.theta_map), o.n).base(), o.output);
      } else if (t == "omega") {
        c.emit(omega_groupoid_window(g, parse_endo(g, o.theta_map), o.n).groupoid().base(),
               o.output);
      } else {
        throw error("unknown construction: " + t);
      }
    }

    void do_components(Ctx& c, Options const& o) {
      auto g     = load_view(o.files[0], o.kind);
      auto comps = connected_components(g);
      json list  = json::array();
      for (std::size_t k = 0; k < comps.size(); ++k) {
        list.push_back(comps[k].base().names());
        c.text() << "component " << k + 1 << ":";
        for (auto const& nm : comps[k].base().names()) {
          c.text() << " " << nm;
        }
        c.text() << "\n";
        if (!o.output.empty()) {
          save_file(comps[k].base(), o.output + "-" + std::to_string(k + 1) + ".alg");
        }
      }
      c.doc["components"] = list;
    }

    void do_iso(Ctx& c, Options const& o) {
      auto                    a = load_view(o.files[0], o.kind);
      auto                    b = load_view(o.files[1], o.kind);
      std::vector<index_type> fixed(a.size(), UNDEFINED);
      for (auto const& [x, y] : parse_assignments(o.fix)) {
        fixed[a.index(x)] = b.index(y);
      }
      auto res = find_isomorphism(a, b, fixed);
      c.report(res.report);
      if (res.morphism) {
        c.doc["morphism"] = morphism_json(*res.morphism, o.files[0], o.files[1], true);
        print_map(c, *res.morphism);
      }
    }

    void do_extend(Ctx& c, Options const& o) {
      auto                    cv = load_view(o.files[0], o.kind);
      auto                    t  = load_view(o.files[1], "");
      StructureView           g;
      std::vector<index_type> c_in_g;
      std::string             g_name;
      if (!o.into.empty()) {
        g      = load_view(o.into, "");
        g_name = o.into;
        for (index_type x = 0; x < cv.size(); ++x) {
          c_in_g.push_back(g.index(cv.name(x)));
        }
      } else {
        auto mode = cv.kind() == structure_kind::category || cv.kind() == structure_kind::groupoid
                        ? fraction_mode::category
                        : fraction_mode::semigroupoid;
        auto f = localize(cv, mode);
        g      = f.to_view();
        c_in_g = f.theta;
        g_name = "localization of " + o.files[0];
      }
      Morphism phi{cv, t, std::vector<index_type>(cv.size(), UNDEFINED), morphism_kind::embedding};
      for (index_type x = 0; x < cv.size(); ++x) {
        if (auto y = t.base().find(cv.name(x))) {
          phi.map[x] = *y;
        }
      }
      for (auto const& [x, y] : parse_assignments(o.phi)) {
        phi.map[cv.index(x)] = t.index(y);
      }
      for (index_type x = 0; x < cv.size(); ++x) {
        if (phi.map[x] == UNDEFINED) {
          throw error("phi leaves " + cv.name(x) + " unmapped; use --phi");
        }
      }
      auto psi = extend_embedding(g, c_in_g, phi);
      auto r   = verify(psi);
      c.report(r);
      c.doc["morphism"] = morphism_json(psi, g_name, o.files[1], r.holds());
      print_map(c, psi);
      if (g.size() <= 12) {
        bool unique      = count_extensions(g, c_in_g, phi, 2) == 1;
        c.doc["unique"] = unique;
        c.text() << (unique ? "unique extension" : "extension not unique") << "\n";
        if (!unique) {
          c.raise(failed);
        }
      }
    }

    void do_green(Ctx& c, Options const& o) {
      auto        s = load_view(o.files[0], o.kind);
      relation_id id;
      if (!parse_relation(o.rel, id)) {
        throw error("unknown relation: " + o.rel);
      }
      auto table   = relation(s, id, CheckOptions{o.lambda_s1});
      json classes = json::array();
      if (table.pairs.is_symmetric() && table.pairs.is_transitive()
          && table.pairs.is_reflexive()) {
        for (auto const& cls : table.pairs.classes()) {
          classes.push_back(s.names(cls));
          c.text() << "{";
          for (std::size_t i = 0; i < cls.size(); ++i) {
            c.text() << (i ? ", " : "") << s.name(cls[i]);
          }
          c.text() << "}\n";
        }
        c.doc["classes"] = classes;
      } else {
        json pairs = json::array();
        for (index_type x = 0; x < s.size(); ++x) {
          for (index_type y = 0; y < s.size(); ++y) {
            if (table.pairs(x, y)) {
              pairs.push_back({s.name(x), s.name(y)});
              c.text() << s.name(x) << " ~ " << s.name(y) << "\n";
            }
          }
        }
        c.doc["pairs"] = pairs;
      }
      if (o.oracle) {
        if (id != relation_id::green_R && id != relation_id::green_L
            && id != relation_id::green_J) {
          throw error("--oracle applies to green_R, green_L and green_J only");
        }
        auto        ideals = green_via_ideals(s, id);
        std::string prop   = "green-" + std::string(to_string(id)) + "-ideals";
        CheckReport r      = CheckReport::make_holds(prop);
        for (index_type x = 0; x < s.size() && r.holds(); ++x) {
          for (index_type y = 0; y < s.size() && r.holds(); ++y) {
            if (ideals.pairs(x, y) != table.pairs(x, y)) {
              r = CheckReport::make_fails(prop, s.names({x, y}), "ideal and fibre relations differ");
            }
          }
        }
        c.report(r);
      }
    }

    std::vector<std::string> tokenize(std::string const& line) {
      std::istringstream       in(line);
      std::vector<std::string> out;
      for (std::string t; in >> t;) {
        out.push_back(t);
      }
      return out;
    }

    bool produces_algebra(std::vector<std::string> const& t) {
      static std::vector<std::string> const verbs = {
          "fractions", "adjoin-zero", "strip-zero", "augment", "inductive", "construct"};
      return std::find(verbs.begin(), verbs.end(), t[0]) != verbs.end()
          || (t[0] == "pseudoproduct" && t.size() == 2);
    }

    void do_pipeline(Ctx& c, Options const& o) {
      auto const  script = fs::path(o.files[0]);
      std::ifstream in(script);
      if (!in) {
        throw error("cannot open " + script.string());
      }
      char tmpl[] = "/tmp/qgp-pipeline-XXXXXX";
      if (!mkdtemp(tmpl)) {
        throw error("cannot create a temporary directory");
      }
      fs::path const           tmp(tmpl);
      std::vector<std::string> outputs;
      json                     stages = json::array();
      std::string              line;
      for (std::size_t lineno = 1; std::getline(in, line); ++lineno) {
        if (auto h = line.find('#'); h != std::string::npos) {
          line.erase(h);
        }
        auto t = tokenize(line);
        if (t.empty()) {
          continue;
        }
        auto const k = outputs.size() + 1;
        for (std::size_t i = 1; i < t.size(); ++i) {
          if (t[i].size() > 1 && t[i][0] == '$') {
            std::size_t ref = 0;
            try {
              ref = std::stoul(t[i].substr(1));
            } catch (std::exception const&) {
            }
            if (ref == 0 || ref >= k || outputs[ref - 1].empty()) {
              throw error("line " + std::to_string(lineno) + ": " + t[i]
                          + " does not name an earlier output");
            }
            t[i] = outputs[ref - 1];
          } else if (t[i][0] != '-' && fs::path(t[i]).is_relative()
                     && fs::exists(script.parent_path() / t[i])) {
            t[i] = (script.parent_path() / t[i]).string();
          }
        }
        std::string out_path;
        if (auto it = std::find(t.begin(), t.end(), "-o"); it != t.end() && it + 1 != t.end()) {
          out_path = *(it + 1);
        } else if (produces_algebra(t)) {
          out_path = (tmp / ("stage-" + std::to_string(k) + ".alg")).string();
          t.push_back("-o");
          t.push_back(out_path);
        }
        outputs.push_back(out_path);
        if (c.json_mode) {
          t.push_back("--json");
        }
        std::ostringstream sub_out;
        int                code = run(t, c.json_mode ? sub_out : c.out, c.err);
        if (c.json_mode) {
          auto doc = json::parse(sub_out.str(), nullptr, false);
          doc.erase("output");
          doc.erase("theta_file");
          stages.push_back(doc);
        } else {
          c.out << "stage " << k << ": " << t[0] << " -> exit " << code << "\n";
        }
        c.raise(code);
        if (code == usage) {
          break;
        }
      }
      fs::remove_all(tmp);
      c.doc["stages"] = stages;
    }

  }  // namespace

  int run(std::vector<std::string> const& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Groupoids of left quotients, inverse semigroups and related constructions",
                 "qgp"};
    app.require_subcommand(1);
    app.fallthrough();
    bool json_mode = false;
    app.add_flag("--json", json_mode, "Print a single JSON document");

    Options o;
    auto    add_kind = [&](CLI::App* sub) {
      sub->add_option("--kind", o.kind, "Override the declared kind of the input");
    };
    auto add_out = [&](CLI::App* sub) {
      sub->add_option("-o,--output", o.output, "Output .alg file (default stdout)");
    };

    auto* check = app.add_subcommand("check", "Decide a property of a structure");
    check->add_option("file", o.files, "Input .alg file")->required()->expected(1);
    check->add_option("--prop", o.props, "Property id (repeatable)")
        ->required()
        ->check(CLI::IsMember(std::vector<std::string>(property_ids().begin(),
                                                       property_ids().end())));
    check->add_flag("--lambda-s1", o.lambda_s1, "Use S^1 a in the lambda relation");
    add_kind(check);

    auto* fractions = app.add_subcommand("fractions", "Groupoid of left quotients");
    fractions->add_option("file", o.files)->required()->expected(1);
    fractions->add_option("--mode", o.mode, "category or semigroupoid")
        ->check(CLI::IsMember({"category", "semigroupoid"}));
    fractions->add_option("--theta", o.theta_path, "Sidecar JSON for theta");
    add_out(fractions);
    add_kind(fractions);

    auto* adjoin = app.add_subcommand("adjoin-zero", "Adjoin a zero to a groupoid");
    adjoin->add_option("file", o.files)->required()->expected(1);
    add_out(adjoin);
    add_kind(adjoin);

    auto* strip = app.add_subcommand("strip-zero", "Restricted product on the nonzero part");
    strip->add_option("file", o.files)->required()->expected(1);
    add_out(strip);
    add_kind(strip);

    auto* aug = app.add_subcommand("augment", "S u E(Q) as a subcategory");
    aug->add_option("files", o.files, "Q.alg S.alg")->required()->expected(2);
    add_out(aug);
    add_kind(aug);

    auto* iorder = app.add_subcommand("iorder", "Check that S is a left I-order in Q");
    iorder->add_option("files", o.files, "Q.alg S.alg")->required()->expected(2);
    iorder->add_flag("--straight", o.straight, "Require a R b");
    add_kind(iorder);

    auto* inductive = app.add_subcommand("inductive", "Inductive groupoid of an inverse semigroup");
    inductive->add_option("file", o.files)->required()->expected(1);
    inductive->add_flag("--drop-zero", o.drop_zero, "Omit the zero");
    add_out(inductive);
    add_kind(inductive);

    auto* pseudo = app.add_subcommand("pseudoproduct", "Pseudoproduct of two elements or the table");
    pseudo->add_option("args", o.files, "FILE [X Y]")->required()->expected(1, 3);
    add_out(pseudo);
    add_kind(pseudo);

    auto* construct = app.add_subcommand("construct", "Build a standard structure");
    construct->add_option("type", o.type,
                          "connected, brandt, bruck-reilly, omega, nat, natplus or zero-union")
        ->required()
        ->check(CLI::IsMember(
            {"connected", "brandt", "bruck-reilly", "omega", "nat", "natplus", "zero-union"}));
    construct->add_option("--group", o.group, "trivial, s3 or zN");
    construct->add_option("--n", o.n, "Index set size or window bound");
    construct->add_option("--theta", o.theta_map, "identity or trivial");
    construct->add_option("--part", o.parts, "Part of a 0-direct union (repeatable)");
    add_out(construct);

    auto* comps = app.add_subcommand("components", "Connected components of a groupoid");
    comps->add_option("file", o.files)->required()->expected(1);
    comps->add_option("-o,--output", o.output, "Prefix for component files");
    add_kind(comps);

    auto* iso = app.add_subcommand("iso", "Search for an isomorphism");
    iso->add_option("files", o.files, "A.alg B.alg")->required()->expected(2);
    iso->add_option("--fix", o.fix, "Fixed assignment a=b (repeatable)");
    add_kind(iso);

    auto* extend = app.add_subcommand("extend", "Extend an embedding of a left order");
    extend->add_option("files", o.files, "C.alg T.alg")->required()->expected(2);
    extend->add_option("--into", o.into, "Groupoid containing C by name (default: localize C)");
    extend->add_option("--phi", o.phi, "Assignment c=t (repeatable; default by name)");
    add_kind(extend);

    auto* green = app.add_subcommand("green", "Green's and related relations");
    green->add_option("file", o.files)->required()->expected(1);
    green->add_option("--rel", o.rel, "green_R, green_L, green_J, lambda, r_star or natural_order")->required();
    green->add_flag("--oracle", o.oracle, "Compare with the ideal-generated relation");
    green->add_flag("--lambda-s1", o.lambda_s1, "Use S^1 a in the lambda relation");
    add_kind(green);

    auto* pipeline = app.add_subcommand("pipeline", "Run a script of verbs");
    pipeline->add_option("script", o.files)->required()->expected(1);

    std::vector<std::string> argv_store{"qgp"};
    argv_store.insert(argv_store.end(), args.begin(), args.end());
    std::vector<char const*> argv;
    for (auto const& a : argv_store) {
      argv.push_back(a.c_str());
    }
    try {
      app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (CLI::ParseError const& e) {
      int rc = app.exit(e, out, err);
      return rc == 0 ? ok : usage;
    }

    Ctx c{out, err};
    c.json_mode = json_mode;
    if (auto const* env = std::getenv("QGP_COLOR")) {
      c.color = std::string(env) == "1";
    }
    auto* sub = app.get_subcommands().front();
    c.doc["verb"] = sub->get_name();

    static std::map<std::string, void (*)(Ctx&, Options const&)> const verbs = {
        {"check", do_check},
        {"fractions", do_fractions},
        {"adjoin-zero", do_adjoin_zero},
        {"strip-zero", do_strip_zero},
        {"augment", do_augment},
        {"iorder", do_iorder},
        {"inductive", do_inductive},
        {"pseudoproduct", do_pseudoproduct},
        {"construct", do_construct},
        {"components", do_components},
        {"iso", do_iso},
        {"extend", do_extend},
        {"green", do_green},
        {"pipeline", do_pipeline},
    };

    auto fail_with = [&](int code, std::string const& type, std::string const& msg,
                         std::vector<std::string> const& witness = {}) {
      c.raise(code);
      c.doc["error"] = {{"type", type}, {"message", msg}, {"witness", witness}};
      if (!c.json_mode) {
        err << "qgp " << sub->get_name() << ": " << type << ": " << msg << "\n";
      }
    };
    try {
      verbs.at(sub->get_name())(c, o);
    } catch (precondition_failed const& e) {
      c.report(e.report());
      fail_with(failed, "precondition-failed", e.what(), e.report().witness);
    } catch (window_exhausted const& e) {
      fail_with(inconclusive, "window-exhausted", e.what());
    } catch (well_definedness_violation const& e) {
      fail_with(failed, "well-definedness", e.what(), e.witness());
    } catch (construction_error const& e) {
      fail_with(failed, "construction", e.what());
    } catch (parse_error const& e) {
      fail_with(usage, "parse", e.what());
    } catch (axiom_violation const& e) {
      fail_with(usage, "axiom-" + e.axiom(), e.what(), e.witness());
    } catch (incompatible_kind const& e) {
      fail_with(usage, "incompatible-kind", e.what());
    } catch (std::exception const& e) {
      fail_with(usage, "input", e.what());
    }
    c.doc["exit"] = c.code;
    if (c.json_mode) {
      out << c.doc.dump(2) << "\n";
    }
    return c.code;
  }

}  // namespace qgp::cli
