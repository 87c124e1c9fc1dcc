#include "hsect/cli.hpp"

#include <charconv>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "hsect/bundle_io.hpp"
#include "hsect/cohomology.hpp"
#include "hsect/weyl_bott.hpp"

namespace hsect {

namespace {

using nlohmann::ordered_json;

// Usage-level problem detected after CLI11 parsing succeeded.
struct UsageError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

// Semantic failure whose report has already been written.
struct Reported {};

std::vector<int> parse_int_list(const std::string& text, const char* what) {
  std::vector<int> out;
  if (text.empty()) return out;
  std::size_t start = 0;
  for (;;) {
    const std::size_t end = std::min(text.find(',', start), text.size());
    int v = 0;
    const char* first = text.data() + start;
    const char* last = text.data() + end;
    auto [ptr, ec] = std::from_chars(first, last, v);
    if (ec != std::errc() || ptr != last || first == last) {
      throw UsageError(std::string(what) + ": cannot parse \"" + text + "\"");
    }
    out.push_back(v);
    if (end == text.size()) break;
    start = end + 1;
  }
  return out;
}

std::shared_ptr<const ParabolicGeometry> geometry_from(const std::string& type,
                                                       const std::string& levi_text) {
  CartanType t;
  try {
    t = CartanType::parse(type);
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
  std::vector<std::size_t> levi;
  for (int i : parse_int_list(levi_text, "--levi")) {
    if (i < 1 || i > t.rank) {
      throw UsageError("--levi: index " + std::to_string(i) + " outside 1.." +
                       std::to_string(t.rank));
    }
    levi.push_back(static_cast<std::size_t>(i - 1));
  }
  return build_geometry(t, levi);
}

Weight weight_from(const std::vector<int>& coords, const ParabolicGeometry& geom) {
  if (coords.size() != geom.rank()) {
    throw UsageError("expected " + std::to_string(geom.rank()) + " coordinates, got " +
                     std::to_string(coords.size()));
  }
  return Weight(coords);
}

ordered_json relation_json(const RelationInstance& r, const RootSystem& roots) {
  const auto& pos = roots.positive_roots();
  ordered_json j;
  j["at"] = r.source.coords();
  j["first"] = pos[r.first].simple;
  j["second"] = pos[r.second].simple;
  j["N"] = r.coefficient;
  return j;
}

std::string relation_text(const RelationInstance& r, const RootSystem& roots) {
  const auto& pos = roots.positive_roots();
  std::ostringstream os;
  os << "violation at=" << r.source.str() << " first=" << Weight(pos[r.first].simple).str()
     << " second=" << Weight(pos[r.second].simple).str() << " N=" << r.coefficient;
  return os.str();
}

void print_module(const GModuleDecomposition& g, bool as_json, std::ostream& out,
                  std::ostream& err) {
  for (const auto& w : g.warnings) err << "warning: " << w << "\n";
  if (as_json) {
    ordered_json doc;
    ordered_json entries = ordered_json::array();
    for (const auto& e : g.entries) {
      ordered_json j;
      j["weight"] = e.weight.coords();
      j["mult"] = e.multiplicity;
      j["dim"] = integer_to_json(e.dimension);
      entries.push_back(j);
    }
    doc["entries"] = entries;
    doc["total"] = integer_to_json(g.total_dimension());
    doc["warnings"] = g.warnings;
    out << pretty_json(doc);
    return;
  }
  for (const auto& e : g.entries) {
    out << "weight=" << e.weight.str() << " mult=" << e.multiplicity
        << " dim=" << to_string(e.dimension) << "\n";
  }
  out << "total=" << to_string(g.total_dimension()) << "\n";
}

QuiverRep checked(QuiverRep rep, std::ostream& err) {
  const auto errors = validate(rep);
  if (!errors.empty()) {
    for (const auto& e : errors) err << "invalid: " << e << "\n";
    throw Reported{};
  }
  return rep;
}

void write_bundle(const QuiverRep& rep, const std::string& path, std::ostream& out) {
  if (path.empty() || path == "-") {
    out << dump_bundle(rep);
  } else {
    save_bundle(rep, path);
  }
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Global sections of homogeneous bundles on ADE flag varieties", "hsect"};
  app.require_subcommand(1);

  std::string type;
  std::string levi;
  std::string file;
  std::string output;
  std::string center;
  std::string kind;
  std::vector<int> coords;
  int radius = 1;
  int degree = 0;
  bool as_json = false;

  auto* bott_cmd = app.add_subcommand("bott", "Bott cohomology of an irreducible bundle");
  bott_cmd->add_option("type", type, "Cartan type, e.g. A2")->required();
  bott_cmd->add_option("--levi", levi, "Levi simple roots, 1-based, comma separated");
  bott_cmd->add_option("coords", coords, "weight coordinates (after --)");
  bott_cmd->add_flag("--json", as_json);

  auto* quiver_cmd = app.add_subcommand("quiver", "Window of the quiver around a vertex");
  quiver_cmd->add_option("type", type)->required();
  quiver_cmd->add_option("--levi", levi);
  quiver_cmd->add_option("--center", center, "comma separated; or give coordinates after --");
  quiver_cmd->add_option("--radius", radius)->check(CLI::NonNegativeNumber);
  quiver_cmd->add_option("coords", coords);
  quiver_cmd->add_flag("--json", as_json);

  auto* check_cmd = app.add_subcommand("check", "Validate a bundle and its relations");
  check_cmd->add_option("file", file)->required();
  check_cmd->add_flag("--json", as_json);

  auto* solve_cmd = app.add_subcommand("solve", "Complete derived arrows from generating ones");
  solve_cmd->add_option("file", file)->required();
  solve_cmd->add_option("-o,--output", output, "output file (default: standard output)");
  solve_cmd->add_flag("--json", as_json, "report inconsistencies as JSON");

  auto* gabriel_cmd = app.add_subcommand("gabriel", "Interval decomposition of an A_m bundle");
  gabriel_cmd->add_option("file", file)->required();
  gabriel_cmd->add_flag("--json", as_json);

  auto* make_cmd = app.add_subcommand("make", "Build a standard bundle");
  make_cmd->add_option("kind", kind)->required()->check(CLI::IsMember({"tangent", "cotangent"}));
  make_cmd->add_option("type", type)->required();
  make_cmd->add_option("-o,--output", output);

  auto* h0_cmd = app.add_subcommand("h0", "Global sections");
  h0_cmd->add_option("file", file)->required();
  h0_cmd->add_flag("--json", as_json);

  auto* hgr_cmd = app.add_subcommand("hgr", "Cohomology of the graded bundle");
  hgr_cmd->add_option("file", file)->required();
  hgr_cmd->add_option("--degree", degree)->required()->check(CLI::NonNegativeNumber);
  hgr_cmd->add_flag("--json", as_json);

  auto* euler_cmd = app.add_subcommand("euler", "Euler characteristic");
  euler_cmd->add_option("file", file)->required();
  euler_cmd->add_flag("--json", as_json);

  std::vector<const char*> argv{"hsect"};
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : 1;
  }

  try {
    if (bott_cmd->parsed()) {
      const auto geom = geometry_from(type, levi);
      const Weight lambda = weight_from(coords, *geom);
      if (!geom->is_vertex(lambda)) {
        err << "error: " << lambda.str() << " is not dominant for the Levi factor\n";
        return 2;
      }
      const auto b = bott(*geom, lambda);
      if (as_json) {
        ordered_json doc;
        doc["singular"] = b.singular;
        if (!b.singular) {
          doc["degree"] = b.degree;
          doc["weight"] = b.weight.coords();
          doc["dim"] = integer_to_json(b.dimension);
        }
        out << pretty_json(doc);
      } else if (b.singular) {
        out << "singular\n";
      } else {
        out << "degree=" << b.degree << " weight=" << b.weight.str()
            << " dim=" << to_string(b.dimension) << "\n";
      }
      return 0;
    }

    if (quiver_cmd->parsed()) {
      const auto geom = geometry_from(type, levi);
      if (!center.empty() && !coords.empty()) {
        throw UsageError("give the center either with --center or after --, not both");
      }
      const Weight c = weight_from(center.empty() ? coords : parse_int_list(center, "--center"),
                                   *geom);
      if (!geom->is_vertex(c)) {
        err << "error: " << c.str() << " is not a vertex\n";
        return 2;
      }
      const auto window = quiver_window(*geom, c, radius);
      const auto& pos = geom->roots().positive_roots();
      if (as_json) {
        ordered_json doc;
        ordered_json vs = ordered_json::array();
        for (const auto& v : window.vertices) vs.push_back(v.coords());
        ordered_json as = ordered_json::array();
        for (const auto& a : window.arrows) {
          ordered_json j;
          j["from"] = a.source.coords();
          j["to"] = a.target.coords();
          j["root"] = pos[a.root].simple;
          j["kind"] = to_string(a.kind);
          as.push_back(j);
        }
        doc["vertices"] = vs;
        doc["arrows"] = as;
        out << pretty_json(doc);
      } else {
        out << "vertices=" << window.vertices.size() << " arrows=" << window.arrows.size() << "\n";
        for (const auto& v : window.vertices) out << "vertex " << v.str() << "\n";
        for (const auto& a : window.arrows) {
          out << "arrow " << a.source.str() << " -> " << a.target.str()
              << " root=" << Weight(pos[a.root].simple).str() << " " << to_string(a.kind) << "\n";
        }
      }
      return 0;
    }

    if (check_cmd->parsed()) {
      const QuiverRep rep = load_bundle(file);
      const auto errors = validate(rep);
      std::vector<RelationInstance> failed;
      const bool borel = rep.geometry().is_borel();
      if (errors.empty() && borel) failed = check_relations(rep);
      const RootSystem& roots = rep.geometry().roots();
      if (!borel) err << "warning: relations are not known for non-Borel parabolics\n";
      if (as_json) {
        ordered_json doc;
        doc["valid"] = errors.empty() && failed.empty();
        doc["errors"] = errors;
        ordered_json vs = ordered_json::array();
        for (const auto& r : failed) vs.push_back(relation_json(r, roots));
        doc["violations"] = vs;
        doc["relations_checked"] = borel && errors.empty();
        out << pretty_json(doc);
      } else {
        for (const auto& e : errors) out << "invalid: " << e << "\n";
        for (const auto& r : failed) out << relation_text(r, roots) << "\n";
        if (errors.empty() && failed.empty()) out << "ok\n";
      }
      return errors.empty() && failed.empty() ? 0 : 2;
    }

    if (solve_cmd->parsed()) {
      const QuiverRep rep = checked(load_bundle(file), err);
      if (!rep.geometry().is_borel()) {
        err << "error: derived arrows can only be solved for Borel geometries\n";
        return 2;
      }
      const auto outcome = solve_derived_arrows(rep);
      const RootSystem& roots = rep.geometry().roots();
      if (!outcome.consistent) {
        if (as_json) {
          ordered_json doc;
          doc["consistent"] = false;
          ordered_json ws = ordered_json::array();
          for (const auto& r : outcome.witnesses) ws.push_back(relation_json(r, roots));
          doc["witnesses"] = ws;
          out << pretty_json(doc);
        } else {
          out << "inconsistent\n";
          for (const auto& r : outcome.witnesses) out << relation_text(r, roots) << "\n";
        }
        return 2;
      }
      write_bundle(outcome.rep, output, out);
      return 0;
    }

    if (gabriel_cmd->parsed()) {
      const QuiverRep rep = checked(load_bundle(file), err);
      if (!is_am_type(rep)) {
        err << "error: support is not a single directed path\n";
        return 2;
      }
      const auto g = gabriel_decompose(rep);
      const auto& pos = rep.geometry().roots().positive_roots();
      if (as_json) {
        ordered_json doc;
        doc["direction"] = pos[g.path.direction].simple;
        ordered_json path = ordered_json::array();
        for (const auto& v : g.path.path) path.push_back(v.coords());
        doc["path"] = path;
        ordered_json ivs = ordered_json::array();
        for (const auto& iv : g.intervals) {
          ordered_json j;
          j["first"] = iv.first + 1;
          j["last"] = iv.last + 1;
          j["mult"] = iv.multiplicity;
          ivs.push_back(j);
        }
        doc["intervals"] = ivs;
        out << pretty_json(doc);
      } else {
        out << "direction=" << Weight(pos[g.path.direction].simple).str() << "\n";
        for (std::size_t i = 0; i < g.path.path.size(); ++i) {
          out << "vertex " << i + 1 << " " << g.path.path[i].str() << "\n";
        }
        for (const auto& iv : g.intervals) {
          out << "interval [" << iv.first + 1 << ".." << iv.last + 1 << "] mult="
              << iv.multiplicity << "\n";
        }
      }
      return 0;
    }

    if (make_cmd->parsed()) {
      const auto geom = geometry_from(type, "");
      write_bundle(kind == "tangent" ? tangent(geom) : cotangent(geom), output, out);
      return 0;
    }

    if (h0_cmd->parsed()) {
      print_module(h0(load_bundle(file)), as_json, out, err);
      return 0;
    }

    if (hgr_cmd->parsed()) {
      print_module(h_graded(checked(load_bundle(file), err), degree), as_json, out, err);
      return 0;
    }

    if (euler_cmd->parsed()) {
      const Integer chi = euler(checked(load_bundle(file), err));
      if (as_json) {
        ordered_json doc;
        doc["euler"] = integer_to_json(chi);
        out << pretty_json(doc);
      } else {
        out << "euler=" << to_string(chi) << "\n";
      }
      return 0;
    }
  } catch (const Reported&) {
    return 2;
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  } catch (const FormatError& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  } catch (const ValidationError& e) {
    err << "error: " << e.what() << "\n";
    for (const auto& d : e.details()) err << "  " << d << "\n";
    return 2;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }
  return 1;
}

}  // namespace hsect
