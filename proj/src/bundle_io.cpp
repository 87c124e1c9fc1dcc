#include "hsect/bundle_io.hpp"

#include <algorithm>
#include <fstream>
#include <limits>
#include <set>
#include <sstream>

namespace hsect {

using nlohmann::json;
using nlohmann::ordered_json;

namespace {

void only_keys(const json& obj, std::initializer_list<const char*> allowed, const char* where) {
  if (!obj.is_object()) throw FormatError(std::string(where) + ": expected an object");
  const std::set<std::string> ok(allowed.begin(), allowed.end());
  for (const auto& [key, value] : obj.items()) {
    if (!ok.count(key)) throw FormatError(std::string(where) + ": unknown key \"" + key + "\"");
  }
}

const json& required(const json& obj, const char* key, const char* where) {
  const auto it = obj.find(key);
  if (it == obj.end()) throw FormatError(std::string(where) + ": missing \"" + key + "\"");
  return *it;
}

std::vector<int> int_list(const json& v, const char* where) {
  if (!v.is_array()) throw FormatError(std::string(where) + ": expected an array of integers");
  std::vector<int> out;
  for (const auto& x : v) {
    if (!x.is_number_integer()) {
      throw FormatError(std::string(where) + ": expected an array of integers");
    }
    const auto n = x.get<long long>();
    if (n < std::numeric_limits<int>::min() || n > std::numeric_limits<int>::max()) {
      throw FormatError(std::string(where) + ": coordinate out of range");
    }
    out.push_back(static_cast<int>(n));
  }
  return out;
}

Rational entry(const json& v) {
  if (v.is_number_integer()) return Rational(v.get<long long>());
  if (v.is_string()) {
    try {
      return parse_rational(v.get<std::string>());
    } catch (const std::invalid_argument& e) {
      throw FormatError(std::string("matrix entry: ") + e.what());
    }
  }
  throw FormatError("matrix entry: expected an integer or a \"p/q\" string");
}

Matrix matrix_from(const json& v) {
  if (!v.is_array()) throw FormatError("matrix: expected an array of rows");
  const std::size_t rows = v.size();
  std::size_t cols = 0;
  if (rows > 0) {
    if (!v[0].is_array()) throw FormatError("matrix: expected an array of rows");
    cols = v[0].size();
  }
  Matrix m(rows, cols);
  for (std::size_t r = 0; r < rows; ++r) {
    if (!v[r].is_array() || v[r].size() != cols) throw FormatError("matrix: ragged rows");
    for (std::size_t c = 0; c < cols; ++c) m(r, c) = entry(v[r][c]);
  }
  return m;
}

}  // namespace

QuiverRep bundle_from_json(const json& doc) {
  only_keys(doc, {"algebra", "levi", "vertices", "arrows"}, "bundle");
  const json& algebra = required(doc, "algebra", "bundle");
  if (!algebra.is_string()) throw FormatError("algebra: expected a string such as \"A2\"");
  CartanType type;
  try {
    type = CartanType::parse(algebra.get<std::string>());
  } catch (const std::invalid_argument& e) {
    throw FormatError(e.what());
  }

  std::vector<std::size_t> levi;
  if (doc.contains("levi")) {
    for (int i : int_list(doc["levi"], "levi")) {
      if (i < 1 || i > type.rank) {
        throw FormatError("levi: index " + std::to_string(i) + " outside 1.." +
                          std::to_string(type.rank));
      }
      levi.push_back(static_cast<std::size_t>(i - 1));
    }
  }
  QuiverRep rep(build_geometry(type, levi));
  const RootSystem& roots = rep.geometry().roots();

  const json& vertices = required(doc, "vertices", "bundle");
  if (!vertices.is_array()) throw FormatError("vertices: expected an array");
  for (const auto& v : vertices) {
    only_keys(v, {"weight", "dim"}, "vertex");
    Weight w(int_list(required(v, "weight", "vertex"), "vertex weight"));
    if (w.rank() != roots.rank()) {
      throw FormatError("vertex " + w.str() + ": expected " + std::to_string(roots.rank()) +
                        " coordinates");
    }
    const json& d = required(v, "dim", "vertex");
    if (!d.is_number_integer() || d.get<long long>() < 1) {
      throw FormatError("vertex " + w.str() + ": dim must be a positive integer");
    }
    if (rep.dim(w) != 0) throw FormatError("vertex " + w.str() + " listed twice");
    rep.set_dim(w, d.get<std::size_t>());
  }

  if (doc.contains("arrows")) {
    const json& arrows = doc["arrows"];
    if (!arrows.is_array()) throw FormatError("arrows: expected an array");
    std::set<ArrowKey> seen;
    for (const auto& a : arrows) {
      only_keys(a, {"from", "root", "matrix"}, "arrow");
      Weight from(int_list(required(a, "from", "arrow"), "arrow from"));
      const auto simple = int_list(required(a, "root", "arrow"), "arrow root");
      if (from.rank() != roots.rank() || simple.size() != roots.rank()) {
        throw FormatError("arrow from " + from.str() + ": coordinate count mismatch");
      }
      const auto idx = roots.positive_index(simple);
      if (!idx) {
        throw FormatError("arrow from " + from.str() + ": " + Weight(simple).str() +
                          " is not a positive root");
      }
      if (!seen.insert({from, *idx}).second) {
        throw FormatError("arrow from " + from.str() + " along " + Weight(simple).str() +
                          " listed twice");
      }
      Matrix m = matrix_from(required(a, "matrix", "arrow"));
      // Keep explicit zero maps only when their shape is wrong, so validation sees them.
      if (m.is_zero() && m.rows() == rep.dim(rep.target({from, *idx})) &&
          m.cols() == rep.dim(from)) {
        continue;
      }
      if (m.is_zero()) {
        throw FormatError("arrow from " + from.str() + ": zero matrix of the wrong shape");
      }
      rep.set_arrow(from, *idx, std::move(m));
    }
  }
  return rep;
}

ordered_json bundle_to_json(const QuiverRep& rep) {
  const ParabolicGeometry& geom = rep.geometry();
  const auto& pos = geom.roots().positive_roots();
  ordered_json doc;
  doc["algebra"] = geom.roots().type().str();
  ordered_json levi = ordered_json::array();
  for (auto i : geom.levi()) levi.push_back(i + 1);
  doc["levi"] = levi;

  ordered_json vertices = ordered_json::array();
  for (const auto& [w, d] : rep.support()) {
    ordered_json v;
    v["weight"] = w.coords();
    v["dim"] = d;
    vertices.push_back(v);
  }
  doc["vertices"] = vertices;

  ordered_json arrows = ordered_json::array();
  for (const auto& [key, m] : rep.arrows()) {
    ordered_json a;
    a["from"] = key.source.coords();
    a["root"] = pos[key.root].simple;
    ordered_json rows = ordered_json::array();
    for (std::size_t r = 0; r < m.rows(); ++r) {
      ordered_json row = ordered_json::array();
      for (std::size_t c = 0; c < m.cols(); ++c) row.push_back(to_string(m(r, c)));
      rows.push_back(row);
    }
    a["matrix"] = rows;
    arrows.push_back(a);
  }
  doc["arrows"] = arrows;
  return doc;
}

QuiverRep parse_bundle(const std::string& text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw FormatError(std::string("invalid JSON: ") + e.what());
  }
  return bundle_from_json(doc);
}

namespace {

void pretty(const ordered_json& v, int indent, std::string& out) {
  auto scalar = [](const ordered_json& x) { return !x.is_structured() || x.empty(); };
  auto shallow = [&](const ordered_json& x) {
    return scalar(x) || (x.is_array() && std::all_of(x.begin(), x.end(), scalar));
  };
  const bool flat = v.is_array() ? std::all_of(v.begin(), v.end(), scalar)
                                 : v.is_object() && std::all_of(v.begin(), v.end(), shallow);
  if (!v.is_structured() || v.empty() || flat) {
    out += v.dump();
    return;
  }
  const std::string pad(indent + 2, ' ');
  out += v.is_array() ? "[\n" : "{\n";
  bool first = true;
  for (auto it = v.begin(); it != v.end(); ++it) {
    if (!first) out += ",\n";
    first = false;
    out += pad;
    if (v.is_object()) out += ordered_json(it.key()).dump() + ": ";
    pretty(*it, indent + 2, out);
  }
  out += "\n" + std::string(indent, ' ') + (v.is_array() ? "]" : "}");
}

}  // namespace

std::string pretty_json(const ordered_json& doc) {
  std::string out;
  pretty(doc, 0, out);
  return out + "\n";
}

std::string dump_bundle(const QuiverRep& rep) { return pretty_json(bundle_to_json(rep)); }

QuiverRep load_bundle(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw FormatError("cannot open " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_bundle(buf.str());
}

void save_bundle(const QuiverRep& rep, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write " + path);
  out << dump_bundle(rep);
  if (!out) throw std::runtime_error("write failed: " + path);
}

ordered_json integer_to_json(const Integer& n) {
  if (n >= std::numeric_limits<std::int64_t>::min() &&
      n <= std::numeric_limits<std::int64_t>::max()) {
    return static_cast<std::int64_t>(n);
  }
  return to_string(n);
}

}  // namespace hsect
