#pragma once

#include <stdexcept>
#include <string>

#include <json.hpp>

#include "hsect/bundle_rep.hpp"

namespace hsect {

/// Malformed bundle description (bad JSON, unknown keys, wrong types).
class FormatError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// {"algebra", "levi", "vertices", "arrows"}; levi indices are 1-based and
/// arrow roots are in simple-root coordinates. Matrix entries may be integers
/// or "p/q" strings.
QuiverRep bundle_from_json(const nlohmann::json& doc);
nlohmann::ordered_json bundle_to_json(const QuiverRep& rep);

QuiverRep parse_bundle(const std::string& text);
/// Two-space indented, newline terminated.
std::string dump_bundle(const QuiverRep& rep);

QuiverRep load_bundle(const std::string& path);
void save_bundle(const QuiverRep& rep, const std::string& path);

/// Indented JSON with arrays of scalars kept on one line, newline terminated.
std::string pretty_json(const nlohmann::ordered_json& doc);

/// Integers that fit in int64 as JSON numbers, larger ones as strings.
nlohmann::ordered_json integer_to_json(const Integer& n);

}  // namespace hsect
