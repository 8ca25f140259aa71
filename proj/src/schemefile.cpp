#include "fatpoints/schemefile.hpp"

#include <fstream>
#include <sstream>

#include <yaml-cpp/yaml.h>

namespace fatpoints {

SchemeFileError::SchemeFileError(const std::string& what, int line)
    : std::runtime_error(line > 0 ? "line " + std::to_string(line) + ": " + what : what), line_(line) {}

namespace {

int line_of(const YAML::Node& node) { return node.Mark().line >= 0 ? node.Mark().line + 1 : 0; }

[[noreturn]] void fail(const YAML::Node& node, const std::string& what) { throw SchemeFileError(what, line_of(node)); }

YAML::Node require(const YAML::Node& parent, const char* key) {
  YAML::Node child = parent[key];
  if (!child) fail(parent, std::string("missing key '") + key + "'");
  return child;
}

long long as_integer(const YAML::Node& node, const char* what) {
  if (!node.IsScalar()) fail(node, std::string(what) + " must be an integer");
  try {
    std::size_t used = 0;
    const std::string s = node.Scalar();
    long long v = std::stoll(s, &used);
    if (used != s.size()) throw std::invalid_argument(s);
    return v;
  } catch (const std::exception&) {
    fail(node, std::string(what) + " must be an integer, got '" + node.Scalar() + "'");
  }
}

Scalar as_number(const YAML::Node& node, const Field& field) {
  if (!node.IsScalar()) fail(node, "coordinate must be an integer or a fraction a/b");
  const std::string s = node.Scalar();
  const auto slash = s.find('/');
  mpz_class num, den = 1;
  try {
    if (num.set_str(s.substr(0, slash), 10) != 0) throw std::invalid_argument(s);
    if (slash != std::string::npos && den.set_str(s.substr(slash + 1), 10) != 0) throw std::invalid_argument(s);
  } catch (const std::invalid_argument&) {
    fail(node, "malformed number '" + s + "'");
  }
  if (den == 0) fail(node, "zero denominator in '" + s + "'");
  try {
    return field.from_fraction(num, den);
  } catch (const ArithmeticError& e) {
    fail(node, "'" + s + "' is not defined over " + field.name());
  }
}

Field field_from_node(const YAML::Node& node) {
  if (node.IsScalar()) {
    if (node.Scalar() == "rational") return Field::rationals();
    fail(node, "field must be 'rational' or {prime: p}");
  }
  if (node.IsMap() && node["prime"]) {
    const YAML::Node p = node["prime"];
    const long long value = as_integer(p, "prime");
    if (value < 2 || !is_prime(static_cast<std::uint64_t>(value))) fail(p, std::to_string(value) + " is not prime");
    try {
      return Field::prime(static_cast<std::uint64_t>(value));
    } catch (const std::invalid_argument& e) {
      fail(p, e.what());
    }
  }
  if (node.IsMap() && node["rational"]) return Field::rationals();
  fail(node, "field must be 'rational' or {prime: p}");
}

std::vector<Scalar> coordinates(const YAML::Node& point, const char* key, int count, const Field& field) {
  const YAML::Node list = require(point, key);
  if (!list.IsSequence()) fail(list, std::string(key) + " must be a list");
  if (static_cast<int>(list.size()) != count)
    fail(list, std::string(key) + " needs " + std::to_string(count) + " coordinates, got " + std::to_string(list.size()));
  std::vector<Scalar> out;
  for (const auto& c : list) out.push_back(as_number(c, field));
  return out;
}

}  // namespace

Field parse_field_spec(std::string_view spec) {
  std::string s(spec);
  if (s == "rational") return Field::rationals();
  if (s.rfind("prime:", 0) == 0) s = s.substr(6);
  std::size_t used = 0;
  unsigned long long p = 0;
  try {
    p = std::stoull(s, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used == 0 || used != s.size()) throw std::invalid_argument("field must be 'rational' or 'prime:p', got '" + std::string(spec) + "'");
  return Field::prime(p);
}

FatPointScheme parse_scheme_text(std::string_view text, const std::optional<Field>& field_override) {
  YAML::Node doc;
  try {
    doc = YAML::Load(std::string(text));
  } catch (const YAML::Exception& e) {
    throw SchemeFileError(e.msg, e.mark.line >= 0 ? e.mark.line + 1 : 0);
  }
  if (!doc.IsMap()) throw SchemeFileError("scheme file must be a mapping with ring, field and points", 1);

  const YAML::Node ring_node = require(doc, "ring");
  const long long n = as_integer(require(ring_node, "n"), "n");
  const long long m = as_integer(require(ring_node, "m"), "m");
  if (n < 1 || m < 1) fail(ring_node, "n and m must be at least 1");
  if (n + m > 9) fail(ring_node, "n + m must be at most 9");

  Field field = doc["field"] ? field_from_node(doc["field"]) : Field();
  if (field_override) field = *field_override;
  auto ring = std::make_shared<const Ring>(static_cast<int>(n), static_cast<int>(m), field);

  const YAML::Node points = require(doc, "points");
  if (!points.IsSequence()) fail(points, "points must be a list");
  std::vector<FatPoint> items;
  for (const auto& pt : points) {
    if (!pt.IsMap()) fail(pt, "each point needs x, y and mult");
    auto a = coordinates(pt, "x", static_cast<int>(n + 1), field);
    auto b = coordinates(pt, "y", static_cast<int>(m + 1), field);
    const YAML::Node mult = require(pt, "mult");
    const long long mu = as_integer(mult, "mult");
    if (mu < 1) fail(mult, "mult must be a positive integer");
    try {
      PPoint p(field, std::move(a), std::move(b));
      for (const auto& prev : items)
        if (prev.point == p) fail(pt, "duplicate point " + p.to_string(field));
      items.push_back({std::move(p), static_cast<int>(mu)});
    } catch (const std::invalid_argument& e) {
      fail(pt, e.what());
    }
  }
  return FatPointScheme(std::move(ring), std::move(items));
}

FatPointScheme parse_scheme_file(const std::string& path, const std::optional<Field>& field_override) {
  std::ifstream in(path);
  if (!in) throw SchemeFileError("cannot open " + path, 0);
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_scheme_text(buf.str(), field_override);
}

}  // namespace fatpoints
