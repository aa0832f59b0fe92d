#include "fockspace/cli/divisor_io.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <json.hpp>
#include <sstream>

#include "fockspace/errors.hpp"

namespace fockspace::cli {

using nlohmann::json;

namespace {

json parse_document(std::string_view text) {
  try {
    return json::parse(text.begin(), text.end());
  } catch (const json::parse_error& e) {
    const auto upto = std::min<std::size_t>(e.byte, text.size());
    const auto line = 1 + std::count(text.begin(), text.begin() + static_cast<std::ptrdiff_t>(upto), '\n');
    throw SchemaError("line " + std::to_string(line), "malformed JSON");
  }
}

const json& require(const json& obj, const std::string& key, const std::string& where) {
  if (!obj.is_object()) throw SchemaError(where, "expected an object");
  const auto it = obj.find(key);
  if (it == obj.end()) throw SchemaError(where + "/" + key, "missing field");
  return *it;
}

double require_number(const json& obj, const std::string& key, const std::string& where) {
  const json& v = require(obj, key, where);
  if (!v.is_number()) throw SchemaError(where + "/" + key, "expected a number");
  const double d = v.get<double>();
  if (!std::isfinite(d)) throw SchemaError(where + "/" + key, "expected a finite number");
  return d;
}

void reject_unknown(const json& obj, std::initializer_list<const char*> allowed, const std::string& where) {
  if (!obj.is_object()) throw SchemaError(where, "expected an object");
  for (const auto& [key, value] : obj.items()) {
    if (std::none_of(allowed.begin(), allowed.end(), [&](const char* a) { return key == a; })) {
      throw SchemaError(where + "/" + key, "unexpected field");
    }
  }
}

}  // namespace

IngestedDivisor parse_divisor(std::string_view text) {
  const json doc = parse_document(text);
  if (!doc.is_object()) throw SchemaError("", "expected an object");
  reject_unknown(doc, {"alpha", "points"}, "");
  const double alpha = require_number(doc, "alpha", "");
  if (!(alpha > 0.0)) throw SchemaError("/alpha", "alpha must be positive");

  const json& points = require(doc, "points", "");
  if (!points.is_array()) throw SchemaError("/points", "expected an array");
  std::vector<DivisorEntry> entries;
  entries.reserve(points.size());
  for (std::size_t i = 0; i < points.size(); ++i) {
    const std::string where = "/points/" + std::to_string(i);
    const json& p = points[i];
    if (!p.is_object()) throw SchemaError(where, "expected an object");
    reject_unknown(p, {"re", "im", "mult"}, where);
    const double re = require_number(p, "re", where);
    const double im = require_number(p, "im", where);
    const json& mult = require(p, "mult", where);
    if (!mult.is_number_integer()) throw SchemaError(where + "/mult", "expected an integer");
    const auto m = mult.get<long long>();
    if (m < 1) throw SchemaError(where + "/mult", "multiplicity must be positive");
    if (m > 1'000'000) throw SchemaError(where + "/mult", "multiplicity too large");
    entries.push_back({Complex(re, im), static_cast<int>(m)});
  }

  auto [divisor, merges] = merge_coincident(FockParams(alpha), std::move(entries));
  IngestedDivisor out{std::move(divisor), {}};
  if (merges > 0) {
    out.warnings.push_back("merged " + std::to_string(merges) +
                           " coincident point(s) by summing multiplicities");
  }
  return out;
}

std::string read_text_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw SchemaError(path, "cannot open file");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_text_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw std::runtime_error("cannot write " + path);
  out << text;
}

IngestedDivisor read_divisor_file(const std::string& path) {
  try {
    return parse_divisor(read_text_file(path));
  } catch (const SchemaError& e) {
    throw SchemaError(path + ":" + e.where(), std::string(e.what()).substr(e.where().size() + 2));
  }
}

std::string serialize_divisor(const Divisor& divisor) {
  nlohmann::ordered_json doc;
  doc["alpha"] = divisor.params().alpha();
  auto& points = doc["points"] = nlohmann::ordered_json::array();
  for (const DivisorEntry& e : divisor.entries()) {
    nlohmann::ordered_json p;
    p["re"] = e.point.real() == 0.0 ? 0.0 : e.point.real();
    p["im"] = e.point.imag() == 0.0 ? 0.0 : e.point.imag();
    p["mult"] = e.multiplicity;
    points.push_back(std::move(p));
  }
  return doc.dump(2) + "\n";
}

MeasurementVector parse_values(std::string_view text, const Divisor& divisor) {
  const json doc = parse_document(text);
  if (!doc.is_object()) throw SchemaError("", "expected an object");
  reject_unknown(doc, {"values"}, "");
  const json& values = require(doc, "values", "");
  if (!values.is_array()) throw SchemaError("/values", "expected an array");
  MeasurementVector out{measurement_labels(divisor), {}};
  if (values.size() != out.labels.size()) {
    throw SchemaError("/values", "expected " + std::to_string(out.labels.size()) +
                                     " entries (total multiplicity), got " + std::to_string(values.size()));
  }
  for (std::size_t i = 0; i < values.size(); ++i) {
    const std::string where = "/values/" + std::to_string(i);
    reject_unknown(values[i], {"re", "im"}, where);
    out.values.emplace_back(require_number(values[i], "re", where), require_number(values[i], "im", where));
  }
  return out;
}

}  // namespace fockspace::cli
