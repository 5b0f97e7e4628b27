#include "urset/io.hpp"

#include <json.hpp>

#include "urset/errors.hpp"

namespace urset::io {

using nlohmann::json;
using qs::Rational;

namespace {

json parse_document(std::string_view text, const std::string& what) {
  try {
    return json::parse(text.begin(), text.end());
  } catch (const json::parse_error& e) {
    throw ParseError(what, std::string("invalid JSON: ") + e.what());
  }
}

Rational rational_at(const json& v, const std::string& path) {
  if (!v.is_string()) throw ParseError(path, "expected a rational string such as \"3/2\"");
  try {
    return Rational::parse(v.get<std::string>());
  } catch (const ParseError& e) {
    throw ParseError(path, e.what());
  }
}

std::vector<Rational> rational_array(const json& v, const std::string& path) {
  if (!v.is_array()) throw ParseError(path, "expected an array of rational strings");
  std::vector<Rational> out;
  for (std::size_t i = 0; i < v.size(); ++i) out.push_back(rational_at(v[i], path + "[" + std::to_string(i) + "]"));
  return out;
}

}  // namespace

poly::RatPoly parse_poly(std::string_view text) {
  const json doc = parse_document(text, "poly");
  if (!doc.is_object() || !doc.contains("coeffs")) throw ParseError("poly", "expected {\"coeffs\": [...]}");
  auto p = poly::RatPoly(rational_array(doc["coeffs"], "poly.coeffs"));
  if (p.is_zero()) throw ParseError("poly.coeffs", "the zero polynomial is not allowed");
  return p;
}

std::vector<std::pair<Rational, Rational>> parse_pairs(std::string_view text) {
  const json doc = parse_document(text, "pairs");
  if (!doc.is_array()) throw ParseError("pairs", "expected an array of {\"x\": ..., \"y\": ...}");
  std::vector<std::pair<Rational, Rational>> out;
  for (std::size_t i = 0; i < doc.size(); ++i) {
    const std::string path = "pairs[" + std::to_string(i) + "]";
    const json& row = doc[i];
    if (!row.is_object() || !row.contains("x") || !row.contains("y"))
      throw ParseError(path, "expected {\"x\": \"a/b\", \"y\": \"c/d\"}");
    out.emplace_back(rational_at(row["x"], path + ".x"), rational_at(row["y"], path + ".y"));
  }
  return out;
}

sub::LinearFormSystem parse_forms(std::string_view text) {
  const json doc = parse_document(text, "forms");
  if (!doc.is_object() || !doc.contains("r") || !doc.contains("forms"))
    throw ParseError("forms", "expected {\"r\": <int>, \"forms\": [[...], ...]}");
  if (!doc["r"].is_number_unsigned()) throw ParseError("forms.r", "expected a positive integer");
  const auto r = doc["r"].get<unsigned>();
  const json& rows = doc["forms"];
  if (!rows.is_array()) throw ParseError("forms.forms", "expected an array of coefficient arrays");
  std::vector<std::vector<Rational>> forms;
  for (std::size_t i = 0; i < rows.size(); ++i)
    forms.push_back(rational_array(rows[i], "forms.forms[" + std::to_string(i) + "]"));
  try {
    return sub::LinearFormSystem(r, std::move(forms));
  } catch (const DomainError& e) {
    throw ParseError("forms", e.what());
  }
}

std::vector<std::vector<Rational>> parse_points(std::string_view text) {
  const json doc = parse_document(text, "points");
  if (!doc.is_array()) throw ParseError("points", "expected an array of coordinate arrays");
  std::vector<std::vector<Rational>> out;
  for (std::size_t i = 0; i < doc.size(); ++i) out.push_back(rational_array(doc[i], "points[" + std::to_string(i) + "]"));
  return out;
}

Rational parse_rational_arg(std::string_view text, std::string_view flag) {
  try {
    return Rational::parse(text);
  } catch (const ParseError& e) {
    throw ParseError(std::string(flag), e.what());
  }
}

}  // namespace urset::io
