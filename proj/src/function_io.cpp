#include "qcvx/function_io.hpp"

#include <fstream>

namespace qcvx {

namespace {

Error field_error(const std::string& field, const std::string& what) {
  return Error(Errc::parse, "field '" + field + "': " + what);
}

const Json& member(const Json& doc, const std::string& key) {
  if (!doc.contains(key)) throw field_error(key, "missing");
  return doc.at(key);
}

std::string scalar_text(const Json& node, const std::string& field) {
  if (node.is_string()) return node.get<std::string>();
  if (node.is_number_integer()) return std::to_string(node.get<long long>());
  throw field_error(field, "expected a rational string");
}

Rational rational_field(const Json& node, const std::string& field) {
  const std::string text = scalar_text(node, field);
  try {
    return parse_rational(text);
  } catch (const Error& e) {
    if (e.code() != Errc::parse) throw;
    throw field_error(field, e.message());
  }
}

XReal xreal_field(const Json& node, const std::string& field) {
  const std::string text = scalar_text(node, field);
  try {
    return parse_xreal(text);
  } catch (const Error& e) {
    if (e.code() != Errc::parse) throw;
    throw field_error(field, e.message());
  }
}

const Json& array_field(const Json& doc, const std::string& key) {
  const Json& node = member(doc, key);
  if (!node.is_array()) throw field_error(key, "expected an array");
  return node;
}

std::vector<Rational> rational_list(const Json& doc, const std::string& key) {
  const Json& arr = array_field(doc, key);
  std::vector<Rational> out;
  out.reserve(arr.size());
  for (std::size_t i = 0; i < arr.size(); ++i) out.push_back(rational_field(arr[i], key + "[" + std::to_string(i) + "]"));
  return out;
}

std::vector<XReal> xreal_list(const Json& doc, const std::string& key) {
  const Json& arr = array_field(doc, key);
  std::vector<XReal> out;
  out.reserve(arr.size());
  for (std::size_t i = 0; i < arr.size(); ++i) out.push_back(xreal_field(arr[i], key + "[" + std::to_string(i) + "]"));
  return out;
}

Json xreal_list_json(const std::vector<XReal>& xs) {
  Json arr = Json::array();
  for (const auto& x : xs) arr.push_back(to_string(x));
  return arr;
}

Json rational_list_json(const std::vector<Rational>& xs) {
  Json arr = Json::array();
  for (const auto& x : xs) arr.push_back(to_string(x));
  return arr;
}

Function1D parse_piecewise_linear(const Json& doc) {
  const Json& arr = array_field(doc, "knots");
  std::vector<Knot> knots;
  for (std::size_t i = 0; i < arr.size(); ++i) {
    const std::string field = "knots[" + std::to_string(i) + "]";
    if (!arr[i].is_array() || arr[i].size() != 2) throw field_error(field, "expected [position, value]");
    knots.push_back({rational_field(arr[i][0], field + "[0]"), rational_field(arr[i][1], field + "[1]")});
  }
  Function1D f = Function1D::piecewise_linear(std::move(knots));
  if (doc.contains("domain")) {
    auto domain = rational_list(doc, "domain");
    if (domain.size() != 2 || domain[0] != f.lo() || domain[1] != f.hi()) {
      throw field_error("domain", "must equal [first knot, last knot]");
    }
  }
  return f;
}

}  // namespace

Function1D function_from_json(const Json& doc) {
  if (!doc.is_object()) throw Error(Errc::parse, "function document must be a JSON object");
  const Json& type_node = member(doc, "type");
  if (!type_node.is_string()) throw field_error("type", "expected a string");
  const auto type = type_node.get<std::string>();
  if (type == "piecewise_linear") return parse_piecewise_linear(doc);
  if (type == "piecewise_constant") {
    return Function1D::piecewise_constant(rational_list(doc, "breaks"), xreal_list(doc, "piece_values"),
                                          xreal_list(doc, "point_values"));
  }
  if (type == "tabulated") return Function1D::tabulated(rational_list(doc, "positions"), xreal_list(doc, "values"));
  if (type == "cantor") {
    const Json& depth = member(doc, "depth");
    if (!depth.is_number_integer()) throw field_error("depth", "expected an integer");
    const Json& mode = member(doc, "mode");
    if (!mode.is_string() || (mode != "set" && mode != "complement")) {
      throw field_error("mode", "expected \"set\" or \"complement\"");
    }
    const auto k = depth.get<long long>();
    if (k < 1 || k > 20) throw field_error("depth", "must be in [1, 20]");
    return generate_cantor(static_cast<int>(k), mode == "set" ? CantorMode::set : CantorMode::complement);
  }
  throw field_error("type", "unknown function type '" + type + "'");
}

Json function_to_json(const Function1D& f) {
  Json doc;
  if (const auto* pl = std::get_if<PiecewiseLinear>(&f.representation())) {
    doc["type"] = "piecewise_linear";
    doc["domain"] = Json::array({to_string(f.lo()), to_string(f.hi())});
    Json knots = Json::array();
    for (const auto& k : pl->knots) knots.push_back(Json::array({to_string(k.position), to_string(k.value)}));
    doc["knots"] = std::move(knots);
  } else if (const auto* pc = std::get_if<PiecewiseConstant>(&f.representation())) {
    doc["type"] = "piecewise_constant";
    doc["breaks"] = rational_list_json(pc->breaks);
    doc["piece_values"] = xreal_list_json(pc->piece_values);
    doc["point_values"] = xreal_list_json(pc->point_values);
  } else if (const auto* tab = std::get_if<Tabulated>(&f.representation())) {
    doc["type"] = "tabulated";
    doc["positions"] = rational_list_json(tab->positions);
    doc["values"] = xreal_list_json(tab->values);
  } else {
    throw Error(Errc::inexact_model, "black-box functions cannot be serialized");
  }
  return doc;
}

Json load_json_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw Error(Errc::parse, "cannot open '" + path.string() + "'");
  try {
    return Json::parse(in);
  } catch (const nlohmann::json::parse_error& e) {
    throw Error(Errc::parse, "'" + path.string() + "' is not valid JSON: " + e.what());
  }
}

Function1D load_function_file(const std::filesystem::path& path) { return function_from_json(load_json_file(path)); }

}  // namespace qcvx
