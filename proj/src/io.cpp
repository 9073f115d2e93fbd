#include "ecdlp/io.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

#include "ecdlp/errors.hpp"

namespace ecdlp::io {

using ordered_json = nlohmann::ordered_json;

namespace {

BigUint decimal_field(const ordered_json& obj, const char* key) {
  if (!obj.contains(key) || !obj[key].is_string())
    throw ParseError(std::string("missing decimal string field \"") + key +
                     "\"");
  return BigUint::from_decimal(obj[key].get<std::string>());
}

ordered_json point_to_json(const Point& pt) {
  if (pt.is_infinity()) return ordered_json("infinity");
  return ordered_json::array(
      {pt.x().value().to_decimal(), pt.y().value().to_decimal()});
}

Point point_from_json(const ordered_json& value, const CurveParams& c) {
  if (value.is_string()) {
    if (value.get<std::string>() == "infinity") return Point::infinity();
    throw ParseError("point must be \"infinity\" or a [\"x\",\"y\"] pair");
  }
  if (!value.is_array() || value.size() != 2 || !value[0].is_string() ||
      !value[1].is_string())
    throw ParseError("point must be \"infinity\" or a [\"x\",\"y\"] pair");
  FieldElement x(BigUint::from_decimal(value[0].get<std::string>()), c.p);
  FieldElement y(BigUint::from_decimal(value[1].get<std::string>()), c.p);
  return Point::affine(std::move(x), std::move(y));
}

ordered_json parse_json(std::string_view text, const char* what) {
  ordered_json parsed = ordered_json::parse(text, nullptr, false);
  if (parsed.is_discarded())
    throw ParseError(std::string("malformed JSON in ") + what);
  return parsed;
}

ordered_json params_to_ordered(const DomainParams& params) {
  ordered_json obj;
  obj["p"] = params.curve.p.value().to_decimal();
  obj["a"] = params.curve.a.value().to_decimal();
  obj["b"] = params.curve.b.value().to_decimal();
  obj["g"] = point_to_json(params.g);
  obj["n"] = params.n.to_decimal();
  obj["h"] = params.h.to_decimal();
  return obj;
}

DomainParams params_from_ordered(const ordered_json& obj) {
  if (!obj.is_object()) throw ParseError("domain parameters must be an object");
  PrimeModulus p(decimal_field(obj, "p"));
  CurveParams curve(p, decimal_field(obj, "a"), decimal_field(obj, "b"));
  if (!obj.contains("g"))
    throw ParseError("missing base point field \"g\"");
  Point g = point_from_json(obj["g"], curve);
  return DomainParams{curve, g, decimal_field(obj, "n"),
                      decimal_field(obj, "h")};
}

}  // namespace

std::string point_to_text(const Point& pt) {
  if (pt.is_infinity()) return "infinity";
  return pt.x().value().to_decimal() + "," + pt.y().value().to_decimal();
}

Point point_from_text(std::string_view text, const CurveParams& c) {
  if (text == "infinity") return Point::infinity();
  auto comma = text.find(',');
  if (comma == std::string_view::npos)
    throw ParseError("point must be \"infinity\" or \"x,y\"");
  FieldElement x(BigUint::from_decimal(text.substr(0, comma)), c.p);
  FieldElement y(BigUint::from_decimal(text.substr(comma + 1)), c.p);
  Point pt = Point::affine(std::move(x), std::move(y));
  if (!is_on_curve(c, pt))
    throw NotOnCurve("(" + std::string(text) + ") does not satisfy the curve equation");
  return pt;
}

std::string params_to_json(const DomainParams& params) {
  return params_to_ordered(params).dump();
}

DomainParams params_from_json(std::string_view text) {
  return params_from_ordered(parse_json(text, "domain parameters"));
}

std::string params_list_to_json(const std::vector<DomainParams>& list) {
  ordered_json arr = ordered_json::array();
  for (const auto& params : list) arr.push_back(params_to_ordered(params));
  return arr.dump();
}

std::vector<DomainParams> params_list_from_json(std::string_view text) {
  ordered_json arr = parse_json(text, "domain parameter list");
  if (!arr.is_array()) throw ParseError("expected a JSON array of tuples");
  std::vector<DomainParams> out;
  out.reserve(arr.size());
  for (const auto& entry : arr) out.push_back(params_from_ordered(entry));
  return out;
}

std::string keypair_to_json(const KeyPair& kp, bool include_private) {
  ordered_json obj;
  if (include_private) obj["d"] = kp.d.to_decimal();
  obj["q"] = point_to_json(kp.q);
  return obj.dump();
}

StoredKey keypair_from_json(std::string_view text, const CurveParams& c) {
  ordered_json obj = parse_json(text, "key pair");
  if (!obj.is_object()) throw ParseError("key pair must be an object");
  StoredKey key{std::nullopt, Point::infinity()};
  if (obj.contains("d")) key.d = decimal_field(obj, "d");
  if (!obj.contains("q")) throw ParseError("missing public point field \"q\"");
  key.q = point_from_json(obj["q"], c);
  if (!is_on_curve(c, key.q))
    throw NotOnCurve("stored public key does not satisfy the curve equation");
  return key;
}

std::string attack_result_to_json(const AttackResult& result) {
  ordered_json obj;
  obj["method"] = attack_method_name(result.method);
  obj["d"] = result.d_recovered.to_decimal();
  obj["group_ops"] = result.group_ops;
  obj["iterations"] = result.iterations;
  obj["seconds"] = result.wall_seconds;
  return obj.dump();
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot open file: " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void write_file(const std::string& path, std::string_view content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw ParseError("cannot write file: " + path);
  out << content;
}

}  // namespace ecdlp::io
