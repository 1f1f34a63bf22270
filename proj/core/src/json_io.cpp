#include "lperiod/json_io.hpp"

#include <json.hpp>

#include "lperiod/errors.hpp"

namespace lperiod {

namespace {

using Json = nlohmann::ordered_json;

Json parse_document(const std::string& text) {
  try {
    return Json::parse(text);
  } catch (const nlohmann::json::exception& ex) {
    throw DomainError("schema", std::string("invalid JSON: ") + ex.what(), "$");
  }
}

[[noreturn]] void bad(const std::string& path, const std::string& what) {
  throw DomainError("schema", what, path);
}

void check_schema_version(const Json& j) {
  if (!j.is_object()) bad("$", "expected a JSON object");
  if (j.contains("schema_version")) {
    const Json& v = j.at("schema_version");
    if (!v.is_number_integer() || v.get<int>() != kSchemaVersion)
      bad("$.schema_version", "unsupported schema_version");
  }
}

std::vector<int> int_array(const Json& j, const std::string& path, int lo) {
  if (!j.is_array()) bad(path, "expected an array of integers");
  std::vector<int> out;
  out.reserve(j.size());
  for (size_t i = 0; i < j.size(); ++i) {
    const Json& v = j.at(i);
    if (!v.is_number_integer())
      bad(path + "[" + std::to_string(i) + "]", "expected an integer");
    long long x = v.get<long long>();
    if (x < lo)
      bad(path + "[" + std::to_string(i) + "]", "value below " + std::to_string(lo));
    out.push_back(static_cast<int>(x));
  }
  return out;
}

Json one_based_array(const std::vector<int>& v) {
  Json arr = Json::array();
  for (int x : v) arr.push_back(x + 1);
  return arr;
}

}  // namespace

CuspidalDatum datum_from_json_text(const std::string& text) {
  Json j = parse_document(text);
  check_schema_version(j);
  if (!j.contains("parts")) bad("$.parts", "missing field");
  if (!j.contains("labels")) bad("$.labels", "missing field");
  if (!j.contains("n")) bad("$.n", "missing field");
  if (!j.contains("m")) bad("$.m", "missing field");

  std::vector<int> parts = int_array(j.at("parts"), "$.parts", 1);

  const Json& jl = j.at("labels");
  if (!jl.is_array()) bad("$.labels", "expected an array of strings");
  std::vector<std::string> labels;
  labels.reserve(jl.size());
  for (size_t i = 0; i < jl.size(); ++i) {
    if (!jl.at(i).is_string())
      bad("$.labels[" + std::to_string(i) + "]", "expected a string");
    labels.push_back(jl.at(i).get<std::string>());
  }

  std::map<std::string, std::string> dual;
  if (j.contains("dual")) {
    const Json& jd = j.at("dual");
    if (!jd.is_object()) bad("$.dual", "expected an object");
    for (const auto& [key, value] : jd.items()) {
      if (!value.is_string()) bad("$.dual." + key, "expected a string");
      dual[key] = value.get<std::string>();
    }
  }

  if (!j.at("n").is_number_integer()) bad("$.n", "expected an integer");
  if (!j.at("m").is_number_integer()) bad("$.m", "expected an integer");

  return CuspidalDatum(Composition(std::move(parts)), std::move(labels), dual,
                       j.at("n").get<int>(), j.at("m").get<int>());
}

std::string datum_to_json_text(const CuspidalDatum& datum) {
  Json j;
  j["schema_version"] = kSchemaVersion;
  j["parts"] = datum.composition().parts();
  j["labels"] = datum.labels();
  Json dual = Json::object();
  for (const auto& [a, b] : datum.dual_map())
    if (a != b) dual[a] = b;  // self-dual entries are the default
  j["dual"] = std::move(dual);
  j["n"] = datum.n();
  j["m"] = datum.m();
  return j.dump();
}

namespace {

Json fixed_point_to_json(const FixedPoint& fp) {
  Json j;
  j["I"] = one_based_array(fp.subset);
  j["t"] = fp.split;
  j["sigma"] = one_based_array(fp.sigma);
  return j;
}

}  // namespace

std::string fixed_point_to_json_text(const FixedPoint& fp) {
  return fixed_point_to_json(fp).dump();
}

std::string fixed_points_to_json_text(const CuspidalDatum& datum,
                                      const std::vector<FixedPoint>& fps) {
  Json j;
  j["schema_version"] = kSchemaVersion;
  j["parts"] = datum.composition().parts();
  j["n"] = datum.n();
  j["m"] = datum.m();
  j["count"] = fps.size();
  Json arr = Json::array();
  for (const FixedPoint& fp : fps) arr.push_back(fixed_point_to_json(fp));
  j["fixed_points"] = std::move(arr);
  return j.dump();
}

RepSpec rep_spec_from_json_text(const std::string& text) {
  Json j = parse_document(text);
  check_schema_version(j);
  RepSpec spec;

  if (!j.contains("group") || !j.at("group").is_string())
    bad("$.group", "expected \"cyclic:r\" or \"product:r1,r2\"");
  std::string group = j.at("group").get<std::string>();
  auto parse_order = [&](const std::string& s) {
    try {
      size_t used = 0;
      int v = std::stoi(s, &used);
      if (used != s.size() || v < 1) bad("$.group", "bad group order '" + s + "'");
      return v;
    } catch (const std::exception&) {
      bad("$.group", "bad group order '" + s + "'");
    }
  };
  if (group.rfind("cyclic:", 0) == 0) {
    spec.kind = GroupKind::cyclic;
    spec.r1 = parse_order(group.substr(7));
    spec.r2 = 0;
  } else if (group.rfind("product:", 0) == 0) {
    spec.kind = GroupKind::product;
    std::string rest = group.substr(8);
    size_t comma = rest.find(',');
    if (comma == std::string::npos) bad("$.group", "product needs two orders");
    spec.r1 = parse_order(rest.substr(0, comma));
    spec.r2 = parse_order(rest.substr(comma + 1));
  } else {
    bad("$.group", "unknown group kind");
  }

  if (j.contains("q")) {
    if (!j.at("q").is_number_integer()) bad("$.q", "expected an integer");
    spec.default_q = j.at("q").get<int>();
  }
  if (!j.contains("n") || !j.at("n").is_number_integer()) bad("$.n", "expected an integer");
  spec.n = j.at("n").get<int>();

  if (!j.contains("blocks") || !j.at("blocks").is_array())
    bad("$.blocks", "expected an array");
  const Json& jb = j.at("blocks");
  for (size_t i = 0; i < jb.size(); ++i) {
    const std::string path = "$.blocks[" + std::to_string(i) + "]";
    const Json& b = jb.at(i);
    if (!b.is_object()) bad(path, "expected an object");
    BlockSpec bs;
    if (!b.contains("tag") || !b.at("tag").is_string()) bad(path + ".tag", "expected a string");
    bs.tag = b.at("tag").get<std::string>();
    if (!b.contains("dim") || !b.at("dim").is_number_integer())
      bad(path + ".dim", "expected an integer");
    bs.dim = b.at("dim").get<int>();
    if (!b.contains("character")) bad(path + ".character", "missing field");
    bs.character = int_array(b.at("character"), path + ".character", 0);
    spec.blocks.push_back(std::move(bs));
  }
  return spec;
}

std::string rep_spec_to_json_text(const RepSpec& spec) {
  Json j;
  j["schema_version"] = kSchemaVersion;
  j["group"] = spec.kind == GroupKind::cyclic
                   ? "cyclic:" + std::to_string(spec.r1)
                   : "product:" + std::to_string(spec.r1) + "," + std::to_string(spec.r2);
  if (spec.default_q > 0) j["q"] = spec.default_q;
  j["n"] = spec.n;
  Json blocks = Json::array();
  for (const BlockSpec& b : spec.blocks)
    blocks.push_back(Json{{"tag", b.tag}, {"dim", b.dim}, {"character", b.character}});
  j["blocks"] = std::move(blocks);
  return j.dump();
}

std::string finiteness_report_to_json_text(const RepSpec& spec, const FinitenessReport& report) {
  Json j;
  j["schema_version"] = kSchemaVersion;
  j["group"] = spec.kind == GroupKind::cyclic
                   ? "cyclic:" + std::to_string(spec.r1)
                   : "product:" + std::to_string(spec.r1) + "," + std::to_string(spec.r2);
  j["n"] = spec.n;
  j["condition_multiplicity_free"] = report.condition_holds;
  j["subset_count"] = report.subset_count;
  Json runs = Json::array();
  for (const FinitenessRun& run : report.runs)
    runs.push_back(Json{{"q", run.q}, {"invariant_splittings", run.count}});
  j["runs"] = std::move(runs);
  j["branch"] = report.branch;
  j["verdict"] = report.pass ? "PASS" : "FAIL";
  return j.dump();
}

}  // namespace lperiod
