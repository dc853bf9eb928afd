#include "chigen/output.hpp"

#include <algorithm>

#include "chigen/error.hpp"

namespace chigen {

namespace {

constexpr int kSchemaVersion = 1;

[[noreturn]] void bad_field(const std::string& what) {
  fail(ErrorKind::ParseError, "record: " + what);
}

}  // namespace

OutputRecord make_record(const std::string& spec, const GroupTable& g,
                         const ChiGenResult& result, double timing_ms) {
  OutputRecord rec;
  rec.spec = spec;
  rec.order = g.order();
  rec.chigen = result.value;
  rec.method = result.method;
  rec.generator = result.generator;
  rec.timing_ms = timing_ms;
  if (result.witness) {
    std::vector<std::vector<int>> parts;
    parts.reserve(result.witness->parts.size());
    for (const ElementSet& part : result.witness->parts)
      parts.push_back(part.elements());
    rec.witness = std::move(parts);
  }
  return rec;
}

nlohmann::json record_to_json(const OutputRecord& rec) {
  nlohmann::json j;
  j["schema"] = kSchemaVersion;
  j["spec"] = rec.spec;
  j["order"] = rec.order;
  if (rec.chigen.is_infinite()) {
    j["chigen"] = "infinite";
    j["sigma"] = nullptr;
  } else {
    j["chigen"] = rec.chigen.value();
    j["sigma"] = rec.chigen.value() + 1;
  }
  j["method"] = rec.method;
  if (rec.witness)
    j["witness"] = *rec.witness;
  if (rec.generator)
    j["generator"] = *rec.generator;
  j["timing_ms"] = rec.timing_ms;
  j["caps_hit"] = rec.caps_hit;
  return j;
}

OutputRecord record_from_json(const nlohmann::json& j) {
  if (!j.is_object()) bad_field("not an object");
  if (!j.contains("schema") || !j["schema"].is_number_integer())
    bad_field("missing schema");
  if (j["schema"].get<int>() != kSchemaVersion)
    bad_field("unsupported schema version " + j["schema"].dump());

  OutputRecord rec;
  if (!j.contains("spec") || !j["spec"].is_string()) bad_field("missing spec");
  rec.spec = j["spec"].get<std::string>();
  if (!j.contains("order") || !j["order"].is_number_integer())
    bad_field("missing order");
  rec.order = j["order"].get<int>();

  if (!j.contains("chigen")) bad_field("missing chigen");
  const nlohmann::json& chi = j["chigen"];
  if (chi.is_string()) {
    if (chi.get<std::string>() != "infinite")
      bad_field("chigen must be an integer or \"infinite\"");
    rec.chigen = ChiGenValue::infinite();
    if (j.contains("sigma") && !j["sigma"].is_null())
      bad_field("sigma must be null when chigen is infinite");
  } else if (chi.is_number_integer()) {
    rec.chigen = ChiGenValue::finite(chi.get<int>());
    if (!j.contains("sigma") || !j["sigma"].is_number_integer() ||
        j["sigma"].get<int>() != chi.get<int>() + 1)
      bad_field("sigma must equal chigen + 1");
  } else {
    bad_field("chigen must be an integer or \"infinite\"");
  }

  if (!j.contains("method") || !j["method"].is_string())
    bad_field("missing method");
  rec.method = j["method"].get<std::string>();

  if (j.contains("witness")) {
    if (!j["witness"].is_array()) bad_field("witness must be an array");
    rec.witness = j["witness"].get<std::vector<std::vector<int>>>();
  }
  if (j.contains("generator")) {
    if (!j["generator"].is_number_integer())
      bad_field("generator must be an integer");
    rec.generator = j["generator"].get<int>();
  }
  if (!j.contains("timing_ms") || !j["timing_ms"].is_number())
    bad_field("missing timing_ms");
  rec.timing_ms = j["timing_ms"].get<double>();
  if (j.contains("caps_hit")) {
    if (!j["caps_hit"].is_array()) bad_field("caps_hit must be an array");
    rec.caps_hit = j["caps_hit"].get<std::vector<std::string>>();
  }
  return rec;
}

}  // namespace chigen
