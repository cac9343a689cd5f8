#ifndef FQZETA_RECORD_HPP
#define FQZETA_RECORD_HPP

// RelationRecord: the JSON wire format of one relation set.

#include <cstdint>
#include <string>
#include <vector>

#include <json.hpp>

#include "fqzeta/error.hpp"
#include "fqzeta/relations.hpp"

namespace fqzeta {

inline constexpr int kSchemaVersion = 1;

struct RecordTerm {
  int coeff = 0;
  std::int64_t index = 0;

  friend bool operator==(const RecordTerm&, const RecordTerm&) = default;
};

struct RelationRecord {
  int q = 2;
  int p = 2;
  int s = 1;
  std::int64_t a = 1;
  std::int64_t b = 1;
  std::int64_t weight = 2;
  std::string method;
  std::vector<RecordTerm> terms;
  std::vector<int> verified_depths;

  friend bool operator==(const RelationRecord&, const RelationRecord&) = default;
};

inline RelationRecord to_record(const RelationSet& rs, int s, std::string_view method, std::vector<int> verified_depths = {}) {
  RelationRecord r{rs.q, rs.p, s, rs.a, rs.b, rs.weight(), std::string(method), {}, std::move(verified_depths)};
  for (const auto& t : rs.terms) r.terms.push_back({t.coeff.value, t.index});
  return r;
}

inline nlohmann::ordered_json to_json(const RelationRecord& r) {
  nlohmann::ordered_json j;
  j["q"] = r.q;
  j["p"] = r.p;
  j["s"] = r.s;
  j["a"] = r.a;
  j["b"] = r.b;
  j["weight"] = r.weight;
  j["method"] = r.method;
  auto terms = nlohmann::ordered_json::array();
  for (const auto& t : r.terms) {
    nlohmann::ordered_json jt;
    jt["coeff"] = t.coeff;
    jt["index"] = t.index;
    terms.push_back(std::move(jt));
  }
  j["terms"] = std::move(terms);
  j["verified_depths"] = r.verified_depths;
  return j;
}

/// Inverse of to_json. Throws InvalidArgument on a malformed record.
inline RelationRecord record_from_json(const nlohmann::ordered_json& j) {
  try {
    RelationRecord r;
    r.q = j.at("q").get<int>();
    r.p = j.at("p").get<int>();
    r.s = j.at("s").get<int>();
    r.a = j.at("a").get<std::int64_t>();
    r.b = j.at("b").get<std::int64_t>();
    r.weight = j.at("weight").get<std::int64_t>();
    r.method = j.at("method").get<std::string>();
    for (const auto& jt : j.at("terms")) r.terms.push_back({jt.at("coeff").get<int>(), jt.at("index").get<std::int64_t>()});
    r.verified_depths = j.at("verified_depths").get<std::vector<int>>();
    return r;
  } catch (const nlohmann::json::exception& e) {
    throw Error(Errc::InvalidArgument, std::string("malformed relation record: ") + e.what());
  }
}

/// {"schema_version": 1, "records": [...]}
inline nlohmann::ordered_json records_document(const std::vector<RelationRecord>& records) {
  nlohmann::ordered_json doc;
  doc["schema_version"] = kSchemaVersion;
  auto arr = nlohmann::ordered_json::array();
  for (const auto& r : records) arr.push_back(to_json(r));
  doc["records"] = std::move(arr);
  return doc;
}

inline std::vector<RelationRecord> records_from_document(const nlohmann::ordered_json& doc) {
  if (!doc.is_object() || doc.value("schema_version", 0) != kSchemaVersion)
    throw Error(Errc::InvalidArgument, "unsupported or missing schema_version");
  std::vector<RelationRecord> out;
  for (const auto& j : doc.at("records")) out.push_back(record_from_json(j));
  return out;
}

}  // namespace fqzeta

#endif  // FQZETA_RECORD_HPP
