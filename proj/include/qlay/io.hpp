#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "qlay/error.hpp"
#include "qlay/families.hpp"
#include "qlay/poset.hpp"

namespace qlay {

/// On-disk poset description. Exactly one of `realizers` or `relations` is
/// present; realizers are preferred because they carry the two-dimensional
/// structure. Serialization is canonical, so equal documents have equal bytes.
struct PosetDocument {
  static constexpr int kSchemaVersion = 1;

  std::vector<std::string> elements;
  std::optional<RealizerPair> realizers;
  std::optional<std::vector<std::pair<std::string, std::string>>> relations;

  struct Metadata {
    std::string family;
    std::optional<int> w;
    std::optional<int> n;
    std::optional<std::uint64_t> seed;
    bool operator==(const Metadata&) const = default;
  };
  std::optional<Metadata> metadata;

  bool operator==(const PosetDocument& other) const {
    auto realizer_eq = [](const std::optional<RealizerPair>& a,
                          const std::optional<RealizerPair>& b) {
      if (a.has_value() != b.has_value()) return false;
      return !a || (a->l1 == b->l1 && a->l2 == b->l2);
    };
    return elements == other.elements && realizer_eq(realizers, other.realizers) &&
           relations == other.relations && metadata == other.metadata;
  }
};

inline PosetDocument document_from_family(const GeneratedFamily& fam) {
  PosetDocument doc;
  doc.elements = fam.realizers.l1;
  doc.realizers = fam.realizers;
  PosetDocument::Metadata meta;
  meta.family = fam.family;
  if (fam.family == "random-2d") {
    meta.n = fam.n;
    meta.seed = fam.seed;
  } else {
    meta.w = fam.w;
  }
  doc.metadata = meta;
  return doc;
}

inline PosetDocument document_from_poset(const Poset& p) {
  PosetDocument doc;
  doc.elements = p.elements();
  if (p.realizers()) {
    doc.realizers = p.realizer_names();
  } else {
    std::vector<std::pair<std::string, std::string>> rel;
    for (auto [u, v] : cover_graph(p).edges) rel.emplace_back(p.name(u), p.name(v));
    doc.relations = rel;
  }
  return doc;
}

inline Poset to_poset(const PosetDocument& doc) {
  if (doc.realizers) return Poset::from_realizers(*doc.realizers);
  return Poset::from_relations(doc.elements, *doc.relations);
}

inline std::string serialize_document(const PosetDocument& doc) {
  nlohmann::ordered_json j;
  j["schema"] = PosetDocument::kSchemaVersion;
  j["elements"] = doc.elements;
  if (doc.realizers) {
    j["realizers"] = {{"l1", doc.realizers->l1}, {"l2", doc.realizers->l2}};
  }
  if (doc.relations) {
    auto rel = nlohmann::ordered_json::array();
    for (const auto& [u, v] : *doc.relations) rel.push_back({u, v});
    j["relations"] = rel;
  }
  if (doc.metadata) {
    nlohmann::ordered_json meta;
    meta["family"] = doc.metadata->family;
    if (doc.metadata->w) meta["w"] = *doc.metadata->w;
    if (doc.metadata->n) meta["n"] = *doc.metadata->n;
    if (doc.metadata->seed) meta["seed"] = *doc.metadata->seed;
    j["metadata"] = meta;
  }
  return j.dump(2) + "\n";
}

namespace detail {

inline void reject_unknown_fields(const nlohmann::json& j, const char* where,
                                  std::initializer_list<const char*> known) {
  for (const auto& [key, value] : j.items()) {
    (void)value;
    bool ok = false;
    for (const char* k : known) ok = ok || key == k;
    if (!ok) throw Error(ErrorKind::Parse, std::string("unknown field '") + key + "' in " + where);
  }
}

inline std::vector<std::string> string_list(const nlohmann::json& j, const char* field) {
  if (!j.is_array()) throw Error(ErrorKind::Parse, std::string(field) + " must be a list");
  std::vector<std::string> out;
  for (const auto& item : j) {
    if (!item.is_string()) {
      throw Error(ErrorKind::Parse, std::string(field) + " must contain only strings");
    }
    out.push_back(item.get<std::string>());
  }
  return out;
}

}  // namespace detail

/// Strict parser: schema version checked, unknown fields rejected, exactly one
/// body (realizers or relations), realizer permutations and relation acyclicity
/// validated by constructing the poset once.
inline PosetDocument parse_document(const std::string& text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw Error(ErrorKind::Parse, std::string("invalid JSON: ") + e.what());
  }
  if (!j.is_object()) throw Error(ErrorKind::Parse, "document must be a JSON object");
  detail::reject_unknown_fields(j, "document",
                                {"schema", "elements", "realizers", "relations", "metadata"});
  if (!j.contains("schema") || !j["schema"].is_number_integer() ||
      j["schema"].get<int>() != PosetDocument::kSchemaVersion) {
    throw Error(ErrorKind::Parse, "field 'schema' must be the integer 1");
  }
  if (!j.contains("elements")) throw Error(ErrorKind::Parse, "missing field 'elements'");

  PosetDocument doc;
  doc.elements = detail::string_list(j["elements"], "elements");

  if (j.contains("realizers") == j.contains("relations")) {
    throw Error(ErrorKind::Parse, "document needs exactly one of 'realizers' or 'relations'");
  }
  if (j.contains("realizers")) {
    const auto& r = j["realizers"];
    if (!r.is_object()) throw Error(ErrorKind::Parse, "field 'realizers' must be an object");
    detail::reject_unknown_fields(r, "realizers", {"l1", "l2"});
    if (!r.contains("l1") || !r.contains("l2")) {
      throw Error(ErrorKind::Parse, "realizers need both 'l1' and 'l2'");
    }
    doc.realizers = RealizerPair{detail::string_list(r["l1"], "realizers.l1"),
                                 detail::string_list(r["l2"], "realizers.l2")};
  } else {
    const auto& rel = j["relations"];
    if (!rel.is_array()) throw Error(ErrorKind::Parse, "field 'relations' must be a list");
    std::vector<std::pair<std::string, std::string>> pairs;
    for (const auto& item : rel) {
      if (!item.is_array() || item.size() != 2 || !item[0].is_string() || !item[1].is_string()) {
        throw Error(ErrorKind::Parse, "each relation must be a [from, to] pair of names");
      }
      pairs.emplace_back(item[0].get<std::string>(), item[1].get<std::string>());
    }
    doc.relations = pairs;
  }

  if (j.contains("metadata")) {
    const auto& m = j["metadata"];
    if (!m.is_object()) throw Error(ErrorKind::Parse, "field 'metadata' must be an object");
    detail::reject_unknown_fields(m, "metadata", {"family", "w", "n", "seed"});
    PosetDocument::Metadata meta;
    if (m.contains("family")) {
      if (!m["family"].is_string()) throw Error(ErrorKind::Parse, "metadata.family must be a string");
      meta.family = m["family"].get<std::string>();
    }
    auto integer_field = [&](const char* field) {
      if (!m[field].is_number_integer() && !m[field].is_number_unsigned()) {
        throw Error(ErrorKind::Parse, std::string("metadata.") + field + " must be an integer");
      }
    };
    if (m.contains("w")) {
      integer_field("w");
      meta.w = m["w"].get<int>();
    }
    if (m.contains("n")) {
      integer_field("n");
      meta.n = m["n"].get<int>();
    }
    if (m.contains("seed")) {
      integer_field("seed");
      meta.seed = m["seed"].get<std::uint64_t>();
    }
    doc.metadata = meta;
  }

  // elements must be consistent with the body; constructing validates the rest
  if (doc.realizers) {
    validate_realizers(*doc.realizers);
    std::vector<std::string> a = doc.elements, b = doc.realizers->l1;
    std::sort(a.begin(), a.end());
    std::sort(b.begin(), b.end());
    if (a != b) {
      throw Error(ErrorKind::Parse, "field 'elements' does not match the realizer element set");
    }
  }
  to_poset(doc);
  return doc;
}

}  // namespace qlay
