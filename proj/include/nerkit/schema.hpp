#pragma once

#include <map>
#include <string>
#include <string_view>

#include <json.hpp>

#include "nerkit/core.hpp"
#include "nerkit/error.hpp"
#include "nerkit/iob2.hpp"

namespace nerkit {

// Source-schema label -> unified type. Every label not in `rules` is
// dropped to O when mapping (and the sentence repaired, since dropping can
// orphan I- tags).
struct MappingSpec {
  std::string source_name;
  std::map<std::string, EntityType> rules;

  bool operator==(const MappingSpec&) const = default;
};

// The three built-in specs. HiNER folds LITERATURE and RELIGION into MISC;
// MahaNER maps both date (NED) and time (NETI) to TIMEX; B-NER has no
// numeric label (NUMEX arrives via annotate_numex) and folds GPE and ART
// into MISC.
inline MappingSpec builtin_mapping(std::string_view source_name) {
  using ET = EntityType;
  if (source_name == "HiNER")
    return MappingSpec{"HiNER",
                       {{"PERSON", ET::PERSON},
                        {"LOCATION", ET::LOCATION},
                        {"ORGANIZATION", ET::ORGANIZATION},
                        {"NUMEX", ET::NUMEX},
                        {"TIMEX", ET::TIMEX},
                        {"MISC", ET::MISC},
                        {"LITERATURE", ET::MISC},
                        {"RELIGION", ET::MISC}}};
  if (source_name == "MahaNER")
    return MappingSpec{"MahaNER",
                       {{"NEP", ET::PERSON},
                        {"NEL", ET::LOCATION},
                        {"NEO", ET::ORGANIZATION},
                        {"NEM", ET::NUMEX},
                        {"NED", ET::TIMEX},
                        {"NETI", ET::TIMEX},
                        {"ED", ET::MISC}}};
  if (source_name == "B-NER")
    return MappingSpec{"B-NER",
                       {{"PER", ET::PERSON},
                        {"GEO", ET::LOCATION},
                        {"ORG", ET::ORGANIZATION},
                        {"TIM", ET::TIMEX},
                        {"GPE", ET::MISC},
                        {"ART", ET::MISC}}};
  throw ConfigError("no built-in mapping for source \"" +
                    std::string(source_name) + "\"");
}

inline bool has_builtin_mapping(std::string_view source_name) {
  return source_name == "HiNER" || source_name == "MahaNER" ||
         source_name == "B-NER";
}

// Mapping-file format: {"source_name": ..., "rules": {SRC: TARGET, ...}}.
inline MappingSpec mapping_from_json(const nlohmann::json& j) {
  if (!j.is_object()) throw ConfigError("mapping file: expected a JSON object");
  for (const auto& [key, _] : j.items())
    if (key != "source_name" && key != "rules")
      throw ConfigError("mapping file: unknown key \"" + key + "\"");
  MappingSpec spec;
  if (!j.contains("source_name") || !j.at("source_name").is_string())
    throw ConfigError("mapping file: missing string \"source_name\"");
  spec.source_name = j.at("source_name").get<std::string>();
  if (!j.contains("rules") || !j.at("rules").is_object())
    throw ConfigError("mapping file: missing object \"rules\"");
  for (const auto& [src, target] : j.at("rules").items()) {
    if (!target.is_string())
      throw ConfigError("mapping file: rule target for \"" + src +
                        "\" must be a string");
    const auto type = entity_type_from_name(target.get<std::string>());
    if (!type)
      throw ConfigError("mapping file: \"" + target.get<std::string>() +
                        "\" is not a unified entity type");
    spec.rules[src] = *type;
  }
  return spec;
}

inline nlohmann::ordered_json mapping_to_json(const MappingSpec& spec) {
  nlohmann::ordered_json rules = nlohmann::ordered_json::object();
  for (const auto& [src, target] : spec.rules)
    rules[src] = std::string(entity_type_name(target));
  return nlohmann::ordered_json{{"source_name", spec.source_name},
                                {"rules", rules}};
}

// Rewrites every B-X/I-X to the mapped unified type (prefix preserved,
// so adjacent source spans that share a target stay separate spans),
// drops unmapped labels to O, and repairs the orphaned I- tags this
// leaves behind.
inline Corpus map_tags(const Corpus& corpus, const MappingSpec& spec) {
  if (corpus.schema.unified || corpus.schema.source_name != spec.source_name)
    throw DataError("corpus schema \"" +
                    (corpus.schema.unified ? std::string("unified")
                                           : corpus.schema.source_name) +
                    "\" does not match mapping for \"" + spec.source_name + "\"");
  Corpus out;
  out.schema = CorpusSchema::make_unified();
  out.sentences.reserve(corpus.sentences.size());
  for (const Sentence& s : corpus.sentences) {
    Sentence mapped = s;
    for (Token& t : mapped.tokens) {
      if (t.tag.is_outside()) continue;
      const auto rule = spec.rules.find(t.tag.label);
      if (rule == spec.rules.end()) {
        t.tag = ChunkTag::outside();
      } else {
        t.tag.label = entity_type_name(rule->second);
      }
    }
    out.sentences.push_back(repair_iob2(std::move(mapped)));
  }
  return out;
}

}  // namespace nerkit
