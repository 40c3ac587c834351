#pragma once

#include <array>
#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "nerkit/error.hpp"

namespace nerkit {

// The six unified entity categories, in the canonical listing order used
// everywhere (per-type reports, tagger label set, tie-breaking).
enum class EntityType { PERSON, LOCATION, ORGANIZATION, NUMEX, TIMEX, MISC };

inline constexpr std::array<EntityType, 6> kEntityTypes = {
    EntityType::PERSON, EntityType::LOCATION, EntityType::ORGANIZATION,
    EntityType::NUMEX,  EntityType::TIMEX,    EntityType::MISC};

inline std::string_view entity_type_name(EntityType t) {
  switch (t) {
    case EntityType::PERSON: return "PERSON";
    case EntityType::LOCATION: return "LOCATION";
    case EntityType::ORGANIZATION: return "ORGANIZATION";
    case EntityType::NUMEX: return "NUMEX";
    case EntityType::TIMEX: return "TIMEX";
    case EntityType::MISC: return "MISC";
  }
  return "";
}

inline std::optional<EntityType> entity_type_from_name(std::string_view name) {
  for (EntityType t : kEntityTypes)
    if (entity_type_name(t) == name) return t;
  return std::nullopt;
}

// An IOB2 chunk tag: "O", "B-<LABEL>" or "I-<LABEL>". In a source-schema
// corpus the label is whatever the source dataset uses (NEP, GEO, ...);
// in a unified corpus it is one of the six EntityType names.
struct ChunkTag {
  enum class Prefix { Outside, Begin, Inside };

  Prefix prefix = Prefix::Outside;
  std::string label;  // empty iff prefix == Outside

  static ChunkTag outside() { return ChunkTag{}; }
  static ChunkTag begin(std::string label) {
    return ChunkTag{Prefix::Begin, std::move(label)};
  }
  static ChunkTag inside(std::string label) {
    return ChunkTag{Prefix::Inside, std::move(label)};
  }
  static ChunkTag begin(EntityType t) { return begin(std::string(entity_type_name(t))); }
  static ChunkTag inside(EntityType t) { return inside(std::string(entity_type_name(t))); }

  bool is_outside() const { return prefix == Prefix::Outside; }
  bool is_begin() const { return prefix == Prefix::Begin; }
  bool is_inside() const { return prefix == Prefix::Inside; }

  std::string str() const {
    switch (prefix) {
      case Prefix::Outside: return "O";
      case Prefix::Begin: return "B-" + label;
      case Prefix::Inside: return "I-" + label;
    }
    return "O";
  }

  // Grammar: "O", or ("B-" | "I-") followed by a non-empty label with no
  // whitespace. Anything else is rejected.
  static std::optional<ChunkTag> parse(std::string_view text) {
    if (text == "O") return outside();
    if (text.size() < 3 || text[1] != '-') return std::nullopt;
    if (text[0] != 'B' && text[0] != 'I') return std::nullopt;
    const std::string_view label = text.substr(2);
    for (char c : label)
      if (c == ' ' || c == '\t' || c == '\n' || c == '\r' || c == '\v' || c == '\f')
        return std::nullopt;
    return text[0] == 'B' ? begin(std::string(label)) : inside(std::string(label));
  }

  bool operator==(const ChunkTag&) const = default;
};

struct Token {
  std::string surface;  // non-empty, no internal whitespace
  ChunkTag tag;

  bool operator==(const Token&) const = default;
};

struct Sentence {
  std::string id;        // unique within a corpus, e.g. "B-NER:train:17"
  std::string language;  // BCP-ish code: "hi", "bn", "mr", ...
  std::string source;    // dataset name: "HiNER", "MahaNER", "B-NER", ...
  std::vector<Token> tokens;

  bool operator==(const Sentence&) const = default;
};

// A corpus is either still in its source dataset's tag schema or already
// mapped to the unified 6-type schema.
struct CorpusSchema {
  bool unified = false;
  std::string source_name;  // set iff !unified

  static CorpusSchema source(std::string name) {
    return CorpusSchema{false, std::move(name)};
  }
  static CorpusSchema make_unified() { return CorpusSchema{true, {}}; }

  bool operator==(const CorpusSchema&) const = default;
};

struct Corpus {
  std::vector<Sentence> sentences;
  CorpusSchema schema;

  bool operator==(const Corpus&) const = default;
};

// A maximal B-X (I-X)* run; start/end are inclusive token indices.
struct EntitySpan {
  std::string type;
  std::size_t start = 0;
  std::size_t end = 0;

  bool operator==(const EntitySpan&) const = default;
  auto operator<=>(const EntitySpan&) const = default;
};

// Checks that every non-O label is one of the six unified types and stamps
// the corpus unified. The CLI uses this after parsing files whose schema is
// not recorded anywhere in the file itself.
inline Corpus require_unified(Corpus corpus) {
  for (const Sentence& s : corpus.sentences)
    for (const Token& t : s.tokens)
      if (!t.tag.is_outside() && !entity_type_from_name(t.tag.label))
        throw DataError("sentence " + s.id + ": tag " + t.tag.str() +
                        " is not in the unified schema");
  corpus.schema = CorpusSchema::make_unified();
  return corpus;
}

}  // namespace nerkit
