#pragma once

#include <algorithm>
#include <cstddef>
#include <string>
#include <vector>

#include "nerkit/core.hpp"
#include "nerkit/error.hpp"

namespace nerkit {

enum class Iob2Mode { Repair, Strict };

// Positions whose tag is I-X while the previous tag is neither B-X nor I-X
// (position 0 counts: a sentence cannot open with I-X).
inline std::vector<std::size_t> validate_iob2(const std::vector<ChunkTag>& tags) {
  std::vector<std::size_t> violations;
  for (std::size_t i = 0; i < tags.size(); ++i) {
    if (!tags[i].is_inside()) continue;
    if (i == 0 || tags[i - 1].is_outside() || tags[i - 1].label != tags[i].label)
      violations.push_back(i);
  }
  return violations;
}

inline std::vector<std::size_t> validate_iob2(const Sentence& sentence) {
  std::vector<ChunkTag> tags;
  tags.reserve(sentence.tokens.size());
  for (const Token& t : sentence.tokens) tags.push_back(t.tag);
  return validate_iob2(tags);
}

// Rewrites every orphaned I-X to B-X, left to right, so that a token made
// valid by an earlier rewrite stays I-X. Idempotent; only prefixes change.
inline std::vector<ChunkTag> repair_iob2(std::vector<ChunkTag> tags) {
  for (std::size_t i = 0; i < tags.size(); ++i) {
    if (!tags[i].is_inside()) continue;
    if (i == 0 || tags[i - 1].is_outside() || tags[i - 1].label != tags[i].label)
      tags[i].prefix = ChunkTag::Prefix::Begin;
  }
  return tags;
}

inline Sentence repair_iob2(Sentence sentence) {
  std::vector<ChunkTag> tags;
  tags.reserve(sentence.tokens.size());
  for (const Token& t : sentence.tokens) tags.push_back(t.tag);
  tags = repair_iob2(std::move(tags));
  for (std::size_t i = 0; i < tags.size(); ++i) sentence.tokens[i].tag = tags[i];
  return sentence;
}

// Spans of maximal B-X (I-X)* runs, ordered by start. Repair mode fixes
// orphaned I- tags first; strict mode throws on them instead.
inline std::vector<EntitySpan> extract_entities(std::vector<ChunkTag> tags,
                                                Iob2Mode mode = Iob2Mode::Repair) {
  if (mode == Iob2Mode::Strict) {
    const auto violations = validate_iob2(tags);
    if (!violations.empty())
      throw DataError("IOB2 violation at token index " +
                      std::to_string(violations.front()));
  } else {
    tags = repair_iob2(std::move(tags));
  }
  std::vector<EntitySpan> spans;
  for (std::size_t i = 0; i < tags.size(); ++i) {
    if (!tags[i].is_begin()) continue;
    std::size_t end = i;
    while (end + 1 < tags.size() && tags[end + 1].is_inside() &&
           tags[end + 1].label == tags[i].label)
      ++end;
    spans.push_back(EntitySpan{tags[i].label, i, end});
    i = end;
  }
  return spans;
}

inline std::vector<EntitySpan> extract_entities(const Sentence& sentence,
                                                Iob2Mode mode = Iob2Mode::Repair) {
  std::vector<ChunkTag> tags;
  tags.reserve(sentence.tokens.size());
  for (const Token& t : sentence.tokens) tags.push_back(t.tag);
  return extract_entities(std::move(tags), mode);
}

// Inverse of extract_entities: lays disjoint spans onto an all-O sequence.
inline std::vector<ChunkTag> encode_entities(std::vector<EntitySpan> spans,
                                             std::size_t length) {
  std::sort(spans.begin(), spans.end(),
            [](const EntitySpan& a, const EntitySpan& b) { return a.start < b.start; });
  std::vector<ChunkTag> tags(length, ChunkTag::outside());
  std::size_t prev_end = 0;
  bool first = true;
  for (const EntitySpan& s : spans) {
    if (s.start > s.end || s.end >= length)
      throw DataError("span out of range: " + s.type + " [" +
                      std::to_string(s.start) + "," + std::to_string(s.end) + "]");
    if (!first && s.start <= prev_end)
      throw DataError("overlapping spans at token index " + std::to_string(s.start));
    tags[s.start] = ChunkTag::begin(s.type);
    for (std::size_t i = s.start + 1; i <= s.end; ++i)
      tags[i] = ChunkTag::inside(s.type);
    prev_end = s.end;
    first = false;
  }
  return tags;
}

}  // namespace nerkit
