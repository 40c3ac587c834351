#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include <json.hpp>

#include "nerkit/core.hpp"
#include "nerkit/error.hpp"
#include "nerkit/jsonutil.hpp"
#include "nerkit/rational.hpp"
#include "nerkit/rng.hpp"
#include "nerkit/utf8.hpp"

namespace nerkit {

inline constexpr std::size_t kPadId = 0;
inline constexpr std::size_t kUnkId = 1;
inline constexpr std::string_view kPadSurface = "<PAD>";
inline constexpr std::string_view kUnkSurface = "<UNK>";
inline constexpr std::size_t kFirstSurfaceId = 2;

// Token-to-id table. Ids 0 and 1 are reserved for PAD and UNK; kept
// surfaces get contiguous ids from 2 in (frequency desc, surface asc)
// order. Surfaces are NFC-normalized on the way in and on lookup, so
// spellings that differ only in combining-mark order count as one type.
struct Vocabulary {
  std::vector<std::string> surfaces;     // surfaces[k] has id k + 2
  std::vector<std::uint64_t> counts;     // parallel; zero when loaded from disk
  std::unordered_map<std::string, std::size_t> index;  // surface -> id
  Fraction coverage{1, 1};
  std::map<std::string, std::size_t> per_language_sizes;

  std::size_t size() const { return surfaces.size() + kFirstSurfaceId; }
};

// Id of a surface, UNK's id when absent. Never returns PAD.
inline std::size_t lookup(const Vocabulary& vocab, std::string_view surface) {
  const auto it = vocab.index.find(nfc(surface));
  return it == vocab.index.end() ? kUnkId : it->second;
}

namespace detail {

inline void rebuild_index(Vocabulary& vocab) {
  vocab.index.clear();
  for (std::size_t k = 0; k < vocab.surfaces.size(); ++k)
    vocab.index[vocab.surfaces[k]] = k + kFirstSurfaceId;
}

inline std::vector<std::pair<std::string, std::uint64_t>> sorted_by_freq(
    std::map<std::string, std::uint64_t>& freq) {
  std::vector<std::pair<std::string, std::uint64_t>> types(freq.begin(), freq.end());
  std::stable_sort(types.begin(), types.end(), [](const auto& a, const auto& b) {
    if (a.second != b.second) return a.second > b.second;
    return a.first < b.first;
  });
  return types;
}

}  // namespace detail

// Counts word types over a single-language corpus and keeps the most
// frequent ceil(coverage * T) of the T distinct types. The dropped tail
// deliberately falls to UNK so the tagger sees out-of-vocabulary tokens
// already at training time.
inline Vocabulary build_language_vocab(const Corpus& corpus, Fraction coverage,
                                       std::string language = {}) {
  if (coverage.num == 0 ||
      static_cast<unsigned __int128>(coverage.num) > coverage.den)
    throw ConfigError("coverage must be in (0, 1], got " + coverage.str());
  for (const Sentence& s : corpus.sentences) {
    if (language.empty())
      language = s.language;
    else if (s.language != language)
      throw DataError("build_language_vocab: mixed languages \"" + language +
                      "\" and \"" + s.language + "\" (sentence " + s.id + ")");
  }

  std::map<std::string, std::uint64_t> freq;
  for (const Sentence& s : corpus.sentences)
    for (const Token& t : s.tokens) {
      std::string surface = nfc(t.surface);
      if (surface == kPadSurface || surface == kUnkSurface) continue;  // reserved
      ++freq[surface];
    }

  const auto types = detail::sorted_by_freq(freq);
  const std::size_t kept =
      static_cast<std::size_t>(coverage.ceil_mul(types.size()));

  Vocabulary vocab;
  vocab.coverage = coverage;
  if (!language.empty()) vocab.per_language_sizes[language] = kept;
  vocab.surfaces.reserve(kept);
  vocab.counts.reserve(kept);
  for (std::size_t k = 0; k < kept; ++k) {
    vocab.surfaces.push_back(types[k].first);
    vocab.counts.push_back(types[k].second);
  }
  detail::rebuild_index(vocab);
  return vocab;
}

// Union of the inputs' kept surfaces, ordered by total frequency across
// inputs (desc, surface asc tie-break). Per-language kept counts carry over.
inline Vocabulary merge_vocabs(const std::vector<Vocabulary>& vocabs) {
  if (vocabs.empty()) throw ConfigError("merge_vocabs: no input vocabularies");
  std::map<std::string, std::uint64_t> freq;
  for (const Vocabulary& v : vocabs)
    for (std::size_t k = 0; k < v.surfaces.size(); ++k)
      freq[v.surfaces[k]] += v.counts[k];

  Vocabulary merged;
  merged.coverage = vocabs.front().coverage;
  for (const Vocabulary& v : vocabs)
    for (const auto& [lang, kept] : v.per_language_sizes)
      merged.per_language_sizes[lang] += kept;

  const auto types = detail::sorted_by_freq(freq);
  merged.surfaces.reserve(types.size());
  merged.counts.reserve(types.size());
  for (const auto& [surface, count] : types) {
    merged.surfaces.push_back(surface);
    merged.counts.push_back(count);
  }
  detail::rebuild_index(merged);
  return merged;
}

// Vocabulary file: one surface per line in id order, headed by the two
// reserved lines. The sidecar JSON carries coverage and per-language sizes.
inline std::string serialize_vocab_file(const Vocabulary& vocab) {
  std::string out;
  out += kPadSurface;
  out.push_back('\n');
  out += kUnkSurface;
  out.push_back('\n');
  for (const std::string& s : vocab.surfaces) {
    out += s;
    out.push_back('\n');
  }
  return out;
}

inline Vocabulary parse_vocab_file(std::string_view text) {
  std::vector<std::string> lines;
  std::size_t pos = 0;
  while (pos < text.size()) {
    std::size_t nl = text.find('\n', pos);
    if (nl == std::string_view::npos) nl = text.size();
    lines.emplace_back(text.substr(pos, nl - pos));
    pos = nl + 1;
  }
  if (lines.size() < 2 || lines[0] != kPadSurface || lines[1] != kUnkSurface)
    throw DataError("vocabulary file must start with <PAD> and <UNK> lines");
  Vocabulary vocab;
  vocab.surfaces.assign(lines.begin() + 2, lines.end());
  vocab.counts.assign(vocab.surfaces.size(), 0);
  detail::rebuild_index(vocab);
  return vocab;
}

inline nlohmann::ordered_json vocab_sidecar_json(const Vocabulary& vocab) {
  nlohmann::ordered_json sizes = nlohmann::ordered_json::object();
  for (const auto& [lang, kept] : vocab.per_language_sizes) sizes[lang] = kept;
  return nlohmann::ordered_json{{"coverage", vocab.coverage.str()},
                                {"per_language_sizes", sizes}};
}

inline void apply_vocab_sidecar(Vocabulary& vocab, const nlohmann::json& j) {
  if (j.contains("coverage")) vocab.coverage = fraction_from_json(j.at("coverage"));
  if (j.contains("per_language_sizes"))
    for (const auto& [lang, kept] : j.at("per_language_sizes").items())
      vocab.per_language_sizes[lang] = kept.get<std::size_t>();
}

// Checksum over the exact file bytes; recorded in model files so a model
// is never decoded against the wrong vocabulary.
inline std::uint64_t vocab_checksum(const Vocabulary& vocab) {
  return fnv1a64(serialize_vocab_file(vocab));
}

}  // namespace nerkit
