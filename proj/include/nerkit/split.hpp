#pragma once

#include <cstdint>
#include <numeric>
#include <set>
#include <string>
#include <vector>

#include <json.hpp>

#include "nerkit/core.hpp"
#include "nerkit/error.hpp"
#include "nerkit/jsonutil.hpp"
#include "nerkit/rational.hpp"
#include "nerkit/rng.hpp"

namespace nerkit {

struct SplitAssignment {
  std::string source;
  std::string partition;
  Fraction to_train{0, 1};
  Fraction to_validation{0, 1};
};

struct SplitRecipe {
  std::uint64_t seed = 0;
  std::vector<SplitAssignment> assignments;
};

// The default recipe: all of the HiNER and MahaNER train partitions plus
// 80% of B-NER train go to the master training set; their test/validation
// partitions, the remaining 20% of B-NER train and 30% of B-NER test form
// the master validation set. The unassigned 70% of B-NER test lands in the
// leftover bucket.
inline SplitRecipe default_recipe(std::uint64_t seed = 0) {
  SplitRecipe recipe;
  recipe.seed = seed;
  recipe.assignments = {
      {"HiNER", "train", Fraction{1, 1}, Fraction{0, 1}},
      {"MahaNER", "train", Fraction{1, 1}, Fraction{0, 1}},
      {"B-NER", "train", Fraction{8, 10}, Fraction{2, 10}},
      {"B-NER", "test", Fraction{0, 1}, Fraction{3, 10}},
      {"HiNER", "test", Fraction{0, 1}, Fraction{1, 1}},
      {"HiNER", "validation", Fraction{0, 1}, Fraction{1, 1}},
      {"MahaNER", "test", Fraction{0, 1}, Fraction{1, 1}},
      {"MahaNER", "validation", Fraction{0, 1}, Fraction{1, 1}},
  };
  return recipe;
}

struct SplitInput {
  std::string source;
  std::string partition;
  Corpus corpus;
};

struct AssignmentCounts {
  std::string source;
  std::string partition;
  std::size_t input = 0;
  std::size_t to_train = 0;
  std::size_t to_validation = 0;
  std::size_t to_leftover = 0;
};

struct SplitResult {
  Corpus train;
  Corpus validation;
  Corpus leftover;
  std::vector<AssignmentCounts> manifest;
};

// Deterministic composition: each assignment shuffles its input's sentence
// indices with SplitMix64 seeded by derive_seed(recipe.seed, source,
// partition), sends the first floor(f_train * n) to train, the next
// floor(f_validation * n) to validation and the rest to leftover. Inputs
// not named by any assignment go entirely to leftover (and show up in the
// manifest), so every input sentence lands in exactly one output.
inline SplitResult compose_splits(const std::vector<SplitInput>& inputs,
                                  const SplitRecipe& recipe) {
  for (const SplitAssignment& a : recipe.assignments) {
    const unsigned __int128 sum =
        static_cast<unsigned __int128>(a.to_train.num) * a.to_validation.den +
        static_cast<unsigned __int128>(a.to_validation.num) * a.to_train.den;
    if (sum > static_cast<unsigned __int128>(a.to_train.den) * a.to_validation.den)
      throw ConfigError("assignment " + a.source + "/" + a.partition +
                        ": fractions sum to more than 1");
  }

  std::set<std::string> seen_ids;
  for (const SplitInput& in : inputs) {
    if (!in.corpus.schema.unified)
      throw DataError("split input " + in.source + "/" + in.partition +
                      " is not unified-schema");
    for (const Sentence& s : in.corpus.sentences)
      if (!seen_ids.insert(s.id).second)
        throw DataError("duplicate sentence id across split inputs: " + s.id);
  }

  SplitResult result;
  result.train.schema = CorpusSchema::make_unified();
  result.validation.schema = CorpusSchema::make_unified();
  result.leftover.schema = CorpusSchema::make_unified();

  std::vector<bool> consumed(inputs.size(), false);
  auto find_input = [&](const SplitAssignment& a) -> const SplitInput* {
    for (std::size_t i = 0; i < inputs.size(); ++i) {
      if (inputs[i].source == a.source && inputs[i].partition == a.partition) {
        consumed[i] = true;
        return &inputs[i];
      }
    }
    return nullptr;
  };

  for (const SplitAssignment& a : recipe.assignments) {
    const SplitInput* in = find_input(a);
    if (!in)
      throw DataError("no input for assignment " + a.source + "/" + a.partition);
    const std::size_t n = in->corpus.sentences.size();
    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), 0);
    SplitMix64 rng(derive_seed(recipe.seed, a.source, a.partition));
    shuffle(order, rng);

    const std::size_t n_train = static_cast<std::size_t>(a.to_train.floor_mul(n));
    const std::size_t n_val = static_cast<std::size_t>(a.to_validation.floor_mul(n));
    AssignmentCounts counts{a.source, a.partition, n, n_train, n_val,
                            n - n_train - n_val};
    for (std::size_t k = 0; k < n; ++k) {
      const Sentence& s = in->corpus.sentences[order[k]];
      if (k < n_train)
        result.train.sentences.push_back(s);
      else if (k < n_train + n_val)
        result.validation.sentences.push_back(s);
      else
        result.leftover.sentences.push_back(s);
    }
    result.manifest.push_back(counts);
  }

  for (std::size_t i = 0; i < inputs.size(); ++i) {
    if (consumed[i]) continue;
    const SplitInput& in = inputs[i];
    for (const Sentence& s : in.corpus.sentences)
      result.leftover.sentences.push_back(s);
    result.manifest.push_back(AssignmentCounts{in.source, in.partition,
                                               in.corpus.sentences.size(), 0, 0,
                                               in.corpus.sentences.size()});
  }
  return result;
}

// Recipe file: {"seed": N, "assignments": [{"source", "partition",
// "to_train", "to_validation"}, ...]}; fractions as decimal strings or
// numbers.
inline SplitRecipe recipe_from_json(const nlohmann::json& j) {
  if (!j.is_object()) throw ConfigError("split recipe: expected a JSON object");
  for (const auto& [key, _] : j.items())
    if (key != "seed" && key != "assignments")
      throw ConfigError("split recipe: unknown key \"" + key + "\"");
  SplitRecipe recipe;
  if (j.contains("seed")) recipe.seed = j.at("seed").get<std::uint64_t>();
  if (!j.contains("assignments") || !j.at("assignments").is_array())
    throw ConfigError("split recipe: missing array \"assignments\"");
  for (const auto& item : j.at("assignments")) {
    for (const auto& [key, _] : item.items())
      if (key != "source" && key != "partition" && key != "to_train" &&
          key != "to_validation")
        throw ConfigError("split recipe assignment: unknown key \"" + key + "\"");
    SplitAssignment a;
    a.source = item.at("source").get<std::string>();
    a.partition = item.at("partition").get<std::string>();
    if (item.contains("to_train")) a.to_train = fraction_from_json(item.at("to_train"));
    if (item.contains("to_validation"))
      a.to_validation = fraction_from_json(item.at("to_validation"));
    recipe.assignments.push_back(a);
  }
  return recipe;
}

inline nlohmann::ordered_json recipe_to_json(const SplitRecipe& recipe) {
  nlohmann::ordered_json assignments = nlohmann::ordered_json::array();
  for (const SplitAssignment& a : recipe.assignments)
    assignments.push_back({{"source", a.source},
                           {"partition", a.partition},
                           {"to_train", a.to_train.str()},
                           {"to_validation", a.to_validation.str()}});
  return nlohmann::ordered_json{{"seed", recipe.seed}, {"assignments", assignments}};
}

inline nlohmann::ordered_json split_manifest_json(const SplitResult& result) {
  nlohmann::ordered_json rows = nlohmann::ordered_json::array();
  for (const AssignmentCounts& c : result.manifest)
    rows.push_back({{"source", c.source},
                    {"partition", c.partition},
                    {"input", c.input},
                    {"to_train", c.to_train},
                    {"to_validation", c.to_validation},
                    {"to_leftover", c.to_leftover}});
  return nlohmann::ordered_json{
      {"train", result.train.sentences.size()},
      {"validation", result.validation.sentences.size()},
      {"leftover", result.leftover.sentences.size()},
      {"assignments", rows}};
}

}  // namespace nerkit
