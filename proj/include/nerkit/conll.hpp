#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "nerkit/core.hpp"
#include "nerkit/error.hpp"

namespace nerkit {

namespace detail {

inline bool is_ascii_space(char c) {
  return c == ' ' || c == '\t' || c == '\v' || c == '\f' || c == '\r';
}

inline bool is_blank_line(std::string_view line) {
  for (char c : line)
    if (!is_ascii_space(c)) return false;
  return true;
}

inline std::vector<std::string_view> split_fields(std::string_view line) {
  std::vector<std::string_view> fields;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && is_ascii_space(line[i])) ++i;
    if (i >= line.size()) break;
    std::size_t j = i;
    while (j < line.size() && !is_ascii_space(line[j])) ++j;
    fields.push_back(line.substr(i, j - i));
    i = j;
  }
  return fields;
}

}  // namespace detail

// Parses the CoNLL dialect shared by all supported datasets:
//   - sentences are maximal runs of non-blank lines, separated by one or
//     more blank lines;
//   - each line splits on ASCII whitespace; the first field is the token
//     surface, the last field is the IOB2 tag, middle columns are ignored;
//   - "-DOCSTART-" lines and "#" comment lines at sentence start are skipped.
// Sentence ids are "<id_prefix>:<0-based ordinal>"; id_prefix defaults to
// the source name (pass e.g. "B-NER:train" when several partitions of one
// source will be combined later).
inline Corpus parse_conll(std::string_view text, std::string_view language,
                          std::string_view source, std::string_view id_prefix = {}) {
  const std::string prefix(id_prefix.empty() ? source : id_prefix);
  Corpus corpus;
  corpus.schema = CorpusSchema::source(std::string(source));

  Sentence current;
  std::size_t ordinal = 0;
  auto flush = [&] {
    if (current.tokens.empty()) return;
    current.id = prefix + ":" + std::to_string(ordinal++);
    current.language = language;
    current.source = source;
    corpus.sentences.push_back(std::move(current));
    current = Sentence{};
  };

  std::size_t pos = 0;
  std::size_t line_no = 0;
  while (pos <= text.size()) {
    if (pos == text.size()) {
      if (line_no == 0 || text.back() == '\n') break;  // no trailing partial line
    }
    const std::size_t nl = text.find('\n', pos);
    const std::string_view line =
        text.substr(pos, (nl == std::string_view::npos ? text.size() : nl) - pos);
    pos = (nl == std::string_view::npos) ? text.size() + 1 : nl + 1;
    ++line_no;

    if (detail::is_blank_line(line)) {
      flush();
      continue;
    }
    const auto fields = detail::split_fields(line);
    if (current.tokens.empty() &&
        (fields.front() == "-DOCSTART-" || line.front() == '#'))
      continue;
    if (fields.size() < 2)
      throw ParseError(line_no, "expected at least 2 fields, got " +
                                    std::to_string(fields.size()));
    const auto tag = ChunkTag::parse(fields.back());
    if (!tag)
      throw ParseError(line_no, "invalid tag \"" + std::string(fields.back()) + "\"");
    current.tokens.push_back(Token{std::string(fields.front()), *tag});
  }
  flush();
  return corpus;
}

// Two TAB-separated columns per token, one blank line after every sentence
// including the last. parse_conll(serialize_conll(c)) reproduces every
// surface, tag and sentence boundary of c.
inline std::string serialize_conll(const Corpus& corpus) {
  std::string out;
  for (const Sentence& s : corpus.sentences) {
    for (const Token& t : s.tokens) {
      out += t.surface;
      out.push_back('\t');
      out += t.tag.str();
      out.push_back('\n');
    }
    out.push_back('\n');
  }
  return out;
}

}  // namespace nerkit
