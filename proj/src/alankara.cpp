// kavya/alankara.cpp

// Copyright 2026  The Kavya Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//  http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "kavya/alankara.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace kavya {

namespace {

// n and R count as the same rhyme/alliteration class.
char normalize_consonant(char c) { return c == 'R' ? 'n' : c; }

// Rhyme key for one word: consonants class-normalized, a final anusvara
// read as its pausa form m, visarga kept.
std::string rhyme_key(const std::string& word) {
  std::string key;
  for (char c : word) {
    if (is_separator(c)) continue;
    key.push_back(normalize_consonant(c));
  }
  if (!key.empty() && key.back() == 'M') key.back() = 'm';
  return key;
}

std::string word_at(const std::vector<Token>& tokens, int pada,
                    std::size_t offset) {
  for (const Token& t : tokens)
    if (t.pada == pada && offset >= t.begin && offset < t.end) return t.text;
  return "";
}

}  // namespace

std::vector<AlankaraFinding> detect_varnanuprasa(const Stanza& stanza,
                                                 int min_count) {
  std::vector<AlankaraFinding> out;
  std::vector<Token> tokens = tokenize(stanza);
  for (const Pada& pada : stanza.padas) {
    // occurrences per normalized consonant within this pada
    std::map<char, std::vector<SabdaOccurrence>> hits;
    for (std::size_t si = 0; si < pada.syllables.size(); ++si) {
      const Syllable& syl = pada.syllables[si];
      for (char c : syl.onset + syl.trailing) {
        SabdaOccurrence occ;
        occ.pada = pada.position_in_stanza;
        occ.syllable = static_cast<int>(si);
        occ.word = word_at(tokens, pada.position_in_stanza, syl.begin);
        hits[normalize_consonant(c)].push_back(occ);
      }
    }
    for (const auto& [c, occs] : hits) {
      if (static_cast<int>(occs.size()) < min_count) continue;
      AlankaraFinding f;
      f.category = AlankaraCategory::Sabda;
      f.name = "varnanuprasa";
      f.provenance = Provenance::Detected;
      f.span.stanza = stanza.index;
      f.span.padas = {pada.position_in_stanza, pada.position_in_stanza};
      f.phoneme_or_suffix = std::string(1, c);
      f.occurrences = occs;
      out.push_back(std::move(f));
    }
  }
  std::sort(out.begin(), out.end(),
            [](const AlankaraFinding& a, const AlankaraFinding& b) {
              if (a.span.padas->first != b.span.padas->first)
                return a.span.padas->first < b.span.padas->first;
              return a.phoneme_or_suffix < b.phoneme_or_suffix;
            });
  return out;
}

std::optional<AlankaraFinding> detect_antyanuprasa(
    const std::vector<std::string>& words, int min_words, int min_suffix) {
  if (words.size() < 2) return std::nullopt;
  std::vector<std::string> keys;
  keys.reserve(words.size());
  for (const std::string& w : words) keys.push_back(rhyme_key(w));

  // Every suffix of every key is a candidate; keep the longest one shared by
  // enough words, preferring more participants, then the smaller suffix.
  std::map<std::string, std::set<std::size_t>> by_suffix;
  for (std::size_t wi = 0; wi < keys.size(); ++wi)
    for (std::size_t len = 1; len <= keys[wi].size(); ++len)
      by_suffix[keys[wi].substr(keys[wi].size() - len)].insert(wi);

  const std::string* best = nullptr;
  std::size_t best_count = 0;
  for (const auto& [suffix, members] : by_suffix) {
    if (static_cast<int>(suffix.size()) < min_suffix) continue;
    if (static_cast<int>(members.size()) < min_words) continue;
    if (!best || suffix.size() > best->size() ||
        (suffix.size() == best->size() && members.size() > best_count) ||
        (suffix.size() == best->size() && members.size() == best_count &&
         suffix < *best)) {
      best = &suffix;
      best_count = members.size();
    }
  }
  if (!best) return std::nullopt;

  AlankaraFinding f;
  f.category = AlankaraCategory::Sabda;
  f.name = "antyanuprasa";
  f.provenance = Provenance::Detected;
  f.phoneme_or_suffix = *best;
  for (std::size_t wi : by_suffix[*best]) f.participating_words.push_back(words[wi]);
  return f;
}

ArthaValidation validate_artha_annotations(const std::vector<ArthaEntry>& entries,
                                           const Composition& comp) {
  ArthaValidation result;
  std::vector<int> token_counts;
  for (const Stanza& st : comp.stanzas)
    token_counts.push_back(static_cast<int>(tokenize(st).size()));

  std::set<std::string> seen;
  for (std::size_t i = 0; i < entries.size(); ++i) {
    const ArthaEntry& e = entries[i];
    std::string where = "/artha_alankara/" + std::to_string(i);

    if (!kArthaVocabulary.count(e.name)) {
      result.errors.push_back({ArthaValidationError::Kind::UnknownAlankara,
                               where, "unknown alankara: " + e.name});
      continue;
    }

    bool span_ok = true;
    if (!e.span.whole_composition) {
      if (e.span.stanza < 1 ||
          e.span.stanza > static_cast<int>(comp.stanzas.size())) {
        span_ok = false;
      } else {
        const Stanza& st = comp.stanzas[static_cast<std::size_t>(e.span.stanza - 1)];
        if (e.span.padas &&
            (e.span.padas->first < 1 ||
             e.span.padas->second > static_cast<int>(st.padas.size()) ||
             e.span.padas->first > e.span.padas->second))
          span_ok = false;
        for (int w : e.span.words)
          if (w < 0 || w >= token_counts[static_cast<std::size_t>(e.span.stanza - 1)])
            span_ok = false;
      }
    }
    if (!span_ok) {
      result.errors.push_back({ArthaValidationError::Kind::DanglingSpan, where,
                               "span does not resolve in the composition"});
      continue;
    }

    // Exact duplicates (same figure over the same span) are annotation slips.
    std::string fingerprint = e.name + "#" + e.label + "#" +
                              (e.span.whole_composition
                                   ? "composition"
                                   : std::to_string(e.span.stanza)) +
                              "#";
    if (e.span.padas)
      fingerprint += std::to_string(e.span.padas->first) + "-" +
                     std::to_string(e.span.padas->second);
    fingerprint += "#";
    for (int w : e.span.words) fingerprint += std::to_string(w) + ",";
    if (!seen.insert(fingerprint).second) {
      result.errors.push_back({ArthaValidationError::Kind::DuplicateEntry,
                               where, "duplicate entry: " + e.name});
      continue;
    }

    AlankaraFinding f;
    f.category = AlankaraCategory::Artha;
    f.name = e.name;
    f.label = e.label;
    f.provenance = Provenance::Annotated;
    f.span = e.span;
    f.note = e.note;
    result.findings.push_back(std::move(f));
  }
  return result;
}

}  // namespace kavya
