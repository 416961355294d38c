// kavya/syllable.cpp

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

#include "kavya/syllable.hpp"

namespace kavya {

std::size_t vowel_count(const std::string& canonical_text) {
  std::size_t n = 0;
  for (char c : canonical_text)
    if (is_canonical_vowel(c)) ++n;
  return n;
}

std::vector<Syllable> syllabify(const std::string& pada_text) {
  // Positions of phonemes, separators skipped but offsets kept.
  struct Ph {
    char code;
    std::size_t offset;
  };
  std::vector<Ph> phs;
  phs.reserve(pada_text.size());
  for (std::size_t i = 0; i < pada_text.size(); ++i) {
    char c = pada_text[i];
    if (is_separator(c)) continue;
    if (!is_canonical_phoneme(c))
      throw InvalidCharacterError(
          i, "character at offset " + std::to_string(i) +
                 " is not a canonical phoneme");
    phs.push_back({c, i});
  }
  if (phs.empty()) return {};

  bool has_vowel = false;
  for (const Ph& p : phs)
    if (is_canonical_vowel(p.code)) has_vowel = true;
  if (!has_vowel) throw NoVowelError("text contains no vowel");

  std::vector<Syllable> out;
  Syllable cur;
  bool cur_started = false;
  std::size_t i = 0;
  while (i < phs.size()) {
    char c = phs[i].code;
    if (!cur_started) {
      cur = Syllable{};
      cur.begin = phs[i].offset;
      cur_started = true;
    }
    if (is_canonical_consonant(c)) {
      cur.onset.push_back(c);
      ++i;
      continue;
    }
    if (is_canonical_vowel(c)) {
      cur.nucleus = c;
      ++i;
      // Anusvara / visarga cling to their vowel.
      if (i < phs.size() && (phs[i].code == 'M' || phs[i].code == 'H')) {
        cur.coda = phs[i].code;
        ++i;
      }
      cur.end = (i < phs.size()) ? phs[i].offset : pada_text.size();
      out.push_back(cur);
      cur_started = false;
      continue;
    }
    // Stray anusvara/visarga not directly after a vowel: attach to the
    // previous syllable as an extended coda cluster.
    if (!out.empty() && cur.onset.empty()) {
      out.back().trailing.push_back(c);
      out.back().end = (i + 1 < phs.size()) ? phs[i + 1].offset : pada_text.size();
      cur_started = false;
      ++i;
      continue;
    }
    throw InvalidCharacterError(
        phs[i].offset, "anusvara/visarga with no preceding vowel at offset " +
                           std::to_string(phs[i].offset));
  }
  // Trailing consonants with no vowel of their own join the last syllable.
  if (cur_started) {
    out.back().trailing += cur.onset;
    out.back().end = pada_text.size();
  } else if (!out.empty()) {
    out.back().end = pada_text.size();
  }
  // Trim separator tails out of the final span.
  while (out.back().end > out.back().begin &&
         is_separator(pada_text[out.back().end - 1]))
    --out.back().end;
  return out;
}

std::vector<Weight> weigh(const std::vector<Syllable>& syllables,
                          bool pada_final_anceps) {
  std::vector<Weight> out;
  out.reserve(syllables.size());
  for (std::size_t i = 0; i < syllables.size(); ++i) {
    const Syllable& s = syllables[i];
    bool guru = is_long_vowel(s.nucleus) || s.coda == 'M' || s.coda == 'H';
    if (!guru && i + 1 < syllables.size() && syllables[i + 1].onset.size() >= 2)
      guru = true;
    Weight w;
    w.value = guru ? 'G' : 'L';
    w.anceps = pada_final_anceps && i + 1 == syllables.size();
    out.push_back(w);
  }
  return out;
}

std::string weight_string(const std::vector<Weight>& weights) {
  std::string s;
  s.reserve(weights.size());
  for (const Weight& w : weights) s.push_back(w.value);
  return s;
}

}  // namespace kavya
