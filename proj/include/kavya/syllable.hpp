// kavya/syllable.hpp

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

#pragma once

#include <string>
#include <vector>

#include "kavya/errors.hpp"
#include "kavya/phoneme.hpp"

namespace kavya {

// One aksara. Concatenating onset + nucleus + coda + trailing over all
// syllables of a pada reproduces the pada's phoneme sequence exactly
// (separators aside). `trailing` is non-empty only on the final syllable,
// for pada-final consonants that have no following vowel.
struct Syllable {
  std::string onset;       // consonant cluster before the nucleus
  char nucleus = 0;        // exactly one vowel
  char coda = 0;           // 'M', 'H', or 0
  std::string trailing;    // pada-final consonant cluster
  std::size_t begin = 0;   // [begin, end) into the canonical pada text
  std::size_t end = 0;

  std::string phonemes() const {
    std::string s = onset;
    s.push_back(nucleus);
    if (coda) s.push_back(coda);
    s += trailing;
    return s;
  }
};

// Splits a canonical pada into aksaras. Word separators (space, hyphen) are
// transparent: a consonant ending one word joins the onset of a following
// vowel-initial word. Syllable count equals vowel count.
//
// Empty or separator-only text yields an empty list. Text with consonants
// but no vowel raises NoVowelError; non-canonical bytes raise
// InvalidCharacterError.
std::vector<Syllable> syllabify(const std::string& pada_text);

struct Weight {
  char value = 'L';      // 'L' or 'G'
  bool anceps = false;   // pada-final position, matches either during comparison
};

// Laghu/guru assignment: a syllable is guru when its vowel is long, it
// carries anusvara or visarga, or the next syllable's onset has two or more
// consonants. Word boundaries are transparent. With `pada_final_anceps` the
// last syllable is flagged as metrically free.
std::vector<Weight> weigh(const std::vector<Syllable>& syllables,
                          bool pada_final_anceps = true);

// "LGLLLGG" rendering of natural weight values (anceps not marked).
std::string weight_string(const std::vector<Weight>& weights);

std::size_t vowel_count(const std::string& canonical_text);

}  // namespace kavya
