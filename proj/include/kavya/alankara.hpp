// kavya/alankara.hpp

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

#include <optional>
#include <string>
#include <vector>

#include "kavya/annotations.hpp"
#include "kavya/text.hpp"

namespace kavya {

// Sound figures are detected from phonology; meaning figures arrive as
// validated annotations. `provenance` records which route produced a finding.

enum class AlankaraCategory { Sabda, Artha };
enum class Provenance { Detected, Annotated };

struct SabdaOccurrence {
  int pada = 1;        // 1-based
  int syllable = 0;    // 0-based syllable carrying the consonant
  std::string word;    // canonical token the occurrence falls in, if any
};

struct AlankaraFinding {
  AlankaraCategory category = AlankaraCategory::Sabda;
  std::string name;   // varnanuprasa | antyanuprasa | artha vocabulary item
  std::string label;  // free name for artha entries of kind "other"
  Provenance provenance = Provenance::Detected;
  Span span;
  // Sound evidence: the repeated phoneme (class-normalized) or shared
  // suffix, plus where it occurs / who participates.
  std::string phoneme_or_suffix;
  std::vector<SabdaOccurrence> occurrences;     // varnanuprasa
  std::vector<std::string> participating_words; // antyanuprasa
  std::string note;
};

// Alliteration: one finding per class-normalized consonant (n/R merged,
// sibilants kept distinct) that occurs at least `min_count` times inside a
// single pada. Anusvara and visarga are not consonants and never count.
// Findings come out sorted by (pada, phoneme).
std::vector<AlankaraFinding> detect_varnanuprasa(const Stanza& stanza,
                                                 int min_count = 3);

// End rhyme: the longest class-normalized phoneme suffix (n/R merged, final
// anusvara read as m) shared by at least `min_words` of the given words,
// provided it reaches `min_suffix` phonemes. Ties prefer more participants,
// then the lexicographically smaller suffix.
std::optional<AlankaraFinding> detect_antyanuprasa(
    const std::vector<std::string>& words, int min_words = 3,
    int min_suffix = 2);

struct ArthaValidationError {
  enum class Kind { UnknownAlankara, DanglingSpan, DuplicateEntry };
  Kind kind;
  std::string where;
  std::string message;
};

struct ArthaValidation {
  std::vector<AlankaraFinding> findings;
  std::vector<ArthaValidationError> errors;
  bool ok() const { return errors.empty(); }
};

// Normalizes raw artha entries into findings: names must sit in the
// controlled vocabulary (or be explicit "other" entries), spans must resolve
// against the composition, and exact duplicates are rejected.
ArthaValidation validate_artha_annotations(const std::vector<ArthaEntry>& entries,
                                           const Composition& comp);

}  // namespace kavya
