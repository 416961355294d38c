// kavya/meter.hpp

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

#include "kavya/text.hpp"

namespace kavya {

enum class MeterFamily {
  Samavrtta,       // all four padas share one pattern
  Ardhasamavrtta,  // odd/even pada patterns
  Anustubh,        // rule-based sloka
  Upajati          // mixture of two component patterns
};

std::string family_to_string(MeterFamily f);

struct MeterPattern {
  std::string name;
  MeterFamily family = MeterFamily::Samavrtta;
  // Samavrtta: one pattern. Ardhasamavrtta: {odd, even}. Upajati: the two
  // component patterns, each matched per pada.
  std::vector<std::string> pada_patterns;
  // Anustubh only: enabled variants out of {pathya, na-vipula, bha-vipula,
  // ma-vipula, ra-vipula}.
  std::vector<std::string> anustubh_variants;
  std::vector<int> yati_positions;
  std::string gana_notation;

  // Prescribed pattern for pada `pos` (1-based); empty for rule families.
  const std::string& pattern_for_pada(int pos) const;
  std::size_t syllable_count() const;
};

class MeterDb {
 public:
  const std::vector<MeterPattern>& meters() const { return meters_; }
  const MeterPattern* find(const std::string& name) const;
  void add(MeterPattern pattern);  // validates; throws MeterDbError
  bool empty() const { return meters_.empty(); }

 private:
  std::vector<MeterPattern> meters_;
};

// Line format, one meter per line, `#` comments:
//   name|family|patterns|yati|gana
// family: samavrtta | ardhasamavrtta | anustubh-class | upajati
// patterns: comma-separated L/G strings (anustubh-class instead lists
//           variants joined by '+', e.g. pathya+ra-vipula)
// yati: comma-separated syllable indices, may be empty
// gana: ma/ya/ra/sa/ta/ja/bha/na trios plus la/ga, hyphen-separated; when
//       present it must expand to the first pattern
MeterDb load_meter_db(std::istream& in);
MeterDb load_meter_db_file(const std::string& path);

// "ma-sa-ja-sa-ta-ta-ga" -> "GGGLLGLGLLLGGGLGGLG"
std::string expand_gana(const std::string& gana);

struct ScanResult {
  std::vector<std::string> pada_weights;  // natural values, 'L'/'G'
  std::vector<std::size_t> syllable_counts;
  bool final_anceps = true;
};

// Deterministic composition of syllabify + weigh over each pada.
ScanResult scan(const Stanza& stanza, bool pada_final_anceps = true);

enum class EditKind { Substitute, Insert, Delete };

std::string edit_kind_to_string(EditKind k);

// One weight-level disagreement between a scanned pada and a pattern.
// `syllable` is the 0-based index into the scanned pada (for Insert, the
// position where a syllable is missing). Absent sides are '-'.
struct PadaMismatch {
  int pada = 1;  // 1-based
  int syllable = 0;
  char expected = '-';
  char observed = '-';
  EditKind kind = EditKind::Substitute;
};

enum class MatchKind { Exact, Fuzzy };

struct MeterMatch {
  std::string meter;
  MatchKind kind = MatchKind::Exact;
  int distance = 0;  // total over all padas
  std::vector<PadaMismatch> mismatches;
};

// All meters whose per-pada distance stays within `budget_per_pada`, ranked
// by (distance ascending, name ascending); exact matches therefore lead.
// Throws EmptyDatabaseError on an empty db. An empty scan yields no matches.
std::vector<MeterMatch> identify(const ScanResult& scan_result, const MeterDb& db,
                                 int budget_per_pada = 2);

// A weight-level repair hint mapped back to character offsets.
struct Suggestion {
  int pada = 1;
  int syllable = 0;
  std::size_t begin = 0;  // span in the pada's canonical text
  std::size_t end = 0;
  char expected = '-';
  char observed = '-';
  EditKind kind = EditKind::Substitute;
  std::string note;  // e.g. "lengthen vowel"
};

// One suggestion per mismatch of a fuzzy match. Throws NotFuzzyError when
// the match is exact.
std::vector<Suggestion> suggest_corrections(const Stanza& stanza,
                                            const MeterMatch& match);

}  // namespace kavya
