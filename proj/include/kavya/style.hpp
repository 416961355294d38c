// kavya/style.hpp

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

#include <map>
#include <string>
#include <vector>

#include "kavya/annotations.hpp"
#include "kavya/text.hpp"

namespace kavya {

// Thresholds are calibration constants, not canonical values; tune per
// corpus. A compound is "long" when it has more than long_compound_len
// constituents.
struct StyleConfig {
  int long_compound_len = 3;
  double tau_conj = 0.25;  // conjunct onsets per syllable
  double tau_comp = 0.2;   // long-compound fraction
  // Blend between conjunct evidence and compound evidence in the oja score.
  double oja_compound_blend = 0.5;
};

enum class Guna { Madhurya, Oja, Prasada };
enum class Riti { Vaidarbhi, Gaudi, Pancali };

std::string guna_to_string(Guna g);
std::string riti_to_string(Riti r);

// Phonological and compound evidence for the three compressed gunas.
// prasada has no phonetic counter: it is taken as present everywhere.
struct GunaProfile {
  double madhurya_score = 0.0;        // in [0, 1]
  double oja_score = 0.0;             // in [0, 1]
  double conjunct_density = 0.0;      // conjunct onsets per syllable
  double long_compound_fraction = 0.0;
  std::size_t syllable_count = 0;
  std::size_t consonant_count = 0;
  // Counted occurrences per rule, e.g. "madhurya.soft_stops",
  // "oja.cluster_with_r". Every counted token lands in exactly one entry.
  std::map<std::string, std::size_t> evidence;
};

struct TriggeredRule {
  std::string rule;
  std::string detail;
};

struct RitiVerdict {
  Riti riti = Riti::Pancali;
  Guna dominant_guna = Guna::Prasada;
  std::vector<TriggeredRule> rationale;  // never empty
};

// Counts guna evidence over the whole composition. Compound annotations may
// be empty, which leaves the compound terms neutral (zero).
GunaProfile guna_profile(const Composition& comp,
                         const std::vector<CompoundAnnotation>& compounds,
                         const StyleConfig& config = {});

// vaidarbhi: few conjuncts, few long compounds, madhurya evidence dominant.
// gaudi: oja dominant with heavy conjuncts or long compounds.
// pancali: everything else (plain construction).
RitiVerdict classify_riti(const GunaProfile& profile,
                          const StyleConfig& config = {});

}  // namespace kavya
