// kavya/style.cpp

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

#include "kavya/style.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace kavya {

namespace {

double clamp01(double x) { return std::max(0.0, std::min(1.0, x)); }

// Oja cluster rules: a 1st-position stop followed by a 2nd, a 3rd followed
// by a 4th, any cluster containing r, and geminates.
void count_cluster(const std::string& cluster, GunaProfile& p) {
  bool has_r = false;
  for (std::size_t i = 0; i < cluster.size(); ++i) {
    if (cluster[i] == 'r') has_r = true;
    if (i + 1 < cluster.size()) {
      const Phoneme& a = phoneme(cluster[i]);
      const Phoneme& b = phoneme(cluster[i + 1]);
      if (a.consonant_class == ConsonantClass::Sparsa &&
          b.consonant_class == ConsonantClass::Sparsa) {
        if (a.varga_position == 1 && b.varga_position == 2)
          ++p.evidence["oja.cluster_1_2"];
        if (a.varga_position == 3 && b.varga_position == 4)
          ++p.evidence["oja.cluster_3_4"];
      }
      if (cluster[i] == cluster[i + 1]) ++p.evidence["oja.geminate"];
    }
  }
  if (has_r && cluster.size() >= 2) ++p.evidence["oja.cluster_with_r"];
}

std::string fmt(double x) {
  std::ostringstream os;
  os.precision(3);
  os << x;
  return os.str();
}

}  // namespace

std::string guna_to_string(Guna g) {
  switch (g) {
    case Guna::Madhurya: return "madhurya";
    case Guna::Oja: return "oja";
    case Guna::Prasada: return "prasada";
  }
  return "prasada";
}

std::string riti_to_string(Riti r) {
  switch (r) {
    case Riti::Vaidarbhi: return "vaidarbhi";
    case Riti::Gaudi: return "gaudi";
    case Riti::Pancali: return "pancali";
  }
  return "pancali";
}

GunaProfile guna_profile(const Composition& comp,
                         const std::vector<CompoundAnnotation>& compounds,
                         const StyleConfig& config) {
  GunaProfile p;
  std::size_t conjunct_onsets = 0;
  std::size_t madhurya_tokens = 0;
  std::size_t oja_occurrences = 0;

  for (const Stanza& st : comp.stanzas) {
    for (const Pada& pada : st.padas) {
      for (std::size_t i = 0; i < pada.syllables.size(); ++i) {
        const Syllable& syl = pada.syllables[i];
        ++p.syllable_count;
        if (syl.onset.size() >= 2) ++conjunct_onsets;

        for (char c : syl.onset + syl.trailing) {
          ++p.consonant_count;
          if (is_soft_stop(c)) {
            ++p.evidence["madhurya.soft_stops"];
          } else if (is_nasal(c)) {
            ++p.evidence["madhurya.nasals"];
          }
          if (is_ta_class(c)) ++p.evidence["oja.ta_class"];
          if (c == 'S' || c == 'z') ++p.evidence["oja.fricative_s_sh"];
        }
        // r and n-retroflex soften only as bare onsets before a short vowel.
        if (syl.onset.size() == 1 &&
            (syl.onset[0] == 'r' || syl.onset[0] == 'R') &&
            is_canonical_vowel(syl.nucleus) && !is_long_vowel(syl.nucleus))
          ++p.evidence["madhurya.r_n_short_vowel"];

        if (syl.onset.size() >= 2) count_cluster(syl.onset, p);
        if (syl.trailing.size() >= 2) count_cluster(syl.trailing, p);
      }
    }
  }

  madhurya_tokens = p.evidence["madhurya.soft_stops"] +
                    p.evidence["madhurya.nasals"] +
                    p.evidence["madhurya.r_n_short_vowel"];
  oja_occurrences = p.evidence["oja.cluster_1_2"] + p.evidence["oja.cluster_3_4"] +
                    p.evidence["oja.cluster_with_r"] + p.evidence["oja.geminate"] +
                    p.evidence["oja.ta_class"] + p.evidence["oja.fricative_s_sh"];
  // Drop untouched zero entries so evidence lists only counted rules.
  for (auto it = p.evidence.begin(); it != p.evidence.end();)
    it = it->second == 0 ? p.evidence.erase(it) : std::next(it);

  p.conjunct_density =
      p.syllable_count ? static_cast<double>(conjunct_onsets) / p.syllable_count
                       : 0.0;

  std::size_t long_compounds = 0;
  for (const CompoundAnnotation& c : compounds)
    if (static_cast<int>(c.constituents.size()) > config.long_compound_len)
      ++long_compounds;
  p.long_compound_fraction =
      compounds.empty()
          ? 0.0
          : static_cast<double>(long_compounds) / compounds.size();

  double soft_fraction =
      p.consonant_count
          ? static_cast<double>(madhurya_tokens) / p.consonant_count
          : 0.0;
  p.madhurya_score = clamp01(soft_fraction * (1.0 - clamp01(p.conjunct_density)));

  double oja_per_syllable =
      p.syllable_count
          ? static_cast<double>(oja_occurrences) / p.syllable_count
          : 0.0;
  double blend = clamp01(config.oja_compound_blend);
  p.oja_score = clamp01((1.0 - blend) * clamp01(oja_per_syllable) +
                        blend * clamp01(p.long_compound_fraction));
  return p;
}

RitiVerdict classify_riti(const GunaProfile& p, const StyleConfig& config) {
  RitiVerdict v;
  if (p.madhurya_score >= p.oja_score && p.madhurya_score > 0.0)
    v.dominant_guna = Guna::Madhurya;
  else if (p.oja_score > p.madhurya_score)
    v.dominant_guna = Guna::Oja;
  else
    v.dominant_guna = Guna::Prasada;

  const bool few_conjuncts = p.conjunct_density <= config.tau_conj;
  const bool few_long_compounds = p.long_compound_fraction <= config.tau_comp;
  const bool madhurya_dominant =
      p.madhurya_score >= p.oja_score && p.madhurya_score > 0.0;
  const bool oja_dominant = p.oja_score > p.madhurya_score;

  if (few_conjuncts && few_long_compounds && madhurya_dominant) {
    v.riti = Riti::Vaidarbhi;
    v.rationale.push_back({"conjunct_density<=tau_conj",
                           fmt(p.conjunct_density) + " <= " + fmt(config.tau_conj)});
    v.rationale.push_back(
        {"long_compound_fraction<=tau_comp",
         fmt(p.long_compound_fraction) + " <= " + fmt(config.tau_comp)});
    v.rationale.push_back({"madhurya>=oja", fmt(p.madhurya_score) + " >= " +
                                                fmt(p.oja_score)});
  } else if (oja_dominant && (!few_long_compounds || !few_conjuncts)) {
    v.riti = Riti::Gaudi;
    v.rationale.push_back(
        {"oja>madhurya", fmt(p.oja_score) + " > " + fmt(p.madhurya_score)});
    if (!few_long_compounds)
      v.rationale.push_back(
          {"long_compound_fraction>tau_comp",
           fmt(p.long_compound_fraction) + " > " + fmt(config.tau_comp)});
    if (!few_conjuncts)
      v.rationale.push_back({"conjunct_density>tau_conj",
                             fmt(p.conjunct_density) + " > " +
                                 fmt(config.tau_conj)});
  } else {
    v.riti = Riti::Pancali;
    v.rationale.push_back(
        {"residual", "neither the vaidarbhi nor the gaudi rule fires"});
  }
  return v;
}

}  // namespace kavya
