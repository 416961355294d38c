// kavya/meter.cpp

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

#include "kavya/meter.hpp"

#include <algorithm>
#include <fstream>
#include <map>
#include <set>
#include <sstream>

namespace kavya {

namespace {

const std::map<std::string, std::string>& gana_table() {
  static const std::map<std::string, std::string> t = {
      {"ma", "GGG"}, {"ya", "LGG"}, {"ra", "GLG"}, {"sa", "LLG"},
      {"ta", "GGL"}, {"ja", "LGL"}, {"bha", "GLL"}, {"na", "LLL"},
      {"la", "L"},   {"ga", "G"},
  };
  return t;
}

bool valid_weight_pattern(const std::string& p) {
  if (p.empty()) return false;
  for (char c : p)
    if (c != 'L' && c != 'G') return false;
  return true;
}

const std::set<std::string>& known_anustubh_variants() {
  static const std::set<std::string> v = {"pathya", "na-vipula", "bha-vipula",
                                          "ma-vipula", "ra-vipula"};
  return v;
}

std::string vipula_trio(const std::string& variant) {
  if (variant == "pathya") return "LGG";
  if (variant == "na-vipula") return "LLL";
  if (variant == "bha-vipula") return "GLL";
  if (variant == "ma-vipula") return "GGG";
  if (variant == "ra-vipula") return "GLG";
  return "";
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::string cur;
  for (char c : s) {
    if (c == sep) {
      out.push_back(cur);
      cur.clear();
    } else {
      cur.push_back(c);
    }
  }
  out.push_back(cur);
  return out;
}

std::string strip(const std::string& s) {
  std::size_t b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return "";
  std::size_t e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

// Levenshtein between a scanned pada and a prescribed pattern, with the
// scanned final position free when anceps applies. Returns the distance and
// appends the edit script for one optimal alignment.
int pada_distance(const std::string& obs, const std::string& pat,
                  bool final_anceps, int pada_pos,
                  std::vector<PadaMismatch>* script) {
  const std::size_t n = obs.size(), m = pat.size();
  auto match = [&](std::size_t oi, std::size_t pj) {
    if (obs[oi] == pat[pj]) return true;
    return final_anceps && oi + 1 == n;
  };
  std::vector<std::vector<int>> dp(n + 1, std::vector<int>(m + 1, 0));
  for (std::size_t i = 0; i <= n; ++i) dp[i][0] = static_cast<int>(i);
  for (std::size_t j = 0; j <= m; ++j) dp[0][j] = static_cast<int>(j);
  for (std::size_t i = 1; i <= n; ++i)
    for (std::size_t j = 1; j <= m; ++j)
      dp[i][j] = std::min({dp[i - 1][j - 1] + (match(i - 1, j - 1) ? 0 : 1),
                           dp[i - 1][j] + 1, dp[i][j - 1] + 1});
  if (script) {
    std::vector<PadaMismatch> rev;
    std::size_t i = n, j = m;
    while (i > 0 || j > 0) {
      if (i > 0 && j > 0 &&
          dp[i][j] == dp[i - 1][j - 1] + (match(i - 1, j - 1) ? 0 : 1)) {
        if (!match(i - 1, j - 1)) {
          PadaMismatch mm;
          mm.pada = pada_pos;
          mm.syllable = static_cast<int>(i - 1);
          mm.expected = pat[j - 1];
          mm.observed = obs[i - 1];
          mm.kind = EditKind::Substitute;
          rev.push_back(mm);
        }
        --i;
        --j;
      } else if (i > 0 && dp[i][j] == dp[i - 1][j] + 1) {
        PadaMismatch mm;
        mm.pada = pada_pos;
        mm.syllable = static_cast<int>(i - 1);
        mm.expected = '-';
        mm.observed = obs[i - 1];
        mm.kind = EditKind::Delete;
        rev.push_back(mm);
        --i;
      } else {
        PadaMismatch mm;
        mm.pada = pada_pos;
        mm.syllable = static_cast<int>(i);
        mm.expected = pat[j - 1];
        mm.observed = '-';
        mm.kind = EditKind::Insert;
        rev.push_back(mm);
        --j;
      }
    }
    script->insert(script->end(), rev.rbegin(), rev.rend());
  }
  return dp[n][m];
}

// Rule evaluation for the sloka: 8 syllables a pada, positions 2-3 never
// both light, syllables 5-7 LGL in even padas and LGG (or an enabled vipula
// trio) in odd padas. Distance counts violated positions.
int anustubh_distance(const std::string& obs, int pada_pos,
                      const std::vector<std::string>& variants,
                      std::vector<PadaMismatch>* script) {
  int d = 0;
  const std::size_t n = obs.size();
  if (n > 8) {
    d += static_cast<int>(n - 8);
    if (script)
      for (std::size_t i = 8; i < n; ++i) {
        PadaMismatch mm;
        mm.pada = pada_pos;
        mm.syllable = static_cast<int>(i);
        mm.expected = '-';
        mm.observed = obs[i];
        mm.kind = EditKind::Delete;
        script->push_back(mm);
      }
  } else if (n < 8) {
    d += static_cast<int>(8 - n);
    if (script) {
      PadaMismatch mm;
      mm.pada = pada_pos;
      mm.syllable = static_cast<int>(n);
      mm.expected = 'L';
      mm.observed = '-';
      mm.kind = EditKind::Insert;
      for (std::size_t k = n; k < 8; ++k) script->push_back(mm);
    }
  }
  if (n >= 3 && obs[1] == 'L' && obs[2] == 'L') {
    ++d;
    if (script) {
      PadaMismatch mm;
      mm.pada = pada_pos;
      mm.syllable = 1;
      mm.expected = 'G';
      mm.observed = 'L';
      mm.kind = EditKind::Substitute;
      script->push_back(mm);
    }
  }
  if (n >= 7) {
    const bool odd = (pada_pos % 2) == 1;
    std::vector<std::string> trios;
    if (odd) {
      std::vector<std::string> enabled = variants;
      if (enabled.empty()) enabled.push_back("pathya");
      for (const std::string& v : enabled) trios.push_back(vipula_trio(v));
    } else {
      trios.push_back("LGL");
    }
    int best = 3;
    std::string best_trio = trios.front();
    for (const std::string& trio : trios) {
      int h = 0;
      for (int k = 0; k < 3; ++k)
        if (obs[4 + k] != trio[k]) ++h;
      if (h < best) {
        best = h;
        best_trio = trio;
      }
    }
    d += best;
    if (script && best > 0)
      for (int k = 0; k < 3; ++k)
        if (obs[4 + k] != best_trio[k]) {
          PadaMismatch mm;
          mm.pada = pada_pos;
          mm.syllable = 4 + k;
          mm.expected = best_trio[k];
          mm.observed = obs[4 + k];
          mm.kind = EditKind::Substitute;
          script->push_back(mm);
        }
  }
  return d;
}

}  // namespace

std::string family_to_string(MeterFamily f) {
  switch (f) {
    case MeterFamily::Samavrtta: return "samavrtta";
    case MeterFamily::Ardhasamavrtta: return "ardhasamavrtta";
    case MeterFamily::Anustubh: return "anustubh-class";
    case MeterFamily::Upajati: return "upajati";
  }
  return "samavrtta";
}

std::string edit_kind_to_string(EditKind k) {
  switch (k) {
    case EditKind::Substitute: return "substitute";
    case EditKind::Insert: return "insert";
    case EditKind::Delete: return "delete";
  }
  return "substitute";
}

const std::string& MeterPattern::pattern_for_pada(int pos) const {
  static const std::string empty;
  if (pada_patterns.empty()) return empty;
  if (family == MeterFamily::Ardhasamavrtta)
    return pada_patterns[(pos % 2 == 1) ? 0 : 1];
  return pada_patterns[0];
}

std::size_t MeterPattern::syllable_count() const {
  if (pada_patterns.empty()) return 8;
  return pada_patterns[0].size();
}

const MeterPattern* MeterDb::find(const std::string& name) const {
  for (const MeterPattern& m : meters_)
    if (m.name == name) return &m;
  return nullptr;
}

void MeterDb::add(MeterPattern p) {
  if (find(p.name))
    throw MeterDbError(MeterDbError::Kind::DuplicateName,
                       "duplicate meter name: " + p.name);
  switch (p.family) {
    case MeterFamily::Samavrtta:
      if (p.pada_patterns.size() == 4 &&
          p.pada_patterns[0] == p.pada_patterns[1] &&
          p.pada_patterns[0] == p.pada_patterns[2] &&
          p.pada_patterns[0] == p.pada_patterns[3])
        p.pada_patterns.resize(1);
      if (p.pada_patterns.size() != 1)
        throw MeterDbError(MeterDbError::Kind::FamilyInvariantViolated,
                           p.name + ": samavrtta needs one pattern");
      break;
    case MeterFamily::Ardhasamavrtta:
    case MeterFamily::Upajati:
      if (p.pada_patterns.size() != 2)
        throw MeterDbError(MeterDbError::Kind::FamilyInvariantViolated,
                           p.name + ": family needs exactly two patterns");
      break;
    case MeterFamily::Anustubh:
      if (!p.pada_patterns.empty())
        throw MeterDbError(MeterDbError::Kind::FamilyInvariantViolated,
                           p.name + ": anustubh-class carries variants, not patterns");
      for (const std::string& v : p.anustubh_variants)
        if (!known_anustubh_variants().count(v))
          throw MeterDbError(MeterDbError::Kind::MalformedPattern,
                             p.name + ": unknown anustubh variant " + v);
      break;
  }
  for (const std::string& pat : p.pada_patterns)
    if (!valid_weight_pattern(pat))
      throw MeterDbError(MeterDbError::Kind::MalformedPattern,
                         p.name + ": pattern must be a non-empty L/G string");
  if (!p.gana_notation.empty() && !p.pada_patterns.empty()) {
    std::string expanded = expand_gana(p.gana_notation);
    if (expanded != p.pada_patterns[0])
      throw MeterDbError(MeterDbError::Kind::MalformedPattern,
                         p.name + ": gana notation does not expand to pattern");
  }
  meters_.push_back(std::move(p));
}

std::string expand_gana(const std::string& gana) {
  std::string out;
  for (const std::string& raw : split(gana, '-')) {
    std::string g = strip(raw);
    if (g.empty()) continue;
    auto it = gana_table().find(g);
    if (it == gana_table().end())
      throw MeterDbError(MeterDbError::Kind::MalformedPattern,
                         "unknown gana: " + g);
    out += it->second;
  }
  return out;
}

MeterDb load_meter_db(std::istream& in) {
  MeterDb db;
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    std::string t = strip(line);
    if (t.empty() || t[0] == '#') continue;
    std::vector<std::string> cols = split(t, '|');
    if (cols.size() != 5)
      throw MeterDbError(MeterDbError::Kind::MalformedPattern,
                         "line " + std::to_string(lineno) +
                             ": expected name|family|patterns|yati|gana");
    MeterPattern p;
    p.name = strip(cols[0]);
    std::string family = strip(cols[1]);
    if (family == "samavrtta") p.family = MeterFamily::Samavrtta;
    else if (family == "ardhasamavrtta") p.family = MeterFamily::Ardhasamavrtta;
    else if (family == "anustubh-class") p.family = MeterFamily::Anustubh;
    else if (family == "upajati") p.family = MeterFamily::Upajati;
    else
      throw MeterDbError(MeterDbError::Kind::MalformedPattern,
                         "line " + std::to_string(lineno) +
                             ": unknown family " + family);
    std::string patterns = strip(cols[2]);
    if (p.family == MeterFamily::Anustubh) {
      for (const std::string& v : split(patterns, '+'))
        if (!strip(v).empty()) p.anustubh_variants.push_back(strip(v));
    } else {
      for (const std::string& pat : split(patterns, ','))
        if (!strip(pat).empty()) p.pada_patterns.push_back(strip(pat));
    }
    std::string yati = strip(cols[3]);
    if (!yati.empty())
      for (const std::string& y : split(yati, ','))
        p.yati_positions.push_back(std::stoi(strip(y)));
    p.gana_notation = strip(cols[4]);
    db.add(std::move(p));
  }
  return db;
}

MeterDb load_meter_db_file(const std::string& path) {
  std::ifstream in(path);
  if (!in)
    throw MeterDbError(MeterDbError::Kind::Io,
                       "cannot open meter db: " + path);
  return load_meter_db(in);
}

ScanResult scan(const Stanza& stanza, bool pada_final_anceps) {
  ScanResult r;
  r.final_anceps = pada_final_anceps;
  for (const Pada& p : stanza.padas) {
    std::vector<Syllable> syl =
        p.syllables.empty() && !p.text.empty() ? syllabify(p.text) : p.syllables;
    r.pada_weights.push_back(weight_string(weigh(syl, pada_final_anceps)));
    r.syllable_counts.push_back(syl.size());
  }
  return r;
}

std::vector<MeterMatch> identify(const ScanResult& scan_result,
                                 const MeterDb& db, int budget_per_pada) {
  if (db.empty()) throw EmptyDatabaseError("meter database is empty");
  std::vector<MeterMatch> out;
  if (scan_result.pada_weights.empty()) return out;

  for (const MeterPattern& meter : db.meters()) {
    MeterMatch match;
    match.meter = meter.name;
    bool within = true;
    bool upajati_first = false, upajati_second = false;

    for (std::size_t i = 0; i < scan_result.pada_weights.size() && within; ++i) {
      const std::string& obs = scan_result.pada_weights[i];
      const int pos = static_cast<int>(i) + 1;
      int d = 0;
      std::vector<PadaMismatch> script;
      switch (meter.family) {
        case MeterFamily::Samavrtta:
        case MeterFamily::Ardhasamavrtta:
          d = pada_distance(obs, meter.pattern_for_pada(pos),
                            scan_result.final_anceps, pos, &script);
          break;
        case MeterFamily::Anustubh:
          d = anustubh_distance(obs, pos, meter.anustubh_variants, &script);
          break;
        case MeterFamily::Upajati: {
          std::vector<PadaMismatch> s0, s1;
          int d0 = pada_distance(obs, meter.pada_patterns[0],
                                 scan_result.final_anceps, pos, &s0);
          int d1 = pada_distance(obs, meter.pada_patterns[1],
                                 scan_result.final_anceps, pos, &s1);
          if (d0 <= d1) upajati_first = true;
          if (d1 <= d0) upajati_second = true;
          d = std::min(d0, d1);
          script = (d0 <= d1) ? s0 : s1;
          break;
        }
      }
      if (d > budget_per_pada) {
        within = false;
        break;
      }
      match.distance += d;
      match.mismatches.insert(match.mismatches.end(), script.begin(),
                              script.end());
    }
    if (!within) continue;
    // A mixture meter only applies when both components actually occur.
    if (meter.family == MeterFamily::Upajati &&
        !(upajati_first && upajati_second))
      continue;
    match.kind = match.distance == 0 ? MatchKind::Exact : MatchKind::Fuzzy;
    out.push_back(std::move(match));
  }

  std::sort(out.begin(), out.end(), [](const MeterMatch& a, const MeterMatch& b) {
    if (a.distance != b.distance) return a.distance < b.distance;
    return a.meter < b.meter;
  });
  return out;
}

std::vector<Suggestion> suggest_corrections(const Stanza& stanza,
                                            const MeterMatch& match) {
  if (match.kind == MatchKind::Exact)
    throw NotFuzzyError("match is exact, nothing to correct");
  std::vector<Suggestion> out;
  for (const PadaMismatch& mm : match.mismatches) {
    Suggestion s;
    s.pada = mm.pada;
    s.syllable = mm.syllable;
    s.expected = mm.expected;
    s.observed = mm.observed;
    s.kind = mm.kind;
    const Pada& pada = stanza.padas.at(static_cast<std::size_t>(mm.pada - 1));
    const auto& syl = pada.syllables;
    if (!syl.empty()) {
      std::size_t idx = static_cast<std::size_t>(
          std::min<int>(mm.syllable, static_cast<int>(syl.size()) - 1));
      s.begin = syl[idx].begin;
      s.end = syl[idx].end;
    }
    switch (mm.kind) {
      case EditKind::Substitute:
        s.note = mm.expected == 'G' ? "lengthen vowel" : "shorten vowel";
        break;
      case EditKind::Delete:
        s.note = "extra syllable";
        break;
      case EditKind::Insert:
        s.note = "missing syllable";
        break;
    }
    out.push_back(std::move(s));
  }
  return out;
}

}  // namespace kavya
