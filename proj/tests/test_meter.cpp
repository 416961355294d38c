// Unit tests for the meter database, identification and corrections.

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdlib>
#include <functional>
#include <map>
#include <sstream>

#include "kavya/meter.hpp"

using namespace kavya;

namespace {

std::string data_dir() {
  const char* env = std::getenv("KAVYA_DATA_DIR");
  return env ? env : "data";
}

MeterDb load_db() { return load_meter_db_file(data_dir() + "/meters.db"); }

Composition load_fixture() {
  return load_composition_file(data_dir() + "/shikshastaka.txt");
}

// Independent brute-force edit distance with the same anceps convention,
// written as plain memoized recursion to cross-check the production DP.
int oracle_distance(const std::string& obs, const std::string& pat,
                    bool final_anceps) {
  std::map<std::pair<int, int>, int> memo;
  std::function<int(int, int)> go = [&](int i, int j) -> int {
    if (i == 0) return j;
    if (j == 0) return i;
    auto key = std::make_pair(i, j);
    if (auto it = memo.find(key); it != memo.end()) return it->second;
    bool eq = obs[i - 1] == pat[j - 1] ||
              (final_anceps && i == static_cast<int>(obs.size()));
    int best = go(i - 1, j - 1) + (eq ? 0 : 1);
    best = std::min(best, go(i - 1, j) + 1);
    best = std::min(best, go(i, j - 1) + 1);
    memo[key] = best;
    return best;
  };
  return go(static_cast<int>(obs.size()), static_cast<int>(pat.size()));
}

int production_pada_distance(const std::string& obs, const MeterPattern& m,
                             int pos, bool final_anceps) {
  ScanResult sc;
  sc.final_anceps = final_anceps;
  // Wrap a single pada at the requested position by padding with exact padas.
  // Simpler: measure via identify on a db with just this meter is awkward for
  // one pada, so recompute through a 1-pada scan only for position 1.
  (void)pos;
  sc.pada_weights = {obs};
  sc.syllable_counts = {obs.size()};
  MeterDb db;
  db.add(m);
  auto matches = identify(sc, db, 1000);
  REQUIRE(matches.size() == 1);
  return matches[0].distance;
}

}  // namespace

TEST_CASE("meter db loads with gana cross-validation") {
  MeterDb db = load_db();
  CHECK(db.meters().size() == 30);
  const MeterPattern* sv = db.find("śārdūlavikrīḍita");
  REQUIRE(sv != nullptr);
  CHECK(sv->family == MeterFamily::Samavrtta);
  CHECK(sv->pada_patterns[0] == "GGGLLGLGLLLGGGLGGLG");
  CHECK(sv->pada_patterns[0].size() == 19);
  CHECK(sv->yati_positions == std::vector<int>{12});
  const MeterPattern* vt = db.find("vasantatilakā");
  REQUIRE(vt != nullptr);
  CHECK(vt->pada_patterns[0] == "GGLGLLLGLLGLGG");
  CHECK(vt->pada_patterns[0].size() == 14);
}

TEST_CASE("malformed patterns are rejected") {
  std::istringstream bad("x|samavrtta|LGX||\n");
  CHECK_THROWS_AS(load_meter_db(bad), MeterDbError);
  std::istringstream dup("a|samavrtta|LG||\na|samavrtta|GL||\n");
  CHECK_THROWS_AS(load_meter_db(dup), MeterDbError);
  std::istringstream fam("a|ardhasamavrtta|LG||\n");
  CHECK_THROWS_AS(load_meter_db(fam), MeterDbError);
  std::istringstream gana("a|samavrtta|LG||ma\n");
  CHECK_THROWS_AS(load_meter_db(gana), MeterDbError);
}

TEST_CASE("gana expansion") {
  CHECK(expand_gana("ma-sa-ja-sa-ta-ta-ga") == "GGGLLGLGLLLGGGLGGLG");
  CHECK(expand_gana("ta-bha-ja-ja-ga-ga") == "GGLGLLLGLLGLGG");
  CHECK(expand_gana("sa-sa-ja-ga") == "LLGLLGLGLG");
  CHECK_THROWS_AS(expand_gana("zz"), MeterDbError);
}

TEST_CASE("scan of fixture stanza 1") {
  Composition c = load_fixture();
  REQUIRE(c.stanzas.size() == 8);
  ScanResult sc = scan(c.stanzas[0]);
  REQUIRE(sc.pada_weights.size() == 4);
  for (const std::string& w : sc.pada_weights)
    CHECK(w.size() == 19);
  CHECK(sc.pada_weights[0] == "GGGLLGLGLLLGGGLGGLG");
  CHECK(sc.pada_weights[2] == "GGGLLGLGLLLGGGLGGLG");
}

TEST_CASE("scan of empty stanza is empty") {
  Stanza st;
  CHECK(scan(st).pada_weights.empty());
}

TEST_CASE("stanza 7 padas have 8 syllables") {
  Composition c = load_fixture();
  ScanResult sc = scan(c.stanzas[6]);
  for (std::size_t n : sc.syllable_counts) CHECK(n == 8);
}

TEST_CASE("fixture stanzas identify the five meters exactly") {
  Composition c = load_fixture();
  MeterDb db = load_db();
  const char* expected[8] = {
      "śārdūlavikrīḍita", "vasantatilakā", "anuṣṭubh", "viyoginī",
      "viyoginī",          "viyoginī",      "anuṣṭubh", "upajāti"};
  for (int i = 0; i < 8; ++i) {
    auto matches = identify(scan(c.stanzas[i]), db);
    REQUIRE_MESSAGE(!matches.empty(), "stanza " << i + 1);
    CHECK_MESSAGE(matches[0].meter == expected[i], "stanza " << i + 1);
    CHECK_MESSAGE(matches[0].distance == 0, "stanza " << i + 1);
    CHECK(matches[0].kind == MatchKind::Exact);
  }
}

TEST_CASE("synthesized viyogini stanza matches exactly") {
  ScanResult sc;
  sc.pada_weights = {"LLGLLGLGLG", "LLGGLLGLGLG", "LLGLLGLGLG",
                     "LLGGLLGLGLG"};
  sc.syllable_counts = {10, 11, 10, 11};
  auto matches = identify(sc, load_db());
  REQUIRE(!matches.empty());
  CHECK(matches[0].meter == "viyoginī");
  CHECK(matches[0].kind == MatchKind::Exact);
  CHECK(matches[0].distance == 0);
}

TEST_CASE("synthetic recovery over the whole db") {
  MeterDb db = load_db();
  for (const MeterPattern& m : db.meters()) {
    ScanResult sc;
    switch (m.family) {
      case MeterFamily::Samavrtta:
        sc.pada_weights.assign(4, m.pada_patterns[0]);
        break;
      case MeterFamily::Ardhasamavrtta:
        sc.pada_weights = {m.pada_patterns[0], m.pada_patterns[1],
                           m.pada_patterns[0], m.pada_patterns[1]};
        break;
      case MeterFamily::Upajati:
        sc.pada_weights = {m.pada_patterns[0], m.pada_patterns[1],
                           m.pada_patterns[0], m.pada_patterns[1]};
        break;
      case MeterFamily::Anustubh:
        sc.pada_weights = {"GGLLLGGG", "GGLLLGLG", "GGLLLGGG", "GGLLLGLG"};
        break;
    }
    for (const std::string& w : sc.pada_weights)
      sc.syllable_counts.push_back(w.size());
    auto matches = identify(sc, db);
    REQUIRE_MESSAGE(!matches.empty(), m.name);
    CHECK_MESSAGE(matches[0].meter == m.name, m.name);
    CHECK_MESSAGE(matches[0].distance == 0, m.name);
  }
}

TEST_CASE("single weight corruption yields a distance-1 fuzzy match") {
  MeterDb db = load_db();
  for (const MeterPattern& m : db.meters()) {
    if (m.family != MeterFamily::Samavrtta) continue;
    ScanResult sc;
    sc.pada_weights.assign(4, m.pada_patterns[0]);
    for (const std::string& w : sc.pada_weights)
      sc.syllable_counts.push_back(w.size());
    // Flip a non-final syllable of pada 2 (the final is anceps-free).
    std::size_t flip = m.pada_patterns[0].size() / 2;
    if (flip + 1 >= m.pada_patterns[0].size()) flip = 0;
    sc.pada_weights[1][flip] = sc.pada_weights[1][flip] == 'L' ? 'G' : 'L';
    auto matches = identify(sc, db);
    REQUIRE_MESSAGE(!matches.empty(), m.name);
    bool found = false;
    for (const auto& match : matches)
      if (match.meter == m.name) {
        found = true;
        CHECK(match.kind == MatchKind::Fuzzy);
        CHECK(match.distance == 1);
        REQUIRE(match.mismatches.size() == 1);
        CHECK(match.mismatches[0].pada == 2);
        CHECK(match.mismatches[0].syllable == static_cast<int>(flip));
      }
    CHECK_MESSAGE(found, m.name);
  }
}

TEST_CASE("edit distance agrees with a brute-force oracle") {
  Composition c = load_fixture();
  MeterDb db = load_db();
  for (const Stanza& st : c.stanzas) {
    ScanResult sc = scan(st);
    for (const MeterPattern& m : db.meters()) {
      if (m.family == MeterFamily::Anustubh) continue;
      for (std::size_t i = 0; i < sc.pada_weights.size(); ++i) {
        const int pos = static_cast<int>(i) + 1;
        int expected;
        if (m.family == MeterFamily::Upajati)
          expected = std::min(
              oracle_distance(sc.pada_weights[i], m.pada_patterns[0], true),
              oracle_distance(sc.pada_weights[i], m.pada_patterns[1], true));
        else
          expected =
              oracle_distance(sc.pada_weights[i], m.pattern_for_pada(pos), true);
        // Reproduce through the public api on a single-pada scan. Odd/even
        // alternation only matters for ardhasamavrtta, where pada 1 uses the
        // odd pattern; compare against that pattern directly instead.
        if (m.family == MeterFamily::Ardhasamavrtta && pos % 2 == 0) continue;
        int got;
        if (m.family == MeterFamily::Upajati) {
          // identify() rejects single-sided mixtures; measure both sides.
          MeterPattern a = m;
          a.family = MeterFamily::Samavrtta;
          a.pada_patterns = {m.pada_patterns[0]};
          a.name = "a";
          MeterPattern b = m;
          b.family = MeterFamily::Samavrtta;
          b.pada_patterns = {m.pada_patterns[1]};
          b.name = "b";
          got = std::min(production_pada_distance(sc.pada_weights[i], a, 1, true),
                         production_pada_distance(sc.pada_weights[i], b, 1, true));
        } else {
          got = production_pada_distance(sc.pada_weights[i], m, pos, true);
        }
        CHECK_MESSAGE(got == expected,
                      m.name << " stanza " << st.index << " pada " << pos);
      }
    }
  }
}

TEST_CASE("tanuja corruption localizes to the corrupted syllable") {
  Composition c = load_fixture();
  MeterDb db = load_db();
  // Corrupt stanza 5 pada 1: tanūja -> tanuja (shorten the ū).
  Stanza st = c.stanzas[4];
  std::string corrupted = st.raw_text[0];
  std::size_t at = corrupted.find("tanūja");
  REQUIRE(at != std::string::npos);
  corrupted.replace(at, std::string("tanūja").size(), "tanuja");
  st.padas[0].text = normalize_pada(corrupted, Scheme::Iast);
  st.padas[0].syllables = syllabify(st.padas[0].text);

  auto matches = identify(scan(st), db);
  REQUIRE(!matches.empty());
  CHECK(matches[0].meter == "viyoginī");
  CHECK(matches[0].kind == MatchKind::Fuzzy);
  CHECK(matches[0].distance == 1);
  REQUIRE(matches[0].mismatches.size() == 1);
  CHECK(matches[0].mismatches[0].pada == 1);
  CHECK(matches[0].mismatches[0].syllable == 5);  // the "nu" of tanuja
  CHECK(matches[0].mismatches[0].expected == 'G');

  auto fixes = suggest_corrections(st, matches[0]);
  REQUIRE(fixes.size() == 1);
  CHECK(fixes[0].note == "lengthen vowel");
  // The span must sit inside "tanuja" in the canonical pada text.
  std::size_t word = st.padas[0].text.find("tanuja");
  REQUIRE(word != std::string::npos);
  CHECK(fixes[0].begin >= word);
  CHECK(fixes[0].end <= word + 6);
}

TEST_CASE("suggest_corrections rejects exact matches") {
  Composition c = load_fixture();
  MeterDb db = load_db();
  auto matches = identify(scan(c.stanzas[0]), db);
  REQUIRE(!matches.empty());
  REQUIRE(matches[0].kind == MatchKind::Exact);
  CHECK_THROWS_AS(suggest_corrections(c.stanzas[0], matches[0]), NotFuzzyError);
}

TEST_CASE("gadagada corruption is caught as a syllable-count edit") {
  Composition c = load_fixture();
  MeterDb db = load_db();
  Stanza st = c.stanzas[5];
  std::string corrupted = st.raw_text[1];
  std::size_t at = corrupted.find("gadgada");
  REQUIRE(at != std::string::npos);
  corrupted.replace(at, 7, "gadagada");
  st.padas[1].text = normalize_pada(corrupted, Scheme::Iast);
  st.padas[1].syllables = syllabify(st.padas[1].text);

  auto matches = identify(scan(st), db);
  REQUIRE(!matches.empty());
  CHECK(matches[0].meter == "viyoginī");
  CHECK(matches[0].kind == MatchKind::Fuzzy);
  bool has_delete = false;
  for (const auto& mm : matches[0].mismatches)
    if (mm.kind == EditKind::Delete) has_delete = true;
  CHECK(has_delete);
  // All edits localize inside the corrupted word.
  std::size_t word = st.padas[1].text.find("gadagada");
  REQUIRE(word != std::string::npos);
  for (const auto& fix : suggest_corrections(st, matches[0])) {
    CHECK(fix.begin >= word);
    CHECK(fix.end <= word + 8);
  }
}

TEST_CASE("identify is deterministic and ranked") {
  Composition c = load_fixture();
  MeterDb db = load_db();
  auto a = identify(scan(c.stanzas[3]), db);
  auto b = identify(scan(c.stanzas[3]), db);
  REQUIRE(a.size() == b.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    CHECK(a[i].meter == b[i].meter);
    CHECK(a[i].distance == b[i].distance);
    if (i + 1 < a.size()) {
      CHECK(a[i].distance <= a[i + 1].distance);
      if (a[i].distance == a[i + 1].distance)
        CHECK(a[i].meter < a[i + 1].meter);
    }
  }
}

TEST_CASE("empty database raises") {
  MeterDb db;
  ScanResult sc;
  sc.pada_weights = {"LG"};
  sc.syllable_counts = {2};
  CHECK_THROWS_AS(identify(sc, db), EmptyDatabaseError);
}
