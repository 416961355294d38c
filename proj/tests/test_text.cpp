// Unit tests for transliteration, syllabification and weighing.

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>
#include <sstream>

#include "kavya/syllable.hpp"
#include "kavya/text.hpp"
#include "kavya/translit.hpp"

using namespace kavya;

TEST_CASE("iast round trip identity") {
  const std::string text = "tṛṇād api";  // tṛṇād api
  std::string canonical = transliterate(text, Scheme::Iast, Scheme::Slp1);
  CHECK(canonical == "tfRAd api");
  CHECK(transliterate(canonical, Scheme::Slp1, Scheme::Iast) == text);
}

TEST_CASE("iast to devanagari") {
  // śrī-kṛṣṇa
  const std::string iast = "śrī-kṛṣṇa";
  const std::string deva = transliterate(iast, Scheme::Iast, Scheme::Devanagari);
  CHECK(deva ==
        "श्री-कृष्ण");  // श्री-कृष्ण
  CHECK(transliterate(deva, Scheme::Devanagari, Scheme::Iast) == iast);
}

TEST_CASE("empty input") {
  CHECK(transliterate("", Scheme::Iast, Scheme::Devanagari) == "");
}

TEST_CASE("anusvara aliases decode identically") {
  CHECK(transliterate("paraṃ", Scheme::Iast, Scheme::Slp1) == "paraM");
  CHECK(transliterate("paraṁ", Scheme::Iast, Scheme::Slp1) == "paraM");
  // Output always uses the dot-below form.
  CHECK(transliterate("paraM", Scheme::Slp1, Scheme::Iast) == "paraṃ");
}

TEST_CASE("invalid character reports byte offset") {
  try {
    transliterate("abc#", Scheme::Iast, Scheme::Slp1);
    FAIL("expected InvalidCharacterError");
  } catch (const InvalidCharacterError& e) {
    CHECK(e.position() == 3);
  }
}

TEST_CASE("syllabify tṛṇād api su-nīcena") {
  auto syl = syllabify("tfRAd api su-nIcena");
  REQUIRE(syl.size() == 8);
  const char* expected[8] = {"tf", "RA", "da", "pi", "su", "nI", "ce", "na"};
  for (int i = 0; i < 8; ++i) CHECK(syl[i].phonemes() == expected[i]);
  // Weights: L G L L L G G with final anceps.
  auto w = weigh(syl);
  CHECK(weight_string(w) == "LGLLLGGL");
  CHECK(w.back().anceps);
  for (std::size_t i = 0; i + 1 < w.size(); ++i) CHECK(!w[i].anceps);
}

TEST_CASE("single vowel syllable") {
  auto syl = syllabify("a");
  REQUIRE(syl.size() == 1);
  CHECK(syl[0].onset.empty());
  CHECK(syl[0].nucleus == 'a');
  auto w = weigh(syllabify("A"), false);
  REQUIRE(w.size() == 1);
  CHECK(w[0].value == 'G');
}

TEST_CASE("19 syllable sardulavikridita pada") {
  const std::string pada =
      "ceto-darpaRa-mArjanaM Bava-mahA-dAvAgni-nirvApaRaM";
  auto syl = syllabify(pada);
  CHECK(syl.size() == 19);
  CHECK(syl.size() == vowel_count(pada));
  CHECK(weight_string(weigh(syl)) == "GGGLLGLGLLLGGGLGGLG");
}

TEST_CASE("no vowel error") {
  CHECK_THROWS_AS(syllabify("khg"), NoVowelError);
  CHECK(syllabify("").empty());
  CHECK(syllabify("  - ").empty());
}

TEST_CASE("conjunct onset flips previous syllable to guru") {
  auto w1 = weigh(syllabify("pata"), false);
  CHECK(weight_string(w1) == "LL");
  auto w2 = weigh(syllabify("patra"), false);
  CHECK(weight_string(w2) == "GL");
}

TEST_CASE("anusvara and visarga make guru") {
  CHECK(weight_string(weigh(syllabify("taM ca"), false)) == "GL");
  CHECK(weight_string(weigh(syllabify("taH sa"), false)) == "GL");
}

TEST_CASE("reconstruction invariant and length invariant on random text") {
  std::mt19937 rng(20260810);
  const std::string vowels = kCanonicalVowels;
  const std::string cons = kCanonicalConsonants;
  for (int iter = 0; iter < 300; ++iter) {
    std::string text;
    int syllables = 1 + static_cast<int>(rng() % 12);
    for (int s = 0; s < syllables; ++s) {
      int onset = static_cast<int>(rng() % 3);
      for (int k = 0; k < onset; ++k) text += cons[rng() % cons.size()];
      text += vowels[rng() % vowels.size()];
      if (rng() % 6 == 0) text += (rng() % 2) ? 'M' : 'H';
      if (rng() % 5 == 0 && s + 1 < syllables) text += (rng() % 2) ? ' ' : '-';
    }
    auto syl = syllabify(text);
    CHECK(syl.size() == vowel_count(text));
    std::string rebuilt;
    for (const auto& s : syl) rebuilt += s.phonemes();
    std::string no_sep;
    for (char c : text)
      if (!is_separator(c)) no_sep += c;
    CHECK(rebuilt == no_sep);
    for (const Weight& w : weigh(syl))
      CHECK((w.value == 'L' || w.value == 'G'));
  }
}

TEST_CASE("round trips across all scheme pairs on random canonical text") {
  std::mt19937 rng(42);
  const std::string vowels = kCanonicalVowels;
  const std::string cons = kCanonicalConsonants;
  for (int iter = 0; iter < 200; ++iter) {
    std::string text;
    int n = 1 + static_cast<int>(rng() % 10);
    for (int s = 0; s < n; ++s) {
      if (rng() % 3) text += cons[rng() % cons.size()];
      text += vowels[rng() % vowels.size()];
      if (rng() % 7 == 0) text += 'M';
      if (rng() % 9 == 0) text += 'H';
      if (rng() % 5 == 0 && s + 1 < n) text += ' ';
    }
    std::string iast = encode_from_canonical(text, Scheme::Iast);
    std::string deva = encode_from_canonical(text, Scheme::Devanagari);
    CHECK(decode_to_canonical(iast, Scheme::Iast) == text);
    CHECK(decode_to_canonical(deva, Scheme::Devanagari) == text);
    CHECK(transliterate(iast, Scheme::Iast, Scheme::Devanagari) == deva);
    CHECK(transliterate(deva, Scheme::Devanagari, Scheme::Iast) == iast);
  }
}

TEST_CASE("composition loading") {
  std::istringstream in(
      "#title: test\n"
      "#scheme: iast\n"
      "\n"
      "tṛṇād api su-nīcena\n"
      "taror iva sahiṣṇunā\n"
      "\n"
      "a\n");
  Composition c = load_composition(in);
  CHECK(c.title == "test");
  REQUIRE(c.stanzas.size() == 2);
  CHECK(c.stanzas[0].index == 1);
  CHECK(c.stanzas[1].index == 2);
  REQUIRE(c.stanzas[0].padas.size() == 2);
  CHECK(c.stanzas[0].padas[0].text == "tfRAd api su-nIcena");
  CHECK(c.stanzas[0].padas[0].syllables.size() == 8);
  CHECK(c.stanzas[1].padas[0].text == "a");
}

TEST_CASE("tokenize splits on spaces and hyphens across padas") {
  std::istringstream in(
      "#scheme: slp1\n"
      "\n"
      "ceto-darpaRa\n"
      "mArjanaM ca\n");
  Composition c = load_composition(in);
  auto tokens = tokenize(c.stanzas[0]);
  REQUIRE(tokens.size() == 4);
  CHECK(tokens[0].text == "ceto");
  CHECK(tokens[1].text == "darpaRa");
  CHECK(tokens[2].text == "mArjanaM");
  CHECK(tokens[3].text == "ca");
  CHECK(tokens[0].pada == 1);
  CHECK(tokens[2].pada == 2);
  CHECK(tokens[1].begin == 5);
}

TEST_CASE("content hash is stable and text-sensitive") {
  Composition a = parse_composition("#scheme: slp1\n\nka ca\n");
  Composition b = parse_composition("#scheme: slp1\n\nka ca\n");
  Composition c = parse_composition("#scheme: slp1\n\nka ta\n");
  CHECK(content_hash(a) == content_hash(b));
  CHECK(content_hash(a) != content_hash(c));
}

TEST_CASE("no-vowel pada names stanza and pada") {
  try {
    parse_composition("#scheme: slp1\n\nka\nkhg\n");
    FAIL("expected NoVowelError");
  } catch (const NoVowelError& e) {
    CHECK(std::string(e.what()).find("stanza 1") != std::string::npos);
    CHECK(std::string(e.what()).find("pada 2") != std::string::npos);
  }
}
