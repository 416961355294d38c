// kavya/translit.cpp

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

#include "kavya/translit.hpp"

#include <map>
#include <vector>

#include "kavya/phoneme.hpp"

namespace kavya {

namespace {

// ---------------------------------------------------------------------------
// UTF-8
// ---------------------------------------------------------------------------

struct Codepoint {
  char32_t value;
  std::size_t offset;  // byte offset of the first byte
};

std::vector<Codepoint> decode_utf8(const std::string& s) {
  std::vector<Codepoint> out;
  std::size_t i = 0;
  while (i < s.size()) {
    unsigned char b = static_cast<unsigned char>(s[i]);
    char32_t cp = 0;
    std::size_t len = 1;
    if (b < 0x80) {
      cp = b;
    } else if ((b & 0xE0) == 0xC0) {
      cp = b & 0x1F;
      len = 2;
    } else if ((b & 0xF0) == 0xE0) {
      cp = b & 0x0F;
      len = 3;
    } else if ((b & 0xF8) == 0xF0) {
      cp = b & 0x07;
      len = 4;
    } else {
      throw InvalidCharacterError(i, "invalid utf-8 byte at offset " +
                                         std::to_string(i));
    }
    if (i + len > s.size())
      throw InvalidCharacterError(i, "truncated utf-8 sequence at offset " +
                                         std::to_string(i));
    for (std::size_t k = 1; k < len; ++k) {
      unsigned char cb = static_cast<unsigned char>(s[i + k]);
      if ((cb & 0xC0) != 0x80)
        throw InvalidCharacterError(i, "invalid utf-8 continuation at offset " +
                                           std::to_string(i));
      cp = (cp << 6) | (cb & 0x3F);
    }
    out.push_back({cp, i});
    i += len;
  }
  return out;
}

void append_utf8(std::string& out, char32_t cp) {
  if (cp < 0x80) {
    out.push_back(static_cast<char>(cp));
  } else if (cp < 0x800) {
    out.push_back(static_cast<char>(0xC0 | (cp >> 6)));
    out.push_back(static_cast<char>(0x80 | (cp & 0x3F)));
  } else if (cp < 0x10000) {
    out.push_back(static_cast<char>(0xE0 | (cp >> 12)));
    out.push_back(static_cast<char>(0x80 | ((cp >> 6) & 0x3F)));
    out.push_back(static_cast<char>(0x80 | (cp & 0x3F)));
  } else {
    out.push_back(static_cast<char>(0xF0 | (cp >> 18)));
    out.push_back(static_cast<char>(0x80 | ((cp >> 12) & 0x3F)));
    out.push_back(static_cast<char>(0x80 | ((cp >> 6) & 0x3F)));
    out.push_back(static_cast<char>(0x80 | (cp & 0x3F)));
  }
}

[[noreturn]] void bad_char(std::size_t offset, const std::string& scheme) {
  throw InvalidCharacterError(
      offset, "character at byte offset " + std::to_string(offset) +
                  " is not valid " + scheme);
}

// ---------------------------------------------------------------------------
// IAST
// ---------------------------------------------------------------------------

// Combining forms are expected precomposed (NFC).
const std::map<char32_t, char>& iast_single() {
  static const std::map<char32_t, char> m = {
      {U'a', 'a'},    {0x0101, 'A'},  // ā
      {U'i', 'i'},    {0x012B, 'I'},  // ī
      {U'u', 'u'},    {0x016B, 'U'},  // ū
      {0x1E5B, 'f'},                  // ṛ
      {0x1E5D, 'F'},                  // ṝ
      {0x1E37, 'x'},                  // ḷ
      {0x1E39, 'X'},                  // ḹ
      {U'e', 'e'},    {U'o', 'o'},
      {U'k', 'k'},    {U'g', 'g'},    {0x1E45, 'N'},  // ṅ
      {U'c', 'c'},    {U'j', 'j'},    {U'ñ', 'Y'},    // ñ U+00F1
      {0x1E6D, 'w'},  {0x1E0D, 'q'},  {0x1E47, 'R'},  // ṭ ḍ ṇ
      {U't', 't'},    {U'd', 'd'},    {U'n', 'n'},
      {U'p', 'p'},    {U'b', 'b'},    {U'm', 'm'},
      {U'y', 'y'},    {U'r', 'r'},    {U'l', 'l'},    {U'v', 'v'},
      {0x015B, 'S'},  {0x1E63, 'z'},  {U's', 's'},    {U'h', 'h'},
      {0x1E43, 'M'},  {0x1E41, 'M'},  // ṃ and the ṁ alias
      {0x1E25, 'H'},                  // ḥ
  };
  return m;
}

std::string iast_to_canonical(const std::string& text) {
  std::vector<Codepoint> cps = decode_utf8(text);
  std::string out;
  out.reserve(cps.size());
  const auto& single = iast_single();
  for (std::size_t i = 0; i < cps.size(); ++i) {
    char32_t c = cps[i].value;
    char32_t next = (i + 1 < cps.size()) ? cps[i + 1].value : 0;
    // Digraphs bind tighter than single letters.
    if (c == U'a' && next == U'i') {
      out.push_back('E');
      ++i;
      continue;
    }
    if (c == U'a' && next == U'u') {
      out.push_back('O');
      ++i;
      continue;
    }
    if (next == U'h') {
      char aspirated = 0;
      switch (c) {
        case U'k': aspirated = 'K'; break;
        case U'g': aspirated = 'G'; break;
        case U'c': aspirated = 'C'; break;
        case U'j': aspirated = 'J'; break;
        case 0x1E6D: aspirated = 'W'; break;  // ṭh
        case 0x1E0D: aspirated = 'Q'; break;  // ḍh
        case U't': aspirated = 'T'; break;
        case U'd': aspirated = 'D'; break;
        case U'p': aspirated = 'P'; break;
        case U'b': aspirated = 'B'; break;
        default: break;
      }
      if (aspirated) {
        out.push_back(aspirated);
        ++i;
        continue;
      }
    }
    if (c == U' ' || c == U'-' || c == U'|' || c == U'\'') {
      out.push_back(static_cast<char>(c));
      continue;
    }
    auto it = single.find(c);
    if (it == single.end()) bad_char(cps[i].offset, "iast");
    out.push_back(it->second);
  }
  return out;
}

std::string canonical_to_iast(const std::string& canonical) {
  static const std::map<char, std::u32string> m = {
      {'a', U"a"},  {'A', U"ā"}, {'i', U"i"},  {'I', U"ī"},
      {'u', U"u"},  {'U', U"ū"}, {'f', U"ṛ"}, {'F', U"ṝ"},
      {'x', U"ḷ"}, {'X', U"ḹ"}, {'e', U"e"}, {'E', U"ai"},
      {'o', U"o"},  {'O', U"au"},
      {'k', U"k"},  {'K', U"kh"}, {'g', U"g"},  {'G', U"gh"}, {'N', U"ṅ"},
      {'c', U"c"},  {'C', U"ch"}, {'j', U"j"},  {'J', U"jh"}, {'Y', U"ñ"},
      {'w', U"ṭ"}, {'W', U"ṭh"}, {'q', U"ḍ"}, {'Q', U"ḍh"},
      {'R', U"ṇ"},
      {'t', U"t"},  {'T', U"th"}, {'d', U"d"},  {'D', U"dh"}, {'n', U"n"},
      {'p', U"p"},  {'P', U"ph"}, {'b', U"b"},  {'B', U"bh"}, {'m', U"m"},
      {'y', U"y"},  {'r', U"r"},  {'l', U"l"},  {'v', U"v"},
      {'S', U"ś"}, {'z', U"ṣ"}, {'s', U"s"}, {'h', U"h"},
      {'M', U"ṃ"}, {'H', U"ḥ"},
  };
  std::string out;
  for (std::size_t i = 0; i < canonical.size(); ++i) {
    char c = canonical[i];
    if (c == ' ' || c == '-' || c == '|' || c == '\'') {
      out.push_back(c);
      continue;
    }
    auto it = m.find(c);
    if (it == m.end()) bad_char(i, "slp1");
    for (char32_t cp : it->second) append_utf8(out, cp);
  }
  return out;
}

// ---------------------------------------------------------------------------
// Devanagari
// ---------------------------------------------------------------------------

const std::map<char32_t, char>& deva_independent_vowels() {
  static const std::map<char32_t, char> m = {
      {0x0905, 'a'}, {0x0906, 'A'}, {0x0907, 'i'}, {0x0908, 'I'},
      {0x0909, 'u'}, {0x090A, 'U'}, {0x090B, 'f'}, {0x0960, 'F'},
      {0x090C, 'x'}, {0x0961, 'X'}, {0x090F, 'e'}, {0x0910, 'E'},
      {0x0913, 'o'}, {0x0914, 'O'},
  };
  return m;
}

const std::map<char32_t, char>& deva_matras() {
  static const std::map<char32_t, char> m = {
      {0x093E, 'A'}, {0x093F, 'i'}, {0x0940, 'I'}, {0x0941, 'u'},
      {0x0942, 'U'}, {0x0943, 'f'}, {0x0944, 'F'}, {0x0962, 'x'},
      {0x0963, 'X'}, {0x0947, 'e'}, {0x0948, 'E'}, {0x094B, 'o'},
      {0x094C, 'O'},
  };
  return m;
}

const std::map<char32_t, char>& deva_consonants() {
  static const std::map<char32_t, char> m = {
      {0x0915, 'k'}, {0x0916, 'K'}, {0x0917, 'g'}, {0x0918, 'G'}, {0x0919, 'N'},
      {0x091A, 'c'}, {0x091B, 'C'}, {0x091C, 'j'}, {0x091D, 'J'}, {0x091E, 'Y'},
      {0x091F, 'w'}, {0x0920, 'W'}, {0x0921, 'q'}, {0x0922, 'Q'}, {0x0923, 'R'},
      {0x0924, 't'}, {0x0925, 'T'}, {0x0926, 'd'}, {0x0927, 'D'}, {0x0928, 'n'},
      {0x092A, 'p'}, {0x092B, 'P'}, {0x092C, 'b'}, {0x092D, 'B'}, {0x092E, 'm'},
      {0x092F, 'y'}, {0x0930, 'r'}, {0x0932, 'l'}, {0x0935, 'v'},
      {0x0936, 'S'}, {0x0937, 'z'}, {0x0938, 's'}, {0x0939, 'h'},
  };
  return m;
}

constexpr char32_t kVirama = 0x094D;
constexpr char32_t kAnusvara = 0x0902;
constexpr char32_t kVisarga = 0x0903;
constexpr char32_t kAvagraha = 0x093D;
constexpr char32_t kDanda = 0x0964;
constexpr char32_t kDoubleDanda = 0x0965;

std::string devanagari_to_canonical(const std::string& text) {
  std::vector<Codepoint> cps = decode_utf8(text);
  std::string out;
  bool pending_consonant = false;  // consonant emitted, inherent 'a' undecided
  auto settle = [&] {
    if (pending_consonant) {
      out.push_back('a');
      pending_consonant = false;
    }
  };
  for (std::size_t i = 0; i < cps.size(); ++i) {
    char32_t c = cps[i].value;
    if (auto it = deva_consonants().find(c); it != deva_consonants().end()) {
      settle();
      out.push_back(it->second);
      pending_consonant = true;
      continue;
    }
    if (c == kVirama) {
      if (!pending_consonant) bad_char(cps[i].offset, "devanagari");
      pending_consonant = false;
      continue;
    }
    if (auto it = deva_matras().find(c); it != deva_matras().end()) {
      if (!pending_consonant) bad_char(cps[i].offset, "devanagari");
      out.push_back(it->second);
      pending_consonant = false;
      continue;
    }
    if (auto it = deva_independent_vowels().find(c);
        it != deva_independent_vowels().end()) {
      settle();
      out.push_back(it->second);
      continue;
    }
    if (c == kAnusvara || c == kVisarga) {
      settle();
      out.push_back(c == kAnusvara ? 'M' : 'H');
      continue;
    }
    if (c == U' ' || c == U'-') {
      settle();
      out.push_back(static_cast<char>(c));
      continue;
    }
    if (c == kAvagraha) {
      settle();
      out.push_back('\'');
      continue;
    }
    if (c == kDanda) {
      settle();
      out.push_back('|');
      continue;
    }
    if (c == kDoubleDanda) {
      settle();
      out += "||";
      continue;
    }
    bad_char(cps[i].offset, "devanagari");
  }
  settle();
  return out;
}

std::string canonical_to_devanagari(const std::string& canonical) {
  static const std::map<char, char32_t> cons = [] {
    std::map<char, char32_t> m;
    for (const auto& [cp, c] : deva_consonants()) m[c] = cp;
    return m;
  }();
  static const std::map<char, char32_t> indep = [] {
    std::map<char, char32_t> m;
    for (const auto& [cp, c] : deva_independent_vowels()) m[c] = cp;
    return m;
  }();
  static const std::map<char, char32_t> matra = [] {
    std::map<char, char32_t> m;
    for (const auto& [cp, c] : deva_matras()) m[c] = cp;
    return m;
  }();

  std::string out;
  for (std::size_t i = 0; i < canonical.size(); ++i) {
    char c = canonical[i];
    if (auto it = cons.find(c); it != cons.end()) {
      append_utf8(out, it->second);
      char next = (i + 1 < canonical.size()) ? canonical[i + 1] : 0;
      if (next == 'a') {
        ++i;  // inherent vowel
      } else if (is_canonical_vowel(next)) {
        append_utf8(out, matra.at(next));
        ++i;
      } else {
        append_utf8(out, kVirama);
      }
      continue;
    }
    if (is_canonical_vowel(c)) {
      append_utf8(out, indep.at(c));
      continue;
    }
    switch (c) {
      case 'M': append_utf8(out, kAnusvara); break;
      case 'H': append_utf8(out, kVisarga); break;
      case '\'': append_utf8(out, kAvagraha); break;
      case '|':
        if (i + 1 < canonical.size() && canonical[i + 1] == '|') {
          append_utf8(out, kDoubleDanda);
          ++i;
        } else {
          append_utf8(out, kDanda);
        }
        break;
      case ' ':
      case '-': out.push_back(c); break;
      default: bad_char(i, "slp1");
    }
  }
  return out;
}

std::string slp1_check(const std::string& text) {
  for (std::size_t i = 0; i < text.size(); ++i) {
    char c = text[i];
    if (is_canonical_phoneme(c) || is_separator(c) || c == '|' || c == '\'')
      continue;
    bad_char(i, "slp1");
  }
  return text;
}

}  // namespace

Scheme scheme_from_string(const std::string& name) {
  if (name == "devanagari") return Scheme::Devanagari;
  if (name == "iast") return Scheme::Iast;
  if (name == "slp1") return Scheme::Slp1;
  throw ConfigError("unknown scheme: " + name);
}

std::string scheme_to_string(Scheme s) {
  switch (s) {
    case Scheme::Devanagari: return "devanagari";
    case Scheme::Iast: return "iast";
    case Scheme::Slp1: return "slp1";
  }
  return "slp1";
}

std::string decode_to_canonical(const std::string& text, Scheme from) {
  switch (from) {
    case Scheme::Devanagari: return devanagari_to_canonical(text);
    case Scheme::Iast: return iast_to_canonical(text);
    case Scheme::Slp1: return slp1_check(text);
  }
  return text;
}

std::string encode_from_canonical(const std::string& canonical, Scheme to) {
  switch (to) {
    case Scheme::Devanagari: return canonical_to_devanagari(canonical);
    case Scheme::Iast: return canonical_to_iast(canonical);
    case Scheme::Slp1: return slp1_check(canonical);
  }
  return canonical;
}

std::string transliterate(const std::string& text, Scheme from, Scheme to) {
  return encode_from_canonical(decode_to_canonical(text, from), to);
}

}  // namespace kavya
