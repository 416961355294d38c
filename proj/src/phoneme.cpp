// kavya/phoneme.cpp

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

#include "kavya/phoneme.hpp"

#include <array>
#include <cstring>

namespace kavya {

namespace {

struct Table {
  std::array<Phoneme, 256> entries{};
  std::array<bool, 256> known{};

  void vowel(char c, VowelLength len) {
    Phoneme p;
    p.code = c;
    p.kind = PhonemeKind::Vowel;
    p.vowel_length = len;
    set(c, p);
  }

  void sparsa(char c, VargaRow row, int pos) {
    Phoneme p;
    p.code = c;
    p.kind = PhonemeKind::Consonant;
    p.consonant_class = ConsonantClass::Sparsa;
    p.varga_row = row;
    p.varga_position = pos;
    set(c, p);
  }

  void cons(char c, ConsonantClass cls) {
    Phoneme p;
    p.code = c;
    p.kind = PhonemeKind::Consonant;
    p.consonant_class = cls;
    set(c, p);
  }

  void mark(char c, PhonemeKind k) {
    Phoneme p;
    p.code = c;
    p.kind = k;
    set(c, p);
  }

  void set(char c, const Phoneme& p) {
    entries[static_cast<unsigned char>(c)] = p;
    known[static_cast<unsigned char>(c)] = true;
  }
};

Table build_table() {
  Table t;
  t.vowel('a', VowelLength::Short);
  t.vowel('A', VowelLength::Long);
  t.vowel('i', VowelLength::Short);
  t.vowel('I', VowelLength::Long);
  t.vowel('u', VowelLength::Short);
  t.vowel('U', VowelLength::Long);
  t.vowel('f', VowelLength::Short);
  t.vowel('F', VowelLength::Long);
  t.vowel('x', VowelLength::Short);
  t.vowel('X', VowelLength::Long);
  // e, E (ai), o, O (au) are prosodically long.
  t.vowel('e', VowelLength::Long);
  t.vowel('E', VowelLength::Long);
  t.vowel('o', VowelLength::Long);
  t.vowel('O', VowelLength::Long);

  const char* rows[5] = {"kKgGN", "cCjJY", "wWqQR", "tTdDn", "pPbBm"};
  const VargaRow row_ids[5] = {VargaRow::Ka, VargaRow::Ca, VargaRow::Ta,
                               VargaRow::TaDental, VargaRow::Pa};
  for (int r = 0; r < 5; ++r)
    for (int pos = 0; pos < 5; ++pos) t.sparsa(rows[r][pos], row_ids[r], pos + 1);

  for (char c : {'y', 'r', 'l', 'v'}) t.cons(c, ConsonantClass::Semivowel);
  for (char c : {'S', 'z', 's'}) t.cons(c, ConsonantClass::Sibilant);
  t.cons('h', ConsonantClass::H);

  t.mark('M', PhonemeKind::Anusvara);
  t.mark('H', PhonemeKind::Visarga);
  return t;
}

const Table& table() {
  static const Table t = build_table();
  return t;
}

}  // namespace

bool is_canonical_vowel(char c) {
  return std::strchr(kCanonicalVowels, c) != nullptr && c != 0;
}

bool is_canonical_consonant(char c) {
  return std::strchr(kCanonicalConsonants, c) != nullptr && c != 0;
}

bool is_canonical_phoneme(char c) {
  return table().known[static_cast<unsigned char>(c)];
}

bool is_separator(char c) { return c == ' ' || c == '-'; }

const Phoneme& phoneme(char code) {
  const Table& t = table();
  if (!t.known[static_cast<unsigned char>(code)])
    throw std::invalid_argument(std::string("not a canonical phoneme: ") + code);
  return t.entries[static_cast<unsigned char>(code)];
}

bool is_long_vowel(char code) {
  return is_canonical_vowel(code) && phoneme(code).vowel_length == VowelLength::Long;
}

bool is_nasal(char code) {
  return code == 'N' || code == 'Y' || code == 'n' || code == 'm';
}

bool is_ta_class(char code) {
  return code == 'w' || code == 'W' || code == 'q' || code == 'Q';
}

bool is_soft_stop(char code) {
  if (!is_canonical_consonant(code)) return false;
  const Phoneme& p = phoneme(code);
  return p.consonant_class == ConsonantClass::Sparsa &&
         p.varga_row != VargaRow::Ta && p.varga_position >= 1 &&
         p.varga_position <= 4;
}

bool is_sibilant(char code) { return code == 'S' || code == 'z' || code == 's'; }

}  // namespace kavya
