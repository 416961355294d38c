// kavya/phoneme.hpp

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
#include <stdexcept>
#include <string>

namespace kavya {

// Canonical text is SLP1: one char per phoneme, case-significant.
//   vowels      a A i I u U f F x X e E o O   (f/F = vocalic r/rr, x/X = vocalic l/ll)
//   stops       k K g G N  c C j J Y  w W q Q R  t T d D n  p P b B m
//   semivowels  y r l v
//   sibilants   S z s      (palatal, retroflex, dental)
//   aspirate    h
//   marks       M (anusvara)  H (visarga)
// Word separators inside a pada are ' ' and '-'.

enum class PhonemeKind { Vowel, Consonant, Anusvara, Visarga };

enum class VowelLength { Short, Long };

// Rows of the stop (sparsa) grid, by place of articulation.
enum class VargaRow { Ka, Ca, Ta, TaDental, Pa };

enum class ConsonantClass { Sparsa, Semivowel, Sibilant, H };

struct Phoneme {
  char code = 0;
  PhonemeKind kind = PhonemeKind::Consonant;
  // Vowels only.
  VowelLength vowel_length = VowelLength::Short;
  // Consonants only.
  ConsonantClass consonant_class = ConsonantClass::Sparsa;
  VargaRow varga_row = VargaRow::Ka;
  int varga_position = 0;  // 1..5 within a sparsa row, 0 otherwise
};

inline constexpr const char* kCanonicalVowels = "aAiIuUfFxXeEoO";
inline constexpr const char* kCanonicalConsonants =
    "kKgGNcCjJYwWqQRtTdDnpPbBmyrlvSzsh";

bool is_canonical_vowel(char c);
bool is_canonical_consonant(char c);
bool is_canonical_phoneme(char c);  // includes M and H
bool is_separator(char c);          // ' ' or '-'

// Looks up the phoneme record for a canonical code. Throws
// std::invalid_argument on non-phoneme characters.
const Phoneme& phoneme(char code);

bool is_long_vowel(char code);
bool is_nasal(char code);       // N Y n m (the anunasika row minus R)
bool is_ta_class(char code);    // w W q Q (retroflex stops, R excluded)
bool is_soft_stop(char code);   // sparsa positions 1-4 outside the ta row
bool is_sibilant(char code);    // S z s

}  // namespace kavya
