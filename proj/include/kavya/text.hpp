// kavya/text.hpp

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

#include <cstdint>
#include <iosfwd>
#include <map>
#include <string>
#include <vector>

#include "kavya/syllable.hpp"
#include "kavya/translit.hpp"

namespace kavya {

struct Pada {
  std::string text;                 // normalized canonical phoneme sequence
  std::vector<Syllable> syllables;  // filled by syllabify at load time
  int position_in_stanza = 1;       // 1..4 normally
};

struct Stanza {
  int index = 1;  // contiguous from 1
  std::vector<Pada> padas;
  std::vector<std::string> raw_text;  // one entry per pada, input scheme
};

struct Composition {
  std::string title;
  Scheme scheme = Scheme::Iast;
  std::vector<Stanza> stanzas;
  std::map<std::string, std::string> metadata;  // author, source, ...
};

// A whitespace/hyphen token of a stanza's normalized text. Indices are
// 0-based and run across padas in order, so annotation word refs stay stable.
struct Token {
  std::string text;        // canonical
  int pada = 1;            // 1-based pada carrying the token
  std::size_t begin = 0;   // [begin, end) into that pada's canonical text
  std::size_t end = 0;
};

std::vector<Token> tokenize(const Stanza& stanza);

// Input format: UTF-8, one pada per line, blank line between stanzas.
// Optional `#title:`, `#scheme: iast|devanagari|slp1`, `#author:`, `#source:`
// header lines; other `#` lines are comments. Dandas, avagraha, Vedic accent
// marks and zero-width joiners are stripped during normalization; runs of
// whitespace collapse to one space.
Composition load_composition(std::istream& in);
Composition load_composition_file(const std::string& path);
Composition parse_composition(const std::string& text);

// Strips recitation marks, decodes to canonical, collapses whitespace and
// drops a trailing hyphen. Used on every pada line.
std::string normalize_pada(const std::string& line, Scheme scheme);

// FNV-1a 64 over the canonical text of all padas; keys annotation files to
// one composition.
std::string content_hash(const Composition& c);
std::uint64_t fnv1a64(const std::string& bytes);

}  // namespace kavya
