// kavya/translit.hpp

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

#include <string>

#include "kavya/errors.hpp"

namespace kavya {

enum class Scheme { Devanagari, Iast, Slp1 };

Scheme scheme_from_string(const std::string& name);  // "devanagari"|"iast"|"slp1"
std::string scheme_to_string(Scheme s);

// Phoneme-preserving conversion between scripts. Space, hyphen, avagraha and
// danda pass through (danda as '|'). Anything else raises
// InvalidCharacterError with the byte offset into `text`.
//
// IAST input accepts both ṃ (U+1E43) and ṁ (U+1E41) for anusvara; output uses
// ṃ. Apart from that alias the conversion round-trips exactly.
std::string transliterate(const std::string& text, Scheme from, Scheme to);

// Internal codec halves, exposed for reuse by the text loader.
std::string decode_to_canonical(const std::string& text, Scheme from);
std::string encode_from_canonical(const std::string& canonical, Scheme to);

}  // namespace kavya
