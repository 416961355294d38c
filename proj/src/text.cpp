// kavya/text.cpp

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

#include "kavya/text.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>

namespace kavya {

namespace {

// Marks removed before decoding: dandas, avagraha, Vedic accents, zero-width
// joiners, candrabindu rendered as plain anusvara upstream of us.
const char* kStrippedUtf8[] = {
    "।",  // danda
    "॥",  // double danda
    "ऽ",  // avagraha
    "’",  // right single quote avagraha
    "॑",  // udatta
    "॒",  // anudatta
    "‌",  // ZWNJ
    "‍",  // ZWJ
};

std::string strip_marks(std::string s) {
  for (const char* mark : kStrippedUtf8) {
    std::string m = mark;
    std::size_t pos;
    while ((pos = s.find(m)) != std::string::npos) s.erase(pos, m.size());
  }
  // ASCII recitation punctuation.
  std::string out;
  out.reserve(s.size());
  for (char c : s)
    if (c != '|' && c != '\'' && c != '.' && c != ',') out.push_back(c);
  return out;
}

std::string collapse_spaces(const std::string& s) {
  std::string out;
  bool in_space = true;  // also trims leading space
  for (char c : s) {
    if (c == ' ' || c == '\t' || c == '\r') {
      if (!in_space) out.push_back(' ');
      in_space = true;
    } else {
      out.push_back(c);
      in_space = false;
    }
  }
  while (!out.empty() && out.back() == ' ') out.pop_back();
  return out;
}

std::string trim(const std::string& s) {
  std::size_t b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return "";
  std::size_t e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

}  // namespace

std::string normalize_pada(const std::string& line, Scheme scheme) {
  std::string canonical = decode_to_canonical(collapse_spaces(strip_marks(line)), scheme);
  canonical = collapse_spaces(canonical);
  while (!canonical.empty() &&
         (canonical.back() == '-' || canonical.back() == ' '))
    canonical.pop_back();
  return canonical;
}

Composition parse_composition(const std::string& text) {
  std::istringstream in(text);
  return load_composition(in);
}

Composition load_composition(std::istream& in) {
  Composition comp;
  std::vector<std::vector<std::string>> stanza_raw;
  std::vector<std::string> current;
  std::string line;

  auto flush_stanza = [&] {
    if (!current.empty()) {
      stanza_raw.push_back(current);
      current.clear();
    }
  };

  while (std::getline(in, line)) {
    std::string t = trim(line);
    if (!t.empty() && t[0] == '#') {
      auto colon = t.find(':');
      if (colon != std::string::npos) {
        std::string key = trim(t.substr(1, colon - 1));
        std::string value = trim(t.substr(colon + 1));
        if (key == "title") {
          comp.title = value;
        } else if (key == "scheme") {
          comp.scheme = scheme_from_string(value);
        } else if (!key.empty()) {
          comp.metadata[key] = value;
        }
      }
      continue;
    }
    if (t.empty()) {
      flush_stanza();
      continue;
    }
    current.push_back(t);
  }
  flush_stanza();

  int index = 1;
  for (const auto& raw : stanza_raw) {
    Stanza st;
    st.index = index++;
    int pos = 1;
    for (const std::string& raw_pada : raw) {
      Pada p;
      p.position_in_stanza = pos++;
      p.text = normalize_pada(raw_pada, comp.scheme);
      try {
        p.syllables = syllabify(p.text);
      } catch (const NoVowelError&) {
        throw NoVowelError("stanza " + std::to_string(st.index) + ", pada " +
                           std::to_string(p.position_in_stanza) +
                           ": text contains no vowel");
      }
      st.padas.push_back(std::move(p));
      st.raw_text.push_back(raw_pada);
    }
    comp.stanzas.push_back(std::move(st));
  }
  return comp;
}

Composition load_composition_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open composition file: " + path);
  return load_composition(in);
}

std::vector<Token> tokenize(const Stanza& stanza) {
  std::vector<Token> out;
  for (const Pada& pada : stanza.padas) {
    std::size_t i = 0;
    while (i < pada.text.size()) {
      if (is_separator(pada.text[i])) {
        ++i;
        continue;
      }
      Token tok;
      tok.pada = pada.position_in_stanza;
      tok.begin = i;
      while (i < pada.text.size() && !is_separator(pada.text[i])) ++i;
      tok.end = i;
      tok.text = pada.text.substr(tok.begin, tok.end - tok.begin);
      out.push_back(std::move(tok));
    }
  }
  return out;
}

std::uint64_t fnv1a64(const std::string& bytes) {
  std::uint64_t h = 1469598103934665603ULL;
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 1099511628211ULL;
  }
  return h;
}

std::string content_hash(const Composition& c) {
  std::string all;
  for (const Stanza& st : c.stanzas) {
    for (const Pada& p : st.padas) {
      all += p.text;
      all.push_back('\n');
    }
    all.push_back('\n');
  }
  std::uint64_t h = fnv1a64(all);
  char buf[32];
  std::snprintf(buf, sizeof(buf), "fnv1a64:%016llx",
                static_cast<unsigned long long>(h));
  return buf;
}

}  // namespace kavya
