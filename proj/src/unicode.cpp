// Copyright 2026 The Banglakit Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "banglakit/unicode.hpp"

#include <algorithm>
#include <array>
#include <cstdint>
#include <optional>

#include "banglakit/error.hpp"

namespace banglakit {
namespace uni {
namespace {

struct Range {
  char32_t lo;
  char32_t hi;
};

// Letter ranges for the scripts that show up in Bengali web text and its
// neighbors.  Digits, punctuation, and combining marks are carved out of the
// Indic blocks; elsewhere the ranges are the blocks' letter runs.
constexpr Range kAlphaRanges[] = {
    {0x0041, 0x005A}, {0x0061, 0x007A}, {0x00AA, 0x00AA}, {0x00B5, 0x00B5},
    {0x00BA, 0x00BA}, {0x00C0, 0x00D6}, {0x00D8, 0x00F6}, {0x00F8, 0x02AF},
    {0x0370, 0x0373}, {0x0376, 0x0377}, {0x037A, 0x037D}, {0x037F, 0x037F},
    {0x0386, 0x0386}, {0x0388, 0x03F5}, {0x03F7, 0x0481}, {0x048A, 0x052F},
    {0x0531, 0x0556}, {0x0560, 0x0588}, {0x05D0, 0x05EA}, {0x05EF, 0x05F2},
    {0x0620, 0x064A}, {0x066E, 0x066F}, {0x0671, 0x06D3}, {0x06FA, 0x06FC},
    {0x0710, 0x072F}, {0x074D, 0x07A5}, {0x0840, 0x0858},
    // Devanagari (danda/digits/marks excluded).
    {0x0904, 0x0939}, {0x093D, 0x093D}, {0x0950, 0x0950}, {0x0958, 0x0961},
    {0x0971, 0x097F},
    // Bengali letters.
    {0x0985, 0x098C}, {0x098F, 0x0990}, {0x0993, 0x09A8}, {0x09AA, 0x09B0},
    {0x09B2, 0x09B2}, {0x09B6, 0x09B9}, {0x09BD, 0x09BD}, {0x09CE, 0x09CE},
    {0x09DC, 0x09DD}, {0x09DF, 0x09E1}, {0x09F0, 0x09F1},
    // Gurmukhi .. Sinhala.
    {0x0A05, 0x0A39}, {0x0A59, 0x0A5E}, {0x0A72, 0x0A74}, {0x0A85, 0x0AB9},
    {0x0ABD, 0x0ABD}, {0x0AD0, 0x0AD0}, {0x0AE0, 0x0AE1}, {0x0B05, 0x0B39},
    {0x0B3D, 0x0B3D}, {0x0B5C, 0x0B61}, {0x0B71, 0x0B71}, {0x0B85, 0x0BB9},
    {0x0BD0, 0x0BD0}, {0x0C05, 0x0C39}, {0x0C58, 0x0C61}, {0x0C85, 0x0CB9},
    {0x0CDE, 0x0CE1}, {0x0D05, 0x0D3A}, {0x0D4E, 0x0D4E}, {0x0D54, 0x0D56},
    {0x0D7A, 0x0D7F}, {0x0D85, 0x0DC6},
    // Thai .. Myanmar.
    {0x0E01, 0x0E30}, {0x0E32, 0x0E33}, {0x0E40, 0x0E46}, {0x0E81, 0x0EB0},
    {0x0EB2, 0x0EB3}, {0x0EBD, 0x0EC6}, {0x0EDC, 0x0EDF}, {0x0F40, 0x0F6C},
    {0x0F88, 0x0F8C}, {0x1000, 0x102A}, {0x103F, 0x103F}, {0x1050, 0x1055},
    // Georgian, Hangul jamo, Ethiopic, Cherokee.
    {0x10A0, 0x10C5}, {0x10D0, 0x10FA}, {0x10FC, 0x10FF}, {0x1100, 0x1248},
    {0x124A, 0x124D}, {0x1250, 0x1256}, {0x1260, 0x1288}, {0x128A, 0x128D},
    {0x1290, 0x12B0}, {0x12B2, 0x12B5}, {0x12B8, 0x12BE}, {0x12C2, 0x12C5},
    {0x12C8, 0x12D6}, {0x12D8, 0x1310}, {0x1312, 0x1315}, {0x1318, 0x135A},
    {0x13A0, 0x13F5},
    // Latin/Greek extended.
    {0x1E00, 0x1F15}, {0x1F18, 0x1F1D}, {0x1F20, 0x1F45}, {0x1F48, 0x1F4D},
    {0x1F50, 0x1F7D}, {0x1F80, 0x1FBC}, {0x1FC2, 0x1FCC}, {0x1FD0, 0x1FDB},
    {0x1FE0, 0x1FEC}, {0x1FF2, 0x1FFC}, {0x2C60, 0x2C7F},
    // Kana, bopomofo, Hangul compatibility jamo, CJK, Hangul syllables.
    {0x3041, 0x3096}, {0x30A1, 0x30FA}, {0x30FC, 0x30FF}, {0x3105, 0x312F},
    {0x3131, 0x318E}, {0x31A0, 0x31BF}, {0x3400, 0x4DBF}, {0x4E00, 0x9FFF},
    {0xA000, 0xA48C}, {0xAC00, 0xD7A3}, {0xF900, 0xFAD9}, {0xFB00, 0xFB06},
    {0xFB13, 0xFB17}, {0xFB1D, 0xFB1D}, {0xFB1F, 0xFB28}, {0xFB2A, 0xFBB1},
    {0xFDF0, 0xFDFB}, {0xFE70, 0xFEFC}, {0xFF21, 0xFF3A}, {0xFF41, 0xFF5A},
    {0xFF66, 0xFFDC}, {0x20000, 0x2A6DF},
};

constexpr char32_t kSpaceList[] = {
    0x0009, 0x000A, 0x000B, 0x000C, 0x000D, 0x0020, 0x0085,
    0x00A0, 0x1680, 0x2028, 0x2029, 0x202F, 0x205F, 0x3000,
};

// Canonical decompositions inside the Bengali block.
struct Decomp {
  char32_t cp;
  char32_t a;
  char32_t b;
  bool composes;  // false for composition exclusions
};

constexpr Decomp kBengaliDecomp[] = {
    {0x09CB, 0x09C7, 0x09BE, true},   // vowel sign O
    {0x09CC, 0x09C7, 0x09D7, true},   // vowel sign AU
    {0x09DC, 0x09A1, 0x09BC, false},  // RRA (exclusion)
    {0x09DD, 0x09A2, 0x09BC, false},  // RHA (exclusion)
    {0x09DF, 0x09AF, 0x09BC, false},  // YYA (exclusion)
};

int combining_class(char32_t cp) {
  switch (cp) {
    case 0x09BC:
      return 7;  // nukta
    case 0x09CD:
      return 9;  // virama
    case 0x09FE:
      return 230;
    default:
      return 0;
  }
}

std::optional<char32_t> compose_pair(char32_t a, char32_t b) {
  for (const Decomp& d : kBengaliDecomp) {
    if (d.composes && d.a == a && d.b == b) return d.cp;
  }
  return std::nullopt;
}

const Decomp* find_decomp(char32_t cp) {
  for (const Decomp& d : kBengaliDecomp) {
    if (d.cp == cp) return &d;
  }
  return nullptr;
}

}  // namespace

bool try_decode_utf8(std::string_view s, std::u32string* out,
                     std::size_t* bad_offset) {
  out->clear();
  out->reserve(s.size());
  std::size_t i = 0;
  const auto fail = [&](std::size_t at) {
    if (bad_offset != nullptr) *bad_offset = at;
    return false;
  };
  while (i < s.size()) {
    const auto b0 = static_cast<unsigned char>(s[i]);
    if (b0 < 0x80) {
      out->push_back(b0);
      ++i;
      continue;
    }
    int len = 0;
    char32_t cp = 0;
    if ((b0 & 0xE0) == 0xC0) {
      len = 2;
      cp = b0 & 0x1F;
    } else if ((b0 & 0xF0) == 0xE0) {
      len = 3;
      cp = b0 & 0x0F;
    } else if ((b0 & 0xF8) == 0xF0) {
      len = 4;
      cp = b0 & 0x07;
    } else {
      return fail(i);
    }
    if (i + len > s.size()) return fail(i);
    for (int k = 1; k < len; ++k) {
      const auto bk = static_cast<unsigned char>(s[i + k]);
      if ((bk & 0xC0) != 0x80) return fail(i + k);
      cp = (cp << 6) | (bk & 0x3F);
    }
    if ((len == 2 && cp < 0x80) || (len == 3 && cp < 0x800) ||
        (len == 4 && cp < 0x10000)) {
      return fail(i);  // overlong
    }
    if (cp > 0x10FFFF || (cp >= 0xD800 && cp <= 0xDFFF)) return fail(i);
    out->push_back(cp);
    i += len;
  }
  return true;
}

std::u32string decode_utf8(std::string_view s) {
  std::u32string out;
  std::size_t at = 0;
  if (!try_decode_utf8(s, &out, &at)) {
    throw DataError("invalid UTF-8 at byte offset " + std::to_string(at));
  }
  return out;
}

void append_utf8(std::string* out, char32_t cp) {
  if (cp < 0x80) {
    out->push_back(static_cast<char>(cp));
  } else if (cp < 0x800) {
    out->push_back(static_cast<char>(0xC0 | (cp >> 6)));
    out->push_back(static_cast<char>(0x80 | (cp & 0x3F)));
  } else if (cp < 0x10000) {
    out->push_back(static_cast<char>(0xE0 | (cp >> 12)));
    out->push_back(static_cast<char>(0x80 | ((cp >> 6) & 0x3F)));
    out->push_back(static_cast<char>(0x80 | (cp & 0x3F)));
  } else {
    out->push_back(static_cast<char>(0xF0 | (cp >> 18)));
    out->push_back(static_cast<char>(0x80 | ((cp >> 12) & 0x3F)));
    out->push_back(static_cast<char>(0x80 | ((cp >> 6) & 0x3F)));
    out->push_back(static_cast<char>(0x80 | (cp & 0x3F)));
  }
}

std::string encode_utf8(std::u32string_view cps) {
  std::string out;
  out.reserve(cps.size() * 3);
  for (char32_t cp : cps) append_utf8(&out, cp);
  return out;
}

std::string encode_utf8(char32_t cp) {
  std::string out;
  append_utf8(&out, cp);
  return out;
}

bool is_space(char32_t cp) {
  if (cp >= 0x2000 && cp <= 0x200A) return true;
  for (char32_t ws : kSpaceList) {
    if (cp == ws) return true;
  }
  return false;
}

bool is_alpha(char32_t cp) {
  const auto* begin = std::begin(kAlphaRanges);
  const auto* end = std::end(kAlphaRanges);
  const auto* it = std::upper_bound(
      begin, end, cp, [](char32_t v, const Range& r) { return v < r.lo; });
  return it != begin && cp <= (it - 1)->hi;
}

bool is_punct_char(char32_t cp) {
  if ((cp >= 0x21 && cp <= 0x2F) || (cp >= 0x3A && cp <= 0x40) ||
      (cp >= 0x5B && cp <= 0x60) || (cp >= 0x7B && cp <= 0x7E)) {
    return true;
  }
  switch (cp) {
    case 0x0964:  // danda
    case 0x0965:  // double danda
    case 0x09FD:  // Bengali abbreviation sign
    case 0x2013:
    case 0x2014:
    case 0x2015:
    case 0x2018:
    case 0x2019:
    case 0x201C:
    case 0x201D:
    case 0x201E:
    case 0x2026:
      return true;
    default:
      return false;
  }
}

std::u32string nfc(std::u32string_view cps) {
  // Decompose.
  std::u32string buf;
  buf.reserve(cps.size());
  for (char32_t cp : cps) {
    if (const Decomp* d = find_decomp(cp)) {
      buf.push_back(d->a);
      buf.push_back(d->b);
    } else {
      buf.push_back(cp);
    }
  }
  // Canonical ordering: stable sort of nonzero-class runs.
  for (std::size_t i = 1; i < buf.size(); ++i) {
    const int cc = combining_class(buf[i]);
    if (cc == 0) continue;
    std::size_t j = i;
    while (j > 0) {
      const int prev = combining_class(buf[j - 1]);
      if (prev == 0 || prev <= cc) break;
      std::swap(buf[j - 1], buf[j]);
      --j;
    }
  }
  // Compose.
  std::u32string out;
  out.reserve(buf.size());
  std::ptrdiff_t last_starter = -1;
  for (char32_t cp : buf) {
    const int cc = combining_class(cp);
    if (last_starter >= 0) {
      bool blocked;
      if (out.size() == static_cast<std::size_t>(last_starter) + 1) {
        blocked = false;
      } else {
        const int prev = combining_class(out.back());
        blocked = prev == 0 || prev >= cc;
      }
      if (!blocked) {
        if (auto comp = compose_pair(out[last_starter], cp)) {
          out[static_cast<std::size_t>(last_starter)] = *comp;
          continue;
        }
      }
    }
    if (cc == 0) last_starter = static_cast<std::ptrdiff_t>(out.size());
    out.push_back(cp);
  }
  return out;
}

std::string nfc(std::string_view utf8) {
  return encode_utf8(nfc(decode_utf8(utf8)));
}

std::size_t code_point_count(std::string_view utf8) {
  return decode_utf8(utf8).size();
}

}  // namespace uni
}  // namespace banglakit
