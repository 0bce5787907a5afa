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

#ifndef BANGLAKIT_UNICODE_HPP_
#define BANGLAKIT_UNICODE_HPP_

#include <string>
#include <string_view>

namespace banglakit {
namespace uni {

// UTF-8 decoding is strict: overlong forms, surrogates, and values above
// U+10FFFF are rejected.

// Decodes `s`, returning false and the byte offset of the first bad byte on
// failure.
bool try_decode_utf8(std::string_view s, std::u32string* out,
                     std::size_t* bad_offset);

// Decodes `s` or throws DataError naming the byte offset.
std::u32string decode_utf8(std::string_view s);

void append_utf8(std::string* out, char32_t cp);
std::string encode_utf8(std::u32string_view cps);
std::string encode_utf8(char32_t cp);

// Whitespace per Unicode White_Space.
bool is_space(char32_t cp);

// Bengali block U+0980..U+09FF.
inline bool is_bengali(char32_t cp) { return cp >= 0x0980 && cp <= 0x09FF; }

// Bengali digits U+09E6..U+09EF.
inline bool is_bengali_digit(char32_t cp) {
  return cp >= 0x09E6 && cp <= 0x09EF;
}

inline bool is_ascii_digit(char32_t cp) { return cp >= '0' && cp <= '9'; }

inline bool is_digit(char32_t cp) {
  return is_ascii_digit(cp) || is_bengali_digit(cp);
}

// Letter classification over the common scripts (Latin, Greek, Cyrillic,
// Arabic, the Indic blocks, CJK, Hangul, ...).  Approximate: it is exact for
// ASCII and the Bengali block, range-based elsewhere, and classifies
// symbols, digits, and combining marks as non-letters.
bool is_alpha(char32_t cp);

// Built-in punctuation character set: ASCII punctuation, danda U+0964,
// double danda U+0965, the Bengali abbreviation sign U+09FD, curly quotes,
// dashes, and the ellipsis.
bool is_punct_char(char32_t cp);

// Canonical composition (NFC), exact for the Bengali block and ASCII.
//
// Implements the canonical algorithm (decompose, reorder by combining
// class, recompose) over the Bengali canonical mappings: U+09CB/U+09CC
// compose from U+09C7 + U+09BE/U+09D7, while U+09DC/U+09DD/U+09DF are
// composition exclusions and normalize to their nukta sequences.  Code
// points outside the Bengali block have no decompositions registered and
// pass through unchanged, so accented Latin text is not recomposed.
// Idempotent on all input.
std::u32string nfc(std::u32string_view cps);
std::string nfc(std::string_view utf8);

// Number of code points in valid UTF-8 (throws on invalid input).
std::size_t code_point_count(std::string_view utf8);

}  // namespace uni
}  // namespace banglakit

#endif  // BANGLAKIT_UNICODE_HPP_
