#pragma once
// UTF-8 decoding, case folding, word segmentation and surface normalization.
//
// Mention spans are codepoint offsets into the entry text, so all scanning
// happens over decoded codepoints with a byte-offset map kept alongside.
// Case folding and the word/non-word classification cover ASCII, Latin-1,
// Latin Extended-A, Greek and Cyrillic; other scripts pass through folding
// unchanged and common letter ranges (incl. CJK) count as word characters.

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace sitrep {

inline void utf8_append(std::string& out, char32_t cp) {
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

inline std::string utf8_encode(std::u32string_view cps) {
  std::string out;
  out.reserve(cps.size());
  for (char32_t cp : cps) utf8_append(out, cp);
  return out;
}

// Decodes one codepoint starting at byte i; invalid sequences yield U+FFFD
// and consume a single byte.
inline char32_t utf8_next(std::string_view s, std::size_t& i) {
  const unsigned char b0 = static_cast<unsigned char>(s[i]);
  if (b0 < 0x80) {
    ++i;
    return b0;
  }
  auto cont = [&](std::size_t k) {
    return i + k < s.size() &&
           (static_cast<unsigned char>(s[i + k]) & 0xC0) == 0x80;
  };
  auto bits = [&](std::size_t k) {
    return static_cast<char32_t>(static_cast<unsigned char>(s[i + k]) & 0x3F);
  };
  if ((b0 & 0xE0) == 0xC0 && cont(1)) {
    char32_t cp = ((b0 & 0x1Fu) << 6) | bits(1);
    i += 2;
    return cp >= 0x80 ? cp : 0xFFFD;
  }
  if ((b0 & 0xF0) == 0xE0 && cont(1) && cont(2)) {
    char32_t cp = ((b0 & 0x0Fu) << 12) | (bits(1) << 6) | bits(2);
    i += 3;
    return cp >= 0x800 ? cp : 0xFFFD;
  }
  if ((b0 & 0xF8) == 0xF0 && cont(1) && cont(2) && cont(3)) {
    char32_t cp =
        ((b0 & 0x07u) << 18) | (bits(1) << 12) | (bits(2) << 6) | bits(3);
    i += 4;
    return (cp >= 0x10000 && cp <= 0x10FFFF) ? cp : 0xFFFD;
  }
  ++i;
  return 0xFFFD;
}

inline std::u32string utf8_decode(std::string_view s) {
  std::u32string out;
  out.reserve(s.size());
  std::size_t i = 0;
  while (i < s.size()) out.push_back(utf8_next(s, i));
  return out;
}

inline std::size_t utf8_length(std::string_view s) {
  std::size_t i = 0, n = 0;
  while (i < s.size()) {
    utf8_next(s, i);
    ++n;
  }
  return n;
}

// Substring by codepoint offsets, [cp_start, cp_end).
inline std::string utf8_slice(std::string_view s, std::size_t cp_start,
                              std::size_t cp_end) {
  std::size_t i = 0, cp = 0, byte_start = 0;
  while (i < s.size() && cp < cp_start) {
    utf8_next(s, i);
    ++cp;
  }
  byte_start = i;
  while (i < s.size() && cp < cp_end) {
    utf8_next(s, i);
    ++cp;
  }
  return std::string(s.substr(byte_start, i - byte_start));
}

inline char32_t fold_case(char32_t cp) {
  if (cp < 0x80) return (cp >= 'A' && cp <= 'Z') ? cp + 0x20 : cp;
  // Latin-1 supplement (keep the multiplication sign).
  if (cp >= 0xC0 && cp <= 0xDE && cp != 0xD7) return cp + 0x20;
  // Latin Extended-A comes in upper/lower pairs.
  if (cp >= 0x100 && cp <= 0x137) return (cp % 2 == 0) ? cp + 1 : cp;
  if (cp >= 0x139 && cp <= 0x148) return (cp % 2 == 1) ? cp + 1 : cp;
  if (cp >= 0x14A && cp <= 0x177) return (cp % 2 == 0) ? cp + 1 : cp;
  if (cp == 0x178) return 0xFF;
  if (cp >= 0x179 && cp <= 0x17E) return (cp % 2 == 1) ? cp + 1 : cp;
  if (cp >= 0x391 && cp <= 0x3A9 && cp != 0x3A2) return cp + 0x20;  // Greek
  if (cp >= 0x410 && cp <= 0x42F) return cp + 0x20;                 // Cyrillic
  if (cp >= 0x400 && cp <= 0x40F) return cp + 0x50;
  return cp;
}

inline std::u32string fold_case(std::u32string_view cps) {
  std::u32string out;
  out.reserve(cps.size());
  for (char32_t cp : cps) out.push_back(fold_case(cp));
  return out;
}

// Alphanumeric in the word-boundary sense: "Tulsan" must not match "Tulsa".
inline bool is_word_char(char32_t cp) {
  if (cp < 0x80)
    return (cp >= '0' && cp <= '9') || (cp >= 'a' && cp <= 'z') ||
           (cp >= 'A' && cp <= 'Z');
  if (cp >= 0xC0 && cp <= 0x24F) return cp != 0xD7 && cp != 0xF7;
  if (cp >= 0x370 && cp <= 0x3FF) return cp != 0x3A2;   // Greek
  if (cp >= 0x400 && cp <= 0x4FF) return true;          // Cyrillic
  if (cp >= 0x590 && cp <= 0x6FF) return true;          // Hebrew, Arabic
  if (cp >= 0x3040 && cp <= 0x30FF) return true;        // Kana
  if (cp >= 0x4E00 && cp <= 0x9FFF) return true;        // CJK
  return false;
}

inline bool is_space(char32_t cp) {
  return cp == ' ' || cp == '\t' || cp == '\n' || cp == '\r' || cp == '\f' ||
         cp == '\v' || cp == 0xA0;
}

// A maximal run of word characters, with codepoint offsets into the text.
struct Token {
  std::size_t cp_start = 0;
  std::size_t cp_end = 0;           // exclusive
  std::u32string folded;
};

inline std::vector<Token> word_tokens(std::u32string_view cps) {
  std::vector<Token> tokens;
  std::size_t i = 0;
  const std::size_t n = cps.size();
  while (i < n) {
    while (i < n && !is_word_char(cps[i])) ++i;
    if (i >= n) break;
    Token t;
    t.cp_start = i;
    while (i < n && is_word_char(cps[i])) {
      t.folded.push_back(fold_case(cps[i]));
      ++i;
    }
    t.cp_end = i;
    tokens.push_back(std::move(t));
  }
  return tokens;
}

// Casefold, turn runs of whitespace/commas/periods into single spaces, and
// strip leading/trailing non-word characters. May return an empty string;
// callers that require nonempty results check for that themselves.
inline std::string normalize_text(std::string_view s) {
  const std::u32string folded = fold_case(utf8_decode(s));
  std::u32string collapsed;
  collapsed.reserve(folded.size());
  bool pending_space = false;
  for (char32_t cp : folded) {
    if (is_space(cp) || cp == ',' || cp == '.') {
      pending_space = !collapsed.empty();
      continue;
    }
    if (pending_space) {
      collapsed.push_back(' ');
      pending_space = false;
    }
    collapsed.push_back(cp);
  }
  std::size_t begin = 0, end = collapsed.size();
  while (begin < end && !is_word_char(collapsed[begin])) ++begin;
  while (end > begin && !is_word_char(collapsed[end - 1])) --end;
  return utf8_encode(std::u32string_view(collapsed).substr(begin, end - begin));
}

// Splits a normalized string on single spaces.
inline std::vector<std::string> split_words(std::string_view s) {
  std::vector<std::string> out;
  std::size_t pos = 0;
  while (pos < s.size()) {
    std::size_t sp = s.find(' ', pos);
    if (sp == std::string_view::npos) sp = s.size();
    if (sp > pos) out.emplace_back(s.substr(pos, sp - pos));
    pos = sp + 1;
  }
  return out;
}

inline std::string join_words(const std::vector<std::string>& words,
                              std::size_t begin, std::size_t end) {
  std::string out;
  for (std::size_t i = begin; i < end; ++i) {
    if (!out.empty()) out.push_back(' ');
    out += words[i];
  }
  return out;
}

// FNV-1a, used for corpus and config digests (traceability, not security).
inline std::uint64_t fnv1a(std::string_view s,
                           std::uint64_t h = 0xcbf29ce484222325ULL) {
  for (unsigned char c : s) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  return h;
}

inline std::string to_hex(std::uint64_t v) {
  static const char* digits = "0123456789abcdef";
  std::string out(16, '0');
  for (int i = 15; i >= 0; --i) {
    out[static_cast<std::size_t>(i)] = digits[v & 0xF];
    v >>= 4;
  }
  return out;
}

}  // namespace sitrep
