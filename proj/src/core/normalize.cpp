#include "ltkg/core/normalize.hpp"

#include <cstdint>
#include <vector>

namespace ltkg {

namespace {

constexpr char32_t kReplacement = 0xFFFD;

// Decodes one UTF-8 sequence starting at s[i]; advances i. Invalid bytes
// decode to U+FFFD so the result is stable under re-normalization.
char32_t decode_utf8(std::string_view s, size_t& i) {
  const auto byte = [&](size_t k) { return static_cast<unsigned char>(s[k]); };
  unsigned char b0 = byte(i);
  if (b0 < 0x80) {
    ++i;
    return b0;
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
    ++i;
    return kReplacement;
  }
  if (i + len > s.size()) {
    ++i;
    return kReplacement;
  }
  for (int k = 1; k < len; ++k) {
    unsigned char b = byte(i + k);
    if ((b & 0xC0) != 0x80) {
      ++i;
      return kReplacement;
    }
    cp = (cp << 6) | (b & 0x3F);
  }
  // Reject overlong encodings and surrogates.
  if ((len == 2 && cp < 0x80) || (len == 3 && cp < 0x800) || (len == 4 && cp < 0x10000) ||
      (cp >= 0xD800 && cp <= 0xDFFF) || cp > 0x10FFFF) {
    ++i;
    return kReplacement;
  }
  i += len;
  return cp;
}

void encode_utf8(char32_t cp, std::string& out) {
  if (cp < 0x80) {
    out += static_cast<char>(cp);
  } else if (cp < 0x800) {
    out += static_cast<char>(0xC0 | (cp >> 6));
    out += static_cast<char>(0x80 | (cp & 0x3F));
  } else if (cp < 0x10000) {
    out += static_cast<char>(0xE0 | (cp >> 12));
    out += static_cast<char>(0x80 | ((cp >> 6) & 0x3F));
    out += static_cast<char>(0x80 | (cp & 0x3F));
  } else {
    out += static_cast<char>(0xF0 | (cp >> 18));
    out += static_cast<char>(0x80 | ((cp >> 12) & 0x3F));
    out += static_cast<char>(0x80 | ((cp >> 6) & 0x3F));
    out += static_cast<char>(0x80 | (cp & 0x3F));
  }
}

bool is_space(char32_t cp) {
  switch (cp) {
    case U'\t':
    case U'\n':
    case U'\v':
    case U'\f':
    case U'\r':
    case U' ':
    case 0x00A0:  // no-break space
    case 0x1680:
    case 0x2028:
    case 0x2029:
    case 0x202F:
    case 0x205F:
    case 0x3000:
      return true;
    default:
      return cp >= 0x2000 && cp <= 0x200A;
  }
}

char32_t to_lower(char32_t cp) {
  if (cp >= U'A' && cp <= U'Z') return cp + 0x20;
  // Latin-1: À..Þ except ×.
  if (cp >= 0xC0 && cp <= 0xDE && cp != 0xD7) return cp + 0x20;
  // Latin Extended-A: mostly even/odd upper/lower pairs.
  if (cp >= 0x0100 && cp <= 0x0137) return (cp % 2 == 0) ? cp + 1 : cp;
  if (cp >= 0x0139 && cp <= 0x0148) return (cp % 2 == 1) ? cp + 1 : cp;
  if (cp >= 0x014A && cp <= 0x0177) return (cp % 2 == 0) ? cp + 1 : cp;
  if (cp == 0x0178) return 0x00FF;  // Ÿ
  if (cp >= 0x0179 && cp <= 0x017E) return (cp % 2 == 1) ? cp + 1 : cp;
  // Greek capitals.
  if (cp >= 0x0391 && cp <= 0x03A9 && cp != 0x03A2) return cp + 0x20;
  // Cyrillic.
  if (cp >= 0x0410 && cp <= 0x042F) return cp + 0x20;
  if (cp >= 0x0400 && cp <= 0x040F) return cp + 0x50;
  return cp;
}

// Compatibility folds for forms that show up in web text; a pragmatic subset
// of the full Unicode compatibility decomposition.
void compat_fold(char32_t cp, std::vector<char32_t>& out) {
  // Full-width ASCII block.
  if (cp >= 0xFF01 && cp <= 0xFF5E) {
    out.push_back(cp - 0xFEE0);
    return;
  }
  switch (cp) {
    case 0xFB00: out.push_back(U'f'); out.push_back(U'f'); return;
    case 0xFB01: out.push_back(U'f'); out.push_back(U'i'); return;
    case 0xFB02: out.push_back(U'f'); out.push_back(U'l'); return;
    case 0xFB03: out.push_back(U'f'); out.push_back(U'f'); out.push_back(U'i'); return;
    case 0xFB04: out.push_back(U'f'); out.push_back(U'f'); out.push_back(U'l'); return;
    case 0x2160: out.push_back(U'i'); return;   // Roman numeral I
    case 0x2126: out.push_back(0x03C9); return; // ohm sign -> omega
    default: out.push_back(cp); return;
  }
}

}  // namespace

std::string normalize(std::string_view text) {
  std::vector<char32_t> folded;
  folded.reserve(text.size());
  size_t i = 0;
  std::vector<char32_t> buf;
  while (i < text.size()) {
    char32_t cp = decode_utf8(text, i);
    buf.clear();
    compat_fold(cp, buf);
    for (char32_t f : buf) folded.push_back(to_lower(f));
  }

  std::string out;
  out.reserve(text.size());
  bool pending_space = false;
  bool emitted_any = false;
  for (char32_t cp : folded) {
    if (is_space(cp)) {
      pending_space = emitted_any;
      continue;
    }
    if (pending_space) {
      out += ' ';
      pending_space = false;
    }
    encode_utf8(cp, out);
    emitted_any = true;
  }
  return out;
}

}  // namespace ltkg
