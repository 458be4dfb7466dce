#pragma once

#include <string>
#include <string_view>

namespace ltkg {

// Canonical text form used for all surface matching: case-folded,
// compatibility-folded (full-width forms, common ligatures, non-breaking
// spaces), with whitespace runs collapsed to single spaces and ends trimmed.
// Idempotent: normalize(normalize(x)) == normalize(x).
//
// Case folding covers ASCII, Latin-1, Latin Extended-A, Greek and Cyrillic;
// other scripts pass through unchanged. Diacritics are never stripped.
std::string normalize(std::string_view text);

}  // namespace ltkg
