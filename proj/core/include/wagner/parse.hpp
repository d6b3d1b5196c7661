#pragma once

#include <string>

#include "wagner/endomorphism.hpp"

namespace wagner {

struct ParseResult {
  Endomorphism endomorphism;
  /// True when auto_reduce rewrote at least one unreduced image (surfaced
  /// as a warning by the CLI).
  bool reduced_any = false;
};

/// Letter format: semicolon-separated rules like `a->abbaB; b->baBab`.
/// Lowercase letters are generators, uppercase their inverses, `1` the empty
/// word; whitespace is ignored.  The rank is the number of rules, and rule t
/// must define the t-th generator.  Unreduced images are rejected unless
/// auto_reduce is set.  Failures throw ParseError carrying the byte offset.
ParseResult parse_endomorphism(const std::string& text, bool auto_reduce = false);

/// Structured numeric format: {"rank": m, "images": [[1,2,2,1,-2], ...]}
/// with letters as signed generator indices.
ParseResult parse_endomorphism_json(const std::string& text,
                                    bool auto_reduce = false);

/// Dispatches on the leading character: '{' selects the structured format,
/// anything else the letter format.
ParseResult parse_endomorphism_any(const std::string& text,
                                   bool auto_reduce = false);

/// `a..z` with uppercase inverses when the rank allows it (m <= 26), the
/// signed-index array form otherwise.  The empty word renders as `1`.
std::string format_word(const Word& w, int rank);

/// Letter format with "; " separators for m <= 26, structured numeric format
/// beyond; parse of the output reproduces the endomorphism exactly.
std::string format_endomorphism(const Endomorphism& phi);

}  // namespace wagner
