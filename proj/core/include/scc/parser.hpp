#pragma once

// Reader and printer for `.scc` declaration files:
//
//   (define-source Camera Picture)
//   (define-action Screen Picture)
//   (define-context MakeAd String [when-required get IP])
//   (define-context ComposeDisplay Picture
//     [when-provided ProcessPicture get MakeAd maybe_publish])
//   (define-controller Display [when-provided ComposeDisplay do Screen])
//
// `;` starts a comment that runs to end of line.

#include <cstddef>
#include <string>
#include <vector>

#include "scc/types.hpp"

namespace scc {

struct SourceText {
  std::string content;
  std::string origin = "<memory>";
};

struct SourceLocation {
  std::size_t line = 1;
  std::size_t column = 1;

  friend bool operator==(const SourceLocation&, const SourceLocation&) = default;
};

struct LocatedSpecification {
  Specification spec;
  std::vector<SourceLocation> locations;  // one per declaration, at its '('
};

/// Throws ParseError (PARSE_ERROR, UNKNOWN_KEYWORD or UNKNOWN_TYPE).
/// Cross-references are not checked here; see validate().
Specification parse(const SourceText& text);
LocatedSpecification parse_located(const SourceText& text);

/// Canonical text: one declaration per line, single spaces, trailing newline.
std::string pretty_print(const Specification& spec);
std::string pretty_print(const Declaration& decl);

}  // namespace scc
