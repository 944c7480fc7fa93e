#pragma once

#include <string>

#include "qsslab/access.hpp"
#include "qsslab/schemes.hpp"

namespace qss {

// Scheme document (JSON):
//   players  : [{"label": str, "dim": int}, ...]           (required for matrix encodings)
//   encoding : {"builtin": "cgl23"}
//            | {"threshold": {"t": int, "n": int, "q": int}}
//            | {"matrix": {"rows": int, "cols": int, "entries": [[re, im], ...]}}
//   access   : [[label, ...], ...]                          (minimal authorized sets)
//   ensemble : [{"p": real, "amplitudes": [[re, im], ...]}, ...]   (optional)
//   name     : str                                          (optional)
// Complex numbers are always [re, im] pairs; matrices are row-major.
SchemeSpec load_scheme(const std::string& document);

SchemeSpec load_scheme_file(const std::string& path);

// Access structure from a scheme document, a bare {players, access}
// document, or the shorthand strings "vernam" / "threshold:t,n".
AccessStructure load_structure(const std::string& text_or_shorthand);

AccessStructure load_structure_file(const std::string& path);

// Canonical JSON form of a scheme (inverse of load_scheme up to defaults).
std::string scheme_to_document(const SchemeSpec& scheme);

}  // namespace qss
