#pragma once

#include <rootgraded/coordinate.hpp>

#include <string>

namespace rootgraded {

// ===== structure constant documents =====
//
// Algebras travel as JSON documents.  A structure-constant document holds
// "dim", a 0/1 "parity" array, a sparse "table" of quadruples
// [i, j, k, "num/den"] in row-major order, and optionally "labels"; the
// associative flavour adds a "unit" array of Scalar strings.  Coordinate
// data embeds one document per layer plus dense action matrices and the
// pairing as quadruples [i, j, t, "num/den"].  Serialization always emits
// canonical Scalar strings, so serialize-then-parse reproduces every table
// verbatim.

std::string to_document(const AssocSuperalgebra& A);
std::string to_document(const LieSuperalgebraSC& L);
std::string to_document(const CoordinateData& cd);

// "assoc", "lie" or "coordinate"; throws document_error on anything else.
std::string document_kind(const std::string& text);

// Parsers validate the schema (document_error with a field diagnostic) and
// then construct the object, so every type invariant is re-checked on load.
AssocSuperalgebra assoc_from_document(const std::string& text);
LieSuperalgebraSC lie_from_document(const std::string& text);
CoordinateData coordinate_from_document(const std::string& text);

std::string read_text_file(const std::string& path);
void write_text_file(const std::string& path, const std::string& text);

}  // namespace rootgraded
