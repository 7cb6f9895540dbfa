#pragma once

// Parsing and serialization: plain-text and JSON matrices, structure-constant
// algebras, polynomials, and report rendering used by the CLI.

#include "json.hpp"

#include <string>
#include <vector>

#include "evo/algebra.hpp"
#include "evo/classify.hpp"
#include "evo/decompose.hpp"
#include "evo/evolution.hpp"
#include "evo/graph.hpp"
#include "evo/matrix.hpp"

namespace evo {

// Plain text: one row per line, entries whitespace-separated integers or
// "p/q"; blank lines and '#' comments ignored.
Mat parse_matrix_text(const std::string& text);

// {"matrix": [[...]], "labels": [...]?} with entries as integers or "p/q"
// strings; bare JSON arrays-of-arrays are accepted too.
Mat parse_matrix_json(const nlohmann::json& j);

// Auto-detects JSON (first non-space '{' or '[') vs plain text.
EvoAlg parse_evolution(const std::string& content);

std::string matrix_to_text(const Mat& m);
nlohmann::json matrix_to_json(const Mat& m);
nlohmann::json evolution_to_json(const EvoAlg& e);

// {"dim": n, "constants": [[[...]]], "labels": [...]?}
Algebra parse_algebra_json(const nlohmann::json& j);
nlohmann::json algebra_to_json(const Algebra& a);

// Coefficient strings, lowest degree first.
nlohmann::json poly_to_json(const Poly& p);

nlohmann::json profile_to_json(const ZeroProfile& p);
nlohmann::json witness_to_json(const Witness& w);
nlohmann::json screen_to_json(const Screen& s);
nlohmann::json report_to_json(const Report& r);
nlohmann::json digraph_to_json(const Digraph& g);

std::string read_input(const std::string& path_or_dash);  // "-" = stdin

}  // namespace evo
