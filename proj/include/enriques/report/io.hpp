#pragma once

#include <string>

#include "enriques/derivations/derivation.hpp"
#include "enriques/dynkin/graph.hpp"
#include "enriques/rules/rules.hpp"
#include "enriques/weierstrass/curve.hpp"

namespace enriques::io {

/// Whole file as text. Throws InvalidParameter when it cannot be read.
std::string read_file(const std::string& path);

/// {"field": {"k": 1|2, "base": "t"|"none"}, "a1": "...", ..., "a6": "..."}.
/// Throws ParseError.
weierstrass::WeierstrassCurve curve_from_json(const std::string& text);
std::string curve_to_json(const weierstrass::WeierstrassCurve& c);

/// {"coeff_t": "...", "coeff_x": "...", "param": "symbolic" | {"a": "...", "k": n}}.
/// A specialized a lives in GF(2^k); k defaults to 2 when the text mentions
/// w and to 1 otherwise. Throws ParseError, InvalidParameter.
derivations::Derivation derivation_from_json(const std::string& text);

/// {"vertices": [...], "edges": [["a", "b", m], ...]}. Throws ParseError.
dynkin::DualGraph graph_from_json(const std::string& text);
std::string graph_to_json(const dynkin::DualGraph& g);

/// A built-in name, else a path to a file in the module format. Throws
/// UnknownBuiltin when neither exists.
weierstrass::WeierstrassCurve resolve_curve(const std::string& source);
derivations::Derivation resolve_derivation(const std::string& source);
dynkin::DualGraph resolve_graph(const std::string& source);
rules::FibrationFacts resolve_facts(const std::string& source);

}  // namespace enriques::io
