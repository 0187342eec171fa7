#ifndef NSGP_RENDER_HPP
#define NSGP_RENDER_HPP

#include <span>
#include <string>

#include <nlohmann/json.hpp>

#include "nsgp/covariety.hpp"
#include "nsgp/semigroup.hpp"

namespace nsgp {

using Json = nlohmann::ordered_json;

/// "{2,4}" for a sorted set.
std::string set_to_string(std::span<const Int> xs);

/// Generator-and-elements line in the usual notation, e.g. the minimum of
/// R(7,4) prints as "⟨4,9,10,11⟩ = {0,4,8,→}".
std::string to_text(const NumericalSemigroup& s);

/// Canonical encoding: multiplicity, frobenius, genus, apery (table in
/// residue order), min_generators, small_elements (up to F+1).
Json to_json(const NumericalSemigroup& s);

/// Vertex list plus parent indices and adjoined edge labels.
Json to_json(const CovarietyTree& tree);

/// Graphviz digraph; vertex labels use the generator rendering, edge labels
/// carry the adjoined element.
std::string to_dot(const CovarietyTree& tree);

}  // namespace nsgp

#endif  // NSGP_RENDER_HPP
