#include "nsgp/render.hpp"

#include <sstream>

namespace nsgp {

std::string set_to_string(std::span<const Int> xs) {
  std::ostringstream out;
  out << '{';
  for (std::size_t i = 0; i < xs.size(); ++i) {
    if (i) out << ',';
    out << xs[i];
  }
  out << '}';
  return out.str();
}

std::string to_text(const NumericalSemigroup& s) {
  std::ostringstream out;
  out << "⟨";
  const auto gens = s.min_generators();
  for (std::size_t i = 0; i < gens.size(); ++i) {
    if (i) out << ',';
    out << gens[i];
  }
  out << "⟩ = {";
  for (Int x : s.small_elements()) out << x << ',';
  out << "→}";
  return out.str();
}

Json to_json(const NumericalSemigroup& s) {
  Json j;
  j["multiplicity"] = s.multiplicity();
  j["frobenius"] = s.frobenius();
  j["genus"] = s.genus();
  j["apery"] = s.apery_table();
  j["min_generators"] = s.min_generators();
  j["small_elements"] = s.small_elements();
  return j;
}

Json to_json(const CovarietyTree& tree) {
  Json j;
  j["count"] = tree.size();
  Json verts = Json::array();
  for (const auto& v : tree.vertices) verts.push_back(to_json(v));
  j["semigroups"] = std::move(verts);
  Json parents = Json::array();
  for (std::size_t i = 0; i < tree.size(); ++i)
    parents.push_back(tree.parent[i] == kNoParent ? Json(nullptr) : Json(tree.parent[i]));
  j["parent"] = std::move(parents);
  Json added = Json::array();
  for (std::size_t i = 0; i < tree.size(); ++i)
    added.push_back(tree.adjoined[i] < 0 ? Json(nullptr) : Json(tree.adjoined[i]));
  j["adjoined"] = std::move(added);
  return j;
}

std::string to_dot(const CovarietyTree& tree) {
  std::ostringstream out;
  out << "digraph covariety {\n";
  out << "  node [shape=box];\n";
  for (std::size_t i = 0; i < tree.size(); ++i) {
    out << "  n" << i << " [label=\"⟨";
    const auto gens = tree.vertices[i].min_generators();
    for (std::size_t k = 0; k < gens.size(); ++k) {
      if (k) out << ',';
      out << gens[k];
    }
    out << "⟩\"];\n";
  }
  for (std::size_t i = 1; i < tree.size(); ++i)
    out << "  n" << tree.parent[i] << " -> n" << i << " [label=\"" << tree.adjoined[i]
        << "\"];\n";
  out << "}\n";
  return out.str();
}

}  // namespace nsgp
