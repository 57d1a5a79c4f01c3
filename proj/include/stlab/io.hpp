#pragma once

// JSON and DOT export.

#include <json.hpp>

#include <sstream>
#include <string>
#include <vector>

#include "stlab/algebra.hpp"
#include "stlab/core.hpp"
#include "stlab/even.hpp"
#include "stlab/odd.hpp"
#include "stlab/poset.hpp"

namespace stlab {

inline constexpr const char* kSchema = "st-lab/1";

inline nlohmann::json tuples_json(const std::vector<Tuple>& ts) {
  nlohmann::json out = nlohmann::json::array();
  for (const auto& t : ts) out.push_back(t.entries());
  return out;
}

inline nlohmann::json to_json(const EvenTriangulation& t) {
  return {{"m", t.m()}, {"d", t.d()}, {"kind", "even"}, {"e", tuples_json(t.e_set())}};
}

inline nlohmann::json to_json(const OddTriangulation& t) {
  return {{"m", t.m()}, {"d", t.d()}, {"kind", "odd"}, {"internal", tuples_json(t.internal_set())}};
}

inline nlohmann::json element_json(const StasheffTamariPoset& p, std::size_t i) {
  return p.odd() ? to_json(p.odd_element(i)) : to_json(p.even(i));
}

inline nlohmann::json to_json(const StasheffTamariPoset& p) {
  nlohmann::json elements = nlohmann::json::array();
  for (std::size_t i = 0; i < p.size(); ++i) elements.push_back(element_json(p, i));
  nlohmann::json hasse = nlohmann::json::array();
  for (std::size_t i = 0; i < p.size(); ++i)
    for (auto j : p.hasse1[i]) hasse.push_back({i, j});
  nlohmann::json rel2 = nlohmann::json::array();
  for (std::size_t i = 0; i < p.size(); ++i) p.rel2[i].for_each([&](std::size_t j) { rel2.push_back({i, j}); });
  return {{"m", p.m}, {"delta", p.delta}, {"elements", elements}, {"hasse1", hasse}, {"rel2_pairs", rel2}};
}

inline nlohmann::json to_json(const TiltingChain& c) {
  nlohmann::json steps = nlohmann::json::array();
  for (const auto& s : c.steps) steps.push_back(tuples_json(s));
  return {{"n", c.n}, {"d", c.d}, {"frame", to_string(c.frame)}, {"steps", steps}, {"sigma", tuples_json(c.sigma)}};
}

inline std::string dot_escape(const std::string& s) {
  std::string out;
  for (char ch : s) {
    if (ch == '"' || ch == '\\') out += '\\';
    out += ch;
  }
  return out;
}

/// Hasse diagram of the first order drawn upward; covers of the second order
/// that are not relations of the first order are dashed.
inline std::string to_dot(const StasheffTamariPoset& p) {
  std::ostringstream os;
  os << "digraph S_" << p.m << "_" << p.delta << " {\n  rankdir=BT;\n  node [shape=box];\n";
  for (std::size_t i = 0; i < p.size(); ++i) os << "  n" << i << " [label=\"" << dot_escape(p.label(i)) << "\"];\n";
  for (std::size_t i = 0; i < p.size(); ++i)
    for (auto j : p.hasse1[i]) os << "  n" << i << " -> n" << j << ";\n";
  if (!orders_equal(p))
    for (auto [i, j] : transitive_reduction(p.rel2))
      if (!p.rel1[i].test(j)) os << "  n" << i << " -> n" << j << " [style=dashed];\n";
  os << "}\n";
  return os.str();
}

inline std::string to_dot(const QuiverPresentation& q) {
  std::ostringstream os;
  os << "digraph Q_" << q.d << "_" << q.n << " {\n  rankdir=LR;\n";
  for (const auto& v : q.vertices) os << "  \"" << v.str() << "\";\n";
  for (const auto& a : q.arrows) os << "  \"" << a.source.str() << "\" -> \"" << a.target.str() << "\";\n";
  os << "}\n";
  return os.str();
}

}  // namespace stlab
