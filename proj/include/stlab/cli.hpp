#pragma once

// Command-line front end. run_cli() is what the stlab executable calls; it is
// kept in a header so the test suite can drive it in-process.

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "stlab/stlab.hpp"

namespace stlab::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 1;
inline constexpr int kExitCap = 2;

struct RunConfig {
  std::string command;
  int m = 0;
  int delta = 0;
  int n = 0;
  int d = 0;
  std::string frame = "cluster";
  int order = 1;
  std::string format;
  std::size_t max_elements = 1'000'000;
  double max_seconds = 600.0;
  int threads = 1;
  std::string output;
  int max_c = 6;
  int max_delta = 16;

  EnumerateOptions caps() const { return {max_elements, max_seconds, threads}; }
};

/// Cells of the equivalence and lattice tables, keyed by (c, delta).
inline std::vector<std::pair<int, int>> equivalence_cells() {
  std::vector<std::pair<int, int>> out;
  for (int delta = 4; delta <= 16; ++delta) out.emplace_back(4, delta);
  for (int delta = 4; delta <= 6; ++delta) out.emplace_back(5, delta);
  out.emplace_back(6, 4);
  return out;
}

inline std::vector<std::pair<int, int>> lattice_cells() {
  std::vector<std::pair<int, int>> out;
  for (int delta = 4; delta <= 16; ++delta) out.emplace_back(4, delta);
  for (int delta = 4; delta <= 8; ++delta) out.emplace_back(5, delta);
  out.emplace_back(6, 4);
  return out;
}

struct TableCell {
  std::size_t elements = 0;
  bool capped = false;
  std::optional<bool> equal;
  std::optional<bool> lattice;
  std::optional<std::pair<std::string, std::string>> lattice_witness;
};

namespace detail {

inline std::size_t display_width(const std::string& s) {
  std::size_t w = 0;
  for (unsigned char ch : s)
    if ((ch & 0xC0) != 0x80) ++w;
  return w;
}

inline std::string pad(const std::string& s, std::size_t width) {
  std::size_t w = display_width(s);
  return w >= width ? s : std::string(width - w, ' ') + s;
}

inline std::string mark(bool v) { return v ? "✓" : "✗"; }

inline const char* kTimeout = "—";

inline nlohmann::json with_schema(nlohmann::json j) {
  nlohmann::json out = {{"schema", kSchema}};
  out.update(j);
  return out;
}

inline std::string witness_text(const StasheffTamariPoset& p, std::pair<std::size_t, std::size_t> w) {
  return p.label(w.first) + " and " + p.label(w.second);
}

}  // namespace detail

inline std::map<std::pair<int, int>, TableCell> compute_tables(const RunConfig& cfg) {
  std::map<std::pair<int, int>, TableCell> cells;
  auto eq = equivalence_cells();
  auto lat = lattice_cells();
  auto wanted = [&](std::pair<int, int> cell) { return cell.first <= cfg.max_c && cell.second <= cfg.max_delta; };
  std::vector<std::pair<int, int>> all = eq;
  for (auto c : lat)
    if (std::find(all.begin(), all.end(), c) == all.end()) all.push_back(c);
  std::sort(all.begin(), all.end());
  for (auto cell : all) {
    if (!wanted(cell)) continue;
    auto [c, delta] = cell;
    TableCell out;
    try {
      auto p = enumerate(c + delta, delta, cfg.caps());
      out.elements = p.size();
      if (std::find(eq.begin(), eq.end(), cell) != eq.end()) out.equal = orders_equal(p);
      if (std::find(lat.begin(), lat.end(), cell) != lat.end()) {
        auto check = check_lattice(p, Order::First, cfg.threads);
        out.lattice = check.is_lattice;
        if (check.witness) out.lattice_witness = std::make_pair(p.label(check.witness->first), p.label(check.witness->second));
      }
    } catch (const ResourceError& e) {
      out.capped = true;
      out.elements = e.partial_count();
    }
    cells[cell] = out;
  }
  return cells;
}

inline std::string render_tables(const std::map<std::pair<int, int>, TableCell>& cells) {
  int max_c = 0;
  int max_delta = 0;
  for (const auto& [key, v] : cells) {
    max_c = std::max(max_c, key.first);
    max_delta = std::max(max_delta, key.second);
  }
  auto eq = equivalence_cells();
  auto lat = lattice_cells();
  std::ostringstream os;
  auto table = [&](const std::string& title, const std::vector<std::pair<int, int>>& members, auto cell_text) {
    os << title << "\n";
    os << detail::pad("c\\delta", 8);
    for (int delta = 4; delta <= max_delta; ++delta) os << detail::pad(std::to_string(delta), 7);
    os << "\n";
    for (int c = 4; c <= max_c; ++c) {
      os << detail::pad(std::to_string(c), 8);
      for (int delta = 4; delta <= max_delta; ++delta) {
        auto it = cells.find({c, delta});
        bool member = std::find(members.begin(), members.end(), std::make_pair(c, delta)) != members.end();
        std::string text;
        if (it != cells.end() && member) text = it->second.capped ? detail::kTimeout : cell_text(it->second);
        os << detail::pad(text, 7);
      }
      os << "\n";
    }
    os << "\n";
  };
  table("Equivalence of the higher Stasheff-Tamari orders for C(c+delta,delta)", eq,
        [](const TableCell& t) { return detail::mark(*t.equal); });
  table("Lattice property for S1(c+delta,delta)", lat, [](const TableCell& t) { return detail::mark(*t.lattice); });
  std::vector<std::pair<int, int>> any;
  for (const auto& [key, v] : cells) any.push_back(key);
  table("Number of triangulations of C(c+delta,delta)", any, [](const TableCell& t) { return std::to_string(t.elements); });
  bool header = false;
  for (const auto& [key, v] : cells)
    if (v.lattice_witness) {
      if (!header) os << "Pairs without a join in S1:\n";
      header = true;
      os << "  C(" << key.first + key.second << "," << key.second << "): " << v.lattice_witness->first << " and "
         << v.lattice_witness->second << "\n";
    }
  return os.str();
}

inline nlohmann::json tables_json(const std::map<std::pair<int, int>, TableCell>& cells) {
  nlohmann::json rows = nlohmann::json::array();
  for (const auto& [key, v] : cells) {
    nlohmann::json row = {{"c", key.first}, {"delta", key.second}, {"m", key.first + key.second}};
    if (v.capped) {
      row["status"] = "timeout";
      row["partial_elements"] = v.elements;
    } else {
      row["status"] = "done";
      row["elements"] = v.elements;
      if (v.equal) row["orders_equal"] = *v.equal;
      if (v.lattice) row["lattice_first_order"] = *v.lattice;
      if (v.lattice_witness) row["lattice_witness"] = {v.lattice_witness->first, v.lattice_witness->second};
    }
    rows.push_back(row);
  }
  return detail::with_schema({{"cells", rows}});
}

/// Executes one command; returns the process exit code.
inline int execute(const RunConfig& cfg, std::ostream& out) {
  const std::string fmt = cfg.format;
  if (cfg.command == "tables") {
    auto cells = compute_tables(cfg);
    if (fmt == "json") out << tables_json(cells).dump(2) << "\n";
    else out << render_tables(cells);
    for (const auto& [key, v] : cells)
      if (v.capped) return kExitCap;
    return kExitOk;
  }
  if (cfg.command == "green") {
    const Frame frame = cfg.frame == "tilting" ? Frame::Tilting : Frame::Cluster;
    std::vector<GreenClass> classes;
    if (frame == Frame::Cluster) {
      classes = green_sequences(cfg.n, cfg.d, cfg.caps());
    } else {
      auto p = enumerate(cfg.n + 2 * cfg.d, 2 * cfg.d + 1, cfg.caps());
      for (std::size_t i = 0; i < p.size(); ++i) classes.push_back({p.odd_element(i), chain_from_odd(p.odd_element(i), frame)});
    }
    if (fmt == "json") {
      nlohmann::json list = nlohmann::json::array();
      for (const auto& g : classes) list.push_back({{"triangulation", to_json(g.triangulation)}, {"chain", to_json(g.chain)}});
      out << detail::with_schema({{"n", cfg.n}, {"d", cfg.d}, {"frame", to_string(frame)}, {"classes", list}}).dump(2) << "\n";
    } else {
      out << classes.size() << " classes of maximal chains for A_" << cfg.n << "^" << cfg.d << " (" << to_string(frame)
          << ")\n";
      for (const auto& g : classes)
        out << g.triangulation.str() << "  mutations=" << g.chain.mutations() << "  sigma=" << join_tuples(g.chain.sigma)
            << "\n";
    }
    return kExitOk;
  }

  auto p = enumerate(cfg.m, cfg.delta, cfg.caps());
  if (cfg.command == "enumerate") {
    if (fmt == "json") {
      nlohmann::json elements = nlohmann::json::array();
      for (std::size_t i = 0; i < p.size(); ++i) elements.push_back(element_json(p, i));
      out << detail::with_schema({{"m", p.m}, {"delta", p.delta}, {"count", p.size()}, {"elements", elements}}).dump(2) << "\n";
    } else {
      out << p.size() << " triangulations of C(" << p.m << "," << p.delta << ")\n";
      for (std::size_t i = 0; i < p.size(); ++i) out << i << "  " << p.label(i) << "\n";
    }
  } else if (cfg.command == "hasse") {
    if (fmt == "json") {
      out << detail::with_schema(to_json(p)).dump(2) << "\n";
    } else if (fmt == "table") {
      for (std::size_t i = 0; i < p.size(); ++i)
        for (auto j : p.hasse1[i]) out << p.label(i) << " -> " << p.label(j) << "\n";
    } else {
      out << to_dot(p);
    }
  } else if (cfg.command == "compare-orders") {
    auto cmp = compare_orders(p);
    if (fmt == "json") {
      nlohmann::json w = nullptr;
      if (cmp.witness) w = {cmp.witness->first, cmp.witness->second};
      out << detail::with_schema({{"m", p.m},
                                  {"delta", p.delta},
                                  {"elements", p.size()},
                                  {"equal", cmp.equal},
                                  {"first_within_second", cmp.first_within_second},
                                  {"witness", w}})
                 .dump(2)
          << "\n";
    } else {
      out << (cmp.equal ? "equal" : "unequal") << "\n";
      if (cmp.witness) {
        out << "witness: " << p.label(cmp.witness->first) << (cmp.witness_in_first ? " <=1 " : " <=2 ")
            << p.label(cmp.witness->second) << (cmp.witness_in_first ? " but not <=2" : " but not <=1") << "\n";
      }
    }
  } else if (cfg.command == "check-lattice") {
    const Order which = cfg.order == 2 ? Order::Second : Order::First;
    auto check = check_lattice(p, which, cfg.threads);
    if (fmt == "json") {
      nlohmann::json w = nullptr;
      if (check.witness) w = {element_json(p, check.witness->first), element_json(p, check.witness->second)};
      out << detail::with_schema({{"m", p.m},
                                  {"delta", p.delta},
                                  {"order", cfg.order},
                                  {"elements", p.size()},
                                  {"lattice", check.is_lattice},
                                  {"witness", w}})
                 .dump(2)
          << "\n";
    } else {
      out << (check.is_lattice ? "lattice" : "not a lattice") << "\n";
      if (check.witness) out << "witness: " << detail::witness_text(p, *check.witness) << " have no join\n";
    }
  } else if (cfg.command == "embed") {
    auto check = check_boolean_embedding(p);
    std::vector<Tuple> ground = p.odd() ? embedding_ground_odd(p.m, p.d()) : embedding_ground_even(p.m, p.d());
    std::vector<std::vector<Tuple>> images;
    for (std::size_t i = 0; i < p.size(); ++i)
      images.push_back(p.odd() ? boolean_embedding_odd(p.odd_element(i)) : boolean_embedding_even(p.even(i)));
    if (fmt == "json") {
      nlohmann::json imgs = nlohmann::json::array();
      for (const auto& im : images) imgs.push_back(tuples_json(im));
      out << detail::with_schema({{"m", p.m},
                                  {"delta", p.delta},
                                  {"ground", tuples_json(ground)},
                                  {"images", imgs},
                                  {"injective", check.injective},
                                  {"order_compatible", check.order_compatible}})
                 .dump(2)
          << "\n";
    } else {
      out << "ground set " << join_tuples(ground) << " (" << ground.size() << ")\n";
      out << "injective: " << (check.injective ? "yes" : "no") << "\n";
      out << "order-compatible: " << (check.order_compatible ? "yes" : "no") << "\n";
      for (std::size_t i = 0; i < p.size(); ++i) out << p.label(i) << " -> " << join_tuples(images[i]) << "\n";
    }
  }
  return kExitOk;
}

inline int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Triangulations of cyclic polytopes and the higher Stasheff-Tamari orders", "stlab"};
  app.require_subcommand(1);
  RunConfig cfg;

  auto add_caps = [&](CLI::App* sub) {
    sub->add_option("--max-elements", cfg.max_elements, "Element cap per enumeration")->check(CLI::PositiveNumber);
    sub->add_option("--max-seconds", cfg.max_seconds, "Wall-clock cap per enumeration")->check(CLI::PositiveNumber);
    sub->add_option("--threads", cfg.threads, "Worker threads")->check(CLI::PositiveNumber);
    sub->add_option("--output", cfg.output, "Write the result to this file");
  };
  auto add_polytope = [&](CLI::App* sub) {
    sub->add_option("--m", cfg.m, "Number of vertices")->required()->check(CLI::Range(1, kMaxVertices));
    sub->add_option("--delta", cfg.delta, "Dimension")->required()->check(CLI::PositiveNumber);
  };

  struct Sub {
    const char* name;
    const char* help;
  };
  const std::vector<Sub> polytope_commands = {
      {"enumerate", "List every triangulation of C(m,delta)"},
      {"hasse", "Hasse diagram of the first order"},
      {"compare-orders", "Check whether the two orders coincide"},
      {"check-lattice", "Check the lattice property of one order"},
      {"embed", "Boolean embedding of the second order"},
  };
  std::map<std::string, std::string> default_format = {
      {"enumerate", "table"}, {"hasse", "dot"}, {"compare-orders", "table"}, {"check-lattice", "table"}, {"embed", "table"},
      {"green", "table"},     {"tables", "table"}};
  std::string format_flag;
  for (const auto& s : polytope_commands) {
    auto* sub = app.add_subcommand(s.name, s.help);
    add_polytope(sub);
    add_caps(sub);
    sub->add_option("--format", format_flag, "Output format")->check(CLI::IsMember({"json", "dot", "table"}));
    if (std::string(s.name) == "check-lattice")
      sub->add_option("--order", cfg.order, "Which order (1 or 2)")->check(CLI::IsMember({1, 2}));
  }
  auto* green = app.add_subcommand("green", "Representative maximal green sequences, one per triangulation");
  green->add_option("--n", cfg.n, "Algebra parameter n")->required()->check(CLI::PositiveNumber);
  green->add_option("--d", cfg.d, "Algebra parameter d")->required()->check(CLI::PositiveNumber);
  green->add_option("--frame", cfg.frame, "tilting or cluster")->check(CLI::IsMember({"tilting", "cluster"}));
  green->add_option("--format", format_flag, "Output format")->check(CLI::IsMember({"json", "table"}));
  add_caps(green);
  auto* tables = app.add_subcommand("tables", "Reproduce the equivalence and lattice tables");
  tables->add_option("--max-c", cfg.max_c, "Largest c to compute")->check(CLI::Range(4, 6));
  tables->add_option("--max-delta", cfg.max_delta, "Largest delta to compute")->check(CLI::Range(4, 16));
  tables->add_option("--format", format_flag, "Output format")->check(CLI::IsMember({"json", "table"}));
  add_caps(tables);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }
  cfg.command = app.get_subcommands().front()->get_name();
  cfg.format = format_flag.empty() ? default_format[cfg.command] : format_flag;
  if (cfg.format == "dot" && cfg.command != "hasse") {
    err << "error: --format dot is only available for hasse\n";
    return kExitUsage;
  }

  std::ostringstream buffer;
  int code = kExitOk;
  try {
    code = execute(cfg, buffer);
  } catch (const ResourceError& e) {
    err << e.what() << " (" << e.partial_count() << " triangulations found)\n";
    return kExitCap;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  if (cfg.output.empty()) {
    out << buffer.str();
  } else {
    std::ofstream f(cfg.output, std::ios::binary);
    if (!f) {
      err << "error: cannot write " << cfg.output << "\n";
      return kExitUsage;
    }
    f << buffer.str();
  }
  return code;
}

}  // namespace stlab::cli
