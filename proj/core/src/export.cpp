#include "boolinv/export.hpp"

#include <sstream>

#include "json.hpp"

namespace boolinv {

using nlohmann::ordered_json;

std::string poset_json(const FacePoset& p, const BettiVector& betti) {
  ordered_json j;
  j["system"] = p.system().name;
  j["cells"] = ordered_json::array();
  for (const Cell& c : p.cells()) j["cells"].push_back({{"canon", to_string(c)}, {"rank", c.rank()}});
  j["covers"] = ordered_json::array();
  for (CellId id = 0; id < p.size(); ++id)
    for (CellId f : p.facets(id)) j["covers"].push_back({f, id});
  j["f"] = f_vector(p);
  j["betti"] = betti.values;
  return j.dump();
}

namespace {

void dot_nodes(std::ostringstream& out, const FacePoset& p) {
  for (int r = 0; r <= p.top_rank(); ++r) {
    out << "  { rank=same;";
    for (CellId id = p.rank_begin(r); id < p.rank_end(r); ++id) out << " c" << id << ";";
    out << " }\n";
  }
  for (CellId id = 0; id < p.size(); ++id)
    out << "  c" << id << " [label=\"" << to_string(p.cell(id)) << "\"];\n";
}

}  // namespace

std::string poset_dot(const FacePoset& p) {
  std::ostringstream out;
  out << "digraph hasse {\n  rankdir=BT;\n  node [shape=box];\n";
  dot_nodes(out, p);
  for (CellId id = 0; id < p.size(); ++id)
    for (CellId f : p.facets(id)) out << "  c" << f << " -> c" << id << " [dir=none];\n";
  out << "}\n";
  return out.str();
}

std::string matching_json(const FacePoset& p, const Matching& m, const MorseReport& report) {
  ordered_json j;
  j["system"] = p.system().name;
  j["pairs"] = ordered_json::array();
  for (CellId id = 0; id < m.size(); ++id) {
    if (m.mate(id) > id) j["pairs"].push_back({to_string(p.cell(id)), to_string(p.cell(m.mate(id)))});
  }
  j["critical"] = ordered_json::array();
  for (CellId c : report.critical) j["critical"].push_back(to_string(p.cell(c)));
  j["acyclic"] = report.acyclic;
  return j.dump();
}

std::string matching_dot(const FacePoset& p, const Matching& m) {
  std::ostringstream out;
  out << "digraph morse {\n  rankdir=BT;\n  node [shape=box];\n";
  dot_nodes(out, p);
  for (CellId id = 0; id < p.size(); ++id) {
    if (m.is_critical(id)) out << "  c" << id << " [style=filled, fillcolor=yellow];\n";
    for (CellId f : p.facets(id)) {
      if (m.mate(f) == id) {
        out << "  c" << f << " -> c" << id << " [color=red, penwidth=2];\n";
      } else {
        out << "  c" << id << " -> c" << f << ";\n";
      }
    }
  }
  out << "}\n";
  return out.str();
}

}  // namespace boolinv
