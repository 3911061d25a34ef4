#include "shell.hpp"

#include <fstream>
#include <memory>
#include <ostream>
#include <sstream>

#include "CLI11.hpp"
#include "boolinv/complex.hpp"
#include "boolinv/coxsys.hpp"
#include "boolinv/error.hpp"
#include "boolinv/export.hpp"
#include "boolinv/families.hpp"
#include "boolinv/morse.hpp"
#include "boolinv/oracle.hpp"
#include "json.hpp"

namespace boolinv::shell {

namespace {

using json = nlohmann::ordered_json;

// The oracle suite enumerates every injective word; past this it gets slow.
constexpr int kOracleMaxRank = 7;

struct SystemArgs {
  std::string name;
  std::string graph_file;
  std::string order;
  unsigned threads = 1;
  std::size_t max_cells = 2'000'000;
  bool json = false;
  std::string dot_file;
};

void add_system_args(CLI::App* cmd, SystemArgs& a, bool with_dot) {
  cmd->add_option("system", a.name, "Family name such as A4, B3, I2(5), tE8, pathext(E8,10)");
  cmd->add_option("--graph", a.graph_file, "Read the Coxeter graph from a file instead");
  cmd->add_option("--order", a.order, "Reorder generators, e.g. \"3,1,2\" (1-based)");
  cmd->add_option("--threads", a.threads, "Worker threads; 0 uses every core")->capture_default_str();
  cmd->add_option("--max-cells", a.max_cells, "Abort when the complex grows past this")->capture_default_str();
  cmd->add_flag("--json", a.json, "Print JSON instead of text");
  if (with_dot) cmd->add_option("--dot", a.dot_file, "Also write a Graphviz file");
}

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::vector<int> parse_order(const std::string& text) {
  std::vector<int> order;
  std::stringstream in(text);
  std::string item;
  while (std::getline(in, item, ',')) {
    try {
      std::size_t used = 0;
      const int v = std::stoi(item, &used);
      if (used != item.size()) throw UsageError("bad --order entry '" + item + "'");
      order.push_back(v - 1);
    } catch (const std::logic_error&) {
      throw UsageError("bad --order entry '" + item + "'");
    }
  }
  return order;
}

OrderedSystem load_system(const SystemArgs& a) {
  if (a.name.empty() == a.graph_file.empty()) {
    throw UsageError("give exactly one of a family name or --graph FILE");
  }
  OrderedSystem sys;
  if (!a.graph_file.empty()) {
    std::ifstream in(a.graph_file);
    if (!in) throw UsageError("cannot read " + a.graph_file);
    std::stringstream buffer;
    buffer << in.rdbuf();
    sys.graph = parse_graph(buffer.str());
    sys.name = a.graph_file;
  } else {
    sys = family(a.name);
  }
  if (!a.order.empty()) sys = reorder(sys, parse_order(a.order));
  return sys;
}

BuildOptions build_options(const SystemArgs& a) {
  BuildOptions o;
  o.threads = a.threads;
  o.max_cells = a.max_cells;
  return o;
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream f(path);
  if (!f) throw UsageError("cannot write " + path);
  f << text;
}

std::string join(const std::vector<std::int64_t>& values) {
  std::string s;
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (i) s += ' ';
    s += std::to_string(values[i]);
  }
  return s;
}

std::string homotopy_type(const BettiVector& b, int top_dim) {
  if (b.alternating_sum() == 0 && std::all_of(b.values.begin(), b.values.end(), [](auto v) { return v == 0; })) {
    return "acyclic over GF(2)";
  }
  if (b.concentrated_in_top()) {
    return "wedge of " + std::to_string(b.top()) + " S^" + std::to_string(top_dim);
  }
  return "homology not concentrated in the top dimension";
}

int cmd_cells(const SystemArgs& a, std::ostream& out) {
  const FacePoset p = build_complex(load_system(a), build_options(a));
  if (a.json) {
    json j;
    j["system"] = p.system().name;
    j["cells"] = json::array();
    for (const Cell& c : p.cells()) j["cells"].push_back(to_string(c));
    out << j.dump(2) << "\n";
    return kOk;
  }
  out << "system: " << p.system().name << "\n";
  out << "cells: " << p.size() << "\n";
  for (CellId id = 0; id < p.size(); ++id) out << p.rank(id) << "  " << to_string(p.cell(id)) << "\n";
  return kOk;
}

int cmd_poset(const SystemArgs& a, std::ostream& out) {
  const FacePoset p = build_complex(load_system(a), build_options(a));
  if (!a.dot_file.empty()) write_file(a.dot_file, poset_dot(p));
  if (a.json) {
    out << poset_json(p, betti_gf2(p)) << "\n";
    return kOk;
  }
  out << "system: " << p.system().name << "\n";
  out << "cells: " << p.size() << "\n";
  for (CellId id = 0; id < p.size(); ++id) {
    out << to_string(p.cell(id)) << " :";
    for (CellId f : p.facets(id)) out << "  " << to_string(p.cell(f));
    out << "\n";
  }
  return kOk;
}

int cmd_homology(const SystemArgs& a, std::ostream& out) {
  const FacePoset p = build_complex(load_system(a), build_options(a));
  const BettiVector b = betti_gf2(p);
  const auto f = f_vector(p);
  if (a.json) {
    json j;
    j["system"] = p.system().name;
    j["generators"] = p.top_rank();
    j["f"] = f;
    j["euler"] = reduced_euler(p);
    j["betti"] = b.values;
    out << j.dump(2) << "\n";
    return kOk;
  }
  out << "system: " << p.system().name << "\n";
  out << "generators: " << p.top_rank() << "\n";
  out << "cells: " << p.size() << "\n";
  out << "f-vector: " << join(f) << "\n";
  out << "reduced euler: " << reduced_euler(p) << "\n";
  out << "betti (dim -1.." << p.top_rank() - 1 << "): " << join(b.values) << "\n";
  out << "homotopy: " << homotopy_type(b, p.top_rank() - 1) << "\n";
  return kOk;
}

int cmd_gamma(const SystemArgs& a, std::ostream& out) {
  const FacePoset p = build_complex(load_system(a), build_options(a));
  const auto gamma = gamma_set(p);
  std::optional<GammaPartition> partition;
  std::string note;
  if (is_path_ended(p.system())) {
    partition = partition_p123(p, build_options(a));
  } else {
    note = "not path-ended; no P1/P2/P3 split";
  }
  if (a.json) {
    json j;
    j["system"] = p.system().name;
    j["gamma"] = json::array();
    for (CellId id : gamma) {
      json c;
      c["canon"] = to_string(p.cell(id));
      if (partition) c["part"] = partition->part[id];
      j["gamma"].push_back(std::move(c));
    }
    if (partition) {
      j["p1"] = partition->p1.size();
      j["p2"] = partition->p2.size();
      j["p3"] = partition->p3.size();
    }
    out << j.dump(2) << "\n";
    return kOk;
  }
  out << "system: " << p.system().name << "\n";
  out << "gamma: " << gamma.size() << " of " << p.size() << " cells\n";
  if (partition) {
    out << "P1: " << partition->p1.size() << "  P2: " << partition->p2.size() << "  P3: " << partition->p3.size()
        << "\n";
  } else {
    out << note << "\n";
  }
  for (CellId id : gamma) {
    out << p.rank(id) << "  " << to_string(p.cell(id));
    if (partition) out << "  P" << int(partition->part[id]);
    out << "\n";
  }
  return kOk;
}

int cmd_morse(const SystemArgs& a, int base_rank, std::ostream& out) {
  GammaOptions options;
  options.build = build_options(a);
  options.base_rank = base_rank;
  const GammaMatching g = build_gamma_matching(load_system(a), options);
  const FacePoset& p = g.poset;
  const MorseReport& r = g.report;
  if (!a.dot_file.empty()) write_file(a.dot_file, matching_dot(p, g.matching));
  if (a.json) {
    out << matching_json(p, g.matching, r) << "\n";
    return r.ok() ? kOk : kVerificationFailed;
  }
  out << "system: " << p.system().name << "\n";
  out << "cells: " << p.size() << "\n";
  out << "construction: " << (g.recursive ? "recursive" : "search") << "\n";
  if (g.recursive) {
    out << "critical in truncations: " << g.critical_minus2 << " (W_{-2}), " << g.critical_minus3 << " (W_{-3})\n";
  }
  out << "pairs: " << r.pairs << "\n";
  out << "critical: " << r.critical.size() << " cells";
  if (!r.critical.empty()) {
    auto dims = r.critical_dims;
    std::sort(dims.begin(), dims.end());
    dims.erase(std::unique(dims.begin(), dims.end()), dims.end());
    out << ", dim";
    for (std::size_t i = 0; i < dims.size(); ++i) out << (i ? "," : " ") << dims[i];
  }
  out << "; acyclic: " << (r.acyclic ? "yes" : "no") << "\n";
  out << "gamma-matching: " << (r.ok() ? "yes" : "no") << "\n";
  if (!r.ok()) out << "failure: " << r.failure << "\n";
  for (CellId id : r.critical) out << "  " << to_string(p.cell(id)) << "\n";
  return r.ok() ? kOk : kVerificationFailed;
}

int cmd_table(const std::string& letter, int from, int upto, bool with_morse, const SystemArgs& a,
              std::ostream& out) {
  if (letter.size() != 1) throw UsageError("--family takes a single letter: A, B, D, E or H");
  TableOptions options;
  options.build = build_options(a);
  options.with_morse = with_morse;
  options.threads = a.threads;
  const BettiTable table = betti_table(letter[0], from, upto, options);
  out << (a.json ? table_json(table) + "\n" : format_table(table));
  return table.all_match() ? kOk : kVerificationFailed;
}

int cmd_check(const SystemArgs& a, std::ostream& out) {
  const OrderedSystem sys = load_system(a);
  const BuildOptions build = build_options(a);
  const FacePoset p = build_complex(sys, build);
  bool all_ok = true;
  auto line = [&](bool ok, const std::string& name, const std::string& detail) {
    all_ok = all_ok && ok;
    out << (ok ? "PASS " : "FAIL ") << name << ": " << detail << "\n";
  };
  auto skip = [&](const std::string& name, const std::string& why) { out << "SKIP " << name << ": " << why << "\n"; };

  out << "system: " << sys.name << "\n";
  const SimplicialReport simplicial = check_simplicial(p);
  line(simplicial.ok, "simplicial", simplicial.ok ? std::to_string(simplicial.cells_checked) + " cells" : simplicial.failure);
  const SimplicialReport pure = check_pure(p);
  line(pure.ok, "pure", pure.ok ? "every cell lies under a rank " + std::to_string(p.top_rank()) + " cell" : pure.failure);

  const BettiVector b = betti_gf2(p);
  line(b.alternating_sum() == reduced_euler(p), "euler",
       "sum (-1)^i b_i = " + std::to_string(b.alternating_sum()) + ", reduced euler = " +
           std::to_string(reduced_euler(p)));

  const bool path_ended = is_path_ended(sys);
  if (path_ended && sys.size() >= 3) {
    const RecurrenceReport rec = check_recurrence(sys, build);
    line(rec.ok, "recurrence",
         std::to_string(rec.betti) + " = " + std::to_string(rec.betti_minus2) + " + " +
             std::to_string(rec.betti_minus3) + (rec.wedge ? "" : " (homology not in top dimension)"));
  } else {
    skip("recurrence", path_ended ? "fewer than 3 generators" : "not path-ended");
  }

  if (path_ended) {
    try {
      const GammaPartition partition = partition_p123(p, build);
      const IdealReport ideal = check_patchwork(p, partition);
      line(ideal.ok, "patchwork",
           ideal.ok ? "P1=" + std::to_string(partition.p1.size()) + " P2=" + std::to_string(partition.p2.size()) +
                          " P3=" + std::to_string(partition.p3.size())
                    : ideal.failure);
    } catch (const Error& e) {
      if (e.code() != ErrorCode::kPartitionMismatch) throw;
      line(false, "patchwork", e.what());
    }
  } else {
    skip("patchwork", "not path-ended");
  }

  GammaOptions gamma;
  gamma.build = build;
  try {
    const GammaMatching g = build_gamma_matching(sys, gamma);
    const bool counts = static_cast<std::int64_t>(g.report.critical.size()) == b.top() && b.concentrated_in_top();
    line(g.report.ok() && counts, "morse",
         g.report.ok() ? std::to_string(g.report.critical.size()) + " critical cells, betti " + std::to_string(b.top())
                       : g.report.failure);
  } catch (const Error& e) {
    if (e.code() != ErrorCode::kNoGammaMatching) throw;
    line(false, "morse", e.what());
  }

  if (!a.graph_file.empty() || !a.order.empty()) {
    skip("oracle", "only for unreordered family presets");
  } else if (sys.size() > kOracleMaxRank) {
    skip("oracle", "more than " + std::to_string(kOracleMaxRank) + " generators");
  } else {
    try {
      const oracle::Model model = oracle::model_for(parse_family(a.name));
      const CoxeterGraph realized = model.realized_graph();
      if (!(realized == sys.graph)) {
        line(false, "oracle", "model generators do not realize the family graph");
      } else {
        const oracle::EquivalenceReport eq = oracle::check_equivalence(model, sys.graph);
        line(eq.ok, "oracle",
             eq.ok ? std::to_string(eq.words) + " words, " + std::to_string(eq.classes) + " classes" : eq.failure);
        if (eq.ok) {
          line(eq.classes == p.size(), "oracle-count",
               std::to_string(eq.classes) + " model classes, " + std::to_string(p.size()) + " cells");
        }
      }
    } catch (const Error& e) {
      if (e.code() != ErrorCode::kUnsupportedModel) throw;
      skip("oracle", "no permutation model for this family");
    }
  }
  out << (all_ok ? "all checks passed" : "some checks failed") << "\n";
  return all_ok ? kOk : kVerificationFailed;
}

int exit_code_for(ErrorCode code) {
  switch (code) {
    case ErrorCode::kResourceLimit:
      return kResource;
    case ErrorCode::kMalformedInput:
    case ErrorCode::kInvalidLabel:
    case ErrorCode::kAsymmetricLabel:
    case ErrorCode::kIndexOutOfRange:
    case ErrorCode::kRankOutOfRange:
    case ErrorCode::kNonInjectiveWord:
    case ErrorCode::kUnsupportedModel:
      return kUsage;
    default:
      return kVerificationFailed;
  }
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Boolean complexes of involutions in Coxeter groups"};
  app.name("boolinv");
  app.require_subcommand(1);

  SystemArgs a;
  int base_rank = 5;
  std::string letter;
  int from = 1, upto = 8;
  bool no_morse = false;

  auto* cells = app.add_subcommand("cells", "List the cells by canonical word");
  add_system_args(cells, a, false);
  auto* poset = app.add_subcommand("poset", "Print the face poset");
  add_system_args(poset, a, true);
  auto* homology = app.add_subcommand("homology", "f-vector, reduced Euler characteristic and GF(2) Betti numbers");
  add_system_args(homology, a, false);
  auto* gamma = app.add_subcommand("gamma", "List the Gamma subposet and its P1/P2/P3 split");
  add_system_args(gamma, a, false);
  auto* morse = app.add_subcommand("morse", "Build and verify a Gamma-matching");
  add_system_args(morse, a, true);
  morse->add_option("--base-rank", base_rank, "Search directly up to this many generators")->capture_default_str();
  auto* table = app.add_subcommand("table", "Betti numbers of a family against the closed form");
  table->add_option("--family", letter, "A, B, D, E or H")->required();
  table->add_option("--from", from)->capture_default_str();
  table->add_option("--upto", upto)->capture_default_str();
  table->add_flag("--no-morse", no_morse, "Skip the matching column");
  table->add_option("--threads", a.threads)->capture_default_str();
  table->add_option("--max-cells", a.max_cells)->capture_default_str();
  table->add_flag("--json", a.json);
  auto* check = app.add_subcommand("check", "Run every self-check on one system");
  add_system_args(check, a, false);

  std::vector<std::string> argv_storage{"boolinv"};
  argv_storage.insert(argv_storage.end(), args.begin(), args.end());
  std::vector<const char*> argv;
  for (const auto& s : argv_storage) argv.push_back(s.c_str());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (*cells) return cmd_cells(a, out);
    if (*poset) return cmd_poset(a, out);
    if (*homology) return cmd_homology(a, out);
    if (*gamma) return cmd_gamma(a, out);
    if (*morse) return cmd_morse(a, base_rank, out);
    if (*table) return cmd_table(letter, from, upto, !no_morse, a, out);
    if (*check) return cmd_check(a, out);
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return exit_code_for(e.code());
  }
  return kUsage;
}

}  // namespace boolinv::shell
