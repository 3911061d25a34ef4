#include "boolinv/families.hpp"

#include <iomanip>
#include <sstream>

#include "boolinv/morse.hpp"
#include "json.hpp"
#include "parallel.hpp"

namespace boolinv {

std::uint64_t padovan(int k) {
  if (k < 0) throw Error(ErrorCode::kRankOutOfRange, "Padovan index " + std::to_string(k));
  std::uint64_t a = 1, b = 0, c = 0;  // P_{i}, P_{i+1}, P_{i+2}
  for (int i = 0; i < k; ++i) {
    const std::uint64_t next = b + a;  // P_{i+3} = P_{i+1} + P_i
    a = b;
    b = c;
    c = next;
  }
  return a;
}

std::int64_t expected_betti(const FamilySpec& spec) {
  const int n = spec.rank;
  auto p = [](int k) { return static_cast<std::int64_t>(padovan(k)); };
  switch (spec.family) {
    case Family::kA:
      if (n >= 1) return p(n);
      break;
    case Family::kB:
      if (n >= 2) return p(n + 3);
      break;
    case Family::kD:
      if (n >= 2) return p(n + 2);
      break;
    case Family::kE:
      if (n == 6) return 0;
      if (n == 7 || n == 8) return 1;
      break;
    case Family::kF:
      return 0;
    case Family::kH:
      return 1;
    case Family::kI2:
      return spec.extra == 3 ? 0 : 1;
    case Family::kAffineF4:
    case Family::kAffineE8:
      return 1;
    case Family::kPathExt:
      break;
  }
  throw Error(ErrorCode::kRankOutOfRange, "no closed form for " + family_name(spec));
}

RecurrenceReport check_recurrence(const OrderedSystem& sys, const BuildOptions& options) {
  if (sys.size() < 3) throw Error(ErrorCode::kRankOutOfRange, sys.name + " needs at least 3 generators");
  RecurrenceReport report;
  report.system = sys.name;
  std::int64_t* slots[] = {&report.betti, &report.betti_minus2, &report.betti_minus3};
  const int cuts[] = {0, 2, 3};
  for (int i = 0; i < 3; ++i) {
    const BettiVector b = betti_gf2(build_complex(truncate(sys, cuts[i]), options));
    *slots[i] = b.top();
    report.wedge = report.wedge && b.concentrated_in_top();
  }
  report.ok = report.wedge && report.betti == report.betti_minus2 + report.betti_minus3;
  return report;
}

bool BettiTable::all_match() const {
  for (const auto& row : rows)
    if (!row.match) return false;
  return true;
}

namespace {

Family family_from_letter(char letter) {
  switch (letter) {
    case 'A': return Family::kA;
    case 'B': return Family::kB;
    case 'D': return Family::kD;
    case 'E': return Family::kE;
    case 'H': return Family::kH;
    default: break;
  }
  throw Error(ErrorCode::kMalformedInput, std::string("no table for family '") + letter + "'");
}

TableRow compute_row(const FamilySpec& spec, const TableOptions& options) {
  TableRow row;
  const OrderedSystem sys = family(spec);
  row.system = sys.name;
  row.rank = spec.rank;
  row.expected = expected_betti(spec);
  BettiVector b;
  if (options.with_morse) {
    GammaOptions gamma;
    gamma.build = options.build;
    try {
      const GammaMatching built = build_gamma_matching(sys, gamma);
      b = betti_gf2(built.poset);
      if (built.report.ok()) row.morse_critical = static_cast<std::int64_t>(built.report.critical.size());
    } catch (const Error& e) {
      if (e.code() == ErrorCode::kResourceLimit) throw;
      b = betti_gf2(build_complex(sys, options.build));
    }
  } else {
    b = betti_gf2(build_complex(sys, options.build));
  }
  row.betti = b.values;
  row.homology = b.top();
  row.match = row.homology == row.expected && b.concentrated_in_top() &&
              (!options.with_morse || row.morse_critical == row.homology);
  return row;
}

}  // namespace

BettiTable betti_table(char family_letter, int from, int upto, const TableOptions& options) {
  const Family f = family_from_letter(family_letter);
  BettiTable table;
  table.family = family_letter;
  std::vector<FamilySpec> specs;
  for (int n = from; n <= upto; ++n) {
    FamilySpec spec{f, n, 0};
    try {
      expected_betti(spec);
      family(spec);
    } catch (const Error&) {
      continue;
    }
    specs.push_back(spec);
  }
  table.rows.resize(specs.size());
  const unsigned threads = detail::resolve_threads(options.threads);
  detail::parallel_chunks(specs.size(), threads, [&](unsigned, std::size_t lo, std::size_t hi) {
    for (std::size_t i = lo; i < hi; ++i) table.rows[i] = compute_row(specs[i], options);
  });
  return table;
}

std::string format_table(const BettiTable& table) {
  std::ostringstream out;
  out << "family " << table.family << "\n";
  out << std::left << std::setw(4) << "n" << std::setw(8) << "system" << std::setw(10) << "expected"
      << std::setw(10) << "homology" << std::setw(8) << "morse"
      << "match\n";
  for (const auto& row : table.rows) {
    out << std::left << std::setw(4) << row.rank << std::setw(8) << row.system << std::setw(10)
        << row.expected << std::setw(10) << row.homology << std::setw(8)
        << (row.morse_critical ? std::to_string(*row.morse_critical) : std::string("-"))
        << (row.match ? "yes" : "NO") << "\n";
  }
  out << "expected:";
  for (const auto& row : table.rows) out << ' ' << row.expected;
  out << "\ncomputed:";
  for (const auto& row : table.rows) out << ' ' << row.homology;
  out << "\n";
  return out.str();
}

std::string table_json(const BettiTable& table) {
  nlohmann::ordered_json j;
  j["family"] = std::string(1, table.family);
  j["rows"] = nlohmann::ordered_json::array();
  for (const auto& row : table.rows) {
    nlohmann::ordered_json r;
    r["n"] = row.rank;
    r["system"] = row.system;
    r["expected"] = row.expected;
    r["betti"] = row.betti;
    r["homology"] = row.homology;
    r["morse"] = row.morse_critical ? nlohmann::ordered_json(*row.morse_critical) : nlohmann::ordered_json();
    r["match"] = row.match;
    j["rows"].push_back(std::move(r));
  }
  j["all_match"] = table.all_match();
  return j.dump(2);
}

}  // namespace boolinv
