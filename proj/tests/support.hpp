#pragma once

#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "boolinv/complex.hpp"
#include "boolinv/coxsys.hpp"
#include "boolinv/words.hpp"

namespace boolinv::testing {

inline Cell cell(const OrderedSystem& sys, std::string_view word) {
  return canonical(parse_word(word), sys.graph);
}

inline std::set<std::string> canon_strings(const FacePoset& p, const std::vector<CellId>& ids) {
  std::set<std::string> out;
  for (CellId id : ids) out.insert(to_string(p.cell(id)));
  return out;
}

inline std::set<std::string> canon_strings(const OrderedSystem& sys, const std::vector<std::string>& words) {
  std::set<std::string> out;
  for (const auto& w : words) out.insert(to_string(cell(sys, w)));
  return out;
}

}  // namespace boolinv::testing
