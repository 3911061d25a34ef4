#pragma once

#include <string>

#include "boolinv/complex.hpp"
#include "boolinv/morse.hpp"

namespace boolinv {

// {cells:[{canon,rank}], covers:[[lower,upper]], f:[...], betti:[...]}
std::string poset_json(const FacePoset& p, const BettiVector& betti);
// Hasse diagram, one rank per row, cells labeled by canonical word.
std::string poset_dot(const FacePoset& p);

// {pairs:[[canonA,canonB]], critical:[canon], acyclic:bool}
std::string matching_json(const FacePoset& p, const Matching& m, const MorseReport& report);
// G_M(P): downward Hasse edges, matched edges reversed and drawn bold red.
std::string matching_dot(const FacePoset& p, const Matching& m);

}  // namespace boolinv
