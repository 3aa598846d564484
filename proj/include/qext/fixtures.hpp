#pragma once

#include "qext/matched_pair.hpp"

namespace qext::fixtures {

// (Z/m x Z/m) : Z/2 with the coordinate swap; m = 2 is the dihedral group of
// order 8 underlying the smallest nontrivial extension.
FiniteGroup zm_swap_product(int m);

// Z/4 : Z/2 with inversion (another presentation of the dihedral group D4).
FiniteGroup dihedral8_by_inversion();

FiniteGroup symmetric4();

// H1 = the acting Z/2, H2 = Z/m x Z/m inside zm_swap_product(m); beta is
// trivial and the group of extensions is cyclic of order m.
MatchedPair zm_swap_pair(int m);

// m = 2 special case
MatchedPair kac_paljutkin_pair();

// H1 = stabilizer of the last point (a copy of S3), H2 = the 4-cycle group
// inside S4; both actions nontrivial, trivial group of extensions.
MatchedPair s4_pair();

}  // namespace qext::fixtures
