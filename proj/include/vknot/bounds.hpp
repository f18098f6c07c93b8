#pragma once

#include "vknot/gauss.hpp"
#include "vknot/laurent.hpp"
#include "vknot/writhe.hpp"

namespace vknot {

enum class Obstruction { Yes, No, Inconclusive };

const char* obstruction_name(Obstruction o);

struct BoundsReport {
    long long vc_lower = 0;
    long long forbidden_lower_w = 0;
    Obstruction forbidden_one_excluded = Obstruction::Inconclusive;
};

// ceil(width / 2)
long long vc_lower_bound(const UniLaurent& w);
// W / (t - 1)
UniLaurent w_prime(const UniLaurent& w);
// ceil(sum |b_i| / 2) over the coefficients of W'.
long long forbidden_lower_bound(const UniLaurent& w);
// Only decided when the modulus is zero: "yes" when V has more than four
// terms, or more than two even or more than two odd powers.
Obstruction forbidden_one_obstruction(const VResidue& v);

BoundsReport bounds_report(const GaussDiagram& d);

struct MutantPair {
    GaussDiagram k;
    GaussDiagram mk;
};

// All-positive (k+3)-chord knot K and its positive reflection mutant MK.
// Crossings 1..k are the twist chords, k+1..k+3 the remaining three.
MutantPair mutant_family(int k);

} // namespace vknot
