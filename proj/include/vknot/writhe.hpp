#pragma once

#include <map>
#include <optional>

#include "vknot/gauss.hpp"
#include "vknot/laurent.hpp"

namespace vknot {

struct WritheInvariants {
    UniLaurent w;
    std::map<int, int> wn; // nonzero knot-level n-writhes; w_0 is corrected by -Wr
    int odd_writhe = 0;
};

WritheInvariants writhe_invariants(const GaussDiagram& d);

// A V representative together with its modulus W. Only classes modulo
// integer multiples of W are diagram-independent.
struct VResidue {
    UniLaurent v_rep;
    UniLaurent modulus;
};

VResidue v_polynomial(const GaussDiagram& d);

// The integer n with diff = n * modulus, if one exists.
std::optional<Coeff> integer_multiple(const UniLaurent& diff, const UniLaurent& modulus);

// Throws ModulusMismatch if the moduli differ.
bool v_equivalent(const VResidue& a, const VResidue& b);

struct BridgeCheck {
    bool w_ok = false;
    bool v_ok = false;
};

BridgeCheck bridge_check(const GaussDiagram& d);

} // namespace vknot
