#pragma once

#include <array>
#include <string>

#include "vknot/gauss.hpp"

namespace vknot {

enum class R1Variant { Ia, Ib };

// Inserts a positive kink before circle position pos (0..2n). Ia puts the
// over endpoint first (empty right arc), Ib the under endpoint first (empty
// left arc). The new chord gets id max_id()+1.
GaussDiagram insert_r1(const GaussDiagram& d, int pos, R1Variant variant);

// Inserts a bigon: chord max_id()+1 (positive) and max_id()+2 (negative),
// with their over endpoints adjacent at pos_a and under endpoints adjacent
// at pos_b. Post-conditions are checked; PatternViolation if none of the
// candidate layouts satisfies them.
GaussDiagram insert_r2(const GaussDiagram& d, int pos_a, int pos_b);

// Third move on chords (c1, c2, c3): c1 and c2 positive, c3 negative, with
// adjacent endpoint pairs {O3,O1}, {U1,O2}, {U2,U3}. Each pair is swapped;
// works in both directions. PatternNotFound otherwise.
GaussDiagram apply_r3(const GaussDiagram& d, const std::array<int, 3>& chords);

enum class R3Layout { TMB, TBM };

// Adds three new chords (ids max+1..max+3 as c1, c2, c3) in a layout accepted
// by apply_r3. The three adjacent pairs go before positions slots[0..2]
// (nondecreasing, each in 0..2n); layout gives their cyclic order.
GaussDiagram insert_r3_pattern(const GaussDiagram& d, const std::array<int, 3>& slots, R3Layout layout);

enum class ForbiddenKind { FO, FU };

struct ForbiddenResult {
    GaussDiagram diagram;
    ForbiddenKind kind;
    int first = 0;  // chord whose endpoint was at pos
    int second = 0; // chord whose endpoint was at pos+1
};

// Swaps the endpoints at pos and pos+1 (cyclically): two tails (FO) or two
// heads (FU) of distinct chords. MixedEndpoints otherwise.
ForbiddenResult apply_forbidden(const GaussDiagram& d, int pos);

const char* forbidden_kind_name(ForbiddenKind k);

} // namespace vknot
