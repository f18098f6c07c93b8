#pragma once

#include <cstdint>
#include <map>
#include <vector>

#include "vknot/alexander.hpp"
#include "vknot/gauss.hpp"
#include "vknot/laurent.hpp"

namespace vknot {

// A smoothing cuts the circle at the endpoints of C into segments; a segment
// starting at an under endpoint is ascending, one starting at an over
// endpoint descending. Components list segments by their start position.
struct SmoothedLink {
    std::vector<std::vector<int>> ascending_components;
    std::vector<std::vector<int>> descending_components;
    int u_count = 0; // sum of signs of under passages along ascending segments
    int o_count = 0; // same for over passages

    int ld() const noexcept { return static_cast<int>(descending_components.size()); }
    int la() const noexcept { return static_cast<int>(ascending_components.size()); }
};

bool is_alternating(const GaussDiagram& d, const std::vector<int>& chord_ids);
SmoothedLink smooth(const GaussDiagram& d, const std::vector<int>& chord_ids);
BiLaurent contribution(const GaussDiagram& d, const std::vector<int>& chord_ids);

// Sum of (uv)^-Wr - 1 and the contributions of all nonempty alternating
// subsets. Capped at 12 chords.
BiLaurent delta0_via_configurations(const GaussDiagram& d);

struct FPolynomials {
    BiLaurent f0, f1, f2;
};

FPolynomials f_polynomials(const GaussDiagram& d);

// Signed sum over permutations along structurally nonzero entries. 2n <= 12.
BiLaurent brute_force_det(const PolyMatrix& m);

// Permutation expansion of det(M - P) with terms grouped by the set of
// crossings whose off-diagonal block entry is used (bit i = i-th chord in id
// order). A merged special-curl cell is split into its block part, which
// counts the crossing, and its permutation part, which does not.
std::map<std::uint64_t, BiLaurent> grouped_brute_force(const GaussDiagram& d);

std::vector<int> chords_of_mask(const GaussDiagram& d, std::uint64_t mask);

enum class PairType { NonAlternating, A, B };

PairType classify_pair(const GaussDiagram& d, int c1, int c2);
const char* pair_type_name(PairType t);

} // namespace vknot
