#pragma once

#include <map>
#include <string>
#include <vector>

#include "vknot/gauss.hpp"
#include "vknot/laurent.hpp"

namespace vknot {

// Arc a_k (0-based k here) is the arc arriving at a circle position. Crossing i
// (chords in id order) owns arcs 2i and 2i+1: for a positive crossing the
// incoming under-arc comes first, for a negative one the incoming over-arc.
struct ArcLabeling {
    std::vector<int> chord_ids;  // crossing index -> chord id
    std::vector<int> arc_at_pos; // position -> arc
    std::vector<int> pi;         // arc -> next arc along the knot

    // 1-based cycle notation starting at a1, e.g. "(a1 a6 a3 a2 a4 a5)".
    std::string cycle_string() const;
    bool is_single_cycle() const;
};

ArcLabeling arc_labeling(const GaussDiagram& d);

class PolyMatrix {
public:
    explicit PolyMatrix(int size = 0) : rows_(size) {}

    int size() const noexcept { return static_cast<int>(rows_.size()); }
    void add(int r, int c, const BiLaurent& p);
    BiLaurent at(int r, int c) const;
    // Structurally nonzero entries of a row, by column.
    const std::map<int, BiLaurent>& row(int r) const { return rows_.at(r); }

private:
    std::vector<std::map<int, BiLaurent>> rows_;
};

// M - P: the 2x2 crossing blocks minus the permutation matrix of pi.
PolyMatrix build_matrix(const ArcLabeling& lab, const GaussDiagram& d);

// Laplace expansion along rows, memoized on the set of used columns.
BiLaurent determinant(const PolyMatrix& m);

struct AlexanderResult {
    BiLaurent delta0;
    BiLaurent delta0_raw;
    BiLaurent delta0_prime;
    BiLaurent delta0_prime_raw;
    BiLaurent delta0_bar;
    BiLaurent phi;
};

AlexanderResult alexander_suite(const GaussDiagram& d);

// Raw diagram-level det(M - P); zero for the empty diagram.
BiLaurent delta0_raw(const GaussDiagram& d);

// 1 - uv, (1 - u)(1 - v)(1 - uv)
const BiLaurent& one_minus_uv();
const BiLaurent& factor_triple();

} // namespace vknot
