#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "vknot/gauss.hpp"
#include "vknot/moves.hpp"

namespace vknot {

// A failed check carries a human-readable reason; nullopt means it held.
using Failure = std::optional<std::string>;

namespace checks {

Failure index_identities(const GaussDiagram& d);
Failure bridge_w(const GaussDiagram& d);
Failure bridge_v(const GaussDiagram& d);
// determinant = brute_force_det = delta0_via_configurations
Failure oracle_equivalence(const GaussDiagram& d);
// Grouped permutation terms: non-alternating groups vanish, alternating
// groups equal their contribution, the empty group equals f0.
Failure grouped_terms(const GaussDiagram& d);
Failure f_divisibility(const GaussDiagram& d);
Failure f2_symmetry(const GaussDiagram& d);
Failure factor_divisibility(const GaussDiagram& d);
Failure w_divisibility(const GaussDiagram& d);
Failure odd_writhe(const GaussDiagram& d);
Failure symmetry(const GaussDiagram& d, Transform kind);
// Informative: the identity holds without the (uv)^k allowance.
bool symmetry_exact(const GaussDiagram& d, Transform kind);

Failure move_r1(const GaussDiagram& d, int pos, R1Variant variant);
Failure move_r2(const GaussDiagram& d, int pos_a, int pos_b);
Failure move_r3(const GaussDiagram& d, const std::array<int, 3>& slots, R3Layout layout);
Failure forbidden_w_delta(const GaussDiagram& d, int pos);
// Only the coefficients at the old and new indices of the two moved chords change.
Failure forbidden_v_four(const GaussDiagram& d, int pos);
// Same, restricted to moves whose chords have no alternating partner.
std::optional<Failure> forbidden_v_four_isolated(const GaussDiagram& d, int pos);
Failure forbidden_w_prime_sum(const GaussDiagram& d, int pos);

} // namespace checks

// Positions where a forbidden move applies.
std::vector<int> forbidden_positions(const GaussDiagram& d);

struct CheckOutcome {
    std::string name;
    long trials = 0;
    long failures = 0;
    std::string first_failure;

    bool ok() const noexcept { return failures == 0 && trials > 0; }
    void record(const Failure& f);
};

struct SuiteOptions {
    int max_chords = 6;
    int trials = 500;
    std::uint64_t seed = 1;
};

// All randomized property checks; oracle-heavy checks cap the chord count
// at min(max_chords, 5).
std::vector<CheckOutcome> run_selftest(const SuiteOptions& opts);

} // namespace vknot
