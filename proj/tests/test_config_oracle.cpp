#include <gtest/gtest.h>

#include "test_support.hpp"
#include "vknot/alexander.hpp"
#include "vknot/bounds.hpp"
#include "vknot/config_oracle.hpp"
#include "vknot/errors.hpp"

using namespace vknot;
using namespace vknot::test;

// In the 3.1 diagram, crossing a is chord 3 (positive), b is chord 1 and
// c is chord 2 (both negative).

TEST(IsAlternating, Knot31)
{
    const GaussDiagram d = parse_gauss_code(kKnot31);
    EXPECT_TRUE(is_alternating(d, {3, 1}));
    EXPECT_FALSE(is_alternating(d, {1, 2}));
    EXPECT_FALSE(is_alternating(d, {2, 3}));
    EXPECT_FALSE(is_alternating(d, {1, 2, 3}));
}

TEST(IsAlternating, SingletonsAlwaysAlternate)
{
    for (std::uint64_t seed = 0; seed < 30; ++seed) {
        const GaussDiagram d = random_diagram(5, seed);
        for (const Chord& c : d.chords())
            EXPECT_TRUE(is_alternating(d, {c.id}));
    }
}

TEST(IsAlternating, ConsecutiveOversDoNotAlternate)
{
    EXPECT_FALSE(is_alternating(parse_gauss_code("O1+O2+U1+U2+"), {1, 2}));
    EXPECT_THROW(is_alternating(parse_gauss_code("O1+U1+"), {}), OutOfRange);
}

TEST(Smooth, Knot31)
{
    const GaussDiagram d = parse_gauss_code(kKnot31);
    const SmoothedLink c = smooth(d, {2});
    EXPECT_EQ(c.ld(), 1);
    EXPECT_EQ(c.u_count, 1);
    EXPECT_EQ(c.o_count, -1);
    const SmoothedLink ab = smooth(d, {3, 1});
    EXPECT_EQ(ab.ld(), 2);
    EXPECT_EQ(ab.u_count, 0);
    EXPECT_EQ(ab.o_count, 0);
    EXPECT_THROW(smooth(d, {1, 2}), PatternViolation);
}

TEST(Smooth, PairTypesByCyclicOrder)
{
    // P1 Q1 P2 Q2
    EXPECT_EQ(smooth(parse_gauss_code("O1+U1+O2+U2+"), {1, 2}).ld(), 2);
    // P1 Q2 P2 Q1
    EXPECT_EQ(smooth(parse_gauss_code("O1+U2+O2+U1+"), {1, 2}).ld(), 1);
}

TEST(Smooth, EverySegmentInOneComponent)
{
    for (std::uint64_t seed = 0; seed < 80; ++seed) {
        const GaussDiagram d = random_diagram(1 + static_cast<int>(seed % 6), seed);
        const std::uint64_t full = std::uint64_t{1} << d.size();
        for (std::uint64_t mask = 1; mask < full; ++mask) {
            const auto ids = chords_of_mask(d, mask);
            if (!is_alternating(d, ids))
                continue;
            const SmoothedLink l = smooth(d, ids);
            std::size_t segs = 0;
            for (const auto& comp : l.ascending_components)
                segs += comp.size();
            for (const auto& comp : l.descending_components)
                segs += comp.size();
            EXPECT_EQ(segs, 2 * ids.size());
        }
    }
}

TEST(Contribution, Knot31)
{
    const GaussDiagram d = parse_gauss_code(kKnot31);
    EXPECT_EQ(contribution(d, {2}), uv_term(-1, 1) - uv_term(0, 2));
    EXPECT_EQ(contribution(d, {3, 1}), uv_term(0, 0, 2) - uv_term(1, 1) - uv_term(-1, -1));
}

TEST(Contribution, PositiveKink)
{
    const GaussDiagram d = parse_gauss_code("O1+U1+");
    EXPECT_EQ(smooth(d, {1}).ld(), 1);
    EXPECT_EQ(contribution(d, {1}), uv_term(0, 0) - uv_term(-1, -1));
}

TEST(Configurations, Worked3)
{
    EXPECT_EQ(delta0_via_configurations(parse_gauss_code(kWorked3)),
              bi({{-1, -1, 1}, {-1, 0, -1}, {0, -1, -1}, {0, 1, 1}, {1, 0, 1}, {1, 1, -1}}));
    EXPECT_TRUE(delta0_via_configurations(GaussDiagram{}).is_zero());
}

TEST(Configurations, SizeGuard)
{
    EXPECT_THROW(delta0_via_configurations(random_diagram(13, 1)), SizeLimit);
    const GaussDiagram d = random_diagram(7, 1);
    EXPECT_THROW(brute_force_det(build_matrix(arc_labeling(d), d)), SizeLimit);
}

TEST(BruteForce, SmallCases)
{
    const GaussDiagram d = parse_gauss_code(kWorked3);
    const PolyMatrix m = build_matrix(arc_labeling(d), d);
    EXPECT_EQ(brute_force_det(m), determinant(m));
    PolyMatrix one(1);
    one.add(0, 0, uv_term(2, -1, 7));
    EXPECT_EQ(brute_force_det(one), uv_term(2, -1, 7));
}

TEST(BruteForce, AgreesWithDeterminant)
{
    for (std::uint64_t seed = 0; seed < 100; ++seed) {
        const GaussDiagram d = random_diagram(1 + static_cast<int>(seed % 4), seed);
        const PolyMatrix m = build_matrix(arc_labeling(d), d);
        EXPECT_EQ(brute_force_det(m), determinant(m)) << format_gauss_code(d);
    }
}

TEST(FPolynomials, Examples)
{
    const FPolynomials f = f_polynomials(parse_gauss_code(kWorked3));
    EXPECT_EQ(f.f0, uv_term(-1, -1) - uv_term(0, 0));

    const FPolynomials k = f_polynomials(parse_gauss_code("O1+U1+"));
    EXPECT_EQ(k.f1, -uv_term(-1, -1));
    EXPECT_TRUE((k.f0 + one_minus_uv() * k.f1).is_zero());
}

TEST(FPolynomials, RemainderDivisibleByCube)
{
    const BiLaurent& q = one_minus_uv();
    for (std::uint64_t seed = 0; seed < 100; ++seed) {
        const GaussDiagram d = random_diagram(static_cast<int>(seed % 6), seed);
        const FPolynomials f = f_polynomials(d);
        const BiLaurent rest = delta0_raw(d) - (f.f0 + q * f.f1 + q * q * f.f2);
        EXPECT_TRUE(divides(q.pow(3), rest)) << format_gauss_code(d);
    }
}

TEST(GroupedTerms, MatchContributions)
{
    for (std::uint64_t seed = 0; seed < 60; ++seed) {
        const GaussDiagram d = random_diagram(1 + static_cast<int>(seed % 4), seed);
        const auto groups = grouped_brute_force(d);
        BiLaurent total;
        for (const auto& [mask, p] : groups) {
            total += p;
            if (mask == 0)
                continue;
            const auto ids = chords_of_mask(d, mask);
            if (is_alternating(d, ids))
                EXPECT_EQ(p, contribution(d, ids));
            else
                EXPECT_TRUE(p.is_zero()) << format_gauss_code(d) << " mask " << mask;
        }
        EXPECT_EQ(total, delta0_raw(d));
    }
}

TEST(ClassifyPair, MutantPair)
{
    for (int k = 1; k <= 4; ++k) {
        const MutantPair mp = mutant_family(k);
        EXPECT_EQ(classify_pair(mp.k, k + 1, k + 3), PairType::B);
        EXPECT_EQ(classify_pair(mp.mk, k + 1, k + 3), PairType::A);
    }
}

TEST(ClassifyPair, Parallel)
{
    EXPECT_EQ(classify_pair(parse_gauss_code("O1+O2+U2+U1+"), 1, 2), PairType::NonAlternating);
    EXPECT_EQ(classify_pair(parse_gauss_code("O1+U1+O2+U2+"), 1, 2), PairType::A);
    EXPECT_EQ(classify_pair(parse_gauss_code("O1+U2+O2+U1+"), 1, 2), PairType::B);
    EXPECT_THROW(classify_pair(parse_gauss_code("O1+U1+"), 1, 1), OutOfRange);
}
