#include <gtest/gtest.h>

#include "test_support.hpp"
#include "vknot/alexander.hpp"
#include "vknot/errors.hpp"
#include "vknot/moves.hpp"
#include "vknot/writhe.hpp"

using namespace vknot;
using namespace vknot::test;

namespace {

void expect_same_invariants(const GaussDiagram& a, const GaussDiagram& b)
{
    EXPECT_EQ(alexander_suite(a).delta0, alexander_suite(b).delta0) << format_gauss_code(b);
    EXPECT_EQ(writhe_invariants(a).w, writhe_invariants(b).w) << format_gauss_code(b);
    EXPECT_TRUE(v_equivalent(v_polynomial(a), v_polynomial(b))) << format_gauss_code(b);
}

} // namespace

TEST(R1, VariantsOnEmptyDiagram)
{
    EXPECT_EQ(format_gauss_code(insert_r1(GaussDiagram{}, 0, R1Variant::Ia)), "O1+U1+");
    EXPECT_EQ(format_gauss_code(insert_r1(GaussDiagram{}, 0, R1Variant::Ib)), "U1+O1+");
}

TEST(R1, NewChordIdAndPlacement)
{
    const GaussDiagram d = parse_gauss_code(kWorked3);
    const GaussDiagram e = insert_r1(d, 2, R1Variant::Ia);
    EXPECT_EQ(e.size(), 4);
    EXPECT_EQ(e.chord(4).over_pos, 2);
    EXPECT_EQ(e.chord(4).under_pos, 3);
    EXPECT_THROW(insert_r1(d, 7, R1Variant::Ia), OutOfRange);
    EXPECT_THROW(insert_r1(d, -1, R1Variant::Ib), OutOfRange);
}

TEST(R1, PreservesInvariants)
{
    const GaussDiagram d = parse_gauss_code(kKnot31);
    for (int pos = 0; pos <= d.positions(); ++pos) {
        expect_same_invariants(d, insert_r1(d, pos, R1Variant::Ia));
        expect_same_invariants(d, insert_r1(d, pos, R1Variant::Ib));
    }
}

TEST(R2, BigonLayout)
{
    const GaussDiagram d = parse_gauss_code(kWorked3);
    const GaussDiagram e = insert_r2(d, 1, 4);
    EXPECT_EQ(e.size(), 5);
    EXPECT_EQ(e.chord(4).sign, 1);
    EXPECT_EQ(e.chord(5).sign, -1);
    EXPECT_EQ(e.indices(4).ind, e.indices(5).ind);
    EXPECT_THROW(insert_r2(d, 0, 9), OutOfRange);
}

TEST(R2, PreservesInvariants)
{
    const GaussDiagram d = parse_gauss_code(kKnot31);
    for (int a = 0; a <= d.positions(); ++a)
        for (int b = 0; b <= d.positions(); ++b)
            expect_same_invariants(d, insert_r2(d, a, b));
}

TEST(R3, PatternRoundTrip)
{
    const GaussDiagram d = parse_gauss_code(kWorked3);
    for (R3Layout layout : {R3Layout::TMB, R3Layout::TBM}) {
        const GaussDiagram before = insert_r3_pattern(d, {0, 2, 5}, layout);
        const GaussDiagram after = apply_r3(before, {4, 5, 6});
        EXPECT_FALSE(after == before);
        EXPECT_EQ(apply_r3(after, {4, 5, 6}), before);
        expect_same_invariants(before, after);
    }
}

TEST(R3, Rejections)
{
    const GaussDiagram d = parse_gauss_code(kWorked3);
    const GaussDiagram p = insert_r3_pattern(d, {0, 0, 0}, R3Layout::TMB);
    EXPECT_THROW(apply_r3(p, {4, 4, 6}), PatternNotFound);
    EXPECT_THROW(apply_r3(p, {4, 5, 9}), PatternNotFound);
    EXPECT_THROW(apply_r3(p, {5, 4, 6}), PatternNotFound);
    EXPECT_THROW(apply_r3(p, {1, 2, 3}), PatternNotFound);
    EXPECT_THROW(insert_r3_pattern(d, {3, 1, 2}, R3Layout::TMB), OutOfRange);
}

TEST(Forbidden, KindsAndErrors)
{
    // U1- O2+ U3+ O1- O3+ U2+
    const GaussDiagram d = parse_gauss_code(kWorked3);
    const ForbiddenResult fo = apply_forbidden(d, 3);
    EXPECT_EQ(fo.kind, ForbiddenKind::FO);
    EXPECT_EQ(fo.first, 1);
    EXPECT_EQ(fo.second, 3);
    EXPECT_EQ(fo.diagram.at(3).label, 3);
    EXPECT_EQ(fo.diagram.at(4).label, 1);

    const ForbiddenResult fu = apply_forbidden(d, 5);
    EXPECT_EQ(fu.kind, ForbiddenKind::FU);
    EXPECT_EQ(fu.first, 2);
    EXPECT_EQ(fu.second, 1);
    EXPECT_STREQ(forbidden_kind_name(fu.kind), "FU");

    EXPECT_THROW(apply_forbidden(d, 0), MixedEndpoints);
    EXPECT_THROW(apply_forbidden(d, 6), OutOfRange);
    EXPECT_THROW(apply_forbidden(parse_gauss_code("O1+U1+"), 0), MixedEndpoints);
}

TEST(Forbidden, IsAnInvolution)
{
    const GaussDiagram d = parse_gauss_code(kForbiddenExample);
    for (int pos = 0; pos < d.positions(); ++pos) {
        try {
            const ForbiddenResult r = apply_forbidden(d, pos);
            EXPECT_EQ(apply_forbidden(r.diagram, pos).diagram, d);
        } catch (const MixedEndpoints&) {
        }
    }
}
