// One PASS/FAIL/SKIP line per acceptance criterion; failing sub-checks are
// listed underneath. Exit status is nonzero when any criterion fails.

#include <algorithm>
#include <cstdlib>
#include <functional>
#include <iostream>
#include <string>
#include <vector>

#include "test_support.hpp"
#include "vknot/alexander.hpp"
#include "vknot/bounds.hpp"
#include "vknot/config_oracle.hpp"
#include "vknot/random.hpp"
#include "vknot/selftest.hpp"
#include "vknot/table.hpp"
#include "vknot/writhe.hpp"

using namespace vknot;
using namespace vknot::test;

namespace {

struct Sub {
    std::string name;
    bool ok;
    std::string detail;
};

struct Criterion {
    Criterion(int id_, std::string title_) : id(id_), title(std::move(title_)) {}

    int id;
    std::string title;
    std::vector<Sub> subs;
    bool skipped = false;
    std::string skip_reason;

    void check(const std::string& name, bool ok, const std::string& detail = "") { subs.push_back({name, ok, detail}); }
    bool ok() const
    {
        return std::all_of(subs.begin(), subs.end(), [](const Sub& s) { return s.ok; });
    }
};

std::string vs(const std::string& got, const std::string& want) { return "got " + got + ", expected " + want; }

template <class P>
void check_equal(Criterion& c, const std::string& name, const P& got, const P& want)
{
    c.check(name, got == want, got == want ? "" : vs(render(got), render(want)));
}

// Exact check of W with a note when the expected value is -W.
void check_w(Criterion& c, const std::string& name, const UniLaurent& w, const UniLaurent& want)
{
    std::string detail;
    if (w != want) {
        detail = vs(render(w), render(want));
        if (w == -want)
            detail += " (computed W is the negative of the expected value)";
    }
    c.check(name, w == want, detail);
}

// Residue check of V modulo the computed W, with a note when -V matches.
void check_v(Criterion& c, const std::string& name, const VResidue& v, const UniLaurent& want)
{
    const bool ok = v_equivalent(v, VResidue{want, v.modulus});
    std::string detail;
    if (!ok) {
        detail = vs(render(v.v_rep), render(want) + " mod " + render(v.modulus));
        if (v_equivalent(VResidue{-v.v_rep, v.modulus}, VResidue{want, v.modulus}))
            detail += " (the expected class is -V)";
    }
    c.check(name, ok, detail);
}

// Counts failures of a per-diagram check over seeded random diagrams.
void sweep(Criterion& c, const std::string& name, std::uint64_t seed, int trials, int min_n, int max_n,
           const std::function<std::optional<Failure>(const GaussDiagram&, Rng&)>& f)
{
    Rng rng(seed);
    int run = 0, failed = 0;
    std::string first;
    for (int i = 0; i < trials; ++i) {
        const GaussDiagram d = random_diagram(rng.range(min_n, max_n), rng);
        const std::optional<Failure> r = f(d, rng);
        if (!r)
            continue;
        ++run;
        if (*r && failed++ == 0)
            first = **r;
    }
    const std::string counts = std::to_string(run - failed) + "/" + std::to_string(run);
    c.check(name + " (" + counts + ")", run > 0 && failed == 0, failed ? "first: " + first : "");
}

std::optional<Failure> at_forbidden(const GaussDiagram& d, Rng& r, Failure (*f)(const GaussDiagram&, int))
{
    const auto fp = forbidden_positions(d);
    if (fp.empty())
        return std::nullopt;
    return f(d, fp[r.below(fp.size())]);
}

Criterion worked_example()
{
    Criterion c{1, "worked 3-crossing example: det(M-P) and arc permutation"};
    const GaussDiagram d = parse_gauss_code(kWorked3);
    const BiLaurent one = uv_term(0, 0);
    const BiLaurent want = (one - uv_term(1, 0)) * (one - uv_term(0, 1)) * one_minus_uv() * uv_term(-1, -1);
    check_equal(c, "det(M-P)", determinant(build_matrix(arc_labeling(d), d)), want);
    const std::string pi = arc_labeling(d).cycle_string();
    c.check("pi", pi == "(a1 a6 a3 a2 a4 a5)", vs(pi, "(a1 a6 a3 a2 a4 a5)"));
    return c;
}

Criterion index_table()
{
    Criterion c{2, "index table of the 5-crossing example (25 entries)"};
    const GaussDiagram d = parse_gauss_code(kIndexExample);
    const std::vector<IndexRecord> want = {
        {1, -1, 1, -1, 0}, {0, 0, 0, 0, 0}, {-1, 0, 1, 0, -1}, {0, -2, 2, 0, -2}, {0, -1, 0, 1, -1}};
    for (int i = 0; i < 5; ++i) {
        const IndexRecord got = d.indices(i + 1), w = want[static_cast<std::size_t>(i)];
        const std::array<std::pair<const char*, std::pair<int, int>>, 5> cells = {
            {{"RO", {got.ro, w.ro}}, {"RU", {got.ru, w.ru}}, {"LO", {got.lo, w.lo}}, {"LU", {got.lu, w.lu}},
             {"Ind", {got.ind, w.ind}}}};
        for (const auto& [label, v] : cells)
            c.check(std::string(label) + "(c" + std::to_string(i + 1) + ")", v.first == v.second,
                    vs(std::to_string(v.first), std::to_string(v.second)));
    }
    return c;
}

Criterion knot_4_2()
{
    Criterion c{3, "knot 4.2: W = 0, V class, forbidden-one obstruction"};
    const GaussDiagram d = parse_gauss_code(kKnot42);
    const VResidue v = v_polynomial(d);
    check_w(c, "W", v.modulus, UniLaurent{});
    check_v(c, "V", v, parse_uni("2 + t^-2 - 2*t^-1 - 2*t + t^2"));
    const Obstruction o = forbidden_one_obstruction(v);
    c.check("forbidden_one_obstruction", o == Obstruction::Yes, vs(obstruction_name(o), "yes"));
    return c;
}

Criterion forbidden_example()
{
    Criterion c{4, "6-crossing forbidden-number example: W, W', lower bound 4"};
    const GaussDiagram d = parse_gauss_code(kForbiddenExample);
    const UniLaurent w = writhe_invariants(d).w;
    check_w(c, "W", w, parse_uni("t^-4 - 2*t^-2 + 2*t^2 - t^4"));
    const UniLaurent wp = w_prime(w), want_wp = parse_uni("1 - t^-4 - t^-3 + t^-2 + t^-1 + t - t^2 - t^3");
    std::string detail = wp == want_wp ? "" : vs(render(wp), render(want_wp));
    if (wp == -want_wp)
        detail += " (computed W' is the negative of the expected value)";
    c.check("W'", wp == want_wp, detail);
    const long long lb = forbidden_lower_bound(w);
    c.check("forbidden_lower_bound", lb == 4, vs(std::to_string(lb), "4"));
    return c;
}

Criterion knot_3_1()
{
    Criterion c{5, "knot 3.1: configuration contributions, W, V class"};
    const GaussDiagram d = parse_gauss_code(kKnot31);
    // crossing a is chord 3, b is chord 1, c is chord 2
    check_equal(c, "contribution({c})", contribution(d, {2}), uv_term(-1, 1) - uv_term(0, 2));
    check_equal(c, "contribution({a,b})", contribution(d, {3, 1}),
                uv_term(0, 0, 2) - uv_term(1, 1) - uv_term(-1, -1));
    const VResidue v = v_polynomial(d);
    check_w(c, "W", v.modulus, parse_uni("1 - t^-2 + t^-1 - t"));
    check_v(c, "V", v, parse_uni("2 - 2*t"));
    return c;
}

Criterion mutants()
{
    Criterion c{6, "mutant family k = 1..5: closed forms, non-congruence, pair types"};
    for (int k = 1; k <= 5; ++k) {
        const std::string tag = "k=" + std::to_string(k) + " ";
        const MutantPair mp = mutant_family(k);
        const VResidue vk = v_polynomial(mp.k), vmk = v_polynomial(mp.mk);
        const UniLaurent ww = t_term(0, -k - 2) + t_term(-1, k) + t_term(k + 1);
        check_w(c, tag + "W(K)", vk.modulus, ww);
        check_w(c, tag + "W(MK)", vmk.modulus, ww);
        const UniLaurent want_vk =
            t_term(0, (k * k + 7 * k + 8) / 2) - t_term(-1, (k * k + 5 * k + 2) / 2) - t_term(k + 1, k + 2) - t_term(k);
        const UniLaurent want_vmk =
            t_term(0, (k * k + 5 * k + 8) / 2) - t_term(-1, (k * k - k - 4) / 2) - t_term(k + 1, k + 3) + t_term(k);
        const UniLaurent want_diff = t_term(0, k) - t_term(-1, 3 * (k + 1)) + t_term(k + 1) - t_term(k, 2);
        check_v(c, tag + "V_K", vk, want_vk);
        check_v(c, tag + "V_MK", vmk, want_vmk);
        check_v(c, tag + "V_K - V_MK", VResidue{vk.v_rep - vmk.v_rep, vk.modulus}, want_diff);
        const bool multiple = integer_multiple(vk.v_rep - vmk.v_rep, vk.modulus).has_value();
        c.check(tag + "difference not a multiple of W", vk.modulus == vmk.modulus && !multiple);
        const PairType tk = classify_pair(mp.k, k + 1, k + 3), tmk = classify_pair(mp.mk, k + 1, k + 3);
        c.check(tag + "pair type B in K", tk == PairType::B, vs(pair_type_name(tk), "B"));
        c.check(tag + "pair type A in MK", tmk == PairType::A, vs(pair_type_name(tmk), "A"));
    }
    return c;
}

Criterion bridges()
{
    Criterion c{7, "bridge identities on 500 random diagrams (n <= 6)"};
    sweep(c, "W = -diag(delta0'_raw)", 701, 500, 0, 6, [](const GaussDiagram& d, Rng&) { return checks::bridge_w(d); });
    sweep(c, "V = diag(phi)", 702, 500, 0, 6, [](const GaussDiagram& d, Rng&) { return checks::bridge_v(d); });
    return c;
}

Criterion oracles()
{
    Criterion c{8, "determinant oracles on 200 random diagrams (n <= 5)"};
    sweep(c, "determinant = brute force = configurations", 801, 200, 0, 5,
          [](const GaussDiagram& d, Rng&) { return checks::oracle_equivalence(d); });
    sweep(c, "non-alternating grouped terms vanish", 802, 200, 0, 5,
          [](const GaussDiagram& d, Rng&) { return checks::grouped_terms(d); });
    sweep(c, "(1-uv)^3 divides the f-remainder", 803, 200, 0, 5,
          [](const GaussDiagram& d, Rng&) { return checks::f_divisibility(d); });
    return c;
}

Criterion divisibility()
{
    Criterion c{9, "divisibility and evaluations on 300 random diagrams (n <= 6)"};
    sweep(c, "(1-u)(1-v)(1-uv) | delta0_raw", 901, 300, 0, 6,
          [](const GaussDiagram& d, Rng&) { return checks::factor_divisibility(d); });
    sweep(c, "(t-1)(t^-1-1) | W and W(1) = 0", 902, 300, 0, 6,
          [](const GaussDiagram& d, Rng&) { return checks::w_divisibility(d); });
    sweep(c, "odd writhe = 2 bar(-1,-1)", 903, 300, 0, 6,
          [](const GaussDiagram& d, Rng&) { return checks::odd_writhe(d); });
    return c;
}

Criterion moves()
{
    Criterion c{10, "moves on random diagrams (n <= 5)"};
    sweep(c, "Ia", 1001, 300, 0, 5,
          [](const GaussDiagram& d, Rng& r) { return checks::move_r1(d, r.range(0, d.positions()), R1Variant::Ia); });
    sweep(c, "Ib", 1002, 300, 0, 5,
          [](const GaussDiagram& d, Rng& r) { return checks::move_r1(d, r.range(0, d.positions()), R1Variant::Ib); });
    sweep(c, "IIa", 1003, 300, 0, 5, [](const GaussDiagram& d, Rng& r) {
        return checks::move_r2(d, r.range(0, d.positions()), r.range(0, d.positions()));
    });
    sweep(c, "IIIa", 1004, 300, 0, 5, [](const GaussDiagram& d, Rng& r) {
        const int m = d.positions();
        std::array<int, 3> s{r.range(0, m), r.range(0, m), r.range(0, m)};
        std::sort(s.begin(), s.end());
        return checks::move_r3(d, s, r.coin() ? R3Layout::TMB : R3Layout::TBM);
    });
    sweep(c, "forbidden move W change", 1005, 500, 2, 5,
          [](const GaussDiagram& d, Rng& r) { return at_forbidden(d, r, checks::forbidden_w_delta); });
    sweep(c, "forbidden move sum |b_i| change <= 2", 1006, 500, 2, 5,
          [](const GaussDiagram& d, Rng& r) { return at_forbidden(d, r, checks::forbidden_w_prime_sum); });
    sweep(c, "forbidden move changes at most the four index coefficients of V", 1007, 500, 2, 5,
          [](const GaussDiagram& d, Rng& r) { return at_forbidden(d, r, checks::forbidden_v_four); });
    return c;
}

Criterion symmetries()
{
    Criterion c{11, "symmetry identities modulo (uv)^k on 150 random diagrams (n <= 6)"};
    for (Transform t : {Transform::SwitchAll, Transform::Mirror, Transform::Reverse})
        sweep(c, transform_name(t), 1100 + static_cast<int>(t), 150, 0, 6,
              [t](const GaussDiagram& d, Rng&) { return checks::symmetry(d, t); });
    return c;
}

Criterion full_table()
{
    Criterion c{12, "full knot table (0.1 to 4.108) checks with 0 mismatches"};
    const char* path = std::getenv("VKNOT_FULL_TABLE");
    if (!path || !*path) {
        c.skipped = true;
        c.skip_reason = "set VKNOT_FULL_TABLE to a table file to run";
        return c;
    }
    const LoadedTable t = load_table(path);
    c.check("file loads cleanly", t.errors.empty(), t.errors.empty() ? "" : t.errors.front());
    c.check("108 knots", t.records.size() == 108, vs(std::to_string(t.records.size()), "108"));
    for (const KnotResult& r : evaluate_table(t.records, true))
        if (r.status != Status::Ok)
            c.check(r.name, false, std::string(status_name(r.status)) + (r.diagnostic.empty() ? "" : " (" + r.diagnostic + ")"));
    return c;
}

} // namespace

int main()
{
    const std::vector<std::function<Criterion()>> all = {worked_example, index_table, knot_4_2, forbidden_example,
                                                         knot_3_1,       mutants,     bridges,  oracles,
                                                         divisibility,   moves,       symmetries, full_table};
    int failed = 0;
    for (std::size_t i = 0; i < all.size(); ++i) {
        Criterion c{static_cast<int>(i + 1), "(threw)"};
        try {
            c = all[i]();
        } catch (const std::exception& e) {
            c.check("exception", false, e.what());
        }
        const char* verdict = c.skipped ? "SKIP" : c.ok() ? "PASS" : "FAIL";
        std::cout << "criterion " << c.id << ": " << verdict << "  " << c.title;
        if (c.skipped)
            std::cout << " [" << c.skip_reason << "]";
        std::cout << '\n';
        for (const Sub& s : c.subs)
            if (!s.ok)
                std::cout << "    FAIL " << s.name << (s.detail.empty() ? "" : ": " + s.detail) << '\n';
        failed += !c.skipped && !c.ok();
    }
    std::cout << (failed ? std::to_string(failed) + " criteria failed" : std::string("all criteria passed")) << '\n';
    return failed ? 1 : 0;
}
