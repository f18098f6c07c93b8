#include "vknot/selftest.hpp"

#include <algorithm>
#include <set>

#include "vknot/alexander.hpp"
#include "vknot/bounds.hpp"
#include "vknot/config_oracle.hpp"
#include "vknot/errors.hpp"
#include "vknot/writhe.hpp"

namespace vknot {

namespace {

std::string code_of(const GaussDiagram& d)
{
    return "'" + format_gauss_code(d) + "'";
}

Failure fail(const GaussDiagram& d, const std::string& what)
{
    return code_of(d) + ": " + what;
}

std::string show(const BiLaurent& p)
{
    return render(p);
}

std::string show(const UniLaurent& p)
{
    return render(p);
}

// Guards against library exceptions so one bad case does not end a sweep.
template <class F>
Failure guarded(const GaussDiagram& d, F&& f)
{
    try {
        return f();
    } catch (const std::exception& e) {
        return fail(d, std::string("exception: ") + e.what());
    }
}

} // namespace

namespace checks {

Failure index_identities(const GaussDiagram& d)
{
    int total = 0;
    for (int p = 0; p < d.positions(); ++p)
        total += d.endpoint_sign(p);
    if (total != 0)
        return fail(d, "endpoint signs sum to " + std::to_string(total));
    int wsum = 0;
    for (const Chord& c : d.chords()) {
        const IndexRecord r = d.indices(c.id);
        if (r.ind != r.ro + r.ru || r.ind != -(r.lo + r.lu))
            return fail(d, "index identity fails on chord " + std::to_string(c.id));
        if (r.lu + r.ru + c.sign != d.writhe())
            return fail(d, "LU + RU + sign != Wr on chord " + std::to_string(c.id));
        wsum += c.sign;
    }
    int nsum = 0;
    for (int n = -d.size(); n <= d.size(); ++n)
        nsum += d.n_writhe(n);
    if (nsum != d.writhe() || wsum != d.writhe())
        return fail(d, "n-writhes do not partition the writhe");
    return std::nullopt;
}

Failure bridge_w(const GaussDiagram& d)
{
    return guarded(d, [&]() -> Failure {
        const AlexanderResult ar = alexander_suite(d);
        const UniLaurent w = writhe_invariants(d).w;
        const UniLaurent lhs = substitute_diag(ar.delta0_prime_raw);
        if (lhs != -w)
            return fail(d, "diag(delta0'_raw) = " + show(lhs) + ", W = " + show(w));
        return std::nullopt;
    });
}

Failure bridge_v(const GaussDiagram& d)
{
    return guarded(d, [&]() -> Failure {
        const AlexanderResult ar = alexander_suite(d);
        const UniLaurent v = v_polynomial(d).v_rep;
        const UniLaurent lhs = substitute_diag(ar.phi);
        if (lhs != v)
            return fail(d, "diag(phi) = " + show(lhs) + ", V = " + show(v));
        return std::nullopt;
    });
}

Failure oracle_equivalence(const GaussDiagram& d)
{
    return guarded(d, [&]() -> Failure {
        const BiLaurent det = delta0_raw(d);
        const BiLaurent brute = d.empty() ? BiLaurent{} : brute_force_det(build_matrix(arc_labeling(d), d));
        const BiLaurent conf = delta0_via_configurations(d);
        if (det != brute)
            return fail(d, "determinant " + show(det) + " vs brute force " + show(brute));
        if (det != conf)
            return fail(d, "determinant " + show(det) + " vs configurations " + show(conf));
        return std::nullopt;
    });
}

Failure grouped_terms(const GaussDiagram& d)
{
    return guarded(d, [&]() -> Failure {
        if (d.empty())
            return std::nullopt;
        const auto groups = grouped_brute_force(d);
        const int w = d.writhe();
        const std::uint64_t full = std::uint64_t{1} << d.size();
        for (std::uint64_t mask = 0; mask < full; ++mask) {
            auto it = groups.find(mask);
            const BiLaurent got = it == groups.end() ? BiLaurent{} : it->second;
            BiLaurent want;
            if (mask == 0) {
                want = uv_term(-w, -w) - uv_term(0, 0);
            } else {
                const auto ids = chords_of_mask(d, mask);
                if (is_alternating(d, ids))
                    want = contribution(d, ids);
            }
            if (got != want)
                return fail(d, "group " + std::to_string(mask) + " sums to " + show(got) + ", expected " + show(want));
        }
        return std::nullopt;
    });
}

Failure f_divisibility(const GaussDiagram& d)
{
    return guarded(d, [&]() -> Failure {
        const FPolynomials f = f_polynomials(d);
        const BiLaurent& q = one_minus_uv();
        const BiLaurent rest = delta0_raw(d) - (f.f0 + q * f.f1 + q * q * f.f2);
        if (!divides(q.pow(3), rest))
            return fail(d, "remainder after f0, f1, f2 not divisible by (1-uv)^3");
        return std::nullopt;
    });
}

Failure f2_symmetry(const GaussDiagram& d)
{
    for (const Chord& a : d.chords()) {
        for (const Chord& b : d.chords()) {
            if (a.id >= b.id || classify_pair(d, a.id, b.id) != PairType::A)
                continue;
            const IndexRecord r1 = d.indices(a.id), r2 = d.indices(b.id);
            const int u12 = -r1.lu + r2.ru + b.sign, v12 = r1.lo - r2.ro + b.sign;
            const int u21 = -r2.lu + r1.ru + a.sign, v21 = r2.lo - r1.ro + a.sign;
            if (u12 != u21 || v12 != v21)
                return fail(d, "type-A summand depends on chord order");
        }
    }
    return std::nullopt;
}

Failure factor_divisibility(const GaussDiagram& d)
{
    return guarded(d, [&]() -> Failure {
        if (!divides(factor_triple(), delta0_raw(d)))
            return fail(d, "(1-u)(1-v)(1-uv) does not divide delta0_raw");
        return std::nullopt;
    });
}

Failure w_divisibility(const GaussDiagram& d)
{
    const UniLaurent w = writhe_invariants(d).w;
    const UniLaurent f = (t_term(1) - t_term(0)) * (t_term(-1) - t_term(0));
    if (!divides(f, w))
        return fail(d, "(t-1)(t^-1-1) does not divide W = " + show(w));
    if (w.eval({Rational(1)}) != 0)
        return fail(d, "W(1) != 0");
    return std::nullopt;
}

Failure odd_writhe(const GaussDiagram& d)
{
    return guarded(d, [&]() -> Failure {
        const WritheInvariants wi = writhe_invariants(d);
        const Rational bar = alexander_suite(d).delta0_bar.eval({Rational(-1), Rational(-1)});
        if (Rational(wi.odd_writhe) != 2 * bar)
            return fail(d, "odd writhe " + std::to_string(wi.odd_writhe) + " vs 2*bar(-1,-1)");
        if (wi.w.eval({Rational(-1)}) != Rational(-2 * wi.odd_writhe))
            return fail(d, "W(-1) != -2 ow");
        return std::nullopt;
    });
}

namespace {

BiLaurent symmetry_target(const BiLaurent& p, Transform kind)
{
    switch (kind) {
    case Transform::SwitchAll:
        return -swap_uv(p);
    case Transform::Mirror:
        return invert_vars(p);
    case Transform::Reverse:
        return -invert_vars(p);
    }
    return p;
}

} // namespace

Failure symmetry(const GaussDiagram& d, Transform kind)
{
    return guarded(d, [&]() -> Failure {
        const BiLaurent lhs = normalize_uv(delta0_raw(transform(d, kind)));
        const BiLaurent rhs = normalize_uv(symmetry_target(delta0_raw(d), kind));
        if (lhs != rhs)
            return fail(d, std::string(transform_name(kind)) + ": " + show(lhs) + " vs " + show(rhs));
        return std::nullopt;
    });
}

bool symmetry_exact(const GaussDiagram& d, Transform kind)
{
    return delta0_raw(transform(d, kind)) == symmetry_target(delta0_raw(d), kind);
}

namespace {

struct Snapshot {
    BiLaurent raw;
    UniLaurent w;
    UniLaurent v;
    int w0_corrected;
};

Snapshot snap(const GaussDiagram& d)
{
    return {delta0_raw(d), writhe_invariants(d).w, v_polynomial(d).v_rep, d.n_writhe(0) - d.writhe()};
}

Failure compare_nonzero_writhes(const GaussDiagram& a, const GaussDiagram& b)
{
    for (int n = -a.size() - 2; n <= a.size() + 2; ++n) {
        if (n != 0 && a.n_writhe(n) != b.n_writhe(n))
            return fail(a, "w_" + std::to_string(n) + " changed");
    }
    if (a.n_writhe(0) - a.writhe() != b.n_writhe(0) - b.writhe())
        return fail(a, "w_0(D) - Wr(D) changed");
    return std::nullopt;
}

} // namespace

Failure move_r1(const GaussDiagram& d, int pos, R1Variant variant)
{
    return guarded(d, [&]() -> Failure {
        const GaussDiagram e = insert_r1(d, pos, variant);
        const Snapshot a = snap(d), b = snap(e);
        const char* tag = variant == R1Variant::Ia ? "Ia" : "Ib";
        if (auto f = compare_nonzero_writhes(d, e))
            return f;
        if (variant == R1Variant::Ia) {
            if (a.raw != b.raw)
                return fail(d, std::string(tag) + " changed delta0_raw");
            if (a.v != b.v)
                return fail(d, std::string(tag) + " changed V");
        } else {
            if (b.raw != a.raw * uv_term(-1, -1))
                return fail(d, std::string(tag) + " did not multiply delta0_raw by (uv)^-1");
            if (b.v != a.v - a.w)
                return fail(d, std::string(tag) + " did not send V to V - W");
        }
        return std::nullopt;
    });
}

Failure move_r2(const GaussDiagram& d, int pos_a, int pos_b)
{
    return guarded(d, [&]() -> Failure {
        const GaussDiagram e = insert_r2(d, pos_a, pos_b);
        const Snapshot a = snap(d), b = snap(e);
        if (auto f = compare_nonzero_writhes(d, e))
            return f;
        if (a.raw != b.raw)
            return fail(d, "IIa changed delta0_raw");
        if (a.v != b.v || a.w != b.w)
            return fail(d, "IIa changed W or V");
        return std::nullopt;
    });
}

Failure move_r3(const GaussDiagram& d, const std::array<int, 3>& slots, R3Layout layout)
{
    return guarded(d, [&]() -> Failure {
        const GaussDiagram before = insert_r3_pattern(d, slots, layout);
        const int base = d.max_id();
        const std::array<int, 3> ids{base + 1, base + 2, base + 3};
        const GaussDiagram after = apply_r3(before, ids);
        const Snapshot a = snap(before), b = snap(after);
        if (auto f = compare_nonzero_writhes(before, after))
            return f;
        if (a.raw != b.raw)
            return fail(before, "IIIa changed delta0_raw");
        if (a.v != b.v || a.w != b.w)
            return fail(before, "IIIa changed W or V");
        for (const Chord& c : before.chords())
            if (before.indices(c.id).ind != after.indices(c.id).ind)
                return fail(before, "IIIa changed the index of chord " + std::to_string(c.id));
        const auto ind = [&](int id) { return before.indices(id).ind; };
        if (ind(ids[0]) + ind(ids[1]) != ind(ids[2]))
            return fail(before, "Ind(c1) + Ind(c2) != Ind(c3)");
        if (!(apply_r3(after, ids) == before))
            return fail(before, "IIIa is not undone by reapplying it");
        return std::nullopt;
    });
}

Failure forbidden_w_delta(const GaussDiagram& d, int pos)
{
    return guarded(d, [&]() -> Failure {
        const ForbiddenResult fr = apply_forbidden(d, pos);
        const UniLaurent diff = writhe_invariants(d).w - writhe_invariants(fr.diagram).w;
        // One chord's index moves by -sign of the other, the other's by +sign of the first;
        // the orientation of the move decides which is which and the overall sign.
        for (const auto& [a, b] : {std::pair{fr.first, fr.second}, std::pair{fr.second, fr.first}}) {
            const int ea = d.chord(a).sign, eb = d.chord(b).sign;
            const int ia = d.indices(a).ind, ib = d.indices(b).ind;
            const UniLaurent form = (t_term(ia - eb) - t_term(ia)).scaled(ea) + (t_term(ib + ea) - t_term(ib)).scaled(eb);
            if (diff == form || diff == -form)
                return std::nullopt;
        }
        return fail(d, "forbidden move at " + std::to_string(pos) + " changed W by " + show(diff));
    });
}

namespace {

Failure v_change_in_index_set(const GaussDiagram& d, const ForbiddenResult& fr, int pos)
{
    const UniLaurent dv = v_polynomial(fr.diagram).v_rep - v_polynomial(d).v_rep;
    const std::set<int> allowed = {d.indices(fr.first).ind, d.indices(fr.second).ind,
                                   fr.diagram.indices(fr.first).ind, fr.diagram.indices(fr.second).ind};
    for (const auto& [e, c] : dv.terms())
        if (!allowed.count(e[0]))
            return fail(d, "forbidden move at " + std::to_string(pos) + " changed the t^" + std::to_string(e[0])
                                + " coefficient of V (change " + show(dv) + ")");
    return std::nullopt;
}

bool has_alternating_partner(const GaussDiagram& d, int id)
{
    for (const Chord& c : d.chords())
        if (c.id != id && classify_pair(d, id, c.id) != PairType::NonAlternating)
            return true;
    return false;
}

} // namespace

Failure forbidden_v_four(const GaussDiagram& d, int pos)
{
    return guarded(d, [&]() -> Failure { return v_change_in_index_set(d, apply_forbidden(d, pos), pos); });
}

std::optional<Failure> forbidden_v_four_isolated(const GaussDiagram& d, int pos)
{
    const ForbiddenResult fr = apply_forbidden(d, pos);
    for (const GaussDiagram* g : {&d, &fr.diagram})
        if (has_alternating_partner(*g, fr.first) || has_alternating_partner(*g, fr.second))
            return std::nullopt;
    return v_change_in_index_set(d, fr, pos);
}

Failure forbidden_w_prime_sum(const GaussDiagram& d, int pos)
{
    return guarded(d, [&]() -> Failure {
        const ForbiddenResult fr = apply_forbidden(d, pos);
        const Coeff a = shape(w_prime(writhe_invariants(d).w)).coeff_abs_sum;
        const Coeff b = shape(w_prime(writhe_invariants(fr.diagram).w)).coeff_abs_sum;
        if (abs(a - b) > 2)
            return fail(d, "sum |b_i| moved from " + a.str() + " to " + b.str());
        return std::nullopt;
    });
}

} // namespace checks

std::vector<int> forbidden_positions(const GaussDiagram& d)
{
    std::vector<int> out;
    const int m = d.positions();
    for (int p = 0; p < m; ++p) {
        const Token &a = d.at(p), &b = d.at((p + 1) % m);
        if (a.label != b.label && a.role == b.role)
            out.push_back(p);
    }
    return out;
}

void CheckOutcome::record(const Failure& f)
{
    ++trials;
    if (f) {
        if (failures == 0)
            first_failure = *f;
        ++failures;
    }
}

std::vector<CheckOutcome> run_selftest(const SuiteOptions& opts)
{
    Rng rng(opts.seed);
    const int big = std::max(0, opts.max_chords);
    const int small = std::min(big, 5);

    std::vector<CheckOutcome> out;
    out.reserve(32); // add() hands out references
    auto add = [&](const std::string& name) -> CheckOutcome& {
        out.emplace_back().name = name;
        return out.back();
    };

    {
        CheckOutcome& idx = add("index identities");
        CheckOutcome& bw = add("bridge W = -diag(delta0'_raw)");
        CheckOutcome& bv = add("bridge V = diag(phi)");
        CheckOutcome& fac = add("(1-u)(1-v)(1-uv) | delta0_raw");
        CheckOutcome& wd = add("(t-1)(t^-1-1) | W and W(1) = 0");
        CheckOutcome& ow = add("odd writhe = 2 bar(-1,-1)");
        for (int i = 0; i < opts.trials; ++i) {
            const GaussDiagram d = random_diagram(rng.range(0, big), rng);
            idx.record(checks::index_identities(d));
            bw.record(checks::bridge_w(d));
            bv.record(checks::bridge_v(d));
            fac.record(checks::factor_divisibility(d));
            wd.record(checks::w_divisibility(d));
            ow.record(checks::odd_writhe(d));
        }
    }
    {
        CheckOutcome& oe = add("determinant = brute force = configurations");
        CheckOutcome& gt = add("grouped permutation terms");
        CheckOutcome& fd = add("(1-uv)^3 | delta0 - f0 - (1-uv) f1 - (1-uv)^2 f2");
        CheckOutcome& fs = add("type-A summand order independence");
        for (int i = 0; i < opts.trials; ++i) {
            const GaussDiagram d = random_diagram(rng.range(0, small), rng);
            oe.record(checks::oracle_equivalence(d));
            gt.record(checks::grouped_terms(d));
            fd.record(checks::f_divisibility(d));
            fs.record(checks::f2_symmetry(d));
        }
    }
    {
        CheckOutcome& sw = add("symmetry switch_all");
        CheckOutcome& mi = add("symmetry mirror");
        CheckOutcome& rv = add("symmetry reverse");
        for (int i = 0; i < opts.trials; ++i) {
            const GaussDiagram d = random_diagram(rng.range(0, big), rng);
            sw.record(checks::symmetry(d, Transform::SwitchAll));
            mi.record(checks::symmetry(d, Transform::Mirror));
            rv.record(checks::symmetry(d, Transform::Reverse));
        }
    }
    {
        CheckOutcome& ia = add("move Ia");
        CheckOutcome& ib = add("move Ib");
        CheckOutcome& ii = add("move IIa");
        CheckOutcome& iii = add("move IIIa");
        CheckOutcome& fw = add("forbidden move W change");
        CheckOutcome& fb = add("forbidden move sum |b_i| change <= 2");
        CheckOutcome& fv = add("forbidden move changes only the four index coefficients of V");
        for (int i = 0; i < opts.trials; ++i) {
            const GaussDiagram d = random_diagram(rng.range(0, small), rng);
            const int m = d.positions();
            ia.record(checks::move_r1(d, rng.range(0, m), R1Variant::Ia));
            ib.record(checks::move_r1(d, rng.range(0, m), R1Variant::Ib));
            ii.record(checks::move_r2(d, rng.range(0, m), rng.range(0, m)));
            std::array<int, 3> slots{rng.range(0, m), rng.range(0, m), rng.range(0, m)};
            std::sort(slots.begin(), slots.end());
            iii.record(checks::move_r3(d, slots, rng.coin() ? R3Layout::TMB : R3Layout::TBM));
            const auto fp = forbidden_positions(d);
            if (!fp.empty()) {
                const int p = fp[rng.below(fp.size())];
                fw.record(checks::forbidden_w_delta(d, p));
                fb.record(checks::forbidden_w_prime_sum(d, p));
                fv.record(checks::forbidden_v_four(d, p));
            }
        }
    }
    return out;
}

} // namespace vknot
