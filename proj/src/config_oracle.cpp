#include "vknot/config_oracle.hpp"

#include <algorithm>
#include <bit>

#include "vknot/errors.hpp"

namespace vknot {

namespace {

constexpr int kMaxConfigChords = 12;
constexpr int kMaxBruteSize = 12;

std::vector<int> sorted_endpoints(const GaussDiagram& d, const std::vector<int>& ids)
{
    if (ids.empty())
        throw OutOfRange("empty configuration");
    std::vector<int> ps;
    for (int id : ids) {
        const Chord& c = d.chord(id);
        ps.push_back(c.over_pos);
        ps.push_back(c.under_pos);
    }
    std::sort(ps.begin(), ps.end());
    if (std::adjacent_find(ps.begin(), ps.end()) != ps.end())
        throw OutOfRange("repeated chord in configuration");
    return ps;
}

bool alternates(const GaussDiagram& d, const std::vector<int>& ps)
{
    const std::size_t k = ps.size();
    for (std::size_t i = 0; i < k; ++i)
        if (d.at(ps[i]).role == d.at(ps[(i + 1) % k]).role)
            return false;
    return true;
}

int partner(const GaussDiagram& d, int pos)
{
    const Token& t = d.at(pos);
    const Chord& c = d.chord(t.label);
    return t.role == Role::Over ? c.under_pos : c.over_pos;
}

} // namespace

bool is_alternating(const GaussDiagram& d, const std::vector<int>& chord_ids)
{
    return alternates(d, sorted_endpoints(d, chord_ids));
}

SmoothedLink smooth(const GaussDiagram& d, const std::vector<int>& chord_ids)
{
    const std::vector<int> ps = sorted_endpoints(d, chord_ids);
    if (!alternates(d, ps))
        throw PatternViolation("configuration is not alternating");

    const int k = static_cast<int>(ps.size());
    const int m = d.positions();
    std::vector<int> start_of(m, -1);
    for (int i = 0; i < k; ++i)
        start_of[ps[i]] = i;

    SmoothedLink link;
    std::vector<int> next(k);
    for (int i = 0; i < k; ++i) {
        const int end = ps[(i + 1) % k];
        next[i] = start_of[partner(d, end)];
        if (d.at(ps[i]).role != Role::Under)
            continue;
        for (int p = (ps[i] + 1) % m; p != end; p = (p + 1) % m) {
            const Token& t = d.at(p);
            (t.role == Role::Under ? link.u_count : link.o_count) += t.sign;
        }
    }

    std::vector<char> seen(k, 0);
    for (int i = 0; i < k; ++i) {
        if (seen[i])
            continue;
        std::vector<int> comp;
        for (int j = i; !seen[j]; j = next[j]) {
            seen[j] = 1;
            comp.push_back(ps[j]);
        }
        if (d.at(ps[i]).role == Role::Under)
            link.ascending_components.push_back(std::move(comp));
        else
            link.descending_components.push_back(std::move(comp));
    }
    return link;
}

BiLaurent contribution(const GaussDiagram& d, const std::vector<int>& chord_ids)
{
    const SmoothedLink link = smooth(d, chord_ids);
    unsigned pos = 0, neg = 0;
    for (int id : chord_ids)
        (d.chord(id).sign > 0 ? pos : neg) += 1;
    const BiLaurent one = uv_term(0, 0);
    const int m = static_cast<int>(chord_ids.size());
    const int sign = (m + link.ld()) % 2 == 0 ? 1 : -1;
    return one_minus_uv().pow(neg) * (one - uv_term(-1, -1)).pow(pos)
        * uv_term(-link.u_count, -link.o_count, sign);
}

std::vector<int> chords_of_mask(const GaussDiagram& d, std::uint64_t mask)
{
    std::vector<int> ids;
    for (int i = 0; i < d.size(); ++i)
        if (mask >> i & 1u)
            ids.push_back(d.chords()[i].id);
    return ids;
}

BiLaurent delta0_via_configurations(const GaussDiagram& d)
{
    if (d.empty())
        return {};
    if (d.size() > kMaxConfigChords)
        throw SizeLimit("configuration oracle is limited to 12 chords");
    const int w = d.writhe();
    BiLaurent acc = uv_term(-w, -w) - uv_term(0, 0);
    const std::uint64_t full = std::uint64_t{1} << d.size();
    for (std::uint64_t mask = 1; mask < full; ++mask) {
        auto ids = chords_of_mask(d, mask);
        if (is_alternating(d, ids))
            acc += contribution(d, ids);
    }
    return acc;
}

FPolynomials f_polynomials(const GaussDiagram& d)
{
    FPolynomials f;
    const int w = d.writhe();
    f.f0 = uv_term(-w, -w) - uv_term(0, 0);

    // (uv)^-(1+e)/2 is (uv)^-1 for positive chords, 1 for negative ones.
    auto half = [](int e) { return e > 0 ? 1 : 0; };
    for (const Chord& c : d.chords()) {
        const IndexRecord r = d.indices(c.id);
        const int h = half(c.sign);
        f.f1 += uv_term(-h - r.lu, -h + r.lo, -c.sign);
    }

    const auto& cs = d.chords();
    for (std::size_t a = 0; a < cs.size(); ++a) {
        for (std::size_t b = a + 1; b < cs.size(); ++b) {
            const PairType t = classify_pair(d, cs[a].id, cs[b].id);
            if (t == PairType::NonAlternating)
                continue;
            const IndexRecord r1 = d.indices(cs[a].id);
            const IndexRecord r2 = d.indices(cs[b].id);
            const int e1 = cs[a].sign, e2 = cs[b].sign;
            const int h = half(e1) + half(e2);
            if (t == PairType::A)
                f.f2 += uv_term(-h - r1.lu + r2.ru + e2, -h + r1.lo - r2.ro + e2, e1 * e2);
            else
                f.f2 += uv_term(-h - r1.lu - r2.lu, -h + r1.lo + r2.lo, -e1 * e2);
        }
    }
    return f;
}

namespace {

struct Alternative {
    int col;
    BiLaurent value;
    int crossing; // -1 when not a block off-diagonal entry
};

template <class Visit>
void expand(const std::vector<std::vector<Alternative>>& rows, Visit&& visit)
{
    const int n = static_cast<int>(rows.size());
    std::vector<int> cols;
    cols.reserve(n);
    std::uint64_t used = 0;
    auto rec = [&](auto&& self, int r, const BiLaurent& prod, int sign, std::uint64_t mask) -> void {
        if (r == n) {
            visit(mask, sign > 0 ? prod : -prod);
            return;
        }
        for (const Alternative& alt : rows[r]) {
            const std::uint64_t bit = std::uint64_t{1} << alt.col;
            if (used & bit)
                continue;
            // Earlier rows that took a larger column form inversions.
            const int inv = std::popcount(used & ~((bit << 1) - 1));
            used |= bit;
            std::uint64_t next_mask = alt.crossing >= 0 ? mask | (std::uint64_t{1} << alt.crossing) : mask;
            self(self, r + 1, prod * alt.value, inv % 2 ? -sign : sign, next_mask);
            used &= ~bit;
        }
    };
    rec(rec, 0, BiLaurent::constant(1), 1, 0);
}

} // namespace

BiLaurent brute_force_det(const PolyMatrix& m)
{
    if (m.size() > kMaxBruteSize)
        throw SizeLimit("brute-force determinant is limited to 12x12");
    std::vector<std::vector<Alternative>> rows(m.size());
    for (int r = 0; r < m.size(); ++r)
        for (const auto& [c, v] : m.row(r))
            rows[r].push_back({c, v, -1});
    BiLaurent acc;
    expand(rows, [&](std::uint64_t, const BiLaurent& term) { acc += term; });
    return acc;
}

std::map<std::uint64_t, BiLaurent> grouped_brute_force(const GaussDiagram& d)
{
    const int n = d.positions();
    if (n > kMaxBruteSize)
        throw SizeLimit("grouped expansion is limited to 6 chords");
    const ArcLabeling lab = arc_labeling(d);
    const BiLaurent one = uv_term(0, 0);
    std::vector<std::vector<Alternative>> rows(n);
    int i = 0;
    for (const Chord& c : d.chords()) {
        const int a = 2 * i, b = 2 * i + 1;
        if (c.sign > 0) {
            rows[a].push_back({a, uv_term(-1, 0), -1});
            rows[a].push_back({b, one - uv_term(-1, -1), i});
            rows[b].push_back({b, uv_term(0, -1), -1});
        } else {
            rows[a].push_back({a, uv_term(0, 1), -1});
            rows[b].push_back({a, one - uv_term(1, 1), i});
            rows[b].push_back({b, uv_term(1, 0), -1});
        }
        ++i;
    }
    for (int a = 0; a < n; ++a)
        rows[a].push_back({lab.pi[a], -one, -1});

    std::map<std::uint64_t, BiLaurent> groups;
    expand(rows, [&](std::uint64_t mask, const BiLaurent& term) { groups[mask] += term; });
    return groups;
}

PairType classify_pair(const GaussDiagram& d, int c1, int c2)
{
    if (c1 == c2)
        throw OutOfRange("classify_pair needs distinct chords");
    std::vector<int> ids{c1, c2};
    if (!is_alternating(d, ids))
        return PairType::NonAlternating;
    return smooth(d, ids).ld() == 2 ? PairType::A : PairType::B;
}

const char* pair_type_name(PairType t)
{
    switch (t) {
    case PairType::NonAlternating:
        return "non-alternating";
    case PairType::A:
        return "A";
    case PairType::B:
        return "B";
    }
    return "?";
}

} // namespace vknot
