#include "vknot/alexander.hpp"

#include <bit>
#include <cstdint>
#include <unordered_map>

#include "vknot/errors.hpp"
#include "vknot/writhe.hpp"

namespace vknot {

std::string ArcLabeling::cycle_string() const
{
    if (pi.empty())
        return "()";
    std::string out = "(";
    int a = 0;
    do {
        if (a != 0)
            out += ' ';
        out += 'a' + std::to_string(a + 1);
        a = pi[a];
    } while (a != 0);
    return out + ')';
}

bool ArcLabeling::is_single_cycle() const
{
    if (pi.empty())
        return true;
    std::size_t len = 0;
    int a = 0;
    do {
        a = pi[a];
        ++len;
    } while (a != 0 && len <= pi.size());
    return len == pi.size();
}

ArcLabeling arc_labeling(const GaussDiagram& d)
{
    ArcLabeling lab;
    const int m = d.positions();
    lab.arc_at_pos.assign(m, -1);
    int i = 0;
    for (const Chord& c : d.chords()) {
        lab.chord_ids.push_back(c.id);
        const bool pos = c.sign > 0;
        lab.arc_at_pos[pos ? c.under_pos : c.over_pos] = 2 * i;
        lab.arc_at_pos[pos ? c.over_pos : c.under_pos] = 2 * i + 1;
        ++i;
    }
    lab.pi.assign(m, -1);
    for (int p = 0; p < m; ++p)
        lab.pi[lab.arc_at_pos[p]] = lab.arc_at_pos[(p + 1) % m];
    return lab;
}

void PolyMatrix::add(int r, int c, const BiLaurent& p)
{
    auto& row = rows_.at(r);
    BiLaurent& cell = row[c];
    cell += p;
    if (cell.is_zero())
        row.erase(c);
}

BiLaurent PolyMatrix::at(int r, int c) const
{
    const auto& row = rows_.at(r);
    auto it = row.find(c);
    return it == row.end() ? BiLaurent{} : it->second;
}

const BiLaurent& one_minus_uv()
{
    static const BiLaurent p = uv_term(0, 0) - uv_term(1, 1);
    return p;
}

const BiLaurent& factor_triple()
{
    static const BiLaurent p = (uv_term(0, 0) - uv_term(1, 0)) * (uv_term(0, 0) - uv_term(0, 1)) * one_minus_uv();
    return p;
}

PolyMatrix build_matrix(const ArcLabeling& lab, const GaussDiagram& d)
{
    PolyMatrix m(d.positions());
    const BiLaurent one = uv_term(0, 0);
    int i = 0;
    for (const Chord& c : d.chords()) {
        const int a = 2 * i, b = 2 * i + 1;
        if (c.sign > 0) {
            m.add(a, a, uv_term(-1, 0));
            m.add(a, b, one - uv_term(-1, -1));
            m.add(b, b, uv_term(0, -1));
        } else {
            m.add(a, a, uv_term(0, 1));
            m.add(b, a, one - uv_term(1, 1));
            m.add(b, b, uv_term(1, 0));
        }
        ++i;
    }
    for (int a = 0; a < m.size(); ++a)
        m.add(a, lab.pi[a], -one);
    return m;
}

BiLaurent determinant(const PolyMatrix& m)
{
    const int n = m.size();
    if (n == 0)
        return BiLaurent::constant(1);
    if (n > 63)
        throw SizeLimit("matrix too large for column-mask expansion");

    std::unordered_map<std::uint64_t, BiLaurent> memo;
    // Minor on rows popcount(used).. n-1 and the unused columns.
    auto minor = [&](auto&& self, std::uint64_t used) -> BiLaurent {
        const int r = std::popcount(used);
        if (r == n)
            return BiLaurent::constant(1);
        if (auto it = memo.find(used); it != memo.end())
            return it->second;
        BiLaurent acc;
        for (const auto& [c, entry] : m.row(r)) {
            const std::uint64_t bit = std::uint64_t{1} << c;
            if (used & bit)
                continue;
            const int before = c - std::popcount(used & (bit - 1));
            BiLaurent sub = self(self, used | bit);
            if (sub.is_zero())
                continue;
            BiLaurent term = entry * sub;
            if (before & 1)
                acc -= term;
            else
                acc += term;
        }
        memo.emplace(used, acc);
        return acc;
    };
    return minor(minor, 0);
}

BiLaurent delta0_raw(const GaussDiagram& d)
{
    if (d.empty())
        return {};
    return determinant(build_matrix(arc_labeling(d), d));
}

AlexanderResult alexander_suite(const GaussDiagram& d)
{
    AlexanderResult r;
    r.delta0_raw = delta0_raw(d);
    r.delta0 = normalize_uv(r.delta0_raw);
    r.delta0_prime_raw = divide_exact(r.delta0_raw, one_minus_uv());
    r.delta0_prime = divide_exact(r.delta0, one_minus_uv());
    r.delta0_bar = divide_exact(r.delta0, factor_triple());
    r.phi = divide_exact(r.delta0_prime_raw + inject_u(writhe_invariants(d).w), one_minus_uv());
    return r;
}

} // namespace vknot
