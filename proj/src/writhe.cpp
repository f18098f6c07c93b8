#include "vknot/writhe.hpp"

#include "vknot/alexander.hpp"
#include "vknot/config_oracle.hpp"
#include "vknot/errors.hpp"

namespace vknot {

WritheInvariants writhe_invariants(const GaussDiagram& d)
{
    WritheInvariants r;
    std::map<int, int> wn;
    for (const Chord& c : d.chords())
        wn[d.indices(c.id).ind] += c.sign;
    wn[0] -= d.writhe();
    for (const auto& [n, w] : wn) {
        if (w == 0)
            continue;
        r.wn.emplace(n, w);
        r.w.add_term({n}, w);
        if (n % 2 != 0)
            r.odd_writhe += w;
    }
    return r;
}

VResidue v_polynomial(const GaussDiagram& d)
{
    VResidue r;
    const int w = d.writhe();
    UniLaurent v = UniLaurent::constant(w * (w + 1) / 2);
    for (const Chord& c : d.chords()) {
        const IndexRecord ix = d.indices(c.id);
        v.add_term({ix.ind}, c.sign * (ix.lo - (c.sign > 0 ? 1 : 0)));
    }
    const auto& cs = d.chords();
    for (std::size_t a = 0; a < cs.size(); ++a) {
        for (std::size_t b = a + 1; b < cs.size(); ++b) {
            const PairType t = classify_pair(d, cs[a].id, cs[b].id);
            if (t == PairType::NonAlternating)
                continue;
            const int e = cs[a].sign * cs[b].sign * (t == PairType::A ? 1 : -1);
            v.add_term({d.indices(cs[a].id).ind + d.indices(cs[b].id).ind}, e);
        }
    }
    r.v_rep = std::move(v);
    r.modulus = writhe_invariants(d).w;
    return r;
}

std::optional<Coeff> integer_multiple(const UniLaurent& diff, const UniLaurent& modulus)
{
    if (diff.is_zero())
        return Coeff(0);
    if (modulus.is_zero())
        return std::nullopt;
    const auto& [e, mc] = *modulus.terms().begin();
    const Coeff dc = diff.coeff(e);
    if (dc % mc != 0)
        return std::nullopt;
    const Coeff n = dc / mc;
    if (diff - modulus.scaled(n) != UniLaurent{})
        return std::nullopt;
    return n;
}

bool v_equivalent(const VResidue& a, const VResidue& b)
{
    if (!(a.modulus == b.modulus))
        throw ModulusMismatch("residues have different moduli");
    return integer_multiple(a.v_rep - b.v_rep, a.modulus).has_value();
}

BridgeCheck bridge_check(const GaussDiagram& d)
{
    const AlexanderResult ar = alexander_suite(d);
    const VResidue v = v_polynomial(d);
    BridgeCheck r;
    r.w_ok = substitute_diag(ar.delta0_prime_raw) == -v.modulus;
    r.v_ok = substitute_diag(ar.phi) == v.v_rep;
    return r;
}

} // namespace vknot
