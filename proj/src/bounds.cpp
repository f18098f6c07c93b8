#include "vknot/bounds.hpp"

#include "vknot/errors.hpp"

namespace vknot {

const char* obstruction_name(Obstruction o)
{
    switch (o) {
    case Obstruction::Yes:
        return "yes";
    case Obstruction::No:
        return "no";
    case Obstruction::Inconclusive:
        return "inconclusive";
    }
    return "?";
}

long long vc_lower_bound(const UniLaurent& w)
{
    return (shape(w).width + 1) / 2;
}

UniLaurent w_prime(const UniLaurent& w)
{
    return divide_exact(w, t_term(1) - t_term(0));
}

long long forbidden_lower_bound(const UniLaurent& w)
{
    if (w.is_zero())
        return 0;
    const Coeff total = shape(w_prime(w)).coeff_abs_sum;
    return static_cast<long long>((total + 1) / 2);
}

Obstruction forbidden_one_obstruction(const VResidue& v)
{
    if (!v.modulus.is_zero())
        return Obstruction::Inconclusive;
    int even = 0, odd = 0;
    for (const auto& [e, c] : v.v_rep.terms())
        (e[0] % 2 == 0 ? even : odd) += 1;
    return (even + odd > 4 || even > 2 || odd > 2) ? Obstruction::Yes : Obstruction::No;
}

BoundsReport bounds_report(const GaussDiagram& d)
{
    const VResidue v = v_polynomial(d);
    BoundsReport r;
    r.vc_lower = vc_lower_bound(v.modulus);
    r.forbidden_lower_w = forbidden_lower_bound(v.modulus);
    r.forbidden_one_excluded = forbidden_one_obstruction(v);
    return r;
}

MutantPair mutant_family(int k)
{
    if (k < 1)
        throw OutOfRange("mutant family needs k >= 1");
    const int x = k + 1, y = k + 2, z = k + 3;
    auto O = [](int id) { return Token{id, Role::Over, 1}; };
    auto U = [](int id) { return Token{id, Role::Under, 1}; };

    std::vector<Token> kseq{O(x)};
    for (int i = 1; i <= k; ++i)
        kseq.push_back(U(i));
    for (Token t : {U(z), U(y), O(z), U(x), O(y)})
        kseq.push_back(t);
    for (int i = k; i >= 1; --i)
        kseq.push_back(O(i));

    std::vector<Token> mseq{O(x), U(y)};
    for (int i = 1; i <= k; ++i)
        mseq.push_back(U(i));
    mseq.push_back(U(x));
    for (int i = k; i >= 1; --i)
        mseq.push_back(O(i));
    for (Token t : {O(z), O(y), U(z)})
        mseq.push_back(t);

    return {GaussDiagram(std::move(kseq)), GaussDiagram(std::move(mseq))};
}

} // namespace vknot
