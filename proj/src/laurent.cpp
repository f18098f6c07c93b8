#include "vknot/laurent.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

#include "vknot/errors.hpp"

namespace vknot {

template <int N>
Laurent<N> Laurent<N>::constant(const Coeff& c)
{
    return monomial(c, Exp{});
}

template <int N>
Laurent<N> Laurent<N>::monomial(const Coeff& c, const Exp& e)
{
    Laurent r;
    if (c != 0)
        r.terms_.emplace(e, c);
    return r;
}

template <int N>
Coeff Laurent<N>::coeff(const Exp& e) const
{
    auto it = terms_.find(e);
    return it == terms_.end() ? Coeff(0) : it->second;
}

template <int N>
void Laurent<N>::add_term(const Exp& e, const Coeff& c)
{
    if (c == 0)
        return;
    auto [it, inserted] = terms_.try_emplace(e, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0)
            terms_.erase(it);
    }
}

template <int N>
Laurent<N>& Laurent<N>::operator+=(const Laurent& o)
{
    for (const auto& [e, c] : o.terms_)
        add_term(e, c);
    return *this;
}

template <int N>
Laurent<N>& Laurent<N>::operator-=(const Laurent& o)
{
    for (const auto& [e, c] : o.terms_)
        add_term(e, -c);
    return *this;
}

template <int N>
Laurent<N> Laurent<N>::operator-() const
{
    Laurent r = *this;
    for (auto& [e, c] : r.terms_)
        c = -c;
    return r;
}

template <int N>
Laurent<N> Laurent<N>::times(const Laurent& o) const
{
    Laurent r;
    for (const auto& [a, x] : terms_) {
        for (const auto& [b, y] : o.terms_) {
            Exp e;
            for (int k = 0; k < N; ++k)
                e[k] = a[k] + b[k];
            r.add_term(e, x * y);
        }
    }
    return r;
}

template <int N>
Laurent<N> Laurent<N>::scaled(const Coeff& c) const
{
    if (c == 0)
        return {};
    Laurent r = *this;
    for (auto& [e, x] : r.terms_)
        x *= c;
    return r;
}

template <int N>
Laurent<N> Laurent<N>::shifted(const Exp& by) const
{
    Laurent r;
    for (const auto& [e, c] : terms_) {
        Exp s;
        for (int k = 0; k < N; ++k)
            s[k] = e[k] + by[k];
        r.terms_.emplace_hint(r.terms_.end(), s, c);
    }
    return r;
}

template <int N>
Laurent<N> Laurent<N>::pow(unsigned k) const
{
    Laurent r = constant(1);
    Laurent base = *this;
    while (k) {
        if (k & 1u)
            r = r * base;
        k >>= 1;
        if (k)
            base = base * base;
    }
    return r;
}

template <int N>
std::optional<typename Laurent<N>::Exp> Laurent<N>::min_exponents() const
{
    if (terms_.empty())
        return std::nullopt;
    Exp m = terms_.begin()->first;
    for (const auto& [e, c] : terms_)
        for (int k = 0; k < N; ++k)
            m[k] = std::min(m[k], e[k]);
    return m;
}

template <int N>
std::optional<typename Laurent<N>::Exp> Laurent<N>::max_exponents() const
{
    if (terms_.empty())
        return std::nullopt;
    Exp m = terms_.begin()->first;
    for (const auto& [e, c] : terms_)
        for (int k = 0; k < N; ++k)
            m[k] = std::max(m[k], e[k]);
    return m;
}

namespace {

Rational rational_pow(const Rational& x, int e)
{
    if (e < 0) {
        if (x == 0)
            throw EvaluationError("zero substituted into a negative power");
        return 1 / rational_pow(x, -e);
    }
    Rational r = 1;
    for (int i = 0; i < e; ++i)
        r *= x;
    return r;
}

} // namespace

template <int N>
Rational Laurent<N>::eval(const std::array<Rational, N>& point) const
{
    Rational sum = 0;
    for (const auto& [e, c] : terms_) {
        Rational term = Rational(c);
        for (int k = 0; k < N; ++k)
            term *= rational_pow(point[k], e[k]);
        sum += term;
    }
    return sum;
}

template class Laurent<1>;
template class Laurent<2>;

namespace {

// Graded order, ties broken lexicographically with the first variable largest.
template <int N>
bool grlex_less(const std::array<int, N>& a, const std::array<int, N>& b)
{
    int sa = 0, sb = 0;
    for (int k = 0; k < N; ++k) {
        sa += a[k];
        sb += b[k];
    }
    if (sa != sb)
        return sa < sb;
    return a < b;
}

template <int N>
typename Laurent<N>::TermMap::const_iterator leading(const Laurent<N>& p)
{
    auto best = p.terms().begin();
    for (auto it = p.terms().begin(); it != p.terms().end(); ++it)
        if (grlex_less<N>(best->first, it->first))
            best = it;
    return best;
}

template <int N>
std::array<int, N> negated(std::array<int, N> e)
{
    for (auto& x : e)
        x = -x;
    return e;
}

} // namespace

template <int N>
Laurent<N> divide_exact(const Laurent<N>& p, const Laurent<N>& q)
{
    if (q.is_zero())
        throw DivisionByZero("division by the zero polynomial");
    if (p.is_zero())
        return {};

    const auto pmin = *p.min_exponents();
    const auto qmin = *q.min_exponents();
    Laurent<N> rem = p.shifted(negated<N>(pmin));
    const Laurent<N> den = q.shifted(negated<N>(qmin));
    const auto lq = leading<N>(den);

    Laurent<N> quot;
    while (!rem.is_zero()) {
        const auto lr = leading<N>(rem);
        std::array<int, N> e;
        for (int k = 0; k < N; ++k) {
            e[k] = lr->first[k] - lq->first[k];
            if (e[k] < 0)
                throw NotDivisible("leading monomial not divisible");
        }
        if (lr->second % lq->second != 0)
            throw NotDivisible("leading coefficient not divisible");
        Coeff c = lr->second / lq->second;
        quot.add_term(e, c);
        rem -= den.shifted(e).scaled(c);
    }

    std::array<int, N> back;
    for (int k = 0; k < N; ++k)
        back[k] = pmin[k] - qmin[k];
    return quot.shifted(back);
}

template <int N>
bool divides(const Laurent<N>& q, const Laurent<N>& p)
{
    try {
        divide_exact(p, q);
        return true;
    } catch (const NotDivisible&) {
        return false;
    }
}

template Laurent<1> divide_exact(const Laurent<1>&, const Laurent<1>&);
template Laurent<2> divide_exact(const Laurent<2>&, const Laurent<2>&);
template bool divides(const Laurent<1>&, const Laurent<1>&);
template bool divides(const Laurent<2>&, const Laurent<2>&);

UniLaurent substitute_diag(const BiLaurent& p)
{
    UniLaurent r;
    for (const auto& [e, c] : p.terms())
        r.add_term({e[0] - e[1]}, c);
    return r;
}

BiLaurent inject_u(const UniLaurent& p)
{
    BiLaurent r;
    for (const auto& [e, c] : p.terms())
        r.add_term({e[0], 0}, c);
    return r;
}

BiLaurent swap_uv(const BiLaurent& p)
{
    BiLaurent r;
    for (const auto& [e, c] : p.terms())
        r.add_term({e[1], e[0]}, c);
    return r;
}

BiLaurent invert_vars(const BiLaurent& p)
{
    BiLaurent r;
    for (const auto& [e, c] : p.terms())
        r.add_term({-e[0], -e[1]}, c);
    return r;
}

UniLaurent invert_var(const UniLaurent& p)
{
    UniLaurent r;
    for (const auto& [e, c] : p.terms())
        r.add_term({-e[0]}, c);
    return r;
}

BiLaurent normalize_uv(const BiLaurent& p)
{
    auto m = p.min_exponents();
    if (!m)
        return p;
    return p.shifted({-(*m)[0], -(*m)[0]});
}

Shape shape(const UniLaurent& p)
{
    Shape s;
    s.term_count = p.size();
    for (const auto& [e, c] : p.terms())
        s.coeff_abs_sum += abs(c);
    if (auto lo = p.min_exponents()) {
        s.min_exp = (*lo)[0];
        s.max_exp = (*p.max_exponents())[0];
        s.width = *s.max_exp - *s.min_exp;
    }
    return s;
}

namespace {

template <int N>
std::string render_impl(const Laurent<N>& p, const std::array<const char*, N>& names)
{
    if (p.is_zero())
        return "0";

    std::vector<std::pair<std::array<int, N>, Coeff>> ordered;
    const std::array<int, N> zero{};
    if (Coeff c0 = p.coeff(zero); c0 != 0)
        ordered.emplace_back(zero, c0);
    for (const auto& [e, c] : p.terms())
        if (e != zero)
            ordered.emplace_back(e, c);

    std::ostringstream out;
    bool first = true;
    for (const auto& [e, c] : ordered) {
        const bool neg = c < 0;
        const Coeff mag = neg ? Coeff(-c) : c;
        if (first)
            out << (neg ? "-" : "");
        else
            out << (neg ? " - " : " + ");
        first = false;

        std::string mono;
        for (int k = 0; k < N; ++k) {
            if (e[k] == 0)
                continue;
            if (!mono.empty())
                mono += '*';
            mono += names[k];
            if (e[k] != 1)
                mono += '^' + std::to_string(e[k]);
        }
        if (mono.empty())
            out << mag;
        else if (mag == 1)
            out << mono;
        else
            out << mag << '*' << mono;
    }
    return out.str();
}

template <int N>
class PolyParser {
public:
    PolyParser(std::string_view text, const std::array<char, N>& names) : names_(names)
    {
        for (char ch : text)
            if (!std::isspace(static_cast<unsigned char>(ch)))
                s_ += ch;
    }

    Laurent<N> parse()
    {
        if (s_.empty())
            fail("empty polynomial");
        Laurent<N> r;
        bool first = true;
        while (i_ < s_.size()) {
            int sign = 1;
            if (s_[i_] == '+' || s_[i_] == '-') {
                sign = s_[i_] == '-' ? -1 : 1;
                ++i_;
            } else if (!first) {
                fail("expected '+' or '-'");
            }
            first = false;
            auto [e, c] = term();
            r.add_term(e, c * sign);
        }
        return r;
    }

private:
    std::pair<std::array<int, N>, Coeff> term()
    {
        std::array<int, N> e{};
        Coeff c = 1;
        bool any = false;
        do {
            if (any)
                ++i_; // '*'
            any = true;
            if (i_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[i_]))) {
                c *= integer();
                continue;
            }
            int k = var();
            int pw = 1;
            if (i_ < s_.size() && s_[i_] == '^') {
                ++i_;
                int sg = 1;
                if (i_ < s_.size() && (s_[i_] == '-' || s_[i_] == '+')) {
                    sg = s_[i_] == '-' ? -1 : 1;
                    ++i_;
                }
                pw = sg * static_cast<int>(integer());
            }
            e[k] += pw;
        } while (i_ < s_.size() && s_[i_] == '*');
        return {e, c};
    }

    Coeff integer()
    {
        std::size_t start = i_;
        while (i_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[i_])))
            ++i_;
        if (start == i_)
            fail("expected integer");
        return Coeff(s_.substr(start, i_ - start));
    }

    int var()
    {
        if (i_ < s_.size())
            for (int k = 0; k < N; ++k)
                if (s_[i_] == names_[k]) {
                    ++i_;
                    return k;
                }
        fail("expected variable");
        return 0;
    }

    [[noreturn]] void fail(const std::string& why) const
    {
        throw ParseError(ParseError::Kind::MalformedToken,
                         "bad polynomial '" + s_ + "' at " + std::to_string(i_) + ": " + why);
    }

    std::string s_;
    std::size_t i_ = 0;
    std::array<char, N> names_;
};

} // namespace

std::string render(const BiLaurent& p)
{
    return render_impl<2>(p, {"u", "v"});
}

std::string render(const UniLaurent& p)
{
    return render_impl<1>(p, {"t"});
}

UniLaurent parse_uni(std::string_view text)
{
    return PolyParser<1>(text, {'t'}).parse();
}

BiLaurent parse_bi(std::string_view text)
{
    return PolyParser<2>(text, {'u', 'v'}).parse();
}

} // namespace vknot
