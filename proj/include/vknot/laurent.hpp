#pragma once

#include <array>
#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <string_view>

#include <boost/multiprecision/cpp_int.hpp>

namespace vknot {

using Coeff = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

// Sparse Laurent polynomial in N variables with integer coefficients.
// Zero coefficients are never stored, so term-map equality is ring equality.
template <int N>
class Laurent {
public:
    using Exp = std::array<int, N>;
    using TermMap = std::map<Exp, Coeff>;

    Laurent() = default;

    static Laurent constant(const Coeff& c);
    static Laurent monomial(const Coeff& c, const Exp& e);

    const TermMap& terms() const noexcept { return terms_; }
    bool is_zero() const noexcept { return terms_.empty(); }
    std::size_t size() const noexcept { return terms_.size(); }
    Coeff coeff(const Exp& e) const;

    void add_term(const Exp& e, const Coeff& c);

    Laurent& operator+=(const Laurent& o);
    Laurent& operator-=(const Laurent& o);
    Laurent& operator*=(const Laurent& o) { return *this = *this * o; }

    friend Laurent operator+(Laurent a, const Laurent& b) { return a += b; }
    friend Laurent operator-(Laurent a, const Laurent& b) { return a -= b; }
    friend Laurent operator*(const Laurent& a, const Laurent& b) { return a.times(b); }
    Laurent operator-() const;
    friend bool operator==(const Laurent& a, const Laurent& b) { return a.terms_ == b.terms_; }

    Laurent scaled(const Coeff& c) const;
    Laurent shifted(const Exp& by) const;
    Laurent pow(unsigned k) const;

    // Componentwise minimum / maximum exponent; absent for zero.
    std::optional<Exp> min_exponents() const;
    std::optional<Exp> max_exponents() const;

    Rational eval(const std::array<Rational, N>& point) const;

private:
    Laurent times(const Laurent& o) const;

    TermMap terms_;
};

using BiLaurent = Laurent<2>;
using UniLaurent = Laurent<1>;

inline BiLaurent uv_term(int i, int j, const Coeff& c = 1) { return BiLaurent::monomial(c, {i, j}); }
inline UniLaurent t_term(int i, const Coeff& c = 1) { return UniLaurent::monomial(c, {i}); }

// Exact quotient p / q; throws NotDivisible or DivisionByZero.
template <int N>
Laurent<N> divide_exact(const Laurent<N>& p, const Laurent<N>& q);

template <int N>
bool divides(const Laurent<N>& q, const Laurent<N>& p);

// u = t, v = t^-1.
UniLaurent substitute_diag(const BiLaurent& p);
// t -> u, exponent pairs (n, 0).
BiLaurent inject_u(const UniLaurent& p);
BiLaurent swap_uv(const BiLaurent& p);
BiLaurent invert_vars(const BiLaurent& p);
UniLaurent invert_var(const UniLaurent& p);
// Multiply by (uv)^k so that the minimum u-exponent is 0.
BiLaurent normalize_uv(const BiLaurent& p);

template <int N>
Rational eval_int(const Laurent<N>& p, const std::array<Rational, N>& point) { return p.eval(point); }

struct Shape {
    int width = 0;
    std::optional<int> min_exp;
    std::optional<int> max_exp;
    std::size_t term_count = 0;
    Coeff coeff_abs_sum = 0;
};

Shape shape(const UniLaurent& p);

std::string render(const BiLaurent& p);
std::string render(const UniLaurent& p);

// Accepts the render format with or without spaces ("2+t^-2-2*t^-1").
UniLaurent parse_uni(std::string_view text);
BiLaurent parse_bi(std::string_view text);

extern template class Laurent<1>;
extern template class Laurent<2>;

} // namespace vknot
