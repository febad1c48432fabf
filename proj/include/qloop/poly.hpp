#pragma once
// Sparse Laurent polynomials in q^(1/2), u, a, v.

#include <gmpxx.h>

#include <array>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace qloop {

enum Var : int { QH = 0, U = 1, A = 2, V = 3 };
inline constexpr int kNumVars = 4;

using Exp = std::array<int32_t, kNumVars>;

inline Exp exp_zero() { return Exp{0, 0, 0, 0}; }
inline Exp exp_add(const Exp& x, const Exp& y)
{
    return Exp{x[0] + y[0], x[1] + y[1], x[2] + y[2], x[3] + y[3]};
}
inline Exp exp_sub(const Exp& x, const Exp& y)
{
    return Exp{x[0] - y[0], x[1] - y[1], x[2] - y[2], x[3] - y[3]};
}

// Terms are kept sorted by exponent in decreasing lex order, coefficients nonzero.
template <class C>
class SparsePoly {
public:
    struct Term {
        Exp e;
        C c;
    };

    SparsePoly() = default;
    explicit SparsePoly(const C& c)
    {
        if (c != 0) terms_.push_back({exp_zero(), c});
    }
    static SparsePoly monomial(const C& c, const Exp& e)
    {
        SparsePoly p;
        if (c != 0) p.terms_.push_back({e, c});
        return p;
    }
    static SparsePoly from_terms(std::vector<Term> t);

    bool is_zero() const { return terms_.empty(); }
    bool is_monomial() const { return terms_.size() == 1; }
    bool is_constant() const { return is_zero() || (is_monomial() && terms_[0].e == exp_zero()); }
    std::size_t size() const { return terms_.size(); }
    const std::vector<Term>& terms() const { return terms_; }
    const Term& lead() const { return terms_.front(); }

    SparsePoly operator-() const
    {
        SparsePoly r = *this;
        for (auto& t : r.terms_) t.c = -t.c;
        return r;
    }
    SparsePoly operator+(const SparsePoly& o) const;
    SparsePoly operator-(const SparsePoly& o) const { return *this + (-o); }
    SparsePoly operator*(const SparsePoly& o) const;
    SparsePoly& operator+=(const SparsePoly& o) { return *this = *this + o; }
    SparsePoly& operator*=(const SparsePoly& o) { return *this = *this * o; }
    bool operator==(const SparsePoly& o) const;
    bool operator!=(const SparsePoly& o) const { return !(*this == o); }

    SparsePoly scaled(const C& c) const;
    SparsePoly shifted(const Exp& e) const;

    // min / max exponent of each variable; zeros for the zero polynomial
    Exp min_exp() const;
    Exp max_exp() const;
    int degree_span(int var) const { return max_exp()[var] - min_exp()[var]; }

    // exact division; false if not divisible
    bool divides_into(const SparsePoly& num, SparsePoly* quot) const;

    // coefficient of the monomial with the given exponent, zero if absent
    C coeff(const Exp& e) const;

private:
    std::vector<Term> terms_;
};

using QPoly = SparsePoly<mpq_class>;
using ZPoly = SparsePoly<mpz_class>;

// Integer content and primitive integer image of a rational polynomial: p = c * z.
void to_primitive(const QPoly& p, mpq_class* c, ZPoly* z);
QPoly to_qpoly(const ZPoly& z);

mpz_class content(const ZPoly& p);

// gcd of integer polynomials with nonnegative exponents, positive leading coefficient.
ZPoly poly_gcd(const ZPoly& a, const ZPoly& b);

// Number of heuristic gcd failures that fell back to the trivial gcd.
std::uint64_t gcd_fallback_count();

std::string exp_to_string(const Exp& e);

}  // namespace qloop
