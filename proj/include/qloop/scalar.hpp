#pragma once
// Rational functions num/den in q^(1/2), u, a, v over Q.

#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "qloop/poly.hpp"

namespace qloop {

struct PoleAtPoint : std::runtime_error {
    PoleAtPoint() : std::runtime_error("denominator vanishes at specialization point") {}
};

struct Point {
    mpq_class qh = 2, u = 2, a = 2, v = 1;
    // when set, q itself is given and every q^(1/2)-exponent must be even
    std::optional<mpq_class> q;
};

class Scalar {
public:
    Scalar() : den_(mpq_class(1)) {}
    Scalar(long c) : num_(mpq_class(c)), den_(mpq_class(1)) {}  // NOLINT implicit
    Scalar(const mpq_class& c) : num_(c), den_(mpq_class(1)) {}  // NOLINT implicit
    explicit Scalar(const QPoly& p) : num_(p), den_(mpq_class(1)) {}
    static Scalar fraction(const QPoly& num, const QPoly& den);

    static Scalar monomial(const mpq_class& c, const Exp& e) { return Scalar(QPoly::monomial(c, e)); }
    // q^(h/2)
    static Scalar qh(int h) { return monomial(1, Exp{h, 0, 0, 0}); }
    static Scalar q(int e) { return qh(2 * e); }
    static Scalar u(int e = 1) { return monomial(1, Exp{0, e, 0, 0}); }
    static Scalar a(int e = 1) { return monomial(1, Exp{0, 0, e, 0}); }
    static Scalar v(int e = 1) { return monomial(1, Exp{0, 0, 0, e}); }

    const QPoly& num() const { return num_; }
    const QPoly& den() const { return den_; }

    bool is_zero() const { return num_.is_zero(); }
    bool is_one() const;
    bool is_polynomial() const { return den_.is_constant(); }
    // nonzero constant times a monomial
    bool is_monomial() const { return num_.is_monomial() && den_.is_constant(); }

    Scalar operator-() const;
    Scalar operator+(const Scalar& o) const;
    Scalar operator-(const Scalar& o) const { return *this + (-o); }
    Scalar operator*(const Scalar& o) const;
    Scalar operator/(const Scalar& o) const { return *this * o.inverse(); }
    Scalar& operator+=(const Scalar& o) { return *this = *this + o; }
    Scalar& operator-=(const Scalar& o) { return *this = *this - o; }
    Scalar& operator*=(const Scalar& o) { return *this = *this * o; }
    Scalar& operator/=(const Scalar& o) { return *this = *this / o; }
    bool operator==(const Scalar& o) const;
    bool operator!=(const Scalar& o) const { return !(*this == o); }

    Scalar inverse() const;
    Scalar pow(int n) const;

    // replace variable x by the monomial with exponent img
    Scalar substitute(Var x, const Exp& img) const;
    Scalar invert_var(Var x) const;
    // q -> q^{-1}
    Scalar invert_q() const { return invert_var(QH); }

    mpq_class evaluate(const Point& p) const;
    // evaluate only the listed variables, others stay symbolic
    Scalar partial_evaluate(Var x, const mpq_class& val) const;

    // power series in x: coefficients of x^0..x^order; requires the expansion to have no negative powers
    std::vector<Scalar> series(Var x, int order) const;

    std::string str() const;

private:
    void normalize(bool reduce);
    QPoly num_, den_;
};

inline Scalar operator*(long c, const Scalar& s) { return Scalar(c) * s; }

std::string poly_str(const QPoly& p);

// replace variable x by the monomial with exponent img
QPoly substitute_poly(const QPoly& p, Var x, const Exp& img);

// gcd of rational polynomials up to units (monomials, constants)
QPoly poly_gcd_q(const QPoly& a, const QPoly& b);

// --- q-combinatorics ---
// [m]_q
Scalar q_number(int m);
Scalar q_factorial(int m);
Scalar q_binomial(int m, int p);
// [x]_{q,u} = (q^x u - q^{-x})/(q - q^{-1}); spectral variable selectable
Scalar q_number_spectral(int x, const Scalar& u = Scalar::u());
// q^{s r(1-r)/2}/[r]_q! for r = 0..order
std::vector<Scalar> q_exponential_truncated(int sign, int order);
// q - q^{-1}
Scalar q_minus_qinv();

}  // namespace qloop
