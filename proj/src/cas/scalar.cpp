#include "qloop/scalar.hpp"

#include <sstream>

namespace qloop {

namespace {

QPoly shift_to_origin(const QPoly& p) { return p.shifted(exp_sub(exp_zero(), p.min_exp())); }

QPoly exact_div(const QPoly& n, const QPoly& d)
{
    QPoly q;
    if (!d.divides_into(n, &q)) throw std::logic_error("inexact polynomial division");
    return q;
}

}  // namespace

QPoly poly_gcd_q(const QPoly& a, const QPoly& b)
{
    if (a.is_zero()) return b;
    if (b.is_zero()) return a;
    if (a.is_monomial() || b.is_monomial()) return QPoly(mpq_class(1));
    mpq_class ca, cb;
    ZPoly za, zb;
    to_primitive(shift_to_origin(a), &ca, &za);
    to_primitive(shift_to_origin(b), &cb, &zb);
    return to_qpoly(poly_gcd(za, zb));
}

Scalar Scalar::fraction(const QPoly& num, const QPoly& den)
{
    if (den.is_zero()) throw std::domain_error("zero denominator");
    Scalar s;
    s.num_ = num;
    s.den_ = den;
    s.normalize(true);
    return s;
}

// den moved to min exponent 0 with lex-leading coefficient 1; optionally gcd-reduced
void Scalar::normalize(bool reduce)
{
    if (num_.is_zero()) {
        den_ = QPoly(mpq_class(1));
        return;
    }
    if (den_.is_monomial()) {
        const auto& t = den_.lead();
        num_ = num_.shifted(exp_sub(exp_zero(), t.e)).scaled(1 / t.c);
        den_ = QPoly(mpq_class(1));
        return;
    }
    Exp dm = den_.min_exp();
    Exp neg = exp_sub(exp_zero(), dm);
    num_ = num_.shifted(neg);
    den_ = den_.shifted(neg);
    if (reduce) {
        QPoly g = poly_gcd_q(num_, den_);
        if (!g.is_constant()) {
            num_ = exact_div(num_, g);
            den_ = exact_div(den_, g);
            dm = den_.min_exp();
            neg = exp_sub(exp_zero(), dm);
            num_ = num_.shifted(neg);
            den_ = den_.shifted(neg);
        }
    }
    if (den_.is_monomial()) {
        normalize(false);
        return;
    }
    mpq_class lc = den_.lead().c;
    if (lc != 1) {
        mpq_class inv = 1 / lc;
        num_ = num_.scaled(inv);
        den_ = den_.scaled(inv);
    }
}

bool Scalar::is_one() const { return den_.is_constant() && num_ == den_; }

Scalar Scalar::operator-() const
{
    Scalar r = *this;
    r.num_ = -r.num_;
    return r;
}

Scalar Scalar::operator+(const Scalar& o) const
{
    if (is_zero()) return o;
    if (o.is_zero()) return *this;
    Scalar r;
    if (den_ == o.den_) {
        r.num_ = num_ + o.num_;
        r.den_ = den_;
        r.normalize(!den_.is_constant());
        return r;
    }
    if (den_.is_constant()) {
        r.num_ = num_ * o.den_ + o.num_;
        r.den_ = o.den_;
        r.normalize(false);
        return r;
    }
    if (o.den_.is_constant()) {
        r.num_ = num_ + o.num_ * den_;
        r.den_ = den_;
        r.normalize(false);
        return r;
    }
    QPoly g = poly_gcd_q(den_, o.den_);
    if (g.is_constant()) {
        r.num_ = num_ * o.den_ + o.num_ * den_;
        r.den_ = den_ * o.den_;
        r.normalize(false);
        return r;
    }
    QPoly b1 = exact_div(den_, g), d1 = exact_div(o.den_, g);
    r.num_ = num_ * d1 + o.num_ * b1;
    r.den_ = den_ * d1;
    if (!r.num_.is_zero()) {
        QPoly h = poly_gcd_q(r.num_, g);
        if (!h.is_constant()) {
            r.num_ = exact_div(r.num_, h);
            r.den_ = exact_div(r.den_, h);
        }
    }
    r.normalize(false);
    return r;
}

Scalar Scalar::operator*(const Scalar& o) const
{
    if (is_zero() || o.is_zero()) return Scalar();
    Scalar r;
    if (den_.is_constant() && o.den_.is_constant()) {
        r.num_ = num_ * o.num_;
        return r;
    }
    QPoly a = num_, b = den_, c = o.num_, d = o.den_;
    if (!d.is_constant()) {
        QPoly g = poly_gcd_q(a, d);
        if (!g.is_constant()) {
            a = exact_div(a, g);
            d = exact_div(d, g);
        }
    }
    if (!b.is_constant()) {
        QPoly g = poly_gcd_q(c, b);
        if (!g.is_constant()) {
            c = exact_div(c, g);
            b = exact_div(b, g);
        }
    }
    r.num_ = a * c;
    r.den_ = b * d;
    r.normalize(false);
    return r;
}

bool Scalar::operator==(const Scalar& o) const
{
    if (num_ == o.num_ && den_ == o.den_) return true;
    if (gcd_fallback_count() == 0) return false;
    return num_ * o.den_ == o.num_ * den_;
}

Scalar Scalar::inverse() const
{
    if (is_zero()) throw std::domain_error("inverse of zero");
    Scalar r;
    r.num_ = den_;
    r.den_ = num_;
    r.normalize(false);
    return r;
}

Scalar Scalar::pow(int n) const
{
    if (n < 0) return inverse().pow(-n);
    Scalar r(1), b = *this;
    while (n) {
        if (n & 1) r *= b;
        n >>= 1;
        if (n) b *= b;
    }
    return r;
}

QPoly substitute_poly(const QPoly& p, Var x, const Exp& img)
{
    std::vector<QPoly::Term> t;
    t.reserve(p.size());
    for (const auto& y : p.terms()) {
        Exp e = y.e;
        int k = e[x];
        e[x] = 0;
        for (int j = 0; j < kNumVars; ++j) e[j] += k * img[j];
        t.push_back({e, y.c});
    }
    return QPoly::from_terms(std::move(t));
}

namespace {

mpq_class qpow(const mpq_class& b, int e)
{
    if (e == 0) return 1;
    mpq_class r;
    unsigned long k = e < 0 ? -e : e;
    mpz_pow_ui(r.get_num_mpz_t(), b.get_num_mpz_t(), k);
    mpz_pow_ui(r.get_den_mpz_t(), b.get_den_mpz_t(), k);
    r.canonicalize();
    if (e < 0) {
        if (r == 0) throw PoleAtPoint();
        r = 1 / r;
    }
    return r;
}

// power cache for one variable value
struct Powers {
    mpq_class base;
    std::map<int, mpq_class> cache;
    const mpq_class& get(int e)
    {
        auto it = cache.find(e);
        if (it != cache.end()) return it->second;
        return cache.emplace(e, qpow(base, e)).first->second;
    }
};

}  // namespace

Scalar Scalar::substitute(Var x, const Exp& img) const
{
    Scalar r;
    r.num_ = substitute_poly(num_, x, img);
    r.den_ = substitute_poly(den_, x, img);
    if (r.den_.is_zero()) throw std::domain_error("substitution annihilates denominator");
    r.normalize(true);
    return r;
}

Scalar Scalar::invert_var(Var x) const
{
    Exp img = exp_zero();
    img[x] = -1;
    Scalar r;
    r.num_ = substitute_poly(num_, x, img);
    r.den_ = substitute_poly(den_, x, img);
    // reduced stays reduced under a ring automorphism
    r.normalize(false);
    return r;
}

mpq_class Scalar::evaluate(const Point& p) const
{
    Powers pw[kNumVars] = {{p.q ? *p.q : p.qh, {}}, {p.u, {}}, {p.a, {}}, {p.v, {}}};
    auto ev = [&](const QPoly& poly) {
        mpq_class s = 0;
        for (const auto& t : poly.terms()) {
            mpq_class m = t.c;
            int eq = t.e[QH];
            if (p.q) {
                if (eq % 2 != 0) throw std::domain_error("odd q^(1/2) exponent at integral-q point");
                eq /= 2;
            }
            if (eq != 0) m *= pw[QH].get(eq);
            for (int k = 1; k < kNumVars; ++k)
                if (t.e[k] != 0) m *= pw[k].get(t.e[k]);
            s += m;
        }
        return s;
    };
    mpq_class d = ev(den_);
    if (d == 0) throw PoleAtPoint();
    return ev(num_) / d;
}

Scalar Scalar::partial_evaluate(Var x, const mpq_class& val) const
{
    Powers pw{val, {}};
    auto ev = [&](const QPoly& poly) {
        std::vector<QPoly::Term> t;
        t.reserve(poly.size());
        for (const auto& y : poly.terms()) {
            Exp e = y.e;
            mpq_class c = y.c * pw.get(e[x]);
            e[x] = 0;
            t.push_back({e, c});
        }
        return QPoly::from_terms(std::move(t));
    };
    QPoly d = ev(den_);
    if (d.is_zero()) throw PoleAtPoint();
    return fraction(ev(num_), d);
}

std::vector<Scalar> Scalar::series(Var x, int order) const
{
    auto split = [x](const QPoly& p) {
        std::map<int, std::vector<QPoly::Term>> m;
        for (const auto& t : p.terms()) {
            Exp e = t.e;
            int k = e[x];
            e[x] = 0;
            m[k].push_back({e, t.c});
        }
        std::map<int, Scalar> out;
        for (auto& [k, v] : m) out[k] = Scalar(QPoly::from_terms(std::move(v)));
        return out;
    };
    auto n = split(num_);
    auto d = split(den_);
    if (!n.empty() && n.begin()->first < 0) throw std::domain_error("series has negative powers");
    if (d.empty() || d.begin()->first != 0) throw std::domain_error("series denominator vanishes at origin");
    Scalar d0inv = d[0].inverse();
    std::vector<Scalar> c(order + 1);
    for (int k = 0; k <= order; ++k) {
        Scalar acc = n.count(k) ? n[k] : Scalar();
        for (const auto& [j, dj] : d) {
            if (j == 0 || j > k) continue;
            if (!c[k - j].is_zero()) acc -= dj * c[k - j];
        }
        c[k] = acc * d0inv;
    }
    return c;
}

std::string poly_str(const QPoly& p)
{
    if (p.is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& t : p.terms()) {
        if (!first) os << " + ";
        first = false;
        os << t.c.get_str() << "*q^(" << t.e[QH] << "/2)*u^" << t.e[U] << "*a^" << t.e[A];
        if (t.e[V] != 0) os << "*v^" << t.e[V];
    }
    return os.str();
}

std::string Scalar::str() const { return "(" + poly_str(num_) + ")/(" + poly_str(den_) + ")"; }

// --- q-combinatorics ---

Scalar q_minus_qinv() { return Scalar::q(1) - Scalar::q(-1); }

Scalar q_number(int m)
{
    // q^{m-1} + q^{m-3} + ... + q^{1-m}, negated for m < 0
    if (m == 0) return Scalar();
    int n = m < 0 ? -m : m;
    std::vector<QPoly::Term> t;
    for (int k = 0; k < n; ++k) t.push_back({Exp{2 * (n - 1 - 2 * k), 0, 0, 0}, mpq_class(m < 0 ? -1 : 1)});
    return Scalar(QPoly::from_terms(std::move(t)));
}

Scalar q_factorial(int m)
{
    Scalar r(1);
    for (int k = 2; k <= m; ++k) r *= q_number(k);
    return r;
}

Scalar q_binomial(int m, int p)
{
    if (p < 0) throw std::invalid_argument("q_binomial: p < 0");
    if (m < p) return Scalar();
    // product formula, exact at each step
    Scalar r(1);
    for (int k = 1; k <= p; ++k) r = r * q_number(m - p + k) / q_number(k);
    return r;
}

Scalar q_number_spectral(int x, const Scalar& u)
{
    return (Scalar::q(x) * u - Scalar::q(-x)) / q_minus_qinv();
}

std::vector<Scalar> q_exponential_truncated(int sign, int order)
{
    if (order < 0) throw std::invalid_argument("order < 0");
    std::vector<Scalar> c;
    Scalar f(1);
    for (int r = 0; r <= order; ++r) {
        if (r > 1) f *= q_number(r);
        // exponent of q is sign*r(1-r)/2, i.e. sign*r(1-r) in half-powers
        c.push_back(Scalar::qh(sign * r * (1 - r)) / f);
    }
    return c;
}

}  // namespace qloop
