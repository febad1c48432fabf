#include "qloop/poly.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <sstream>

namespace qloop {

namespace {

template <class C>
void sort_and_combine(std::vector<typename SparsePoly<C>::Term>& t)
{
    std::sort(t.begin(), t.end(), [](const auto& x, const auto& y) { return x.e > y.e; });
    std::size_t w = 0;
    for (std::size_t i = 0; i < t.size();) {
        std::size_t j = i + 1;
        C acc = t[i].c;
        while (j < t.size() && t[j].e == t[i].e) acc += t[j++].c;
        if (acc != 0) {
            t[w].e = t[i].e;
            t[w].c = acc;
            ++w;
        }
        i = j;
    }
    t.resize(w);
}

}  // namespace

template <class C>
SparsePoly<C> SparsePoly<C>::from_terms(std::vector<Term> t)
{
    sort_and_combine<C>(t);
    SparsePoly p;
    p.terms_ = std::move(t);
    return p;
}

template <class C>
SparsePoly<C> SparsePoly<C>::operator+(const SparsePoly& o) const
{
    if (o.is_zero()) return *this;
    if (is_zero()) return o;
    SparsePoly r;
    r.terms_.reserve(terms_.size() + o.terms_.size());
    std::size_t i = 0, j = 0;
    while (i < terms_.size() && j < o.terms_.size()) {
        if (terms_[i].e > o.terms_[j].e) {
            r.terms_.push_back(terms_[i++]);
        } else if (terms_[i].e < o.terms_[j].e) {
            r.terms_.push_back(o.terms_[j++]);
        } else {
            C c = terms_[i].c + o.terms_[j].c;
            if (c != 0) r.terms_.push_back({terms_[i].e, c});
            ++i;
            ++j;
        }
    }
    while (i < terms_.size()) r.terms_.push_back(terms_[i++]);
    while (j < o.terms_.size()) r.terms_.push_back(o.terms_[j++]);
    return r;
}

template <class C>
SparsePoly<C> SparsePoly<C>::operator*(const SparsePoly& o) const
{
    if (is_zero() || o.is_zero()) return SparsePoly();
    if (o.is_monomial()) return shifted(o.terms_[0].e).scaled(o.terms_[0].c);
    if (is_monomial()) return o.shifted(terms_[0].e).scaled(terms_[0].c);
    std::vector<Term> t;
    t.reserve(terms_.size() * o.terms_.size());
    for (const auto& x : terms_)
        for (const auto& y : o.terms_) t.push_back({exp_add(x.e, y.e), x.c * y.c});
    return from_terms(std::move(t));
}

template <class C>
bool SparsePoly<C>::operator==(const SparsePoly& o) const
{
    if (terms_.size() != o.terms_.size()) return false;
    for (std::size_t i = 0; i < terms_.size(); ++i)
        if (terms_[i].e != o.terms_[i].e || terms_[i].c != o.terms_[i].c) return false;
    return true;
}

template <class C>
SparsePoly<C> SparsePoly<C>::scaled(const C& c) const
{
    if (c == 0) return SparsePoly();
    SparsePoly r = *this;
    for (auto& t : r.terms_) t.c *= c;
    return r;
}

template <class C>
SparsePoly<C> SparsePoly<C>::shifted(const Exp& e) const
{
    SparsePoly r = *this;
    for (auto& t : r.terms_) t.e = exp_add(t.e, e);
    return r;
}

template <class C>
Exp SparsePoly<C>::min_exp() const
{
    if (terms_.empty()) return exp_zero();
    Exp m = terms_[0].e;
    for (const auto& t : terms_)
        for (int k = 0; k < kNumVars; ++k) m[k] = std::min(m[k], t.e[k]);
    return m;
}

template <class C>
Exp SparsePoly<C>::max_exp() const
{
    if (terms_.empty()) return exp_zero();
    Exp m = terms_[0].e;
    for (const auto& t : terms_)
        for (int k = 0; k < kNumVars; ++k) m[k] = std::max(m[k], t.e[k]);
    return m;
}

template <class C>
C SparsePoly<C>::coeff(const Exp& e) const
{
    auto it = std::lower_bound(terms_.begin(), terms_.end(), e,
                               [](const Term& t, const Exp& x) { return t.e > x; });
    if (it != terms_.end() && it->e == e) return it->c;
    return C(0);
}

namespace {

template <class C>
bool coeff_div(const C& a, const C& b, C* q);

template <>
bool coeff_div<mpq_class>(const mpq_class& a, const mpq_class& b, mpq_class* q)
{
    *q = a / b;
    return true;
}

template <>
bool coeff_div<mpz_class>(const mpz_class& a, const mpz_class& b, mpz_class* q)
{
    if (!mpz_divisible_p(a.get_mpz_t(), b.get_mpz_t())) return false;
    mpz_divexact(q->get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return true;
}

}  // namespace

// Division in the polynomial ring after moving both operands to nonnegative exponents;
// the shift difference is restored in the quotient.
template <class C>
bool SparsePoly<C>::divides_into(const SparsePoly& num, SparsePoly* quot) const
{
    if (is_zero()) return false;
    if (num.is_zero()) {
        if (quot) *quot = SparsePoly();
        return true;
    }
    const Exp dmin = min_exp();
    const Exp nmin = num.min_exp();
    SparsePoly d = shifted(exp_sub(exp_zero(), dmin));
    if (d.is_monomial()) {
        std::vector<Term> t;
        t.reserve(num.size());
        for (const auto& x : num.terms_) {
            C c;
            if (!coeff_div<C>(x.c, d.terms_[0].c, &c)) return false;
            t.push_back({exp_sub(x.e, dmin), c});
        }
        if (quot) {
            quot->terms_ = std::move(t);
        }
        return true;
    }
    const Exp dmax = d.max_exp();
    const Exp nspan = exp_sub(num.max_exp(), nmin);
    for (int k = 0; k < kNumVars; ++k)
        if (dmax[k] > nspan[k]) return false;

    std::map<Exp, C, std::greater<Exp>> rem;
    for (const auto& x : num.terms_) rem.emplace(exp_sub(x.e, nmin), x.c);
    std::vector<Term> q;
    const Exp dl = d.terms_[0].e;
    const C& dc = d.terms_[0].c;
    while (!rem.empty()) {
        auto it = rem.begin();
        Exp qe = exp_sub(it->first, dl);
        for (int k = 0; k < kNumVars; ++k)
            if (qe[k] < 0) return false;
        C qc;
        if (!coeff_div<C>(it->second, dc, &qc)) return false;
        for (const auto& t : d.terms_) {
            Exp e = exp_add(t.e, qe);
            auto jt = rem.find(e);
            C v = t.c * qc;
            if (jt == rem.end()) {
                rem.emplace(e, -v);
            } else {
                jt->second -= v;
                if (jt->second == 0) rem.erase(jt);
            }
        }
        q.push_back({exp_add(qe, exp_sub(nmin, dmin)), qc});
    }
    if (quot) *quot = from_terms(std::move(q));
    return true;
}

template class SparsePoly<mpq_class>;
template class SparsePoly<mpz_class>;

void to_primitive(const QPoly& p, mpq_class* c, ZPoly* z)
{
    if (p.is_zero()) {
        *c = 0;
        *z = ZPoly();
        return;
    }
    mpz_class l = 1;
    for (const auto& t : p.terms()) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), t.c.get_den_mpz_t());
    std::vector<ZPoly::Term> zt;
    zt.reserve(p.size());
    mpz_class g = 0;
    for (const auto& t : p.terms()) {
        mpz_class v = t.c.get_num() * (l / t.c.get_den());
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), v.get_mpz_t());
        zt.push_back({t.e, v});
    }
    for (auto& t : zt) mpz_divexact(t.c.get_mpz_t(), t.c.get_mpz_t(), g.get_mpz_t());
    *c = mpq_class(g, l);
    c->canonicalize();
    *z = ZPoly::from_terms(std::move(zt));
}

QPoly to_qpoly(const ZPoly& z)
{
    std::vector<QPoly::Term> t;
    t.reserve(z.size());
    for (const auto& x : z.terms()) t.push_back({x.e, mpq_class(x.c)});
    return QPoly::from_terms(std::move(t));
}

mpz_class content(const ZPoly& p)
{
    mpz_class g = 0;
    for (const auto& t : p.terms()) {
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), t.c.get_mpz_t());
        if (g == 1) break;
    }
    return g;
}

std::string exp_to_string(const Exp& e)
{
    std::ostringstream os;
    os << "(" << e[0] << "," << e[1] << "," << e[2] << "," << e[3] << ")";
    return os.str();
}

}  // namespace qloop
