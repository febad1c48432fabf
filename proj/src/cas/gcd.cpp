// Heuristic multivariate gcd over Z (evaluate one variable at a large integer,
// recurse, rebuild by xi-adic expansion, verify by exact division).

#include <algorithm>
#include <atomic>

#include "qloop/poly.hpp"

namespace qloop {

namespace {

std::atomic<std::uint64_t> g_fallbacks{0};

mpz_class max_norm(const ZPoly& p)
{
    mpz_class m = 0;
    for (const auto& t : p.terms())
        if (abs(t.c) > m) m = abs(t.c);
    return m;
}

ZPoly normalize_sign(ZPoly p)
{
    if (!p.is_zero() && p.lead().c < 0) return -p;
    return p;
}

ZPoly divide_content(const ZPoly& p, const mpz_class& c)
{
    if (c == 1) return p;
    std::vector<ZPoly::Term> t(p.terms().begin(), p.terms().end());
    for (auto& x : t) mpz_divexact(x.c.get_mpz_t(), x.c.get_mpz_t(), c.get_mpz_t());
    return ZPoly::from_terms(std::move(t));
}

// p with variable v set to xi; exponents of v must be nonnegative
ZPoly eval_var(const ZPoly& p, int v, const mpz_class& xi)
{
    int dmax = p.max_exp()[v];
    std::vector<mpz_class> pw(dmax + 1);
    pw[0] = 1;
    for (int k = 1; k <= dmax; ++k) pw[k] = pw[k - 1] * xi;
    std::vector<ZPoly::Term> t;
    t.reserve(p.size());
    for (const auto& x : p.terms()) {
        Exp e = x.e;
        int k = e[v];
        e[v] = 0;
        t.push_back({e, x.c * pw[k]});
    }
    return ZPoly::from_terms(std::move(t));
}

mpz_class smod(const mpz_class& c, const mpz_class& xi, const mpz_class& half)
{
    mpz_class r;
    mpz_fdiv_r(r.get_mpz_t(), c.get_mpz_t(), xi.get_mpz_t());
    if (r > half) r -= xi;
    return r;
}

ZPoly reconstruct(ZPoly h, int v, const mpz_class& xi)
{
    const mpz_class half = xi / 2;
    std::vector<ZPoly::Term> out;
    int k = 0;
    while (!h.is_zero()) {
        std::vector<ZPoly::Term> low, rest;
        for (const auto& x : h.terms()) {
            mpz_class r = smod(x.c, xi, half);
            if (r != 0) {
                Exp e = x.e;
                e[v] = k;
                out.push_back({e, r});
            }
            mpz_class q = x.c - r;
            if (q != 0) {
                mpz_divexact(q.get_mpz_t(), q.get_mpz_t(), xi.get_mpz_t());
                rest.push_back({x.e, q});
            }
        }
        h = ZPoly::from_terms(std::move(rest));
        ++k;
        if (k > 1 << 20) break;
    }
    return ZPoly::from_terms(std::move(out));
}

// coefficients of p as a polynomial in v
std::vector<ZPoly> coeffs_in(const ZPoly& p, int v)
{
    int dmax = p.max_exp()[v];
    std::vector<std::vector<ZPoly::Term>> c(dmax + 1);
    for (const auto& x : p.terms()) {
        Exp e = x.e;
        int k = e[v];
        e[v] = 0;
        c[k].push_back({e, x.c});
    }
    std::vector<ZPoly> out;
    for (auto& t : c)
        if (!t.empty()) out.push_back(ZPoly::from_terms(std::move(t)));
    return out;
}

ZPoly gcd_rec(const ZPoly& a0, const ZPoly& b0);

ZPoly gcd_primitive(const ZPoly& a, const ZPoly& b)
{
    // a, b primitive, not divisible by any variable
    Exp ma = a.max_exp(), mb = b.max_exp();
    int v = -1;
    for (int k = kNumVars - 1; k >= 0; --k)
        if (ma[k] > 0 || mb[k] > 0) {
            v = k;
            break;
        }
    if (v < 0) return ZPoly(mpz_class(1));
    if (ma[v] == 0 || mb[v] == 0) {
        const ZPoly& with = ma[v] == 0 ? b : a;
        ZPoly g = ma[v] == 0 ? a : b;
        for (const auto& c : coeffs_in(with, v)) {
            g = gcd_rec(g, c);
            if (g.is_constant()) break;
        }
        return g;
    }
    if (a == b) return normalize_sign(a);

    mpz_class xi = 2 * std::min(max_norm(a), max_norm(b)) + 29;
    for (int attempt = 0; attempt < 8; ++attempt) {
        ZPoly ea = eval_var(a, v, xi);
        ZPoly eb = eval_var(b, v, xi);
        if (!ea.is_zero() && !eb.is_zero()) {
            ZPoly h = gcd_rec(ea, eb);
            ZPoly g = reconstruct(h, v, xi);
            if (!g.is_zero()) {
                g = normalize_sign(divide_content(g, content(g)));
                if (g.divides_into(a, nullptr) && g.divides_into(b, nullptr)) return g;
            }
        }
        xi = xi * 73794 / 27011 + attempt + 1;
    }
    g_fallbacks.fetch_add(1, std::memory_order_relaxed);
    return ZPoly(mpz_class(1));
}

// full gcd including integer and monomial content
ZPoly gcd_rec(const ZPoly& a0, const ZPoly& b0)
{
    if (a0.is_zero()) return normalize_sign(b0);
    if (b0.is_zero()) return normalize_sign(a0);
    Exp la = a0.min_exp(), lb = b0.min_exp();
    Exp m;
    for (int k = 0; k < kNumVars; ++k) m[k] = std::min(la[k], lb[k]);
    mpz_class ca = content(a0), cb = content(b0), g0;
    mpz_gcd(g0.get_mpz_t(), ca.get_mpz_t(), cb.get_mpz_t());
    if (a0.is_monomial() || b0.is_monomial()) return ZPoly::monomial(g0, m);
    ZPoly a = divide_content(a0.shifted(exp_sub(exp_zero(), la)), ca);
    ZPoly b = divide_content(b0.shifted(exp_sub(exp_zero(), lb)), cb);
    ZPoly g = gcd_primitive(a, b);
    return g.scaled(g0).shifted(m);
}

}  // namespace

ZPoly poly_gcd(const ZPoly& a, const ZPoly& b) { return gcd_rec(a, b); }

std::uint64_t gcd_fallback_count() { return g_fallbacks.load(); }

}  // namespace qloop
