#include "qloop/rmatrix.hpp"

#include <algorithm>
#include <set>

namespace qloop {

namespace {

Scalar qu(int x) { return q_number_spectral(x); }

// q^(e2/2) where the closed form guarantees e2 even
Scalar q_half_even(long e2)
{
    if (e2 % 2 != 0) throw std::logic_error("odd q exponent in a closed form that should be integral");
    return Scalar::q(int(e2 / 2));
}

RMatrix make(const std::string& label, Mat map, ModuleModel src, ModuleModel tgt)
{
    RMatrix r;
    r.label = label;
    r.map = std::move(map);
    r.source = std::move(src);
    r.target = std::move(tgt);
    return r;
}

void normalize_top(RMatrix& r)
{
    Scalar c = r.map(0, 0);
    if (c.is_zero()) throw std::domain_error("R-matrix annihilates top vector");
    if (!c.is_one()) {
        r.map = r.map.scaled(c.inverse());
        r.normalization = r.normalization * c;
    }
}

}  // namespace

RMatrix rmat_kr_explicit(int k)
{
    if (k < 1) throw std::invalid_argument("rmat_kr_explicit: k < 1");
    const int n = k + 1;
    Mat R(n * n, n * n);
    const Scalar u = Scalar::u();
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            for (int mu = std::max(-i, j - k); mu <= std::min(j, k - i); ++mu) {
                Scalar tot;
                for (int lam = std::max(0, mu); lam <= std::min(j, k - i); ++lam) {
                    Scalar g = u.pow(lam) * Scalar::q(mu * (j - i - mu)) * q_binomial(i + lam, lam) *
                               q_binomial(j - mu, lam - mu);
                    for (int s = 1; s <= lam; ++s) g *= q_number(k + 1 - i - s) / qu(j + 1 - i - lam - s);
                    for (int s = 1; s <= lam - mu; ++s) g *= q_number(k + mu - j + s) / qu(j - i - 2 * lam + s);
                    for (int s = 1 - lam; s <= std::min(i, k - j); ++s) g *= qu(j - i - lam + s) / qu(k + 1 - lam - s);
                    for (int s = 1; s <= j - lam; ++s) g *= qu(s - k - 1) / qu(s - i - lam - 1);
                    tot += g;
                }
                R((j - mu) * n + (i + mu), i * n + j) += tot;
            }
    auto V = kr_module(k);
    RMatrix r = make("R_kr" + std::to_string(k), std::move(R), tensor(spectral_deform(V), V),
                     tensor(V, spectral_deform(V)));
    normalize_top(r);
    return r;
}

Mat r_infinity(const ModuleModel& V, const ModuleModel& W)
{
    std::vector<Scalar> d;
    for (int i = 0; i < V.dim; ++i)
        for (int j = 0; j < W.dim; ++j) {
            // (nu, omega) = w_i w_j / 2 in q-units; weight_h are half-units
            int p = V.weight_h[i] * W.weight_h[j];
            if (p % 4 != 0) throw std::logic_error("R^inf exponent outside q^(1/2) grid");
            d.push_back(Scalar::qh(-p / 4));
        }
    return Mat::diagonal(d);
}

namespace {

using Series = std::vector<Mat>;

Series series_const(const Mat& m, int ord)
{
    Series s(ord + 1, Mat(m.rows(), m.cols()));
    s[0] = m;
    return s;
}

Series series_mul(const Series& x, const Series& y)
{
    int ord = int(x.size()) - 1;
    Series r(ord + 1, Mat(x[0].rows(), y[0].cols()));
    for (int p = 0; p <= ord; ++p) {
        if (x[p].is_zero()) continue;
        for (int s = 0; p + s <= ord; ++s)
            if (!y[s].is_zero()) r[p + s] = r[p + s] + x[p] * y[s];
    }
    return r;
}

// exp_{q^sign}(u^upow X) truncated at u-degree ord; X nilpotent when upow = 0
Series exp_q_series(const Mat& X, int sign, int upow, int ord)
{
    int n = X.rows();
    Series r = series_const(Mat::identity(n), ord);
    Mat P = Mat::identity(n);
    Scalar fact(1);
    for (int k = 1; k <= n + ord + 1; ++k) {
        if (upow * k > ord) break;
        P = P * X;
        if (P.is_zero()) break;
        fact *= q_number(k);
        r[upow * k] = r[upow * k] + P.scaled(Scalar::qh(sign * k * (1 - k)) / fact);
    }
    return r;
}

std::vector<Scalar> scalar_series_exp(const std::vector<Scalar>& s)
{
    // exp of a series with zero constant term
    int ord = int(s.size()) - 1;
    std::vector<Scalar> e(ord + 1), p(ord + 1);
    e[0] = Scalar(1);
    p[0] = Scalar(1);
    Scalar fact(1);
    for (int r = 1; r <= ord; ++r) {
        std::vector<Scalar> np(ord + 1);
        for (int a = 0; a <= ord; ++a) {
            if (p[a].is_zero()) continue;
            for (int b = 1; a + b <= ord; ++b)
                if (!s[b].is_zero()) np[a + b] += p[a] * s[b];
        }
        p = std::move(np);
        fact *= Scalar(long(r));
        for (int b = 0; b <= ord; ++b)
            if (!p[b].is_zero()) e[b] += p[b] / fact;
    }
    return e;
}

std::vector<Scalar> scalar_series_inverse(const std::vector<Scalar>& c)
{
    int ord = int(c.size()) - 1;
    std::vector<Scalar> r(ord + 1);
    Scalar c0i = c[0].inverse();
    r[0] = c0i;
    for (int k = 1; k <= ord; ++k) {
        Scalar acc;
        for (int j = 1; j <= k; ++j)
            if (!c[j].is_zero()) acc += c[j] * r[k - j];
        r[k] = -acc * c0i;
    }
    return r;
}

}  // namespace

RMatrix universal_r_truncated(const ModuleModel& V, const ModuleModel& W, int u_order, ComponentOrder order)
{
    if (u_order < 0) throw std::invalid_argument("u_order < 0");
    if (!V.exact || !W.exact || V.sign != 1 || W.sign != 1)
        throw std::invalid_argument("universal_r_truncated needs finite models at sign +1");
    const auto& dv = V.drinfeld_data();
    const auto& dw = W.drinfeld_data();
    const int ord = u_order;
    const int N = V.dim * W.dim;
    const Scalar c = Scalar::q(-1) - Scalar::q(1);

    Series rp = series_const(Mat::identity(N), ord);
    for (int m = 0; m <= ord; ++m)
        rp = series_mul(rp, exp_q_series(kron(dv.xplus(m), dw.xminus(-m)).scaled(c), 1, m, ord));

    const int minus_sign = order == ComponentOrder::Working ? 1 : -1;
    Series rm = series_const(Mat::identity(N), ord);
    for (int m = ord; m >= 1; --m) {
        Mat X = kron(V.K1inv() * dv.xminus(m), dw.xplus(-m) * W.K1).scaled(c);
        rm = series_mul(rm, exp_q_series(X, minus_sign, m, ord));
    }

    Series r0(ord + 1, Mat(N, N));
    for (int i = 0; i < V.dim; ++i) {
        std::vector<Scalar> hv = ord ? h_eigenvalues(V, i, ord) : std::vector<Scalar>{};
        for (int j = 0; j < W.dim; ++j) {
            std::vector<Scalar> hw = ord ? h_eigenvalues_neg(W, j, ord) : std::vector<Scalar>{};
            std::vector<Scalar> s(ord + 1);
            for (int m = 1; m <= ord; ++m)
                s[m] = c * Scalar(long(m)) / (q_number(m) * (Scalar::q(m) + Scalar::q(-m))) * hv[m - 1] * hw[m - 1];
            auto e = scalar_series_exp(s);
            for (int b = 0; b <= ord; ++b) r0[b](i * W.dim + j, i * W.dim + j) = e[b];
        }
    }
    Series rinf = series_const(r_infinity(V, W), ord);

    Series R = order == ComponentOrder::Working ? series_mul(series_mul(series_mul(rp, r0), rm), rinf)
                                                : series_mul(series_mul(series_mul(rm, r0), rp), rinf);
    Mat P = Mat::flip(V.dim, W.dim);
    for (auto& x : R) x = P * x;

    std::vector<Scalar> top(ord + 1);
    for (int b = 0; b <= ord; ++b) top[b] = R[b](0, 0);
    if (top[0].is_zero()) throw std::domain_error("universal R: top coefficient has no constant term");
    auto inv = scalar_series_inverse(top);
    Mat out(N, N);
    Scalar norm;
    for (int b = 0; b <= ord; ++b) {
        Mat acc(N, N);
        for (int a = 0; a <= b; ++a)
            if (!inv[b - a].is_zero()) acc = acc + R[a].scaled(inv[b - a]);
        out = out + acc.scaled(Scalar::u(b));
        norm += top[b] * Scalar::u(b);
    }
    RMatrix r = make("R_univ(" + V.label + "," + W.label + ")", std::move(out), tensor(spectral_deform(V), W),
                     tensor(W, spectral_deform(V)));
    r.normalization = norm;
    return r;
}

Mat g_map_explicit(int k, int ell)
{
    if (k < 1 || k > ell) throw std::invalid_argument("g_map_explicit: need 1 <= k <= ell");
    const int nk = k + 1, nl = ell + 1;
    Mat M(nl * nl, nk * nk);
    const Scalar u = Scalar::u();
    for (int i = 0; i < nk; ++i)
        for (int j = 0; j < nk; ++j)
            for (int nu = 0; nu <= std::min(j, ell - k); ++nu) {
                Scalar c = u.pow(nu) * Scalar::q(nu * (j - i - nu)) * q_binomial(i + nu, nu);
                for (int s = 1; s <= j - nu; ++s) c *= qu(s - k - 1) / qu(s - ell - 1);
                for (int s = 1; s <= nu; ++s) c *= q_number(s + k - ell - 1) / qu(j - ell - s);
                M((i + nu) * nl + (j - nu), i * nk + j) += c;
            }
    return M;
}

Mat g_inf_explicit(int k, int trunc)
{
    if (k < 1) throw std::invalid_argument("g_inf_explicit: k < 1");
    if (trunc < 2 * k) throw WindowTooSmall("g_inf_explicit needs trunc >= 2k");
    const int nk = k + 1, n = trunc + 1;
    Mat M(n * n, nk * nk);
    const Scalar u = Scalar::u();
    const Scalar d = Scalar::q(-1) - Scalar::q(1);
    for (int i = 0; i < nk; ++i)
        for (int j = 0; j < nk; ++j)
            for (int nu = 0; nu <= j; ++nu) {
                Scalar c = u.pow(nu) * d.pow(j - nu) * Scalar::q(-nu * (i + k)) *
                           q_half_even(long(j - nu) * (j + 3 * nu - 1)) * q_binomial(i + nu, nu);
                for (int s = 1; s <= j - nu; ++s) c *= qu(s - k - 1);
                M((i + nu) * n + (j - nu), i * nk + j) += c;
            }
    return M;
}

namespace {

// columns (i, j) with i + j <= N carry every target term
void mark_total_window(Mat& m, int N)
{
    int n = N + 1;
    for (int c = 0; c < n * n; ++c) m.set_safe(c, c / n + c % n <= N);
}

Mat rminus_matrix(int N)
{
    const int n = N + 1;
    Mat R(n * n, n * n);
    const Scalar d = q_minus_qinv();
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            for (int nu = 0; nu <= i; ++nu) {
                if (i + j - nu > N) continue;
                Scalar c = Scalar::u(-i) * d.pow(i - nu) * q_half_even(long(i - nu) * (i - 2 * j + 3 * nu - 1)) *
                           q_binomial(i + j - nu, j);
                for (int s = nu - i + 1; s <= 0; ++s) c *= qu(s);
                R(nu * n + (i + j - nu), i * n + j) += c;
            }
    mark_total_window(R, N);
    return R;
}

Mat rplus_matrix(int N)
{
    const int n = N + 1;
    Mat R(n * n, n * n);
    const Scalar d = Scalar::q(-1) - Scalar::q(1);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            for (int nu = 0; nu <= j; ++nu) {
                if (i + j - nu > N) continue;
                Scalar c = Scalar::u(nu) * d.pow(j - nu) * q_half_even(-long(j - nu) * (j + 2 * i - nu - 1)) *
                           q_binomial(i + j - nu, i);
                for (int s = nu - j + 1; s <= 0; ++s) c *= qu(s);
                R((i + j - nu) * n + nu, i * n + j) += c;
            }
    mark_total_window(R, N);
    return R;
}

}  // namespace

RMatrix rmat_minus_explicit(int trunc)
{
    if (trunc < 1) throw std::invalid_argument("trunc < 1");
    auto L = prefund_minus(0, trunc);
    RMatrix r = make("R_minus", rminus_matrix(trunc), tensor(spectral_deform(L), L), tensor(L, spectral_deform(L)));
    normalize_top(r);
    return r;
}

RMatrix rmat_plus_explicit(int trunc)
{
    if (trunc < 1) throw std::invalid_argument("trunc < 1");
    auto L = prefund_plus(0, trunc);
    RMatrix r = make("R_plus", rplus_matrix(trunc), tensor(spectral_deform(L), L), tensor(L, spectral_deform(L)));
    normalize_top(r);
    return r;
}

Mat twist_basis_change(int N)
{
    const int n = N + 1;
    std::vector<Scalar> d;
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) d.push_back(Scalar((i + j) % 2 ? -1 : 1) * Scalar::q(i * (i - 1) + j * (j - 1)));
    return Mat::diagonal(d);
}

RMatrix rmat_plus_via_twist(int trunc)
{
    if (trunc < 1) throw std::invalid_argument("trunc < 1");
    // R' at q^{-1}, evaluated at u^{-1}
    Mat rp = rminus_matrix(trunc).invert_var(QH).invert_var(U);
    Mat P = Mat::flip(trunc + 1, trunc + 1);
    Mat D = twist_basis_change(trunc);
    Mat m = D.inverse() * (P * rp * P) * D;
    auto L = prefund_plus(0, trunc);
    RMatrix r = make("R_plus_twist", std::move(m), tensor(spectral_deform(L), L), tensor(L, spectral_deform(L)));
    normalize_top(r);
    return r;
}

Report check_intertwining(const RMatrix& R)
{
    Report rep;
    const ModuleModel& s = R.source;
    const ModuleModel& t = R.target;
    const std::pair<const char*, std::pair<const Mat*, const Mat*>> gens[] = {
        {"E0", {&s.E0, &t.E0}}, {"E1", {&s.E1, &t.E1}}, {"K1", {&s.K1, &t.K1}}};
    for (const auto& [name, g] : gens) {
        Comparison c = compare_on_window(R.map * *g.first, *g.second * R.map);
        rep.push_back({R.label + ":" + name, "intertwining", c.window, c.ok() && c.window > 0, c.ok() ? "" : c.summary()});
    }
    return rep;
}

RMatrix rmat_kr_by_solver(int k1, int k2)
{
    auto V = kr_module(k1), W = kr_module(k2);
    auto src = tensor(spectral_deform(V), W);
    auto tgt = tensor(W, spectral_deform(V));
    auto sol = solve_intertwiners(src, tgt);
    if (sol.nullity != 1) throw std::runtime_error("intertwiner space is not one-dimensional");
    RMatrix r = make("R_solver(" + std::to_string(k1) + "," + std::to_string(k2) + ")", sol.basis[0], src, tgt);
    r.map.mark_all_safe();
    normalize_top(r);
    return r;
}

namespace {

struct Triple {
    Mat r12, r13, r23;  // R_{V1,V2}(u), R_{V1,V3}(uv), R_{V2,V3}(v)
};

Mat normalized(const Mat& m)
{
    if (m(0, 0).is_zero()) throw std::domain_error("intertwiner vanishes on top vector");
    return m.scaled(m(0, 0).inverse());
}

Mat numeric_r(int ka, int kb, const Point& base, const mpq_class& x)
{
    auto V = kr_module(ka), W = kr_module(kb);
    Point p = base;
    p.u = x;
    auto ns = nullspace_at(tensor(spectral_deform(V), W), tensor(W, spectral_deform(V)), p);
    if (ns.size() != 1) throw PoleAtPoint();
    return normalized(ns[0]);
}

std::pair<Mat, Mat> braid_sides(const Triple& t, int d1, int d2, int d3)
{
    Mat I1 = Mat::identity(d1), I2 = Mat::identity(d2), I3 = Mat::identity(d3);
    Mat lhs = kron(t.r23, I1) * kron(I2, t.r13) * kron(t.r12, I3);
    Mat rhs = kron(I3, t.r12) * kron(t.r13, I2) * kron(I1, t.r23);
    return {lhs, rhs};
}

Mat evaluate_mat(const Mat& m, const Point& p)
{
    return m.map([&](const Scalar& s) { return Scalar(s.evaluate(p)); });
}

}  // namespace

Report check_yang_baxter(int k1, int k2, int k3, const SolveOptions& opt, bool control_identity)
{
    if (control_identity && k1 != k2) throw std::invalid_argument("identity control needs k1 == k2");
    const int d1 = k1 + 1, d2 = k2 + 1, d3 = k3 + 1;
    const std::string id = "YBE(" + std::to_string(k1) + "," + std::to_string(k2) + "," + std::to_string(k3) + ")";
    const std::string anchor = "Yang-Baxter equation";
    Report rep;
    Strategy st = opt.strategy;
    if (st == Strategy::Auto) st = d1 * d2 * d3 > 27 ? Strategy::Specialized : Strategy::Exact;

    if (st == Strategy::Exact) {
        auto symbolic = [](int ka, int kb) {
            return ka == kb ? rmat_kr_explicit(ka).map : rmat_kr_by_solver(ka, kb).map;
        };
        const Exp uv{0, 1, 0, 1}, v{0, 0, 0, 1};
        Triple t;
        t.r12 = control_identity ? Mat::identity(d1 * d2) : symbolic(k1, k2);
        t.r13 = symbolic(k1, k3).substitute(U, uv);
        t.r23 = symbolic(k2, k3).substitute(U, v);
        auto [l, r] = braid_sides(t, d1, d2, d3);
        Comparison c = compare_on_window(l, r);
        rep.push_back({id + ":exact", anchor, c.window, c.ok(), c.ok() ? "" : c.summary()});
        return rep;
    }

    std::uint64_t state = opt.seed;
    int done = 0, tries = 0;
    while (done < opt.count) {
        if (tries++ >= 10 * opt.count) throw AllPointsSingular("YBE: no regular specialization point");
        Point p = draw_point(state);
        try {
            Triple t;
            t.r12 = control_identity ? Mat::identity(d1 * d2) : numeric_r(k1, k2, p, p.u);
            t.r13 = numeric_r(k1, k3, p, p.u * p.v);
            t.r23 = numeric_r(k2, k3, p, p.v);
            auto [l, r] = braid_sides(t, d1, d2, d3);
            Comparison c = compare_on_window(evaluate_mat(l, p), evaluate_mat(r, p));
            rep.push_back({id + ":point" + std::to_string(done), anchor, c.window, c.ok(), c.ok() ? "" : c.summary()});
            ++done;
        } catch (const PoleAtPoint&) {
        }
    }
    return rep;
}

std::vector<int> pole_scan(const Mat& m)
{
    std::set<int> out;
    std::set<std::vector<std::pair<Exp, std::string>>> seen;
    for (int r = 0; r < m.rows(); ++r)
        for (int c = 0; c < m.cols(); ++c) {
            const Scalar& x = m(r, c);
            if (x.is_zero() || x.den().is_constant()) continue;
            const QPoly& d = x.den();
            if (d.degree_span(U) == 0) continue;
            std::vector<std::pair<Exp, std::string>> key;
            for (const auto& t : d.terms()) key.push_back({t.e, t.c.get_str()});
            if (!seen.insert(key).second) continue;
            // u = q^s can only cancel terms if |s| is at most the q-span
            int bound = d.degree_span(QH) / 2 + 1;
            for (int s = -bound; s <= bound; ++s)
                if (substitute_poly(d, U, Exp{2 * s, 0, 0, 0}).is_zero()) out.insert(s);
        }
    return {out.begin(), out.end()};
}

std::vector<int> pole_scan_inverse(const RMatrix& R) { return pole_scan(R.map.invert_var(U)); }

Comparison compare_series(const Mat& x, const Mat& y, int order)
{
    Comparison out;
    for (int c = 0; c < x.cols(); ++c) {
        ++out.window;
        for (int r = 0; r < x.rows(); ++r) {
            auto sx = x(r, c).series(U, order);
            auto sy = y(r, c).series(U, order);
            for (int k = 0; k <= order; ++k)
                if (sx[k] != sy[k]) {
                    if (out.sample.size() < 3) out.sample.push_back({r, c, sx[k], sy[k]});
                    ++out.mismatches;
                }
        }
    }
    return out;
}

}  // namespace qloop
