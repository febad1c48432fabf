#include "qloop/module.hpp"

#include <algorithm>

namespace qloop {

namespace {

Exp b_exp(int s) { return Exp{2 * s, 0, 1, 0}; }
Scalar aq(int s) { return Scalar::monomial(1, b_exp(s)); }

Scalar mono(const Exp& e) { return Scalar::monomial(1, e); }

Exp exp_scale(const Exp& e, int k) { return Exp{e[0] * k, e[1] * k, e[2] * k, e[3] * k}; }

void add_factor(std::map<Exp, int>& f, const Exp& b, int m)
{
    int& x = f[b];
    x += m;
    if (x == 0) f.erase(b);
}

[[noreturn]] void missing(const std::string& what) { throw MissingDrinfeldData(what); }

Mat q_invert(const Mat& m) { return m.invert_var(QH); }
}  // namespace

SpectralWeight SpectralWeight::operator*(const SpectralWeight& o) const
{
    SpectralWeight r = *this;
    r.c_h += o.c_h;
    for (const auto& [b, m] : o.f) add_factor(r.f, b, m);
    return r;
}

SpectralWeight SpectralWeight::deformed(const Exp& t) const
{
    SpectralWeight r;
    r.c_h = c_h;
    for (const auto& [b, m] : f) add_factor(r.f, exp_add(b, t), m);
    return r;
}

SpectralWeight SpectralWeight::q_inverted() const
{
    SpectralWeight r;
    r.c_h = -c_h;
    for (const auto& [b, m] : f) {
        Exp e = b;
        e[QH] = -e[QH];
        add_factor(r.f, e, m);
    }
    return r;
}

std::vector<Scalar> SpectralWeight::series(int order) const
{
    std::vector<Scalar> s(order + 1);
    s[0] = Scalar::qh(c_h);
    for (const auto& [b, m] : f) {
        Scalar bb = mono(b);
        // (1 - b z)^m as a truncated series
        std::vector<Scalar> g(order + 1);
        g[0] = Scalar(1);
        if (m > 0) {
            for (int k = 1; k <= std::min(m, order); ++k) {
                // binomial(m,k) (-b)^k
                mpz_class c;
                mpz_bin_uiui(c.get_mpz_t(), m, k);
                g[k] = Scalar(mpq_class(k % 2 ? -c : c)) * bb.pow(k);
            }
        } else {
            int n = -m;
            for (int k = 1; k <= order; ++k) {
                mpz_class c;
                mpz_bin_uiui(c.get_mpz_t(), n + k - 1, k);
                g[k] = Scalar(mpq_class(c)) * bb.pow(k);
            }
        }
        std::vector<Scalar> t(order + 1);
        for (int i = 0; i <= order; ++i) {
            if (s[i].is_zero()) continue;
            for (int j = 0; i + j <= order; ++j)
                if (!g[j].is_zero()) t[i + j] += s[i] * g[j];
        }
        s = std::move(t);
    }
    return s;
}

Scalar q_diff(int sign) { return Scalar::q(sign) - Scalar::q(-sign); }

Mat ModuleModel::K1inv() const
{
    Mat m(dim, dim);
    for (int i = 0; i < dim; ++i) m(i, i) = K1(i, i).inverse();
    return m;
}

const DrinfeldData& ModuleModel::drinfeld_data() const
{
    if (!drinfeld) missing("module " + label + " carries no Drinfeld data");
    return *drinfeld;
}

namespace {

ModuleModel invert_model(ModuleModel m)
{
    m.sign = -m.sign;
    for (auto& w : m.weight_h) w = -w;
    m.E0 = q_invert(m.E0);
    m.E1 = q_invert(m.E1);
    m.K1 = q_invert(m.K1);
    if (m.F0) m.F0 = q_invert(*m.F0);
    if (m.F1) m.F1 = q_invert(*m.F1);
    if (m.drinfeld) {
        auto d = std::make_shared<DrinfeldData>();
        auto src = m.drinfeld;
        d->xplus = [src](int r) { return q_invert(src->xplus(r)); };
        d->xminus = [src](int r) { return q_invert(src->xminus(r)); };
        for (const auto& w : src->phi) d->phi.push_back(w.q_inverted());
        m.drinfeld = d;
    }
    m.label += "@q^-1";
    return m;
}

// basis 0..n-1 with weights w0 - 2j
void fill_basis(ModuleModel& m, int n, int top_h)
{
    m.dim = n;
    m.basis_index.resize(n);
    m.weight_h.resize(n);
    m.depth.resize(n);
    m.K1 = Mat(n, n);
    for (int j = 0; j < n; ++j) {
        m.basis_index[j] = j;
        m.depth[j] = j;
        m.weight_h[j] = top_h - 4 * j;
        m.K1(j, j) = Scalar::qh(m.weight_h[j]);
    }
    m.E1 = Mat(n, n);
    for (int j = 1; j < n; ++j) m.E1(j - 1, j) = Scalar(1);
}

Mat lowering(int n, bool truncated, const std::function<Scalar(int)>& coef)
{
    Mat m(n, n);
    for (int j = 0; j + 1 < n; ++j) m(j + 1, j) = coef(j);
    if (truncated) m.set_safe(n - 1, false);
    return m;
}

Mat raising(int n, const std::function<Scalar(int)>& coef)
{
    Mat m(n, n);
    for (int j = 1; j < n; ++j) m(j - 1, j) = coef(j);
    return m;
}

ModuleModel finish(ModuleModel m, int sign) { return sign == 1 ? m : invert_model(std::move(m)); }

}  // namespace

ModuleModel kr_module(int k, int shift, int sign)
{
    if (k < 1) throw std::invalid_argument("kr_module: k < 1");
    if (sign != 1 && sign != -1) throw std::invalid_argument("sign must be +-1");
    ModuleModel m;
    m.label = "W" + std::to_string(k) + "[" + std::to_string(shift) + "]";
    m.exact = true;
    fill_basis(m, k + 1, 2 * k);
    const Scalar ap = aq(shift);
    m.E0 = lowering(k + 1, false, [&](int j) { return ap * Scalar::q(2 - k) * q_number(j + 1) * q_number(k - j); });
    m.F1 = lowering(k + 1, false, [&](int j) { return q_number(j + 1) * q_number(k - j); });
    m.F0 = raising(k + 1, [&](int) { return ap.inverse() * Scalar::q(k - 2); });

    auto d = std::make_shared<DrinfeldData>();
    d->xplus = [k, ap](int r) {
        return raising(k + 1, [&](int j) { return ap.pow(r) * Scalar::q(2 * r * (1 - j)); });
    };
    d->xminus = [k, ap](int r) {
        return lowering(k + 1, false,
                        [&](int j) { return ap.pow(r) * Scalar::q(-2 * j * r) * q_number(j + 1) * q_number(k - j); });
    };
    for (int j = 0; j <= k; ++j) {
        SpectralWeight w;
        w.c_h = 2 * (k - 2 * j);
        add_factor(w.f, b_exp(shift - 2 * k), 1);
        add_factor(w.f, b_exp(shift + 2), 1);
        add_factor(w.f, b_exp(shift + 2 * (1 - j)), -1);
        add_factor(w.f, b_exp(shift - 2 * j), -1);
        d->phi.push_back(w);
    }
    m.drinfeld = d;
    return finish(std::move(m), sign);
}

ModuleModel prefund_plus(int shift, int trunc, int sign)
{
    if (trunc < 1) throw std::invalid_argument("prefund_plus: trunc < 1");
    ModuleModel m;
    m.label = "L+[" + std::to_string(shift) + "]";
    m.exact = false;
    m.trunc = trunc;
    int n = trunc + 1;
    fill_basis(m, n, 0);
    const Scalar ap = aq(shift);
    const Scalar dq = q_minus_qinv();
    m.E0 = lowering(n, true, [&](int j) { return -ap * Scalar::q(2 + j) * q_number(j + 1) / dq; });

    auto d = std::make_shared<DrinfeldData>();
    d->xplus = [n](int r) {
        if (r < 0) missing("x^+_{1,r} with r < 0 on L+");
        if (r > 0) return Mat(n, n);
        return raising(n, [](int) { return Scalar(1); });
    };
    d->xminus = [n, ap, dq](int r) {
        if (r != 1) missing("x^-_{1," + std::to_string(r) + "} on L+");
        return lowering(n, true, [&](int j) { return -ap * Scalar::q(-j) * q_number(j + 1) / dq; });
    };
    for (int j = 0; j < n; ++j) {
        SpectralWeight w;
        w.c_h = -4 * j;
        add_factor(w.f, b_exp(shift), 1);
        d->phi.push_back(w);
    }
    m.drinfeld = d;
    return finish(std::move(m), sign);
}

ModuleModel prefund_minus(int shift, int trunc, int sign)
{
    if (trunc < 1) throw std::invalid_argument("prefund_minus: trunc < 1");
    ModuleModel m;
    m.label = "L-[" + std::to_string(shift) + "]";
    m.exact = false;
    m.trunc = trunc;
    int n = trunc + 1;
    fill_basis(m, n, 0);
    const Scalar ap = aq(shift);
    const Scalar dq = q_minus_qinv();
    m.E0 = lowering(n, true, [&](int j) { return ap * Scalar::q(2 - j) * q_number(j + 1) / dq; });

    auto d = std::make_shared<DrinfeldData>();
    d->xplus = [n, ap](int r) {
        return raising(n, [&](int j) { return ap.pow(r) * Scalar::q(2 * r * (1 - j)); });
    };
    d->xminus = [n, ap, dq](int r) {
        return lowering(n, true,
                        [&](int j) { return ap.pow(r) * Scalar::q(-(2 * r + 1) * j) * q_number(j + 1) / dq; });
    };
    for (int j = 0; j < n; ++j) {
        SpectralWeight w;
        w.c_h = -4 * j;
        add_factor(w.f, b_exp(shift + 2), 1);
        add_factor(w.f, b_exp(shift + 2 * (1 - j)), -1);
        add_factor(w.f, b_exp(shift - 2 * j), -1);
        d->phi.push_back(w);
    }
    m.drinfeld = d;
    return finish(std::move(m), sign);
}

ModuleModel invertible_module(int weight_h)
{
    ModuleModel m;
    m.label = "[q^" + std::to_string(weight_h) + "/2]";
    m.dim = 1;
    m.basis_index = {0};
    m.weight_h = {weight_h};
    m.depth = {0};
    m.E0 = Mat(1, 1);
    m.E1 = Mat(1, 1);
    m.K1 = Mat::diagonal({Scalar::qh(weight_h)});
    auto d = std::make_shared<DrinfeldData>();
    d->xplus = [](int) { return Mat(1, 1); };
    d->xminus = [](int) { return Mat(1, 1); };
    SpectralWeight w;
    w.c_h = weight_h;
    d->phi.push_back(w);
    m.drinfeld = d;
    return m;
}

ModuleModel tensor(const ModuleModel& a, const ModuleModel& b)
{
    if (a.sign != b.sign) throw std::invalid_argument("tensor: quantum sign mismatch");
    ModuleModel m;
    m.label = "(" + a.label + " x " + b.label + ")";
    m.dim = a.dim * b.dim;
    m.exact = a.exact && b.exact;
    m.sign = a.sign;
    if (a.trunc >= 0 && b.trunc >= 0)
        m.trunc = std::min(a.trunc, b.trunc);
    else
        m.trunc = std::max(a.trunc, b.trunc);
    m.single_factor = false;
    for (int i = 0; i < a.dim; ++i)
        for (int j = 0; j < b.dim; ++j) {
            m.basis_index.push_back(i * b.dim + j);
            m.weight_h.push_back(a.weight_h[i] + b.weight_h[j]);
            m.depth.push_back(a.depth[i] + b.depth[j]);
        }
    Mat ia = Mat::identity(a.dim), ib = Mat::identity(b.dim);
    m.E0 = kron(a.E0, ib) + kron(a.K1inv(), b.E0);
    m.E1 = kron(a.E1, ib) + kron(a.K1, b.E1);
    m.K1 = kron(a.K1, b.K1);
    if (a.drinfeld && b.drinfeld) {
        auto d = std::make_shared<DrinfeldData>();
        std::string lab = m.label;
        d->xplus = [lab](int) -> Mat { missing("Drinfeld generators on tensor product " + lab); };
        d->xminus = d->xplus;
        for (int i = 0; i < a.dim; ++i)
            for (int j = 0; j < b.dim; ++j) d->phi.push_back(a.drinfeld->phi[i] * b.drinfeld->phi[j]);
        m.drinfeld = d;
    }
    return m;
}

ModuleModel spectral_deform(const ModuleModel& src, const Exp& t)
{
    ModuleModel m = src;
    const Scalar tt = mono(t);
    m.E0 = src.E0.scaled(tt);
    if (src.F0) m.F0 = src.F0->scaled(tt.inverse());
    if (src.drinfeld) {
        auto d = std::make_shared<DrinfeldData>();
        auto s = src.drinfeld;
        d->xplus = [s, t](int r) { return s->xplus(r).scaled(mono(exp_scale(t, r))); };
        d->xminus = [s, t](int r) { return s->xminus(r).scaled(mono(exp_scale(t, r))); };
        for (const auto& w : s->phi) d->phi.push_back(w.deformed(t));
        m.drinfeld = d;
    }
    m.label = src.label + "(" + exp_to_string(t) + ")";
    return m;
}

namespace {

ModuleModel twist_impl(const ModuleModel& src, int from_sign)
{
    if (src.sign != from_sign) throw std::invalid_argument("twist: wrong quantum sign on input");
    ModuleModel m = src;
    Mat ki = src.K1inv();
    m.sign = -src.sign;
    m.E0 = -(src.K1 * src.E0);
    m.E1 = -(ki * src.E1);
    m.K1 = ki;
    // sigma(f_i) = -f_i k_i with k_0 = k_1^{-1}
    if (src.F0) m.F0 = -(*src.F0 * ki);
    if (src.F1) m.F1 = -(*src.F1 * src.K1);
    for (auto& w : m.weight_h) w = -w;
    m.drinfeld.reset();
    m.label = "F(" + src.label + ")";
    return m;
}

}  // namespace

ModuleModel twist(const ModuleModel& m) { return twist_impl(m, -1); }
ModuleModel twist_inverse(const ModuleModel& m) { return twist_impl(m, 1); }

namespace {

Mat divided_power(const Mat& e, int n)
{
    Mat r = Mat::identity(e.rows());
    for (int i = 0; i < n; ++i) r = r * e;
    return n > 1 ? r.scaled(q_factorial(n).inverse()) : r;
}

CheckResult compare_result(const std::string& id, const Mat& x, const Mat& y)
{
    Comparison c = compare_on_window(x, y);
    return {id, "", c.window, c.ok(), c.ok() ? "" : c.summary()};
}

bool support_ok(const Mat& m, int drop)
{
    for (int r = 0; r < m.rows(); ++r)
        for (int c = 0; c < m.cols(); ++c)
            if (!m(r, c).is_zero() && r - c != drop) return false;
    return true;
}

}  // namespace

Report check_relations(const ModuleModel& m)
{
    if (!m.exact && m.trunc >= 0 && m.trunc < 4)
        throw WindowTooSmall("Serre words need trunc >= 4, got " + std::to_string(m.trunc));
    Report rep;
    const std::string anchor = "defining relations of U_q(b)";
    rep.push_back({"K1-diagonal", anchor, m.dim, m.K1.is_diagonal(), ""});
    Mat ki = m.K1inv();
    auto ke1 = compare_result("K1 E1 K1^-1 = q^2 E1", m.K1 * m.E1 * ki, m.E1.scaled(Scalar::q(2 * m.sign)));
    auto ke0 = compare_result("K1 E0 K1^-1 = q^-2 E0", m.K1 * m.E0 * ki, m.E0.scaled(Scalar::q(-2 * m.sign)));
    rep.push_back(ke1);
    rep.push_back(ke0);
    if (m.single_factor) {
        rep.push_back({"E1 support", anchor, m.dim, support_ok(m.E1, -1), ""});
        rep.push_back({"E0 support", anchor, m.dim, support_ok(m.E0, 1), ""});
    }
    const Mat* e[2] = {&m.E0, &m.E1};
    for (int i = 0; i < 2; ++i) {
        int j = 1 - i;
        Mat s(m.dim, m.dim);
        for (int r = 0; r <= 3; ++r) {
            Mat t = divided_power(*e[i], 3 - r) * *e[j] * divided_power(*e[i], r);
            s = r % 2 ? s - t : s + t;
        }
        Mat z(m.dim, m.dim);
        std::string id = "q-Serre (" + std::to_string(i) + "," + std::to_string(j) + ")";
        rep.push_back(compare_result(id, s, z));
    }
    for (auto& c : rep) c.anchor = anchor;
    return rep;
}

Report check_twist_prefund(int trunc)
{
    auto x = twist(prefund_minus(0, trunc, -1));
    auto y = prefund_plus(-2, trunc);
    std::vector<Scalar> d;
    for (int j = 0; j <= trunc; ++j) d.push_back(Scalar(j % 2 ? -1 : 1) * Scalar::q(j * (j - 1)));
    Mat D = Mat::diagonal(d), Di = D.inverse();
    const std::string anchor = "twist functor on prefundamental modules";
    const std::string id = "twist_prefund(" + std::to_string(trunc) + "):";
    Report rep;
    rep.push_back(compare_result(id + "E0", Di * x.E0 * D, y.E0));
    rep.push_back(compare_result(id + "E1", Di * x.E1 * D, y.E1));
    rep.push_back(compare_result(id + "K1", Di * x.K1 * D, y.K1));
    rep.push_back({id + "weights", "", x.dim, x.weight_h == y.weight_h, ""});
    for (auto& c : rep) {
        c.anchor = anchor;
        c.pass = c.pass && c.window > 0;
    }
    return rep;
}

Report check_tensor_reversal(const ModuleModel& m, const ModuleModel& n)
{
    auto x = twist(tensor(m, n));
    auto y = tensor(twist(n), twist(m));
    Mat P = Mat::flip(m.dim, n.dim);
    const std::string id = "tensor_reversal(" + m.label + "," + n.label + "):";
    Report rep;
    rep.push_back(compare_result(id + "E0", P * x.E0, y.E0 * P));
    rep.push_back(compare_result(id + "E1", P * x.E1, y.E1 * P));
    rep.push_back(compare_result(id + "K1", P * x.K1, y.K1 * P));
    for (auto& c : rep) {
        c.anchor = "twist functor reverses tensor products";
        c.pass = c.pass && c.window > 0;
    }
    return rep;
}

CheckResult check_drinfeld_consistency(const ModuleModel& m)
{
    const auto& d = m.drinfeld_data();
    Mat xp = d.xplus(0), xm = d.xminus(1);
    Mat comm = xp * xm - xm * xp;
    std::vector<Scalar> diag;
    for (int j = 0; j < m.dim; ++j) diag.push_back(d.phi[j].series(1)[1] / q_diff(m.sign));
    CheckResult r = compare_result("[x+_0, x-_1] = phi_1/(q-q^-1)", comm, Mat::diagonal(diag));
    r.anchor = "Drinfeld relations";
    return r;
}

std::vector<Scalar> h_eigenvalues(const ModuleModel& m, int j, int order)
{
    if (order < 1) throw std::invalid_argument("order < 1");
    const auto& w = m.drinfeld_data().phi.at(j);
    std::vector<Scalar> h;
    for (int r = 1; r <= order; ++r) {
        Scalar s;
        for (const auto& [b, mult] : w.f) s += Scalar(long(mult)) * mono(exp_scale(b, r));
        h.push_back(-s / (Scalar(long(r)) * q_diff(m.sign)));
    }
    return h;
}

std::vector<Scalar> h_eigenvalues_neg(const ModuleModel& m, int j, int order)
{
    if (order < 1) throw std::invalid_argument("order < 1");
    const auto& w = m.drinfeld_data().phi.at(j);
    std::vector<Scalar> h;
    for (int r = 1; r <= order; ++r) {
        Scalar s;
        for (const auto& [b, mult] : w.f) s += Scalar(long(mult)) * mono(exp_scale(b, -r));
        h.push_back(s / (Scalar(long(r)) * q_diff(m.sign)));
    }
    return h;
}

}  // namespace qloop
