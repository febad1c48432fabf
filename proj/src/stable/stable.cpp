#include "qloop/stable.hpp"

namespace qloop {

namespace {

Scalar qhalf(long e)
{
    if (e % 2 != 0) throw std::logic_error("stable map exponent is not integral");
    return Scalar::qh(int(e));
}

void mark_total_window(Mat& m, int N)
{
    int n = N + 1;
    for (int c = 0; c < n * n; ++c) m.set_safe(c, c / n + c % n <= N);
}

Mat stable_minus_map(int N, const Scalar& u, bool inv)
{
    const int n = N + 1;
    Mat M(n * n, n * n);
    const Scalar c = inv ? q_minus_qinv() : -q_minus_qinv();
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            for (int lam = 0; lam <= j && i + lam <= N; ++lam) {
                Scalar x = u.pow(lam) * c.pow(-lam) * q_binomial(i + lam, lam) * qhalf(long(lam) * (1 - 3 * lam)) *
                           Scalar::q(lam * (j - 2 * i));
                for (int s = 1; s <= lam; ++s)
                    x /= q_number_spectral(inv ? j - i - lam + 1 - s : j - i - s, u);
                M((i + lam) * n + (j - lam), i * n + j) += x;
            }
    mark_total_window(M, N);
    return M;
}

Mat alpha_map(int N, const Scalar& u)
{
    const int n = N + 1;
    std::vector<Scalar> d;
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            Scalar x = Scalar(j % 2 ? -1 : 1) * u.pow(-i) * qhalf(long(i - j) * (i + j - 1)) * q_minus_qinv().pow(i - j);
            for (int s = 1; s <= i; ++s) x *= q_number_spectral(j - s + 1, u);
            for (int s = 1; s <= j; ++s) x /= q_number_spectral(s - i - 1, u);
            d.push_back(x);
        }
    return Mat::diagonal(d);
}

Mat stable_plus_map(int N, const Scalar& u, bool inv)
{
    const int n = N + 1;
    Mat M(n * n, n * n);
    const Scalar c = inv ? -q_minus_qinv() : q_minus_qinv();
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            for (int lam = 0; lam <= i && j + lam <= N; ++lam) {
                Scalar x = c.pow(-lam) * q_binomial(j + lam, lam) * qhalf(-long(lam) * (1 - 2 * i + lam));
                for (int s = 1; s <= lam; ++s)
                    x /= q_number_spectral(inv ? i - j - lam + 1 - s : i - j - s, u);
                M((i - lam) * n + (j + lam), i * n + j) += x;
            }
    mark_total_window(M, N);
    return M;
}

Mat beta_map(int N, const Scalar& u)
{
    const int n = N + 1;
    std::vector<Scalar> d;
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            Scalar x = (-u).pow(i) * qhalf(-long(j - i) * (j + i - 1)) * (-q_minus_qinv()).pow(j - i);
            for (int s = 1; s <= j; ++s) x *= q_number_spectral(i - s + 1, u);
            for (int s = 1; s <= i; ++s) x /= q_number_spectral(s - j - 1, u);
            d.push_back(x);
        }
    return Mat::diagonal(d);
}

}  // namespace

FactorizationBundle stable_minus(int trunc)
{
    if (trunc < 1) throw std::invalid_argument("trunc < 1");
    FactorizationBundle b;
    const Scalar u = Scalar::u();
    b.S = stable_minus_map(trunc, u, false);
    b.S_inv = stable_minus_map(trunc, u, true);
    b.diag = alpha_map(trunc, u);
    b.flip = Mat::flip(trunc + 1, trunc + 1);
    b.target_S = stable_minus_map(trunc, u.inverse(), false);
    b.first = spectral_deform(prefund_minus(0, trunc));
    b.second = prefund_minus(0, trunc);
    b.trunc = trunc;
    return b;
}

FactorizationBundle stable_plus(int trunc)
{
    if (trunc < 1) throw std::invalid_argument("trunc < 1");
    FactorizationBundle b;
    const Scalar u = Scalar::u();
    b.S = stable_plus_map(trunc, u, false);
    b.S_inv = stable_plus_map(trunc, u, true);
    b.diag = beta_map(trunc, u);
    b.flip = Mat::flip(trunc + 1, trunc + 1);
    b.target_S = stable_plus_map(trunc, u.inverse(), false);
    b.first = spectral_deform(prefund_plus(0, trunc));
    b.second = prefund_plus(0, trunc);
    b.trunc = trunc;
    b.plus = true;
    return b;
}

Report check_factorization(const FactorizationBundle& b, const Mat& R)
{
    if (R.rows() != b.S.rows() || R.cols() != b.S.cols())
        throw std::invalid_argument("check_factorization: size mismatch");
    Mat f = b.target_S * b.flip * b.diag * b.S_inv;
    Comparison c = compare_on_window(f, R);
    Report rep;
    rep.push_back({std::string(b.plus ? "factorization_plus" : "factorization_minus") + "(" + std::to_string(b.trunc) + ")",
                   "R-matrix factorization through stable maps", c.window, c.ok() && c.window > 0,
                   c.ok() ? "" : c.summary()});
    return rep;
}

Report check_factorization(const FactorizationBundle& b, const RMatrix& R) { return check_factorization(b, R.map); }

Report check_triangularity(const Mat& S, const ModuleModel& first, const ModuleModel& second, TriangularOrder order)
{
    const int db = second.dim;
    if (S.rows() != first.dim * db || S.cols() != S.rows())
        throw std::invalid_argument("check_triangularity: size mismatch");
    int bad = 0, window = 0;
    std::string detail;
    for (int c = 0; c < S.cols(); ++c) {
        if (!S.safe(c)) continue;
        ++window;
        const int w1 = first.weight_h[c / db], wt = w1 + second.weight_h[c % db];
        if (S(c, c) != Scalar(1)) {
            ++bad;
            if (detail.empty()) detail = "diagonal coefficient at column " + std::to_string(c) + " is " + S(c, c).str();
        }
        for (int r = 0; r < S.rows(); ++r) {
            if (r == c || S(r, c).is_zero()) continue;
            const int v1 = first.weight_h[r / db], vt = v1 + second.weight_h[r % db];
            // first-factor drop in half units: a positive multiple of q^2
            const int drop = order == TriangularOrder::Minus ? w1 - v1 : v1 - w1;
            if (vt != wt || drop <= 0 || drop % 4 != 0) {
                ++bad;
                if (detail.empty())
                    detail = "entry (" + std::to_string(r) + "," + std::to_string(c) + ") violates the order";
            }
        }
    }
    Report rep;
    rep.push_back({std::string("triangularity_") + (order == TriangularOrder::Minus ? "minus" : "plus"),
                   "stable map triangularity", window, bad == 0 && window > 0, detail});
    return rep;
}

std::vector<Mat> phi_from_chevalley(const ModuleModel& m, int order)
{
    const Scalar qd = q_diff(m.sign);
    const Scalar qs = Scalar::q(m.sign) + Scalar::q(-m.sign);
    auto comm = [](const Mat& x, const Mat& y) { return x * y - y * x; };
    Mat xm1 = m.K1 * m.E0;
    std::vector<Mat> phi{m.K1};
    if (order < 1) return phi;
    phi.push_back(comm(m.E1, xm1).scaled(qd));
    Mat h1 = (m.K1inv() * phi[1]).scaled(qd.inverse());
    Mat xp = m.E1;
    for (int r = 2; r <= order; ++r) {
        xp = comm(h1, xp).scaled(qs.inverse());
        phi.push_back(comm(xp, xm1).scaled(qd));
    }
    return phi;
}

namespace {

std::vector<Mat> expected_diagonals(const ModuleModel& m, int order)
{
    const auto& ph = m.drinfeld_data().phi;
    std::vector<std::vector<Scalar>> d(order + 1);
    for (const auto& w : ph) {
        auto s = w.series(order);
        for (int r = 0; r <= order; ++r) d[r].push_back(s[r]);
    }
    std::vector<Mat> out;
    for (auto& v : d) out.push_back(Mat::diagonal(v));
    return out;
}

}  // namespace

DrinfeldTarget drinfeld_target_minus(int trunc, int order)
{
    if (order < 0) throw std::invalid_argument("order < 0");
    auto L = prefund_minus(0, trunc);
    auto T = tensor(spectral_deform(L), L);
    return {"minus", phi_from_chevalley(T, order), expected_diagonals(T, order)};
}

DrinfeldTarget drinfeld_target_plus(int trunc, int order)
{
    if (order < 0) throw std::invalid_argument("order < 0");
    // at q^{-1} with literal spectral parameter a q^2
    auto Vm = prefund_minus(-2, trunc, -1);
    auto src = phi_from_chevalley(tensor(Vm, spectral_deform(Vm)), order);
    Mat P = Mat::flip(trunc + 1, trunc + 1);
    Mat D = twist_basis_change(trunc);
    Mat Di = D.inverse();
    DrinfeldTarget t{"plus", {}, expected_diagonals(tensor(spectral_deform(Vm), Vm), order)};
    for (const auto& p : src) t.phi.push_back(Di * P * p * P * D);
    return t;
}

Report check_drinfeld_linearity(const Mat& S, const DrinfeldTarget& t)
{
    Report rep;
    for (std::size_t r = 0; r < t.phi.size(); ++r) {
        Comparison c = compare_on_window(t.phi[r] * S, S * t.expected[r]);
        rep.push_back({"drinfeld_linearity_" + t.label + "_phi" + std::to_string(r), "Drinfeld coproduct linearity",
                       c.window, c.ok() && c.window > 0, c.ok() ? "" : c.summary()});
    }
    return rep;
}

}  // namespace qloop
