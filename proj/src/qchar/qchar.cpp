#include "qloop/qchar.hpp"

#include <sstream>
#include <stdexcept>

namespace qloop {

namespace {

EllWeight canonical(EllWeight w)
{
    for (auto it = w.factors.begin(); it != w.factors.end();)
        it = it->second == 0 ? w.factors.erase(it) : std::next(it);
    if (w.factors.empty()) w.inverted_marker = false;
    return w;
}

EllWeight make(int c, std::map<int, int> f, bool marker = false) { return canonical({c, std::move(f), marker}); }

}  // namespace

EllWeight EllWeight::operator*(const EllWeight& o) const
{
    if (!factors.empty() && !o.factors.empty() && inverted_marker != o.inverted_marker)
        throw std::invalid_argument("l-weights with different spectral markers");
    EllWeight r = *this;
    r.c += o.c;
    for (const auto& [s, m] : o.factors) r.factors[s] += m;
    r.inverted_marker = factors.empty() ? o.inverted_marker : inverted_marker;
    return canonical(r);
}

EllWeight EllWeight::inverse() const
{
    EllWeight r = *this;
    r.c = -c;
    for (auto& [s, m] : r.factors) m = -m;
    return r;
}

EllWeight EllWeight::pow(int n) const
{
    EllWeight r = *this;
    r.c = c * n;
    for (auto& [s, m] : r.factors) m *= n;
    return canonical(r);
}

EllWeight EllWeight::q_inverted() const
{
    EllWeight r;
    r.c = -c;
    for (const auto& [s, m] : factors) r.factors[-s] = m;
    r.inverted_marker = inverted_marker;
    return r;
}

std::string EllWeight::str() const
{
    if (is_identity()) return "1";
    std::ostringstream os;
    bool first = true;
    if (c != 0) {
        os << "q^{" << c << "/2}";
        first = false;
    }
    for (const auto& [s, m] : factors) {
        if (!first) os << " * ";
        first = false;
        os << "(1 - " << (inverted_marker ? "a^{-1}" : "a") << " q^{" << s << "} z)^{" << m << "}";
    }
    return os.str();
}

EllWeight ellweight_basic(EllKind kind, int shift, int power, int sign)
{
    if (sign != 1 && sign != -1) throw std::invalid_argument("sign must be +-1");
    EllWeight w;
    const int t = shift;
    switch (kind) {
    case EllKind::Psi: w = make(0, {{t, 1}}); break;
    case EllKind::Y: w = make(2, {{t - 1, 1}, {t + 1, -1}}); break;
    case EllKind::A: w = make(4, {{t - 2, 1}, {t + 2, -1}}); break;
    case EllKind::AlphaBar: w = make(4, {}); break;
    case EllKind::OmegaBar: w = make(2, {}); break;
    }
    if (sign == -1) w = w.q_inverted();
    return w.pow(power);
}

int QCharSeries::depth_of(const EllWeight& w) const
{
    int d = sign * (top.c - w.c);
    if (d % 4 != 0) throw std::logic_error("l-weight off the alpha_bar lattice of the top");
    return d / 4;
}

long QCharSeries::total_multiplicity() const
{
    long n = 0;
    for (const auto& [w, m] : terms) n += m;
    return n;
}

std::string QCharSeries::str() const
{
    std::ostringstream os;
    for (const auto& [w, m] : terms) os << m << " * " << w.str() << "\n";
    return os.str();
}

namespace {

QCharSeries empty_series(const EllWeight& top, int depth, int sign)
{
    if (depth < 0) throw std::invalid_argument("depth < 0");
    QCharSeries s;
    s.top = top;
    s.depth_bound = depth;
    s.sign = sign;
    return s;
}

void add_term(QCharSeries& s, const EllWeight& w, long m)
{
    int d = s.depth_of(w);
    if (d < 0 || d > s.depth_bound) return;
    long& x = s.terms[w];
    x += m;
    if (x == 0) s.terms.erase(w);
}

}  // namespace

QCharSeries qchar_kr(int k, int shift, int depth, int sign)
{
    if (k < 1) throw std::invalid_argument("qchar_kr: k < 1");
    EllWeight top;
    for (int l = 0; l < k; ++l) top = top * ellweight_basic(EllKind::Y, shift + 1 - 2 * k + 2 * l, 1, sign);
    QCharSeries s = empty_series(top, depth, sign);
    EllWeight cur = top;
    for (int j = 0; j <= k; ++j) {
        add_term(s, cur, 1);
        cur = cur * ellweight_basic(EllKind::A, shift - 2 * j, -1, sign);
    }
    return s;
}

QCharSeries qchar_prefund_plus(int shift, int depth)
{
    EllWeight top = ellweight_basic(EllKind::Psi, shift);
    QCharSeries s = empty_series(top, depth, 1);
    for (int j = 0; j <= depth; ++j) add_term(s, top * ellweight_basic(EllKind::AlphaBar, 0, -j), 1);
    return s;
}

QCharSeries qchar_prefund_minus(int shift, int depth)
{
    EllWeight cur = ellweight_basic(EllKind::Psi, shift, -1);
    QCharSeries s = empty_series(cur, depth, 1);
    for (int j = 0; j <= depth; ++j) {
        add_term(s, cur, 1);
        cur = cur * ellweight_basic(EllKind::A, shift - 2 * j, -1);
    }
    return s;
}

QCharSeries qchar_chi_prefund_plus(int depth)
{
    QCharSeries s = empty_series(EllWeight{}, depth, 1);
    for (int j = 0; j <= depth; ++j) add_term(s, ellweight_basic(EllKind::AlphaBar, 0, -j), 1);
    return s;
}

QCharSeries qchar_constant(const EllWeight& w, int depth)
{
    QCharSeries s = empty_series(w, depth, 1);
    add_term(s, w, 1);
    return s;
}

QCharSeries qchar_from_module(const ModuleModel& m, int depth)
{
    const auto& ph = m.drinfeld_data().phi;
    if (ph.empty()) throw MissingDrinfeldData("module carries no l-weights");
    auto convert = [](const SpectralWeight& w) {
        EllWeight e;
        e.c = w.c_h;
        int marker = 0;
        for (const auto& [b, mult] : w.f) {
            if (b[U] != 0 || b[V] != 0 || (b[A] != 1 && b[A] != -1) || b[QH] % 2 != 0)
                throw std::invalid_argument("l-weight is not of the form (1 - a^{+-1} q^s z)");
            if (marker != 0 && marker != b[A]) throw std::invalid_argument("mixed spectral markers");
            marker = b[A];
            e.factors[b[QH] / 2] += mult;
        }
        e.inverted_marker = marker == -1;
        return canonical(e);
    };
    QCharSeries s = empty_series(convert(ph[0]), depth, m.sign);
    for (const auto& w : ph) add_term(s, convert(w), 1);
    return s;
}

QCharSeries series_mul(const QCharSeries& x, const QCharSeries& y, int depth)
{
    if (x.sign != y.sign) throw std::invalid_argument("series over q and q^{-1}");
    QCharSeries s = empty_series(x.top * y.top, depth, x.sign);
    for (const auto& [a, ma] : x.terms)
        for (const auto& [b, mb] : y.terms) add_term(s, a * b, ma * mb);
    return s;
}

QCharSeries series_combine(const std::vector<std::pair<long, QCharSeries>>& parts, const EllWeight& ref, int depth)
{
    int sign = parts.empty() ? 1 : parts.front().second.sign;
    QCharSeries s = empty_series(ref, depth, sign);
    for (const auto& [coef, x] : parts) {
        if (x.sign != sign) throw std::invalid_argument("series over q and q^{-1}");
        for (const auto& [w, m] : x.terms) add_term(s, w, coef * m);
    }
    return s;
}

QCharSeries normalized(const QCharSeries& x)
{
    EllWeight inv = x.top.inverse();
    QCharSeries s = empty_series(EllWeight{}, x.depth_bound, x.sign);
    for (const auto& [w, m] : x.terms) add_term(s, w * inv, m);
    return s;
}

int first_difference(const QCharSeries& x, const QCharSeries& y)
{
    int best = -1;
    auto visit = [&](const EllWeight& w) {
        long a = x.terms.count(w) ? x.terms.at(w) : 0;
        long b = y.terms.count(w) ? y.terms.at(w) : 0;
        if (a == b) return;
        int d = x.depth_of(w);
        if (best < 0 || d < best) best = d;
    };
    for (const auto& [w, m] : x.terms) visit(w);
    for (const auto& [w, m] : y.terms) visit(w);
    return best;
}

namespace {

CheckResult compare_series(const std::string& id, const std::string& anchor, const QCharSeries& lhs,
                           const QCharSeries& rhs)
{
    int d = first_difference(lhs, rhs);
    std::string detail = d < 0 ? "" : "first difference at depth " + std::to_string(d);
    return {id, anchor, lhs.depth_bound, d < 0, detail};
}

EllWeight alpha_inv() { return ellweight_basic(EllKind::AlphaBar, 0, -1); }

QCharSeries lp(int t, int D) { return qchar_prefund_plus(t, D); }
QCharSeries lm(int t, int D) { return qchar_prefund_minus(t, D); }

// [L+(t1)][L-(t1)] - alpha^{-1} [L+(t2)][L-(t1 - 2)]
QCharSeries wronskian_lhs(int t1, int t2, int D)
{
    auto a = series_mul(lp(t1, D), lm(t1, D), D);
    auto b = series_mul(qchar_constant(alpha_inv(), D), series_mul(lp(t2, D), lm(t1 - 2, D), D), D);
    return series_combine({{1, a}, {-1, b}}, EllWeight{}, D);
}

}  // namespace

Report check_wronskian(int depth, bool perturb)
{
    auto lhs = wronskian_lhs(-1, perturb ? 2 : 1, depth);
    return {compare_series("qchar_wronskian(" + std::to_string(depth) + ")", "quantum Wronskian relation", lhs,
                           qchar_chi_prefund_plus(depth))};
}

Report check_qq_dual(int depth, bool perturb)
{
    auto lhs = wronskian_lhs(1, perturb ? 4 : 3, depth);
    return {compare_series("qchar_qq_dual(" + std::to_string(depth) + ")", "QQ-dual Wronskian relation", lhs,
                           qchar_chi_prefund_plus(depth))};
}

Report check_baxter_qt(int depth, bool drop_term)
{
    const int D = depth;
    EllWeight ref = ellweight_basic(EllKind::Y, -1) * ellweight_basic(EllKind::Psi, 0);
    auto lhs = series_combine({{1, series_mul(qchar_kr(1, 0, D), lp(0, D), D)}}, ref, D);
    std::vector<std::pair<long, QCharSeries>> r;
    r.push_back({1, series_mul(qchar_constant(ellweight_basic(EllKind::OmegaBar), D), lp(-2, D), D)});
    if (!drop_term)
        r.push_back({1, series_mul(qchar_constant(ellweight_basic(EllKind::OmegaBar, 0, -1), D), lp(2, D), D)});
    auto rhs = series_combine(r, ref, D);
    return {compare_series("qchar_baxter_qt(" + std::to_string(depth) + ")", "Baxter QT relation", lhs, rhs)};
}

EllWeight iq_involution(const EllWeight& w)
{
    EllWeight r = w.q_inverted();
    r.inverted_marker = !w.inverted_marker;
    return canonical(r);
}

QCharSeries iq_involution(const QCharSeries& x)
{
    QCharSeries s = empty_series(iq_involution(x.top), x.depth_bound, -x.sign);
    for (const auto& [w, m] : x.terms) add_term(s, iq_involution(w), m);
    return s;
}

Report check_iq_kr(int k, int depth, bool marker_mismatch)
{
    Report rep;
    for (int t : {-1, 0, 2}) {
        auto lhs = iq_involution(normalized(qchar_kr(k, t, depth, -1)));
        auto plain = normalized(qchar_kr(k, t, depth));
        QCharSeries rhs = empty_series(plain.top, depth, plain.sign);
        for (const auto& [w, m] : plain.terms) {
            EllWeight x = w;
            if (!marker_mismatch) x.inverted_marker = true;
            add_term(rhs, canonical(x), m);
        }
        rep.push_back(compare_series("qchar_iq_kr(" + std::to_string(k) + ",shift=" + std::to_string(t) + "," +
                                         std::to_string(depth) + ")",
                                     "Iq involution on KR characters", lhs, rhs));
    }
    return rep;
}

}  // namespace qloop
