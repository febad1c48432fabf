#include "qloop/solve.hpp"

#include <algorithm>
#include <climits>
#include <map>
#include <random>

namespace qloop {

namespace {

struct Unknown {
    int r, c;
};

struct System {
    std::vector<Unknown> vars;
    std::map<std::pair<int, int>, int> index;
    std::vector<std::map<int, Scalar>> eqs;
    int top = -1;
    int limit = INT_MAX;
};

// unknowns T[r][c] of equal weight within the complete part of the truncation
System build_system(const ModuleModel& A, const ModuleModel& B)
{
    if (A.sign != B.sign) throw std::invalid_argument("solve_intertwiners: quantum sign mismatch");
    System s;
    int lim = INT_MAX;
    if (A.trunc >= 0) lim = std::min(lim, A.trunc);
    if (B.trunc >= 0) lim = std::min(lim, B.trunc);
    s.limit = lim;
    for (int r = 0; r < B.dim; ++r) {
        if (B.depth[r] > lim) continue;
        for (int c = 0; c < A.dim; ++c) {
            if (A.depth[c] > lim || A.weight_h[c] != B.weight_h[r]) continue;
            s.index[{r, c}] = int(s.vars.size());
            s.vars.push_back({r, c});
        }
    }
    auto it = s.index.find({0, 0});
    if (it != s.index.end()) s.top = it->second;

    // unknown rows per source column
    std::vector<std::vector<int>> col_rows(A.dim);
    for (const auto& v : s.vars) col_rows[v.c].push_back(v.r);

    const Mat* ga[2] = {&A.E0, &A.E1};
    const Mat* gb[2] = {&B.E0, &B.E1};
    for (int g = 0; g < 2; ++g) {
        const Mat& X = *ga[g];
        const Mat& Y = *gb[g];
        for (int c = 0; c < A.dim; ++c) {
            if (lim != INT_MAX && A.depth[c] > lim - 1) continue;
            if (!X.safe(c)) continue;
            bool ok = true;
            std::vector<int> ks;
            for (int k = 0; k < A.dim; ++k)
                if (!X(k, c).is_zero()) {
                    if (A.depth[k] > lim) ok = false;
                    ks.push_back(k);
                }
            for (int k : col_rows[c])
                if (!Y.safe(k)) ok = false;
            if (!ok) continue;
            for (int r = 0; r < B.dim; ++r) {
                if (B.depth[r] > lim) continue;
                std::map<int, Scalar> eq;
                for (int k : ks) {
                    auto jt = s.index.find({r, k});
                    if (jt != s.index.end()) eq[jt->second] += X(k, c);
                }
                for (int k : col_rows[c]) {
                    const Scalar& y = Y(r, k);
                    if (y.is_zero()) continue;
                    eq[s.index.at({k, c})] -= y;
                }
                for (auto e = eq.begin(); e != eq.end();)
                    e = e->second.is_zero() ? eq.erase(e) : std::next(e);
                if (!eq.empty()) s.eqs.push_back(std::move(eq));
            }
        }
    }
    return s;
}

std::size_t weight_of(const Scalar& x) { return x.num().size() + x.den().size(); }
std::size_t weight_of(const mpq_class& x) { return mpz_sizeinbase(x.get_num_mpz_t(), 2) + mpz_sizeinbase(x.get_den_mpz_t(), 2); }
bool is_zero(const Scalar& x) { return x.is_zero(); }
bool is_zero(const mpq_class& x) { return x == 0; }
Scalar inv(const Scalar& x) { return x.inverse(); }
mpq_class inv(const mpq_class& x) { return 1 / x; }

// reduced row echelon form kept incrementally; pivot rows have pivot coefficient 1
template <class F>
struct Rref {
    std::map<int, std::map<int, F>> piv;  // pivot column -> row

    void add(std::map<int, F> row)
    {
        for (auto& [pc, prow] : piv) {
            auto it = row.find(pc);
            if (it == row.end()) continue;
            F f = it->second;
            for (const auto& [k, v] : prow) {
                F& x = row[k];
                x -= f * v;
                if (is_zero(x)) row.erase(k);
            }
        }
        if (row.empty()) return;
        int best = -1;
        std::size_t bw = 0;
        for (const auto& [k, v] : row) {
            std::size_t w = weight_of(v);
            if (best < 0 || w < bw) {
                best = k;
                bw = w;
            }
        }
        F pinv = inv(row.at(best));
        for (auto& [k, v] : row) v *= pinv;
        for (auto& [pc, prow] : piv) {
            auto it = prow.find(best);
            if (it == prow.end()) continue;
            F f = it->second;
            for (const auto& [k, v] : row) {
                F& x = prow[k];
                x -= f * v;
                if (is_zero(x)) prow.erase(k);
            }
        }
        piv.emplace(best, std::move(row));
    }

    // basis of the nullspace as dense vectors
    std::vector<std::vector<F>> nullspace(int n) const
    {
        std::vector<std::vector<F>> out;
        for (int f = 0; f < n; ++f) {
            if (piv.count(f)) continue;
            std::vector<F> v(n);
            v[f] = F(1);
            for (const auto& [pc, prow] : piv) {
                auto it = prow.find(f);
                if (it != prow.end()) v[pc] = -it->second;
            }
            out.push_back(std::move(v));
        }
        return out;
    }

    bool forced_zero(int var) const
    {
        auto it = piv.find(var);
        return it != piv.end() && it->second.size() == 1;
    }
};

template <class F>
Mat to_mat(const System& s, const std::vector<F>& v, const ModuleModel& A, const ModuleModel& B)
{
    Mat t(B.dim, A.dim);
    for (std::size_t i = 0; i < s.vars.size(); ++i)
        if (!is_zero(v[i])) t(s.vars[i].r, s.vars[i].c) = Scalar(v[i]);
    for (int c = 0; c < A.dim; ++c) t.set_safe(c, s.limit == INT_MAX || A.depth[c] <= s.limit - 1);
    return t;
}

const mpq_class kQh[] = {mpq_class(2), mpq_class(3), mpq_class(5, 2), mpq_class(7, 3)};

bool collides(const mpq_class& x, const mpq_class& qh)
{
    mpq_class p = 1;
    for (int k = 0; k <= 80; ++k) {
        if (x == p || x == 1 / p) return true;
        p *= qh;
    }
    return false;
}

mpq_class draw_ratio(std::mt19937_64& rng, const mpq_class& qh)
{
    std::uniform_int_distribution<int> num(2, 13), den(1, 7);
    for (;;) {
        mpq_class x(num(rng), den(rng));
        x.canonicalize();
        if (!collides(x, qh)) return x;
    }
}

}  // namespace

Point draw_point(std::uint64_t& state)
{
    std::mt19937_64 rng(state);
    state = rng();
    Point p;
    p.qh = kQh[rng() % 4];
    p.u = draw_ratio(rng, p.qh);
    p.a = draw_ratio(rng, p.qh);
    p.v = draw_ratio(rng, p.qh);
    return p;
}

std::vector<Point> draw_points(std::uint64_t seed, int count)
{
    std::vector<Point> v;
    for (int i = 0; i < count; ++i) v.push_back(draw_point(seed));
    return v;
}

namespace {

Rref<mpq_class> eliminate_at(const System& s, const Point& p)
{
    Rref<mpq_class> rr;
    for (const auto& eq : s.eqs) {
        std::map<int, mpq_class> row;
        for (const auto& [k, v] : eq) {
            mpq_class x = v.evaluate(p);
            if (x != 0) row.emplace(k, x);
        }
        if (!row.empty()) rr.add(std::move(row));
    }
    return rr;
}

}  // namespace

std::vector<Mat> nullspace_at(const ModuleModel& a, const ModuleModel& b, const Point& p)
{
    System s = build_system(a, b);
    auto rr = eliminate_at(s, p);
    std::vector<Mat> out;
    for (const auto& v : rr.nullspace(int(s.vars.size()))) out.push_back(to_mat(s, v, a, b));
    return out;
}

SolveResult solve_intertwiners(const ModuleModel& a, const ModuleModel& b, const SolveOptions& opt)
{
    System s = build_system(a, b);
    SolveResult res;
    res.unknowns = int(s.vars.size());
    res.equations = int(s.eqs.size());
    Strategy st = opt.strategy;
    if (st == Strategy::Auto) st = res.unknowns > 64 ? Strategy::Specialized : Strategy::Exact;

    if (st == Strategy::Exact) {
        Rref<Scalar> rr;
        for (const auto& eq : s.eqs) rr.add(eq);
        auto ns = rr.nullspace(res.unknowns);
        res.exact = true;
        res.nullity = int(ns.size());
        for (const auto& v : ns) res.basis.push_back(to_mat(s, v, a, b));
        res.top_forced_zero = s.top >= 0 && rr.forced_zero(s.top);
        return res;
    }

    std::uint64_t state = opt.seed;
    int done = 0, tries = 0;
    bool forced = true;
    res.nullity = INT_MAX;
    while (done < opt.count) {
        if (tries++ >= 10 * opt.count) throw AllPointsSingular("no regular specialization point found");
        Point p = draw_point(state);
        try {
            auto rr = eliminate_at(s, p);
            int n = res.unknowns - int(rr.piv.size());
            res.point_nullity.push_back(n);
            res.nullity = std::min(res.nullity, n);
            forced = forced && s.top >= 0 && rr.forced_zero(s.top);
            ++done;
        } catch (const PoleAtPoint&) {
        }
    }
    res.top_forced_zero = forced;
    return res;
}

}  // namespace qloop
