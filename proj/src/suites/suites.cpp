#include "qloop/suites.hpp"

#include <algorithm>
#include <future>
#include <map>

namespace qloop {

const std::set<std::string>& known_suites()
{
    static const std::set<std::string> s = {"relations", "rmatrix", "stable", "qchar", "twist", "negative"};
    return s;
}

void validate(const SuiteConfig& cfg)
{
    if (cfg.suites.empty()) throw ConfigError("no suite selected");
    for (const auto& s : cfg.suites)
        if (!known_suites().count(s)) throw ConfigError("unknown suite '" + s + "'");
    if (cfg.trunc < 1) throw ConfigError("trunc must be >= 1");
    if (cfg.suites.count("relations") && cfg.trunc < 4) throw ConfigError("relations suite needs trunc >= 4");
    if (cfg.depth < 0) throw ConfigError("depth must be >= 0");
    if (cfg.u_order < 0) throw ConfigError("u-order must be >= 0");
    if (cfg.strategy == Strategy::Specialized && cfg.spec_count < 1) throw ConfigError("spec:N needs N >= 1");
    if (cfg.jobs < 1) throw ConfigError("jobs must be >= 1");
}

void parse_strategy(const std::string& s, SuiteConfig& cfg)
{
    if (s == "exact") {
        cfg.strategy = Strategy::Exact;
        return;
    }
    if (s.rfind("spec:", 0) == 0) {
        std::size_t used = 0;
        int n = 0;
        try {
            n = std::stoi(s.substr(5), &used);
        } catch (const std::exception&) {
            used = 0;
        }
        if (used == 0 || used != s.size() - 5 || n < 1) throw ConfigError("bad strategy '" + s + "'");
        cfg.strategy = Strategy::Specialized;
        cfg.spec_count = n;
        return;
    }
    throw ConfigError("strategy must be exact or spec:N, got '" + s + "'");
}

namespace {

void append(Report& r, const Report& x) { r.insert(r.end(), x.begin(), x.end()); }

void prefix(Report& r, const std::string& p)
{
    for (auto& c : r) c.check_id = p + c.check_id;
}

CheckResult from_comparison(const std::string& id, const std::string& anchor, const Comparison& c)
{
    return {id, anchor, c.window, c.ok() && c.window > 0, c.ok() ? "" : c.summary()};
}

SolveOptions solve_options(const SuiteConfig& cfg)
{
    SolveOptions o;
    o.strategy = cfg.strategy;
    o.seed = cfg.seed;
    o.count = cfg.spec_count;
    return o;
}

Mat six_vertex()
{
    const Scalar u = Scalar::u(), q = Scalar::q(1), q2 = Scalar::q(2);
    const Scalar den = Scalar(1) - u * q2;
    Mat m(4, 4);
    m(0, 0) = Scalar(1);
    m(3, 3) = Scalar(1);
    m(1, 1) = (Scalar(1) - q2) * u / den;
    m(1, 2) = q * (Scalar(1) - u) / den;
    m(2, 1) = m(1, 2);
    m(2, 2) = (Scalar(1) - q2) / den;
    return m;
}

Report relations_suite(const SuiteConfig& cfg)
{
    const int N = cfg.trunc;
    std::vector<ModuleModel> ms = {kr_module(1),
                                   kr_module(2),
                                   kr_module(3, 2),
                                   kr_module(2, 0, -1),
                                   prefund_plus(0, N),
                                   prefund_minus(0, N),
                                   prefund_plus(1, N, -1),
                                   prefund_minus(0, N, -1),
                                   invertible_module(3),
                                   tensor(kr_module(1), kr_module(2)),
                                   tensor(spectral_deform(prefund_minus(0, N)), prefund_plus(0, N)),
                                   spectral_deform(kr_module(2)),
                                   twist(prefund_minus(0, N, -1)),
                                   twist(kr_module(2, 0, -1))};
    Report rep;
    for (const auto& m : ms) {
        auto r = check_relations(m);
        prefix(r, "relations:" + m.label + ":");
        append(rep, r);
    }
    append(rep, mutation_suite(2));
    for (const auto& m : {kr_module(1), kr_module(3), prefund_minus(0, N), prefund_plus(0, N)}) {
        auto c = check_drinfeld_consistency(m);
        c.check_id = "relations:" + m.label + ":" + c.check_id;
        rep.push_back(c);
    }
    return rep;
}

Report rmatrix_suite(const SuiteConfig& cfg)
{
    Report rep;
    const std::string p = "rmatrix:";
    auto R1 = rmat_kr_explicit(1);
    rep.push_back(from_comparison(p + "kr1_six_vertex", "KR R-matrix for k = 1", compare_on_window(R1.map, six_vertex())));

    for (int k = 1; k <= 2; ++k) {
        auto V = kr_module(k);
        auto src = tensor(spectral_deform(V), V), tgt = tensor(V, spectral_deform(V));
        SolveOptions o = solve_options(cfg);
        o.strategy = Strategy::Specialized;
        auto spec = solve_intertwiners(src, tgt, o);
        bool one = !spec.point_nullity.empty();
        for (int n : spec.point_nullity) one = one && n == 1;
        rep.push_back({p + "kr" + std::to_string(k) + "_oracle_nullity", "uniqueness of the normalized R-matrix",
                       int(spec.point_nullity.size()), one, one ? "" : "nullity differs from 1 at a point"});
        auto ex = rmat_kr_explicit(k);
        rep.push_back(from_comparison(p + "kr" + std::to_string(k) + "_oracle_match", "KR R-matrix closed form",
                                      compare_on_window(rmat_kr_by_solver(k, k).map, ex.map)));
        auto ri = check_intertwining(ex);
        prefix(ri, p);
        append(rep, ri);
    }

    auto V = kr_module(1);
    auto Ru = universal_r_truncated(V, V, cfg.u_order);
    rep.push_back(from_comparison(p + "universal_r_series(u_order=" + std::to_string(cfg.u_order) + ")",
                                  "universal R-matrix expansion", compare_series(Ru.map, R1.map, cfg.u_order)));

    auto Rm = rmat_minus_explicit(cfg.trunc);
    auto ri = check_intertwining(Rm);
    prefix(ri, p);
    append(rep, ri);
    auto poles = pole_scan(Rm);
    rep.push_back({p + "R_minus_poles", "holomorphy of the affine R-matrix", Rm.map.safe_count(), poles.empty(),
                   poles.empty() ? "" : std::to_string(poles.size()) + " poles"});
    auto Rp = rmat_plus_explicit(cfg.trunc);
    ri = check_intertwining(Rp);
    prefix(ri, p);
    append(rep, ri);

    const int nt = std::min(cfg.trunc, 6);
    auto Rt = rmat_plus_via_twist(nt);
    rep.push_back(from_comparison(p + "R_plus_via_twist(" + std::to_string(nt) + ")", "R-matrix under the twist functor",
                                  compare_on_window(Rt.map, rmat_plus_explicit(nt).map)));
    ri = check_intertwining(Rt);
    prefix(ri, p);
    append(rep, ri);

    auto ps = pole_scan(R1), pi = pole_scan_inverse(R1);
    bool pole_ok = ps == std::vector<int>{-2} && pi == std::vector<int>{2};
    rep.push_back({p + "kr1_pole_scan", "poles of R and its inverse", 4, pole_ok, pole_ok ? "" : "unexpected poles"});

    for (int k = 1; k <= 2; ++k) {
        auto R = rmat_kr_explicit(k);
        Mat Ri = R.map.invert_var(U);
        Mat I = Mat::identity((k + 1) * (k + 1));
        Comparison c = compare_on_window(R.map * Ri, I);
        rep.push_back(from_comparison(p + "kr" + std::to_string(k) + "_inverse_law", "inverse law R(u) R(1/u)", c));
    }

    Mat gl = g_map_explicit(2, 3) * g_map_explicit(1, 2);
    rep.push_back(from_comparison(p + "g_transitivity(1,2,3)", "inductive system", compare_on_window(gl, g_map_explicit(1, 3))));
    if (cfg.trunc >= 4) {
        Mat gi = g_inf_explicit(2, cfg.trunc) * g_map_explicit(1, 2);
        rep.push_back(from_comparison(p + "g_inf_compatibility(1,2)", "inductive system",
                                      compare_on_window(gi, g_inf_explicit(1, cfg.trunc))));
        Mat top = Rm.map * g_inf_explicit(1, cfg.trunc);
        bool ok = top(0, 0) == Scalar(1);
        for (int r = 1; r < top.rows(); ++r) ok = ok && top(r, 0).is_zero();
        rep.push_back({p + "g_inf_top_line", "inductive system", 1, ok, ok ? "" : "top vector not fixed"});
    }

    auto y = check_yang_baxter(1, 1, 1, SolveOptions{});
    prefix(y, p);
    append(rep, y);
    SolveOptions so = solve_options(cfg);
    so.strategy = Strategy::Specialized;
    y = check_yang_baxter(2, 1, 1, so);
    prefix(y, p);
    append(rep, y);
    bool caught = !all_pass(check_yang_baxter(1, 1, 1, SolveOptions{}, true));
    rep.push_back({p + "YBE_identity_control", "Yang-Baxter equation", 8, caught, caught ? "" : "control not detected"});
    return rep;
}

Report stable_suite(const SuiteConfig& cfg)
{
    Report rep;
    const int N = std::min(cfg.trunc, 6);
    auto m = stable_minus(N), pl = stable_plus(N);
    append(rep, check_factorization(m, rmat_minus_explicit(N)));
    append(rep, check_factorization(pl, rmat_plus_explicit(N)));
    for (const auto* b : {&m, &pl}) {
        std::string id = b->plus ? "plus" : "minus";
        Mat I = Mat::identity(b->S.cols());
        for (int c = 0; c < I.cols(); ++c) I.set_safe(c, b->S.safe(c));
        rep.push_back(from_comparison("S_S_inv_" + id, "stable map inverse", compare_on_window(b->S * b->S_inv, I)));
    }
    append(rep, check_triangularity(m.S, m.first, m.second, TriangularOrder::Minus));
    append(rep, check_triangularity(pl.S, pl.first, pl.second, TriangularOrder::Plus));
    append(rep, check_drinfeld_linearity(m.S, drinfeld_target_minus(N, 3)));
    append(rep, check_drinfeld_linearity(pl.S, drinfeld_target_plus(N, 3)));
    auto ctrl = m;
    ctrl.diag = Mat::identity(ctrl.diag.rows());
    bool caught = !all_pass(check_factorization(ctrl, rmat_minus_explicit(N)));
    rep.push_back({"factorization_identity_control", "R-matrix factorization through stable maps", 1, caught,
                   caught ? "" : "control not detected"});
    prefix(rep, "stable:");
    return rep;
}

Report qchar_suite(const SuiteConfig& cfg)
{
    Report rep;
    const int D = cfg.depth;
    append(rep, check_wronskian(D));
    append(rep, check_qq_dual(D));
    append(rep, check_baxter_qt(D));
    for (int k = 1; k <= 4; ++k) append(rep, check_iq_kr(k, D));
    if (D >= 1) {
        bool c1 = !all_pass(check_wronskian(D, true)), c2 = !all_pass(check_qq_dual(D, true)),
             c3 = !all_pass(check_baxter_qt(D, true)), c4 = !all_pass(check_iq_kr(2, D, true));
        rep.push_back({"controls_detected", "Grothendieck ring identities", D, c1 && c2 && c3 && c4,
                       c1 && c2 && c3 && c4 ? "" : "a perturbed identity passed"});
    }
    prefix(rep, "qchar:");
    return rep;
}

Report twist_suite(const SuiteConfig& cfg)
{
    Report rep = check_twist_prefund(std::max(cfg.trunc, 4));
    const int N = std::min(cfg.trunc, 6);
    std::vector<ModuleModel> ms = {kr_module(1, 0, -1), kr_module(2, 0, -1), prefund_plus(0, N, -1),
                                   prefund_minus(0, N, -1)};
    for (const auto& a : ms)
        for (const auto& b : ms) append(rep, check_tensor_reversal(a, b));
    prefix(rep, "twist:");
    return rep;
}

Report negative_suite(const SuiteConfig& cfg)
{
    const int N = std::min(cfg.trunc, 6);
    auto lp = prefund_plus(0, N), lm = prefund_minus(0, N);
    auto res = solve_intertwiners(tensor(spectral_deform(lp), lm), tensor(lm, spectral_deform(lp)), solve_options(cfg));
    std::string detail = std::to_string(res.unknowns) + " unknowns, " + std::to_string(res.equations) +
                         " equations, nullity " + std::to_string(res.nullity) + (res.exact ? " (exact)" : " (specialized)");
    Report rep;
    rep.push_back({"negative:Lplus_Lminus_top_annihilated(" + std::to_string(N) + ")",
                   "no intertwiner L+(u) x L- -> L- x L+(u) fixes the top line", res.unknowns, res.top_forced_zero,
                   res.top_forced_zero ? detail : "top coefficient is not forced to zero; " + detail});
    SolveOptions co = solve_options(cfg);
    co.strategy = Strategy::Specialized;
    auto ctrl = solve_intertwiners(tensor(spectral_deform(lm), lm), tensor(lm, spectral_deform(lm)), co);
    rep.push_back({"negative:Lminus_Lminus_control(" + std::to_string(N) + ")",
                   "control: L-(u) x L- -> L- x L-(u) has intertwiners fixing the top line", ctrl.unknowns,
                   !ctrl.top_forced_zero,
                   ctrl.top_forced_zero ? "control unexpectedly forced" : ""});
    return rep;
}

}  // namespace

Report mutation_suite(int k)
{
    auto base = kr_module(k);
    Report rep;
    for (int r = 0; r < base.dim; ++r)
        for (int c = 0; c < base.dim; ++c) {
            auto m = base;
            m.E0(r, c) += Scalar(1);
            bool caught = !all_pass(check_relations(m));
            rep.push_back({"relations:kr" + std::to_string(k) + "_E0_mutation(" + std::to_string(r) + "," +
                               std::to_string(c) + ")",
                           "defining relations of U_q(b)", 1, caught, caught ? "" : "mutation not detected"});
        }
    return rep;
}

Report run_suite(const std::string& name, const SuiteConfig& cfg)
{
    static const std::map<std::string, Report (*)(const SuiteConfig&)> table = {
        {"relations", relations_suite}, {"rmatrix", rmatrix_suite}, {"stable", stable_suite},
        {"qchar", qchar_suite},         {"twist", twist_suite},     {"negative", negative_suite}};
    auto it = table.find(name);
    if (it == table.end()) throw ConfigError("unknown suite '" + name + "'");
    try {
        return it->second(cfg);
    } catch (const AllPointsSingular& e) {
        return {{name + ":solver", "specialization", 0, false, std::string("all points singular: ") + e.what()}};
    } catch (const std::exception& e) {
        return {{name + ":error", "", 0, false, e.what()}};
    }
}

Report run_suites(const SuiteConfig& cfg)
{
    validate(cfg);
    std::vector<std::string> names(cfg.suites.begin(), cfg.suites.end());
    Report all;
    for (std::size_t i = 0; i < names.size(); i += cfg.jobs) {
        std::vector<std::future<Report>> fs;
        for (std::size_t j = i; j < std::min(names.size(), i + cfg.jobs); ++j)
            fs.push_back(std::async(std::launch::async, [&cfg, n = names[j]] { return run_suite(n, cfg); }));
        for (auto& f : fs) append(all, f.get());
    }
    std::stable_sort(all.begin(), all.end(), [](const CheckResult& a, const CheckResult& b) { return a.check_id < b.check_id; });
    return all;
}

const std::set<std::string>& matrix_builders()
{
    static const std::set<std::string> s = {"rmat-kr",      "rmat-minus",  "rmat-plus", "rmat-plus-twist",
                                            "stable-minus", "stable-plus", "alpha",     "beta",
                                            "g-map",        "g-inf",       "universal-r"};
    return s;
}

const std::set<std::string>& qchar_builders()
{
    static const std::set<std::string> s = {"kr", "prefund-plus", "prefund-minus", "chi-prefund-plus"};
    return s;
}

Mat emit_matrix(const std::string& b, const BuildParams& p)
{
    if (b == "rmat-kr") return rmat_kr_explicit(p.k).map;
    if (b == "rmat-minus") return rmat_minus_explicit(p.trunc).map;
    if (b == "rmat-plus") return rmat_plus_explicit(p.trunc).map;
    if (b == "rmat-plus-twist") return rmat_plus_via_twist(p.trunc).map;
    if (b == "stable-minus") return stable_minus(p.trunc).S;
    if (b == "stable-plus") return stable_plus(p.trunc).S;
    if (b == "alpha") return stable_minus(p.trunc).diag;
    if (b == "beta") return stable_plus(p.trunc).diag;
    if (b == "g-map") return g_map_explicit(p.k, p.ell);
    if (b == "g-inf") return g_inf_explicit(p.k, p.trunc);
    if (b == "universal-r") {
        auto V = kr_module(p.k);
        return universal_r_truncated(V, V, p.u_order).map;
    }
    throw ConfigError("unknown matrix builder '" + b + "'");
}

QCharSeries emit_qchar(const std::string& b, const BuildParams& p)
{
    if (b == "kr") return qchar_kr(p.k, p.shift, p.depth);
    if (b == "prefund-plus") return qchar_prefund_plus(p.shift, p.depth);
    if (b == "prefund-minus") return qchar_prefund_minus(p.shift, p.depth);
    if (b == "chi-prefund-plus") return qchar_chi_prefund_plus(p.depth);
    throw ConfigError("unknown q-character builder '" + b + "'");
}

}  // namespace qloop
