#include "qloop/json_io.hpp"

#include <sstream>

namespace qloop {

json poly_to_json(const QPoly& p)
{
    json out = json::array();
    for (const auto& t : p.terms()) out.push_back({t.c.get_str(), {t.e[0], t.e[1], t.e[2], t.e[3]}});
    return out;
}

QPoly poly_from_json(const json& j)
{
    QPoly p;
    for (const auto& t : j) {
        mpq_class c(t.at(0).get<std::string>());
        c.canonicalize();
        const auto& e = t.at(1);
        p = p + QPoly::monomial(c, Exp{e.at(0).get<int>(), e.at(1).get<int>(), e.at(2).get<int>(), e.at(3).get<int>()});
    }
    return p;
}

json to_json(const Scalar& s) { return {{"num", poly_to_json(s.num())}, {"den", poly_to_json(s.den())}, {"text", s.str()}}; }

Scalar scalar_from_json(const json& j) { return Scalar::fraction(poly_from_json(j.at("num")), poly_from_json(j.at("den"))); }

json to_json(const Mat& m)
{
    json e = json::array();
    for (int r = 0; r < m.rows(); ++r)
        for (int c = 0; c < m.cols(); ++c)
            if (!m(r, c).is_zero()) e.push_back({r, c, to_json(m(r, c))});
    return {{"rows", m.rows()}, {"cols", m.cols()}, {"safe_columns", m.safe_columns()}, {"entries", e}};
}

json to_json(const ModuleModel& m)
{
    return {{"label", m.label},   {"dim", m.dim},       {"exact", m.exact},   {"sign", m.sign},
            {"trunc", m.trunc},   {"weight_h", m.weight_h}, {"depth", m.depth}, {"E0", to_json(m.E0)},
            {"E1", to_json(m.E1)}, {"K1", to_json(m.K1)}};
}

json to_json(const EllWeight& w)
{
    json f = json::array();
    for (const auto& [s, m] : w.factors) f.push_back({s, m});
    return {{"c_half", w.c}, {"factors", f}, {"inverted_marker", w.inverted_marker}, {"text", w.str()}};
}

json to_json(const QCharSeries& s)
{
    json t = json::array();
    for (const auto& [w, m] : s.terms) t.push_back({{"weight", to_json(w)}, {"mult", m}, {"depth", s.depth_of(w)}});
    return {{"top", to_json(s.top)}, {"depth_bound", s.depth_bound}, {"sign", s.sign}, {"terms", t}};
}

json to_json(const CheckResult& c)
{
    return {{"check_id", c.check_id},
            {"paper_anchor", c.anchor},
            {"window", c.window},
            {"status", c.pass ? "PASS" : "FAIL"},
            {"detail", c.detail}};
}

json to_json(const Report& r)
{
    json a = json::array();
    for (const auto& c : r) a.push_back(to_json(c));
    return a;
}

namespace {

std::string csv_field(const std::string& s)
{
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string out = "\"";
    for (char ch : s) {
        if (ch == '"') out += '"';
        out += ch;
    }
    return out + "\"";
}

}  // namespace

std::string to_csv(const Mat& m)
{
    std::ostringstream os;
    os << "row,col,value\n";
    for (int r = 0; r < m.rows(); ++r)
        for (int c = 0; c < m.cols(); ++c)
            if (!m(r, c).is_zero()) os << r << "," << c << "," << csv_field(m(r, c).str()) << "\n";
    return os.str();
}

std::string to_csv(const QCharSeries& s)
{
    std::ostringstream os;
    os << "depth,mult,weight\n";
    for (const auto& [w, m] : s.terms) os << s.depth_of(w) << "," << m << "," << csv_field(w.str()) << "\n";
    return os.str();
}

std::string to_csv(const Report& r)
{
    std::ostringstream os;
    os << "check_id,paper_anchor,window,status,detail\n";
    for (const auto& c : r)
        os << csv_field(c.check_id) << "," << csv_field(c.anchor) << "," << c.window << "," << (c.pass ? "PASS" : "FAIL")
           << "," << csv_field(c.detail) << "\n";
    return os.str();
}

std::string pole_scan_csv(const std::vector<int>& exps)
{
    std::ostringstream os;
    os << "exponent\n";
    for (int e : exps) os << e << "\n";
    return os.str();
}

std::string to_text(const Mat& m)
{
    std::ostringstream os;
    os << m.rows() << "x" << m.cols() << " matrix, " << m.nonzeros() << " nonzero entries\n";
    for (int r = 0; r < m.rows(); ++r)
        for (int c = 0; c < m.cols(); ++c)
            if (!m(r, c).is_zero()) os << "[" << r << "," << c << "] " << m(r, c).str() << "\n";
    return os.str();
}

std::string to_text(const Report& r)
{
    std::ostringstream os;
    for (const auto& c : r) {
        os << (c.pass ? "PASS " : "FAIL ") << c.check_id << "  window=" << c.window << "  (" << c.anchor << ")";
        if (!c.detail.empty()) os << "  " << c.detail;
        os << "\n";
    }
    return os.str();
}

}  // namespace qloop
