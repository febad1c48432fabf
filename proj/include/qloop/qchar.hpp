#pragma once
// l-weights of sl2-hat and truncated q-character series.

#include <map>
#include <string>
#include <vector>

#include "qloop/module.hpp"
#include "qloop/report.hpp"

namespace qloop {

// q^(c/2) * prod_s (1 - b q^s z)^{m_s}, b = a or a^{-1} (marker)
struct EllWeight {
    int c = 0;
    std::map<int, int> factors;
    bool inverted_marker = false;

    EllWeight operator*(const EllWeight& o) const;
    EllWeight inverse() const;
    EllWeight pow(int n) const;
    bool is_identity() const { return c == 0 && factors.empty(); }
    // the same expression read at q^{-1}: (-c, {-s: m}, marker)
    EllWeight q_inverted() const;
    auto operator<=>(const EllWeight&) const = default;
    std::string str() const;
};

enum class EllKind { Psi, Y, A, AlphaBar, OmegaBar };

// sign -1 builds the generator over q^{-1}: literal parameter a q^{-shift}
EllWeight ellweight_basic(EllKind kind, int shift = 0, int power = 1, int sign = 1);

struct QCharSeries {
    EllWeight top;
    // signed after linear combinations; positive from the builders
    std::map<EllWeight, long> terms;
    int depth_bound = 0;
    // +1: terms descend by alpha_bar = q^2; -1: by q^{-2} (characters over q^{-1})
    int sign = 1;

    // number of alpha_bar steps below top
    int depth_of(const EllWeight& w) const;
    long total_multiplicity() const;
    std::size_t size() const { return terms.size(); }
    std::string str() const;
};

QCharSeries qchar_kr(int k, int shift, int depth, int sign = 1);
QCharSeries qchar_prefund_plus(int shift, int depth);
QCharSeries qchar_prefund_minus(int shift, int depth);
// ordinary character of L+ embedded as constant l-weights
QCharSeries qchar_chi_prefund_plus(int depth);
QCharSeries qchar_from_module(const ModuleModel& m, int depth);
QCharSeries qchar_constant(const EllWeight& w, int depth);

QCharSeries series_mul(const QCharSeries& x, const QCharSeries& y, int depth);
// sum of coef * series, truncated at depth relative to ref
QCharSeries series_combine(const std::vector<std::pair<long, QCharSeries>>& parts, const EllWeight& ref, int depth);
// divide every term by the top
QCharSeries normalized(const QCharSeries& x);
// -1 if equal, else the smallest depth where they differ
int first_difference(const QCharSeries& x, const QCharSeries& y);

Report check_wronskian(int depth, bool perturb = false);
Report check_qq_dual(int depth, bool perturb = false);
Report check_baxter_qt(int depth, bool drop_term = false);

EllWeight iq_involution(const EllWeight& w);
QCharSeries iq_involution(const QCharSeries& x);
Report check_iq_kr(int k, int depth, bool marker_mismatch = false);

}  // namespace qloop
