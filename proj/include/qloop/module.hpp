#pragma once
// Matrix models of Borel modules for sl2-hat and the constructions on them.

#include <functional>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "qloop/matrix.hpp"
#include "qloop/report.hpp"

namespace qloop {

// q^(c_h/2) * prod_b (1 - b z)^{m_b}, with b a unit-coefficient monomial
struct SpectralWeight {
    int c_h = 0;
    std::map<Exp, int> f;

    SpectralWeight operator*(const SpectralWeight& o) const;
    bool operator==(const SpectralWeight& o) const { return c_h == o.c_h && f == o.f; }
    SpectralWeight deformed(const Exp& t) const;
    SpectralWeight q_inverted() const;
    // coefficients of z^0..z^order of the expansion at z = 0
    std::vector<Scalar> series(int order) const;
};

struct DrinfeldData {
    // x^+_{1,r}, x^-_{1,r}; throw MissingDrinfeldData where the action is not known
    std::function<Mat(int)> xplus, xminus;
    std::vector<SpectralWeight> phi;
};

struct ModuleModel {
    std::string label;
    int dim = 0;
    bool exact = true;
    int sign = 1;
    // smallest truncation bound of an infinite factor, -1 for finite modules
    int trunc = -1;
    std::vector<int> basis_index;
    // k_1 eigenvalue q^(weight_h/2) in the model's own variable q
    std::vector<int> weight_h;
    std::vector<int> depth;
    Mat E0, E1, K1;
    std::optional<Mat> F0, F1;
    std::shared_ptr<const DrinfeldData> drinfeld;
    // single-factor models check the index-shift support
    bool single_factor = true;

    Mat K1inv() const;
    const DrinfeldData& drinfeld_data() const;
};

// (q^s - q^{-s}) for s = sign
Scalar q_diff(int sign);

ModuleModel kr_module(int k, int shift_exp = 0, int sign = 1);
ModuleModel prefund_plus(int shift_exp, int trunc, int sign = 1);
ModuleModel prefund_minus(int shift_exp, int trunc, int sign = 1);
// weight_h in half units: K1 = q^(weight_h/2)
ModuleModel invertible_module(int weight_h);

ModuleModel tensor(const ModuleModel& m, const ModuleModel& n);
// V(t): E0 -> t E0, x^±_r -> t^r x^±_r, Psi(z) -> Psi(tz) for a monomial t
ModuleModel spectral_deform(const ModuleModel& m, const Exp& t);
inline ModuleModel spectral_deform(const ModuleModel& m, int u_exp = 1)
{
    return spectral_deform(m, Exp{0, u_exp, 0, 0});
}
ModuleModel twist(const ModuleModel& m);
ModuleModel twist_inverse(const ModuleModel& m);

Report check_relations(const ModuleModel& m);
// D^{-1} F(L-) D = L+ with shift -2, D = diag((-1)^j q^{j(j-1)}), L- over q^{-1}
Report check_twist_prefund(int trunc);
// flip: F(M x N) -> F(N) x F(M); M, N over q^{-1}
Report check_tensor_reversal(const ModuleModel& m, const ModuleModel& n);
// [x^+_0, x^-_1] against phi_1 read from the stored weights
CheckResult check_drinfeld_consistency(const ModuleModel& m);

std::vector<Scalar> h_eigenvalues(const ModuleModel& m, int j, int order);
// h_{1,-m} for m = 1..order from the expansion at infinity
std::vector<Scalar> h_eigenvalues_neg(const ModuleModel& m, int j, int order);

}  // namespace qloop
