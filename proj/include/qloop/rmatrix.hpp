#pragma once
// R-matrices V(u) ⊗ W -> W ⊗ V(u) for sl2-hat Borel modules.

#include <string>
#include <vector>

#include "qloop/module.hpp"
#include "qloop/solve.hpp"

namespace qloop {

struct RMatrix {
    std::string label;
    Mat map;
    ModuleModel source, target;
    // the map has been divided by this scalar so that top ⊗ top is fixed
    Scalar normalization = Scalar(1);
};

RMatrix rmat_kr_explicit(int k);

enum class ComponentOrder {
    // R^+ R^0 R^- R^inf, exp_q in both root factors
    Working,
    // R^- R^0 R^+ R^inf with exp_{q^-1} in R^-, kept for comparison; does not intertwine
    Displayed,
};

RMatrix universal_r_truncated(const ModuleModel& V, const ModuleModel& W, int u_order,
                              ComponentOrder order = ComponentOrder::Working);
// q^{-(nu,omega)} on weight vectors of V ⊗ W, before flip or normalization
Mat r_infinity(const ModuleModel& V, const ModuleModel& W);

// kr(k)(u) ⊗ kr(k) -> kr(ell)(u) ⊗ kr(ell)
Mat g_map_explicit(int k, int ell);
// kr(k)(u) ⊗ kr(k) -> L-(u) ⊗ L- truncated at trunc
Mat g_inf_explicit(int k, int trunc);

RMatrix rmat_minus_explicit(int trunc);
RMatrix rmat_plus_explicit(int trunc);
RMatrix rmat_plus_via_twist(int trunc);

// d_i d_j with d_j = (-1)^j q^{j(j-1)}, on the truncated two-factor basis
Mat twist_basis_change(int trunc);

Report check_intertwining(const RMatrix& R);

// two-parameter braid relation for kr(k1), kr(k2), kr(k3); control replaces R_{12}(u) by the identity
Report check_yang_baxter(int k1, int k2, int k3, const SolveOptions& opt, bool control_identity = false);

// exponents s with a denominator vanishing at u = q^s
std::vector<int> pole_scan(const Mat& m);
inline std::vector<int> pole_scan(const RMatrix& R) { return pole_scan(R.map); }
// poles of R^{-1}(u) = R(u^{-1}) for V = W
std::vector<int> pole_scan_inverse(const RMatrix& R);

// coefficientwise comparison of u-expansions through the given order
Comparison compare_series(const Mat& x, const Mat& y, int order);

// unique normalized intertwiner kr(k1)(u) ⊗ kr(k2) -> kr(k2) ⊗ kr(k1)(u) from the exact solver
RMatrix rmat_kr_by_solver(int k1, int k2);

}  // namespace qloop
