#pragma once
// Stable maps on products of prefundamental modules and the R-matrix factorization.

#include "qloop/rmatrix.hpp"

namespace qloop {

struct FactorizationBundle {
    Mat S, S_inv;
    // alpha(u) for the minus case, beta(u) for the plus case
    Mat diag;
    Mat flip;
    // stable map with swapped factors at u^{-1}
    Mat target_S;
    ModuleModel first, second;
    int trunc = 0;
    bool plus = false;
};

FactorizationBundle stable_minus(int trunc);
FactorizationBundle stable_plus(int trunc);

// target_S . flip . diag . S_inv against R on the safe window
Report check_factorization(const FactorizationBundle& b, const RMatrix& R);
Report check_factorization(const FactorizationBundle& b, const Mat& R);

enum class TriangularOrder {
    // off-diagonal terms lower the first-factor weight
    Minus,
    // off-diagonal terms raise it
    Plus,
};

Report check_triangularity(const Mat& S, const ModuleModel& first, const ModuleModel& second, TriangularOrder order);

// phi^+_r action of a product and the diagonal it should be conjugated to
struct DrinfeldTarget {
    std::string label;
    std::vector<Mat> phi;
    std::vector<Mat> expected;
};

// phi_r from the Chevalley action: x^-_1 = K E0, phi_1 = (q^s - q^-s)[E1, x^-_1], x^+_r = [h_1, x^+_{r-1}]/(q^s + q^-s)
std::vector<Mat> phi_from_chevalley(const ModuleModel& m, int order);

// L-(u) (x) L-, expected entries Psi_i(zu) Psi_j(z)
DrinfeldTarget drinfeld_target_minus(int trunc, int order);
// action transported from L-(u) (x) L- at q^{-1} through the flip and the twist basis change
DrinfeldTarget drinfeld_target_plus(int trunc, int order);

// phi_r S = S expected_r on the automatic window, for r = 0..order
Report check_drinfeld_linearity(const Mat& S, const DrinfeldTarget& t);

}  // namespace qloop
