#include "doctest.h"
#include "qloop/stable.hpp"

using namespace qloop;

namespace {

bool passes(const Report& rep)
{
    for (const auto& c : rep) {
        INFO(c.check_id << " window " << c.window << " " << c.detail);
        CHECK(c.pass);
    }
    return all_pass(rep);
}

bool any_fail(const Report& rep)
{
    for (const auto& c : rep)
        if (!c.pass) return true;
    return false;
}

Mat window_identity(const Mat& like)
{
    Mat I = Mat::identity(like.cols());
    for (int c = 0; c < like.cols(); ++c) I.set_safe(c, like.safe(c));
    return I;
}

}  // namespace

TEST_CASE("stable maps fix the boundary vectors")
{
    const int N = 5, n = N + 1;
    auto m = stable_minus(N);
    for (int i = 0; i < n; ++i)
        for (int r = 0; r < n * n; ++r) CHECK(m.S(r, i * n) == Scalar(r == i * n ? 1 : 0));
    CHECK(m.diag(0, 0) == Scalar(1));
    auto p = stable_plus(N);
    for (int j = 0; j < n; ++j)
        for (int r = 0; r < n * n; ++r) CHECK(p.S(r, j) == Scalar(r == j ? 1 : 0));
    CHECK(p.diag(0, 0) == Scalar(1));
    CHECK_THROWS(stable_minus(0));
}

TEST_CASE("stable maps and their inverses")
{
    for (auto b : {stable_minus(6), stable_plus(6)}) {
        auto c = compare_on_window(b.S * b.S_inv, window_identity(b.S));
        INFO(c.summary());
        CHECK(c.ok());
        CHECK(c.window == 28);
        Mat inv = b.S.inverse();
        for (int col = 0; col < inv.cols(); ++col) inv.set_safe(col, b.S.safe(col));
        CHECK(compare_on_window(inv, b.S_inv).ok());
        for (int k = 0; k < b.diag.rows(); ++k) CHECK(!b.diag(k, k).is_zero());
        CHECK(b.diag.is_diagonal());
    }
}

TEST_CASE("alpha on the diagonal")
{
    auto b = stable_minus(4);
    const int n = 5;
    const Scalar u = Scalar::u();
    for (int i = 0; i < n; ++i) {
        Scalar want = Scalar(i % 2 ? -1 : 1) * u.pow(-i);
        for (int s = 1; s <= i; ++s) want *= q_number_spectral(i - s + 1) / q_number_spectral(s - i - 1);
        CHECK(b.diag(i * n + i, i * n + i) == want);
        CHECK(b.diag(i * n + i, i * n + i).num().degree_span(U) == b.diag(i * n + i, i * n + i).den().degree_span(U));
    }
}

TEST_CASE("factorization of the affine R-matrices")
{
    for (int N : {4, 6}) {
        CHECK(passes(check_factorization(stable_minus(N), rmat_minus_explicit(N))));
        CHECK(passes(check_factorization(stable_plus(N), rmat_plus_explicit(N))));
    }
    auto b = stable_minus(6);
    b.diag = Mat::identity(b.diag.rows());
    CHECK(any_fail(check_factorization(b, rmat_minus_explicit(6))));
    auto p = stable_plus(6);
    p.diag = Mat::identity(p.diag.rows());
    CHECK(any_fail(check_factorization(p, rmat_plus_explicit(6))));
}

TEST_CASE("triangularity")
{
    auto m = stable_minus(6);
    CHECK(passes(check_triangularity(m.S, m.first, m.second, TriangularOrder::Minus)));
    CHECK(passes(check_triangularity(m.S_inv, m.first, m.second, TriangularOrder::Minus)));
    CHECK(any_fail(check_triangularity(m.S, m.first, m.second, TriangularOrder::Plus)));
    auto p = stable_plus(6);
    CHECK(passes(check_triangularity(p.S, p.first, p.second, TriangularOrder::Plus)));
    CHECK(passes(check_triangularity(Mat::identity(49), m.first, m.second, TriangularOrder::Minus)));
    CHECK(any_fail(check_triangularity(m.flip, m.first, m.second, TriangularOrder::Minus)));
}

TEST_CASE("phi from the Chevalley action matches stored l-weights")
{
    for (const auto& M : {kr_module(1), kr_module(2, 1), prefund_minus(0, 6)}) {
        auto ph = phi_from_chevalley(M, 3);
        std::vector<std::vector<Scalar>> want;
        for (const auto& w : M.drinfeld_data().phi) want.push_back(w.series(3));
        for (int r = 0; r <= 3; ++r) {
            std::vector<Scalar> d;
            for (const auto& w : want) d.push_back(w[r]);
            auto c = compare_on_window(ph[r], Mat::diagonal(d));
            INFO(M.label << " r=" << r << " " << c.summary());
            CHECK(c.ok());
            CHECK(c.window > 0);
        }
    }
}

TEST_CASE("Drinfeld linearity of the stable maps")
{
    auto tm = drinfeld_target_minus(6, 3);
    CHECK(passes(check_drinfeld_linearity(stable_minus(6).S, tm)));
    CHECK(any_fail(check_drinfeld_linearity(Mat::identity(49), tm)));
    auto tp = drinfeld_target_plus(6, 3);
    CHECK(passes(check_drinfeld_linearity(stable_plus(6).S, tp)));
    CHECK(any_fail(check_drinfeld_linearity(Mat::identity(49), tp)));
    auto small = drinfeld_target_minus(4, 3);
    CHECK(passes(check_drinfeld_linearity(stable_minus(4).S, small)));
}
