#pragma once
// Dense Scalar matrices carrying a per-column validity window.

#include <functional>
#include <string>
#include <vector>

#include "qloop/scalar.hpp"

namespace qloop {

class Mat {
public:
    Mat() = default;
    Mat(int rows, int cols) : r_(rows), c_(cols), a_(std::size_t(rows) * cols), safe_(cols, 1) {}
    static Mat identity(int n);
    static Mat diagonal(const std::vector<Scalar>& d);
    // P(e_i ⊗ e_j) = e_j ⊗ e_i, source dims (da, db)
    static Mat flip(int da, int db);

    int rows() const { return r_; }
    int cols() const { return c_; }
    const Scalar& operator()(int i, int j) const { return a_[std::size_t(i) * c_ + j]; }
    Scalar& operator()(int i, int j) { return a_[std::size_t(i) * c_ + j]; }

    bool safe(int c) const { return safe_[c] != 0; }
    void set_safe(int c, bool s) { safe_[c] = s ? 1 : 0; }
    void mark_all_safe() { std::fill(safe_.begin(), safe_.end(), 1); }
    int safe_count() const;
    std::vector<int> safe_columns() const;

    Mat operator*(const Mat& o) const;
    Mat operator+(const Mat& o) const;
    Mat operator-(const Mat& o) const;
    Mat operator-() const { return scaled(Scalar(-1)); }
    Mat scaled(const Scalar& s) const;
    Mat map(const std::function<Scalar(const Scalar&)>& f) const;
    Mat invert_var(Var x) const
    {
        return map([x](const Scalar& s) { return s.invert_var(x); });
    }
    Mat substitute(Var x, const Exp& img) const
    {
        return map([&](const Scalar& s) { return s.substitute(x, img); });
    }

    bool is_zero() const;
    bool is_diagonal() const;
    int nonzeros() const;

    // exact inverse by Gauss-Jordan; throws on singular
    Mat inverse() const;

private:
    int r_ = 0, c_ = 0;
    std::vector<Scalar> a_;
    std::vector<char> safe_;
};

Mat kron(const Mat& a, const Mat& b);

struct Mismatch {
    int row, col;
    Scalar lhs, rhs;
};

struct Comparison {
    std::size_t mismatches = 0;
    int window = 0;
    std::vector<Mismatch> sample;
    bool ok() const { return mismatches == 0; }
    std::string summary() const;
};

// entrywise comparison on columns safe in both operands
Comparison compare_on_window(const Mat& x, const Mat& y, std::size_t max_sample = 3);

}  // namespace qloop
