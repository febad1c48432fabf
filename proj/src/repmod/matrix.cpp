#include "qloop/matrix.hpp"

#include <sstream>
#include <stdexcept>

namespace qloop {

Mat Mat::identity(int n)
{
    Mat m(n, n);
    for (int i = 0; i < n; ++i) m(i, i) = Scalar(1);
    return m;
}

Mat Mat::diagonal(const std::vector<Scalar>& d)
{
    int n = int(d.size());
    Mat m(n, n);
    for (int i = 0; i < n; ++i) m(i, i) = d[i];
    return m;
}

Mat Mat::flip(int da, int db)
{
    Mat m(da * db, da * db);
    for (int i = 0; i < da; ++i)
        for (int j = 0; j < db; ++j) m(j * da + i, i * db + j) = Scalar(1);
    return m;
}

int Mat::safe_count() const
{
    int n = 0;
    for (char s : safe_) n += s;
    return n;
}

std::vector<int> Mat::safe_columns() const
{
    std::vector<int> v;
    for (int c = 0; c < c_; ++c)
        if (safe_[c]) v.push_back(c);
    return v;
}

Mat Mat::operator*(const Mat& o) const
{
    if (c_ != o.r_) throw std::invalid_argument("matrix shape mismatch in product");
    Mat m(r_, o.c_);
    // nonzero pattern of our columns
    std::vector<std::vector<int>> nz(c_);
    for (int i = 0; i < r_; ++i)
        for (int k = 0; k < c_; ++k)
            if (!(*this)(i, k).is_zero()) nz[k].push_back(i);
    for (int j = 0; j < o.c_; ++j) {
        bool ok = o.safe(j);
        for (int k = 0; k < c_; ++k) {
            const Scalar& b = o(k, j);
            if (b.is_zero()) continue;
            if (!safe(k)) ok = false;
            for (int i : nz[k]) m(i, j) += (*this)(i, k) * b;
        }
        m.set_safe(j, ok);
    }
    return m;
}

Mat Mat::operator+(const Mat& o) const
{
    if (r_ != o.r_ || c_ != o.c_) throw std::invalid_argument("matrix shape mismatch in sum");
    Mat m = *this;
    for (std::size_t k = 0; k < a_.size(); ++k)
        if (!o.a_[k].is_zero()) m.a_[k] += o.a_[k];
    for (int c = 0; c < c_; ++c) m.safe_[c] = safe_[c] && o.safe_[c];
    return m;
}

Mat Mat::operator-(const Mat& o) const { return *this + (-o); }

Mat Mat::scaled(const Scalar& s) const
{
    Mat m = *this;
    for (auto& x : m.a_)
        if (!x.is_zero()) x *= s;
    return m;
}

Mat Mat::map(const std::function<Scalar(const Scalar&)>& f) const
{
    Mat m = *this;
    for (auto& x : m.a_)
        if (!x.is_zero()) x = f(x);
    return m;
}

bool Mat::is_zero() const
{
    for (const auto& x : a_)
        if (!x.is_zero()) return false;
    return true;
}

bool Mat::is_diagonal() const
{
    for (int i = 0; i < r_; ++i)
        for (int j = 0; j < c_; ++j)
            if (i != j && !(*this)(i, j).is_zero()) return false;
    return true;
}

int Mat::nonzeros() const
{
    int n = 0;
    for (const auto& x : a_) n += !x.is_zero();
    return n;
}

Mat Mat::inverse() const
{
    if (r_ != c_) throw std::invalid_argument("inverse of non-square matrix");
    int n = r_;
    Mat a = *this, b = identity(n);
    for (int col = 0; col < n; ++col) {
        int piv = -1;
        std::size_t best = 0;
        for (int i = col; i < n; ++i) {
            const Scalar& x = a(i, col);
            if (x.is_zero()) continue;
            std::size_t w = x.num().size() + x.den().size();
            if (piv < 0 || w < best) {
                piv = i;
                best = w;
            }
        }
        if (piv < 0) throw std::domain_error("singular matrix");
        if (piv != col)
            for (int j = 0; j < n; ++j) {
                std::swap(a(piv, j), a(col, j));
                std::swap(b(piv, j), b(col, j));
            }
        Scalar inv = a(col, col).inverse();
        for (int j = 0; j < n; ++j) {
            if (!a(col, j).is_zero()) a(col, j) *= inv;
            if (!b(col, j).is_zero()) b(col, j) *= inv;
        }
        for (int i = 0; i < n; ++i) {
            if (i == col || a(i, col).is_zero()) continue;
            Scalar f = a(i, col);
            for (int j = 0; j < n; ++j) {
                if (!a(col, j).is_zero()) a(i, j) -= f * a(col, j);
                if (!b(col, j).is_zero()) b(i, j) -= f * b(col, j);
            }
        }
    }
    b.safe_ = safe_;
    return b;
}

Mat kron(const Mat& a, const Mat& b)
{
    Mat m(a.rows() * b.rows(), a.cols() * b.cols());
    for (int i = 0; i < a.rows(); ++i)
        for (int k = 0; k < a.cols(); ++k) {
            const Scalar& x = a(i, k);
            if (x.is_zero()) continue;
            for (int j = 0; j < b.rows(); ++j)
                for (int l = 0; l < b.cols(); ++l) {
                    const Scalar& y = b(j, l);
                    if (!y.is_zero()) m(i * b.rows() + j, k * b.cols() + l) = x * y;
                }
        }
    for (int k = 0; k < a.cols(); ++k)
        for (int l = 0; l < b.cols(); ++l) m.set_safe(k * b.cols() + l, a.safe(k) && b.safe(l));
    return m;
}

Comparison compare_on_window(const Mat& x, const Mat& y, std::size_t max_sample)
{
    if (x.rows() != y.rows() || x.cols() != y.cols()) throw std::invalid_argument("shape mismatch in compare");
    Comparison out;
    for (int c = 0; c < x.cols(); ++c) {
        if (!x.safe(c) || !y.safe(c)) continue;
        ++out.window;
        for (int r = 0; r < x.rows(); ++r)
            if (x(r, c) != y(r, c)) {
                if (out.sample.size() < max_sample) out.sample.push_back({r, c, x(r, c), y(r, c)});
                ++out.mismatches;
            }
    }
    return out;
}

std::string Comparison::summary() const
{
    std::ostringstream os;
    os << mismatches << " mismatches on " << window << " columns";
    if (!sample.empty()) {
        const auto& m = sample.front();
        os << "; first at (" << m.row << "," << m.col << "): " << m.lhs.str() << " vs " << m.rhs.str();
    }
    return os.str();
}

}  // namespace qloop
