#include "qsb/exactla.hpp"

#include <omp.h>

namespace qsb {

Mat Mat::identity(int n) {
    Mat m(n, n);
    for (int i = 0; i < n; ++i) m(i, i) = Scalar(1);
    return m;
}

Mat Mat::diag(const std::vector<Scalar>& d) {
    Mat m(int(d.size()), int(d.size()));
    for (std::size_t i = 0; i < d.size(); ++i) m(int(i), int(i)) = d[i];
    return m;
}

Mat Mat::transpose() const {
    Mat t(c_, r_);
    for (int i = 0; i < r_; ++i)
        for (int j = 0; j < c_; ++j) t(j, i) = (*this)(i, j);
    return t;
}

Mat Mat::operator-() const {
    Mat m = *this;
    for (auto& x : m.e_) x = -x;
    return m;
}

Mat operator+(const Mat& a, const Mat& b) {
    if (a.r_ != b.r_ || a.c_ != b.c_) throw DimensionError("matrix sum shape mismatch");
    Mat m = a;
    for (std::size_t k = 0; k < m.e_.size(); ++k) m.e_[k] += b.e_[k];
    return m;
}

Mat operator-(const Mat& a, const Mat& b) { return a + (-b); }

Mat operator*(const Scalar& s, const Mat& a) {
    Mat m = a;
    for (auto& x : m.e_) x = s * x;
    return m;
}

bool operator==(const Mat& a, const Mat& b) { return a.r_ == b.r_ && a.c_ == b.c_ && a.e_ == b.e_; }

bool Mat::is_zero() const {
    for (const auto& x : e_)
        if (!x.is_zero()) return false;
    return true;
}

namespace {

void matmul_row(const Mat& a, const Mat& b, Mat& c, int i) {
    for (int k = 0; k < a.cols(); ++k) {
        const Scalar& x = a(i, k);
        if (x.is_zero()) continue;
        for (int j = 0; j < b.cols(); ++j)
            if (!b(k, j).is_zero()) c(i, j) += x * b(k, j);
    }
}

void kron_row(const Mat& a, const Mat& b, Mat& c, int row) {
    int i = row / b.rows(), k = row % b.rows();
    for (int j = 0; j < a.cols(); ++j) {
        const Scalar& x = a(i, j);
        if (x.is_zero()) continue;
        for (int l = 0; l < b.cols(); ++l)
            if (!b(k, l).is_zero()) c(row, j * b.cols() + l) = x * b(k, l);
    }
}

}  // namespace

Mat matmul_serial(const Mat& a, const Mat& b) {
    if (a.cols() != b.rows()) throw DimensionError("matmul dimension mismatch");
    Mat c(a.rows(), b.cols());
    for (int i = 0; i < a.rows(); ++i) matmul_row(a, b, c, i);
    return c;
}

Mat matmul(const Mat& a, const Mat& b) {
    if (a.cols() != b.rows()) throw DimensionError("matmul dimension mismatch");
    Mat c(a.rows(), b.cols());
#pragma omp parallel for schedule(dynamic)
    for (int i = 0; i < a.rows(); ++i) matmul_row(a, b, c, i);
    return c;
}

Mat kron_serial(const Mat& a, const Mat& b) {
    Mat c(a.rows() * b.rows(), a.cols() * b.cols());
    for (int r = 0; r < c.rows(); ++r) kron_row(a, b, c, r);
    return c;
}

Mat kron(const Mat& a, const Mat& b) {
    Mat c(a.rows() * b.rows(), a.cols() * b.cols());
#pragma omp parallel for schedule(dynamic)
    for (int r = 0; r < c.rows(); ++r) kron_row(a, b, c, r);
    return c;
}

int bareiss_echelon(Mat& a, std::vector<int>* pivot_cols) {
    int m = a.rows(), n = a.cols(), r = 0;
    Scalar prev(1);
    for (int c = 0; c < n && r < m; ++c) {
        int p = r;
        while (p < m && a(p, c).is_zero()) ++p;
        if (p == m) continue;
        if (p != r)
            for (int j = 0; j < n; ++j) std::swap(a(p, j), a(r, j));
        const Scalar piv = a(r, c);
        for (int i = r + 1; i < m; ++i) {
            Scalar lead = a(i, c);
            for (int j = c + 1; j < n; ++j) {
                Scalar v = piv * a(i, j);
                if (!lead.is_zero() && !a(r, j).is_zero()) v -= lead * a(r, j);
                a(i, j) = prev.is_one() ? v : v / prev;
            }
            a(i, c) = Scalar();
        }
        prev = piv;
        if (pivot_cols) pivot_cols->push_back(c);
        ++r;
    }
    return r;
}

int rank(const Mat& a) {
    Mat w = a;
    return bareiss_echelon(w);
}

namespace {

// Reduced row echelon form over the field; returns pivot columns.
std::vector<int> rref(Mat& a) {
    std::vector<int> piv;
    int r = bareiss_echelon(a, &piv);
    for (int i = r - 1; i >= 0; --i) {
        int c = piv[i];
        Scalar inv = a(i, c).inv();
        for (int j = c; j < a.cols(); ++j)
            if (!a(i, j).is_zero()) a(i, j) *= inv;
        for (int k = 0; k < i; ++k) {
            Scalar f = a(k, c);
            if (f.is_zero()) continue;
            for (int j = c; j < a.cols(); ++j)
                if (!a(i, j).is_zero()) a(k, j) -= f * a(i, j);
        }
    }
    return piv;
}

}  // namespace

Mat inverse(const Mat& a) {
    if (a.rows() != a.cols()) throw DimensionError("inverse of non-square matrix");
    int n = a.rows();
    Mat w(n, 2 * n);
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) w(i, j) = a(i, j);
        w(i, n + i) = Scalar(1);
    }
    auto piv = rref(w);
    if (int(piv.size()) < n || (n > 0 && piv[n - 1] != n - 1)) throw SingularError("matrix is singular");
    Mat inv(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) inv(i, j) = w(i, n + j);
    return inv;
}

std::vector<std::vector<Scalar>> nullspace(const Mat& a) {
    Mat w = a;
    auto piv = rref(w);
    std::vector<bool> is_piv(a.cols(), false);
    for (int c : piv) is_piv[c] = true;
    std::vector<std::vector<Scalar>> basis;
    for (int f = 0; f < a.cols(); ++f) {
        if (is_piv[f]) continue;
        std::vector<Scalar> v(a.cols());
        v[f] = Scalar(1);
        for (std::size_t i = 0; i < piv.size(); ++i) v[piv[i]] = -w(int(i), f);
        basis.push_back(std::move(v));
    }
    return basis;
}

std::vector<std::pair<Scalar, int>> eig_split(const Mat& a, const std::vector<Scalar>& candidates) {
    if (a.rows() != a.cols()) throw DimensionError("eig_split of non-square matrix");
    std::vector<std::pair<Scalar, int>> out;
    int total = 0;
    for (const auto& lam : candidates) {
        Mat s = a;
        for (int i = 0; i < a.rows(); ++i) s(i, i) -= lam;
        int d = a.rows() - rank(s);
        out.emplace_back(lam, d);
        total += d;
    }
    if (total != a.rows())
        throw IncompleteSpectrumError("eigenspace dimensions sum to " + std::to_string(total) + ", expected " +
                                      std::to_string(a.rows()));
    return out;
}

}  // namespace qsb
