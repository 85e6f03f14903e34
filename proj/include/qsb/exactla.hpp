#pragma once

#include "qsb/scalar.hpp"

#include <string>
#include <vector>

namespace qsb {

struct DimensionError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};
struct SingularError : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct IncompleteSpectrumError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Dense row-major matrix over Scalar. 0 x m and m x 0 are legal.
class Mat {
public:
    Mat() = default;
    Mat(int rows, int cols) : r_(rows), c_(cols), e_(std::size_t(rows) * cols) {}
    static Mat identity(int n);
    static Mat diag(const std::vector<Scalar>& d);

    int rows() const { return r_; }
    int cols() const { return c_; }
    Scalar& operator()(int i, int j) { return e_[std::size_t(i) * c_ + j]; }
    const Scalar& operator()(int i, int j) const { return e_[std::size_t(i) * c_ + j]; }
    const std::vector<Scalar>& entries() const { return e_; }
    std::vector<Scalar>& entries() { return e_; }

    Mat transpose() const;
    Mat operator-() const;
    friend Mat operator+(const Mat& a, const Mat& b);
    friend Mat operator-(const Mat& a, const Mat& b);
    friend Mat operator*(const Scalar& s, const Mat& a);
    friend bool operator==(const Mat& a, const Mat& b);
    bool is_zero() const;

private:
    int r_ = 0, c_ = 0;
    std::vector<Scalar> e_;
};

Mat matmul(const Mat& a, const Mat& b);
Mat kron(const Mat& a, const Mat& b);
// Single-threaded references for the OpenMP kernels above.
Mat matmul_serial(const Mat& a, const Mat& b);
Mat kron_serial(const Mat& a, const Mat& b);

// Fraction-free (Bareiss) forward elimination; returns the rank and leaves
// the echelon form in `a`. Pivot: first nonzero entry scanning rows in order.
int bareiss_echelon(Mat& a, std::vector<int>* pivot_cols = nullptr);
int rank(const Mat& a);
Mat inverse(const Mat& a);
// Basis of {x : a x = 0} in reduced echelon form (free variable coordinate 1).
std::vector<std::vector<Scalar>> nullspace(const Mat& a);
std::vector<std::pair<Scalar, int>> eig_split(const Mat& a, const std::vector<Scalar>& candidates);

// Matrix whose domain and codomain bases carry tensor-word labels.
struct LabeledOp {
    std::vector<std::string> dom, cod;
    Mat mat;
};

// {rows, cols, entries: [scalar strings]}
std::string to_json(const Mat& m, int indent = -1);
Mat mat_from_json(const std::string& text);
std::string to_json(const LabeledOp& op, int indent = -1);
LabeledOp labeled_from_json(const std::string& text);

}  // namespace qsb
