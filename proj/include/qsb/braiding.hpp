#pragma once

#include "qsb/uqrep.hpp"

#include <stdexcept>

namespace qsb {

struct AmbiguityError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// T : A (x) B -> B (x) A
struct BraidOp {
    std::string src, dst;
    std::vector<std::string> dom, cod;
    Mat mat;
};

// Permutation a (x) b -> b (x) a.
Mat flip_mat(int da, int db);
// Coefficients of nu in the simple roots when nu is a nonzero sum of
// positive roots.
std::optional<std::vector<int>> positive_root_coeffs(const CartanData& c, const Weight& nu);

// Closed-form T_{V,V}. The cross term E_{-j,i} (x) E_{j,-i}, i < j, carries
// -(q - q^{-1}) Phi_V(v_i, v_{-i}) / Phi_V(v_j, v_{-j}).
BraidOp braid_VV(int N);
// Same sum with the cross-term factor (q+1)^{[i=0]-[j=0]} only; this matrix
// does not commute with e_1, f_1 on V (x) V.
BraidOp braid_VV_displayed(int N);
BraidOp braid_solve(int N, const ModuleSpec& A, const ModuleSpec& B);
// Memoized braid_solve over {S, V}; thread-safe.
const BraidOp& braid(int N, int eps, char a, char b);
const Mat& braid_inverse(int N, int eps, char a, char b);

Report verify_braiding(int N, int eps = 1);

}  // namespace qsb
