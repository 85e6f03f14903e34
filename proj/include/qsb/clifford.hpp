#pragma once

#include "qsb/report.hpp"

#include <vector>

namespace qsb {

// Spin space basis: subsets I of {1..n} as bitmasks (bit i-1 <-> i), in
// increasing bitmask order.
struct CliffordCtx {
    int N = 0, n = 0;
    int eps = 1;            // meaningful for odd N only
    std::vector<int> rho2;  // rho2[i] = 2*rho_i, 0 <= i <= n

    static CliffordCtx make(int N, int eps = 1);
    bool type_b() const { return N % 2 == 1; }
    int dim() const { return 1 << n; }
    // n, ..., 1, (0), -1, ..., -n
    std::vector<int> vset() const;
    bool in_vset(int j) const;
    // q^{rho_j} for signed j, rho_{-i} = -rho_i
    Scalar q_rho(int j, int power = 1) const;
};

std::string subset_label(unsigned mask);

Mat classical_psi(const CliffordCtx& c, int j);
Mat omega_power(const CliffordCtx& c, int i, int k);
// omega_{>i}^k = prod_{j>i} omega_j^k, 0 <= i <= n
Mat omega_above(const CliffordCtx& c, int i, int k);
// psi_j = q^{rho_j} omega_{>|j|}^{-1} Psi_j
Mat quantum_psi(const CliffordCtx& c, int j);
// psi_j from the wedge/contraction formulas directly
Mat quantum_psi_direct(const CliffordCtx& c, int j);
Report verify_clifford(const CliffordCtx& c);
Mat barbell_op(const CliffordCtx& c);
Report restrict_check(int N, int eps = 1);

}  // namespace qsb
