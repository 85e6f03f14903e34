#include "qsb/clifford.hpp"

#include <doctest.h>

using namespace qsb;

namespace {

Scalar q(int k) { return Scalar::q_pow(k); }

// Column of m at basis vector x.
Mat apply(const Mat& m, int x) {
    Mat v(m.cols(), 1);
    v(x, 0) = Scalar(1);
    return matmul(m, v);
}

Mat unit(int d, int x, const Scalar& c = Scalar(1)) {
    Mat v(d, 1);
    v(x, 0) = c;
    return v;
}

}  // namespace

TEST_SUITE("clifford") {
    TEST_CASE("classical wedge and contraction") {
        CliffordCtx c = CliffordCtx::make(4);
        int d = c.dim();
        CHECK(apply(classical_psi(c, -1), 0) == unit(d, 0b01));
        CHECK(apply(classical_psi(c, 1), 0).is_zero());
        // x_{2,1} = Psi_2^+ ^ Psi_1^+ is already in descending order
        CHECK(apply(classical_psi(c, -2), 0b01) == unit(d, 0b11));
        // wedging Psi_1^+ onto x_{2} passes one factor
        CHECK(apply(classical_psi(c, -1), 0b10) == unit(d, 0b11, Scalar(-1)));
        CHECK_THROWS_AS(classical_psi(c, 0), DomainError);
        CHECK_THROWS_AS(classical_psi(c, 3), DomainError);
    }

    TEST_CASE("omega powers") {
        CliffordCtx c = CliffordCtx::make(5);
        CHECK(omega_power(c, 1, 0) == Mat::identity(c.dim()));
        CHECK(apply(omega_power(c, 1, 1), 0b01) == unit(c.dim(), 0b01, q(-1)));
        CHECK(apply(omega_power(c, 1, -1), 0) == unit(c.dim(), 0));
        CHECK_THROWS_AS(omega_power(c, 3, 1), DomainError);
    }

    TEST_CASE("quantum generators") {
        for (int eps : {1, -1}) {
            CliffordCtx c3 = CliffordCtx::make(3, eps);
            CHECK(apply(quantum_psi(c3, -1), 0) == unit(2, 1, Scalar::q_half(-1)));
            CHECK(apply(quantum_psi(c3, 0), 0) == unit(2, 0, Scalar(eps)));
        }
        CliffordCtx c2 = CliffordCtx::make(2);
        CHECK(apply(quantum_psi(c2, 1), 1) == unit(2, 0));

        for (int N = 1; N <= 6; ++N)
            for (int eps : {1, -1}) {
                CliffordCtx c = CliffordCtx::make(N, eps);
                for (int j : c.vset()) CHECK(quantum_psi(c, j) == quantum_psi_direct(c, j));
                for (int i = 1; i <= c.n; ++i) {
                    CHECK(matmul(quantum_psi(c, i), quantum_psi(c, i)).is_zero());
                    CHECK(matmul(quantum_psi(c, -i), quantum_psi(c, -i)).is_zero());
                }
            }
    }

    TEST_CASE("omega twists relate neighbouring generators") {
        // Psi_i Psi^+_{i-1} psi_{i-1} = psi_i w_i w_{i-1}^{-1} + psi_{i-1} Psi_i Psi^+_{i-1}
        for (int N = 4; N <= 6; ++N) {
            CliffordCtx c = CliffordCtx::make(N);
            for (int i = 2; i <= c.n; ++i) {
                Mat lhs = matmul(matmul(classical_psi(c, i), classical_psi(c, -(i - 1))), quantum_psi(c, i - 1));
                Mat w = matmul(omega_power(c, i, 1), omega_power(c, i - 1, -1));
                Mat rhs = matmul(quantum_psi(c, i), w) +
                          matmul(quantum_psi(c, i - 1), matmul(classical_psi(c, i), classical_psi(c, -(i - 1))));
                CHECK(lhs == rhs);
            }
        }
    }

    TEST_CASE("Clifford relations on the spin module") {
        for (int N = 0; N <= 5; ++N)
            for (int eps : {1, -1}) {
                Report r = verify_clifford(CliffordCtx::make(N, eps));
                CHECK_MESSAGE(r.all_pass(), "N=" << N << " eps=" << eps);
                CHECK(r.checks.empty() == (N == 0));
            }
    }

    TEST_CASE("barbell operator") {
        CliffordCtx c1 = CliffordCtx::make(1);
        CHECK(barbell_op(c1) == (q(1) + Scalar(1)).inv() * Mat::identity(1));
        CHECK(barbell_op(CliffordCtx::make(0)).is_zero());

        Mat b2 = barbell_op(CliffordCtx::make(2));
        // index of x_I (x) x_J is 2I + J
        CHECK(apply(b2, 0 * 2 + 1) == unit(4, 1 * 2 + 0));
        CHECK(apply(b2, 0).is_zero());
        CHECK(apply(b2, 3).is_zero());
    }

    TEST_CASE("restriction to the top spin summand") {
        for (int N = 2; N <= 5; ++N)
            for (int eps : {1, -1}) {
                Report r = restrict_check(N, eps);
                CHECK_MESSAGE(r.all_pass(), "N=" << N);
                CHECK(!r.checks.empty());
            }
    }
}
