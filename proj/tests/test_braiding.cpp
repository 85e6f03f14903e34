#include "qsb/braiding.hpp"

#include <doctest.h>

using namespace qsb;

namespace {

Scalar q(int k) { return Scalar::q_pow(k); }

bool intertwines(const Mat& T, const ModuleSpec& src, const ModuleSpec& dst) {
    for (const auto& [g, m] : src.actions)
        if (!(matmul(T, m) == matmul(dst.act(g), T))) return false;
    return true;
}

}  // namespace

TEST_SUITE("braiding") {
    TEST_CASE("explicit vector braiding") {
        Mat t3 = braid_VV(3).mat;
        // basis v1, v0, v-1; index of a (x) b is 3a + b
        CHECK(t3(0, 0) == q(1));
        CHECK(t3(4, 4) == Scalar(1));
        CHECK(t3(6, 4) == -(q(1) - q(-1)) * (q(1) + Scalar(1)));
        int nz = 0;
        for (int r = 0; r < 9; ++r) nz += !t3(r, 4).is_zero();
        CHECK(nz == 2);

        Mat t2 = braid_VV(2).mat;
        CHECK(t2(2, 1) == q(-1));
        CHECK(t2(0, 0) == q(1));
        CHECK(t2 == matmul(flip_mat(2, 2), Mat::diag({q(1), q(-1), q(-1), q(1)})));
    }

    TEST_CASE("solver reproduces the closed form") {
        for (int N = 2; N <= 5; ++N) {
            ModuleSpec V = module_V(N);
            CHECK_MESSAGE(braid_solve(N, V, V).mat == braid_VV(N).mat, "N=" << N);
        }
    }

    TEST_CASE("the displayed cross-term factor does not intertwine") {
        for (int N = 3; N <= 5; ++N) {
            ModuleSpec VV = tensor_module({module_V(N), module_V(N)});
            CHECK(intertwines(braid_VV(N).mat, VV, VV));
            CHECK_FALSE(intertwines(braid_VV_displayed(N).mat, VV, VV));
        }
    }

    TEST_CASE("highest weight against lowest weight") {
        for (int n = 1; n <= 2; ++n) {
            int N = 2 * n + 1;
            for (int eps : {1, -1}) {
                const Mat& t = braid(N, eps, 'S', 'V').mat;
                int dS = 1 << n;
                // x_{} (x) v_{-n} is column N-1; v_{-n} (x) x_{} is row (N-1) dS
                Mat col(t.cols(), 1);
                col(N - 1, 0) = Scalar(1);
                Mat want(t.rows(), 1);
                want((N - 1) * dS, 0) = Scalar::q_half(-1);
                CHECK(matmul(t, col) == want);
            }
        }
    }

    TEST_CASE("small N braidings are flips") {
        for (int N : {0, 1})
            for (char a : {'S', 'V'})
                for (char b : {'S', 'V'}) {
                    const BraidOp& t = braid(N, 1, a, b);
                    auto dim = [N](char c) { return c == 'S' ? 1 << (N / 2) : N; };
                    int da = dim(a), db = dim(b);
                    CHECK(t.mat == flip_mat(da, db));
                }
    }

    TEST_CASE("full braiding checks") {
        for (int N = 0; N <= 5; ++N)
            for (int eps : {1, -1}) {
                if (N % 2 == 0 && eps == -1) continue;
                Report r = verify_braiding(N, eps);
                CHECK_MESSAGE(r.all_pass(), "N=" << N << " eps=" << eps);
                CHECK(!r.checks.empty());
            }
    }

    TEST_CASE("sigma conjugation fixes the spin braiding") {
        for (int N : {2, 4}) {
            ModuleSpec S = module_S(N);
            Mat s = S.act({'s', 0});
            Mat ss = kron(s, s);
            const Mat& t = braid(N, 1, 'S', 'S').mat;
            CHECK(matmul(matmul(ss, t), inverse(ss)) == t);
        }
    }

    TEST_CASE("inverse braidings") {
        for (int N = 1; N <= 4; ++N)
            for (char a : {'S', 'V'})
                for (char b : {'S', 'V'}) {
                    const Mat& t = braid(N, 1, a, b).mat;
                    CHECK(matmul(braid_inverse(N, 1, a, b), t) == Mat::identity(t.cols()));
                }
    }
}
