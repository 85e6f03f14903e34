#include "qsb/scalar.hpp"
#include "qsb/uqrep.hpp"

#include <doctest.h>

using namespace qsb;

namespace {

Scalar q(int k) { return Scalar::q_pow(k); }

GenTag e(int i) { return {'e', i}; }
GenTag k(int i) { return {'k', i}; }

// Gram matrix G[a][b] = Phi(x_a, x_b) from a 1 x d^2 form.
Mat gram(const LabeledOp& form, int d) {
    Mat g(d, d);
    for (int a = 0; a < d; ++a)
        for (int b = 0; b < d; ++b) g(a, b) = form.mat(0, a * d + b);
    return g;
}

}  // namespace

TEST_SUITE("uqrep") {
    TEST_CASE("vector module") {
        ModuleSpec v3 = module_V(3);
        REQUIRE(v3.labels.size() == 3);
        // basis v1, v0, v-1
        CHECK(v3.act(e(1))(0, 1) == q(1) + Scalar(1));
        CHECK(v3.act(k(1))(0, 0) == q(1));
        ModuleSpec v4 = module_V(4);
        CHECK(v4.act({'s', 0})(0, 0) == Scalar(-1));
        CHECK(module_V(0).dim() == 0);
        CHECK(module_V(5).dim() == 5);
    }

    TEST_CASE("spin module") {
        for (int eps : {1, -1}) {
            ModuleSpec s3 = module_S(3, eps);
            CHECK(s3.act(k(1))(0, 0) == Scalar::q_half(1));
            CHECK(s3.act(e(1))(0, 1) == Scalar(-eps));
        }
        ModuleSpec s2 = module_S(2);
        CHECK(s2.act({'s', 0})(1, 0) == -Scalar::i());
        CHECK(module_S(0).dim() == 1);
    }

    TEST_CASE("tensor products") {
        CHECK_THROWS_AS(tensor_module({}), DomainError);
        CHECK(module_word(3, 1, "").dim() == 1);
        ModuleSpec t0 = module_trivial(3);
        for (const auto& g : generators(3)) CHECK(t0.act(g)(0, 0) == counit(g));

        ModuleSpec vv = tensor_module({module_V(3), module_V(3)});
        // v0 (x) v-1 has index 1*3 + 2
        Mat col(9, 1);
        col(5, 0) = Scalar(1);
        Mat img = matmul(vv.act(e(1)), col);
        Mat want(9, 1);
        want(2, 0) = (q(1) + Scalar(1)) * q(-1);
        want(4, 0) = -q(-1);
        CHECK(img == want);

        CHECK_THROWS(tensor_module({module_V(3), module_V(4)}));

        // k_i acts by the stored weights on every tensor word
        for (int N = 3; N <= 5; ++N) {
            CartanData cd = CartanData::make(N);
            for (const std::string w : {"VS", "SS", "SVV"}) {
                ModuleSpec m = module_word(N, 1, w);
                for (int i = 1; i <= cd.n; ++i) {
                    std::vector<Scalar> diag;
                    for (const auto& wt : m.weights) diag.push_back(Scalar::u_pow(pairing_u(cd.alpha[i - 1], wt)));
                    CHECK(m.act(k(i)) == Mat::diag(diag));
                }
            }
        }
    }

    TEST_CASE("module axioms") {
        for (int N = 0; N <= 5; ++N)
            for (int eps : {1, -1}) {
                if (N % 2 == 0 && eps == -1) continue;
                for (const std::string w : {"V", "S", "VS", "SS", "VV"}) {
                    Report r = verify_module(module_word(N, eps, w));
                    CHECK_MESSAGE(r.all_pass(), "N=" << N << " eps=" << eps << " word=" << w);
                }
            }
    }

    TEST_CASE("invariant forms") {
        LabeledOp fv = form_V(3);
        CHECK(fv.mat(0, 4) == q(1) + Scalar(1));
        CHECK(fv.mat(0, 2) == Scalar(1));
        CHECK(fv.mat(0, 6) == q(-1));
        LabeledOp fs2 = form_S(2);
        CHECK(fs2.mat(0, 1) == Scalar(1));
        CHECK(fs2.mat(0, 2) == Scalar(1));
        CHECK(form_S(3).mat(0, 2) == -Scalar::q_half(-1));

        for (int N = 1; N <= 5; ++N)
            for (int eps : {1, -1}) CHECK_MESSAGE(verify_form_invariance(N, eps).all_pass(), "N=" << N);
    }

    TEST_CASE("dual cups") {
        LabeledOp cup = dual_cup(form_S(2));
        Mat want(4, 1);
        want(1, 0) = Scalar(1);
        want(2, 0) = Scalar(1);
        CHECK(cup.mat == want);

        for (int N = 1; N <= 5; ++N) {
            for (const LabeledOp& form : {form_V(N), form_S(N)}) {
                int d = 1;
                while (d * d < form.mat.cols()) ++d;
                LabeledOp c = dual_cup(form);
                Mat I = Mat::identity(d);
                CHECK(matmul(kron(form.mat, I), kron(I, c.mat)) == I);
                CHECK(matmul(kron(I, form.mat), kron(c.mat, I)) == I);
            }
            // double dual x^vv = G^{-T} G x
            CliffordCtx cc = CliffordCtx::make(N);
            Params p = qparams(N);
            int d = cc.dim();
            Mat g = gram(form_S(N), d);
            Mat dd = matmul(inverse(g.transpose()), g);
            std::vector<Scalar> want_diag;
            for (unsigned I = 0; I < unsigned(d); ++I) {
                Scalar s = p.sigmaN;
                for (int i = 1; i <= cc.n; ++i) s *= cc.q_rho((I >> (i - 1) & 1u) ? i : -i);
                want_diag.push_back(s);
            }
            CHECK_MESSAGE(dd == Mat::diag(want_diag), "N=" << N);
        }
        Mat singular(1, 4);
        CHECK_THROWS_AS(dual_cup(LabeledOp{{"a", "b", "c", "d"}, {"1"}, singular}), SingularError);
    }

    TEST_CASE("Clifford multiplication") {
        for (int eps : {1, -1}) {
            LabeledOp t = tau_op(3, eps);
            // column index is v-index * dim S + spin index
            CHECK(t.mat(0, 0 * 2 + 1) == Scalar::q_half(1));
            CHECK(t.mat(0, 1 * 2 + 0) == Scalar(eps));
        }
        CHECK(tau_op(2).mat(1, 1 * 2 + 0) == Scalar(1));
        for (int N = 1; N <= 5; ++N)
            for (int eps : {1, -1}) CHECK_MESSAGE(verify_tau(N, eps).all_pass(), "N=" << N << " eps=" << eps);
    }

    TEST_CASE("quantum dimensions") {
        CHECK(qdim(module_V(5)) == qint(4) + Scalar(1));
        CHECK(qdim(module_S(4)) == Scalar(2) * (q(1) + q(-1)));
        CHECK(qdim(module_S(4)) == qparams(4).sigmaN * qparams(4).dS);
        CHECK(qdim(module_trivial(3)) == Scalar(1));
        for (int N = 0; N <= 7; ++N) {
            Params p = qparams(N);
            CHECK(p.sigmaN * p.dS == qdim(module_S(N)));
            CHECK(qdim(module_V(N)) == p.dV);
        }
        for (int N = 1; N <= 4; ++N)
            CHECK(qdim(tensor_module({module_V(N), module_S(N)})) == qdim(module_V(N)) * qdim(module_S(N)));
    }
}
