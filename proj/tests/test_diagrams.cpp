#include "gen.hpp"
#include "qsb/spectra.hpp"

#include <doctest.h>

#include <set>

using namespace qsb;

namespace {

Scalar q(int k) { return Scalar::q_pow(k); }
Scalar one() { return Scalar(1); }

using Eigen = std::vector<std::pair<Scalar, int>>;

// Random diagram built layer by layer: each layer applies one generator at
// a position where its domain matches the current word.
Diagram random_diagram(testgen::Gen& g, Word w, int layers) {
    static const std::vector<std::string> names = {"capS", "cupS", "capV", "cupV", "xSS", "xSSi", "xVV", "xVVi",
                                                   "xSV",  "xSVi", "xVS",  "xVSi", "mergeVS", "splitVS"};
    std::vector<Diagram> seqd{id(w)};
    for (int k = 0; k < layers; ++k) {
        std::vector<std::pair<std::string, std::size_t>> opts;
        for (const auto& n : names) {
            Word d = gen_dom(n);
            if (w.size() - d.size() + gen_cod(n).size() > 4) continue;
            for (std::size_t p = 0; p + d.size() <= w.size(); ++p)
                if (w.compare(p, d.size(), d) == 0) opts.emplace_back(n, p);
        }
        if (opts.empty()) break;
        auto [n, p] = opts[g.range(0, int(opts.size()) - 1)];
        Word d = gen_dom(n);
        seqd.push_back(tens_all({id(w.substr(0, p)), gen(n), id(w.substr(p + d.size()))}));
        w = w.substr(0, p) + gen_cod(n) + w.substr(p + d.size());
    }
    return seq(seqd);
}

std::set<std::string> failing(const Report& r) {
    std::set<std::string> s;
    for (const auto& c : r.checks)
        if (!c.pass) s.insert(c.relation + (c.r ? " r=" + std::to_string(*c.r) : ""));
    return s;
}

}  // namespace

TEST_SUITE("diagrams") {
    TEST_CASE("parsing and typing") {
        Diagram m = parse("mergeVS");
        CHECK(m->dom == "VS");
        CHECK(m->cod == "S");
        Diagram loop = parse("cupS ; capS");
        CHECK(loop->dom.empty());
        CHECK(loop->cod.empty());
        CHECK_THROWS_AS(parse("capV ; capS"), TypeError);
        try {
            parse("capV ; capS");
        } catch (const TypeError& e) {
            std::string msg = e.what();
            CHECK(msg.find("\"\"") != std::string::npos);
            CHECK(msg.find("\"SS\"") != std::string::npos);
        }
        CHECK_THROWS_AS(parse("cupS ; "), ParseError);
        CHECK_THROWS_AS(parse("bogus"), ParseError);
        CHECK_THROWS_AS(parse("id(SX)"), ParseError);
        try {
            parse("cupS ;; capS");
        } catch (const ParseError& e) {
            CHECK(std::string(e.what()).find("position 6") != std::string::npos);
        }
        CHECK(parse("asym(3)")->dom == "VVV");
        CHECK(parse("id(S) * (cupV ; capV)")->dom == "S");

        testgen::Gen g(17);
        for (int s = 0; s < 40; ++s) {
            Diagram d = random_diagram(g, g.range(0, 1) ? "SVS" : "VSS", g.range(0, 5));
            CHECK(parse(to_string(d))->key == d->key);
        }
    }

    TEST_CASE("rotated vertices") {
        const auto& rots = rotations();
        CHECK(rots.size() == 6);
        for (const auto& r : rots) {
            Diagram cw = parse(r.clockwise), ccw = parse(r.counterclockwise);
            CHECK(cw->dom == gen_dom(r.name));
            CHECK(cw->cod == gen_cod(r.name));
            CHECK(ccw->dom == cw->dom);
            CHECK(ccw->cod == cw->cod);
            for (int N = 0; N <= 5; ++N)
                for (int eps : {1, -1}) CHECK_MESSAGE(incarnate(N, eps, cw) == incarnate(N, eps, ccw), r.name << " N=" << N);
        }
    }

    TEST_CASE("evaluation examples") {
        for (int N = 0; N <= 5; ++N) {
            Params p = qparams(N);
            CHECK(evaluate_closed(N, 1, parse("cupS ; capS")) == p.dS);
            CHECK(evaluate_closed(N, 1, parse("cupV ; capV")) == p.dV);
        }
        // basis v1, v0, v-1: v0 (x) v0 is column 4
        CHECK(evaluate(3, 1, parse("capV")).mat(0, 4) == q(1));
        for (int N = 1; N <= 4; ++N)
            CHECK(to_dense(incarnate(N, 1, parse("xSS"))) == qparams(N).sigmaN * braid(N, 1, 'S', 'S').mat);
        CHECK(evaluate(0, 1, parse("capV")).mat.cols() == 0);
        LabeledOp lo = evaluate(2, 1, parse("mergeVS"));
        CHECK(lo.dom.size() == 4);
        CHECK(lo.cod.size() == 2);
    }

    TEST_CASE("functoriality and isotopy") {
        testgen::Gen g(23);
        for (int s = 0; s < 20; ++s) {
            int N = g.range(1, 3);
            Diagram a = random_diagram(g, "SV", g.range(0, 3));
            Diagram b = random_diagram(g, "VS", g.range(0, 3));
            Mat fa = to_dense(incarnate(N, 1, a)), fb = to_dense(incarnate(N, 1, b));
            CHECK(to_dense(incarnate(N, 1, tens(a, b))) == kron(fa, fb));
            Diagram c = random_diagram(g, a->cod, g.range(0, 3));
            CHECK(to_dense(incarnate(N, 1, comp(c, a))) == matmul(to_dense(incarnate(N, 1, c)), fa));
        }
        for (int N = 0; N <= 5; ++N) {
            CHECK(incarnate(N, 1, parse("id(S)*cupS ; capS*id(S)")) == SMat<Scalar>::identity(int(obj_dim(N, "S"))));
            CHECK(incarnate(N, 1, parse("cupV*id(V) ; id(V)*capV")) == SMat<Scalar>::identity(int(obj_dim(N, "V"))));
            // the inverse of xAB is the negative crossing xBAi
            for (std::string x : {"xSS", "xVV", "xSV", "xVS"}) {
                Diagram d = comp(gen({'x', x[2], x[1], 'i'}), gen(x));
                CHECK(incarnate(N, 1, d) == SMat<Scalar>::identity(int(obj_dim(N, d->dom))));
            }
        }
    }

    TEST_CASE("antisymmetrizers") {
        CHECK(asym(0)->dom.empty());
        for (int N = 0; N <= 5; ++N) {
            CHECK(incarnate(N, 1, asym(0)) == SMat<Scalar>::identity(1));
            CHECK(incarnate(N, 1, asym(1)) == incarnate(N, 1, id("V")));
        }
        // A_2 = [2]^{-1}(q id - xVV - (q - q^-1)/(1 + q^-1 k^-2) capV;cupV)
        for (int N = 1; N <= 5; ++N) {
            Scalar k2 = qparams(N).kappa * qparams(N).kappa;
            Scalar c = (q(1) - q(-1)) / (one() + q(-1) * k2.inv());
            Mat want = qint(2).inv() * (q(1) * to_dense(incarnate(N, 1, id("VV"))) - to_dense(incarnate(N, 1, gen("xVV"))) -
                                        c * to_dense(incarnate(N, 1, parse("capV ; cupV"))));
            CHECK(to_dense(incarnate(N, 1, asym(2))) == want);
        }
        SMat<Scalar> a2 = incarnate(5, 1, asym(2));
        CHECK(mul(a2, a2) == a2);
        for (int N = 1; N <= 5; ++N)
            for (int r = 1; r <= 3; ++r) {
                Scalar closed = evaluate_closed(N, 1, right_closure(asym(r)));
                CHECK_MESSAGE(closed == qbinom0(N - 1, r) + qbinom0(N - 1, r - 1), "N=" << N << " r=" << r);
                CHECK(incarnate(N, 1, flip_v(asym(r))) == incarnate(N, 1, asym(r)));
            }
    }

    TEST_CASE("flip and bar") {
        CHECK(to_string(flip_v(gen("capS"))) == "cupS");
        CHECK(to_string(bar(gen("xSS"))) == "xSSi");
        testgen::Gen g(29);
        for (int s = 0; s < 40; ++s) {
            Diagram d = random_diagram(g, "SVS", g.range(0, 5));
            CHECK(bar(bar(d))->key == d->key);
            Diagram ff = flip_v(flip_v(d));
            CHECK(ff->dom == d->dom);
            CHECK(ff->cod == d->cod);
            int N = g.range(1, 3);
            CHECK(incarnate(N, 1, ff) == incarnate(N, 1, d));
        }
        for (int N = 0; N <= 5; ++N)
            for (int eps : {1, -1}) {
                Report r = symmetry_checks(N, eps);
                CHECK(r.checks.size() == 2 * closed_diagrams().size());
                CHECK_MESSAGE(r.all_pass(), "N=" << N);
            }
    }

    TEST_CASE("relation suites") {
        CHECK_THROWS_AS(relation_suite("nope", 3), DomainError);
        for (int N = 0; N <= 5; ++N)
            for (int eps : {1, -1}) {
                if (N % 2 == 0 && eps == -1) continue;
                CHECK_MESSAGE(verify(N, eps, "defining").all_pass(), "N=" << N << " eps=" << eps);
                CHECK_MESSAGE(verify(N, eps, "derived").all_pass(), "N=" << N << " eps=" << eps);
            }
        CHECK(verify(3, 1, "defining", 3, true).all_pass());
        CHECK(verify(0, 1, "defining").checks.size() == relation_suite("defining", 0).size());
    }

    TEST_CASE("antisymmetrizer suite with the odd r = N exceptions") {
        for (int N : {0, 2, 4}) CHECK_MESSAGE(verify(N, 1, "asym").all_pass(), "N=" << N);
        for (int eps : {1, -1}) {
            CHECK(failing(verify(1, eps, "asym")) == std::set<std::string>{"Deligne r=1", "trace1"});
            CHECK(failing(verify(3, eps, "asym")) == std::set<std::string>{"Deligne r=3"});
        }
    }

    TEST_CASE("negative controls fail in both modes") {
        Params p = qparams(3);
        RelationPair wrong{"control", "loop off by one", lin(parse("cupS ; capS")), lin(id(""), p.dS + one()), "", "", {}, ""};
        CHECK(check_relation(3, 1, wrong).has_value());
        CHECK(check_relation(3, 1, wrong, true).has_value());
        RelationPair skein{"control", "skein with wrong sign",
                           lin(gen("xVV")) + lin(gen("xVVi"), Scalar(-1)),
                           (q(1) + q(-1)) * (lin(id("VV")) + lin(parse("capV ; cupV"), Scalar(-1))),
                           "VV", "VV", {}, ""};
        CHECK(check_relation(4, 1, skein).has_value());
        CHECK(check_relation(4, 1, skein, true).has_value());
    }

    TEST_CASE("quantum traces") {
        Diagram B = barbell();
        for (int N = 0; N <= 5; ++N) {
            Params p = qparams(N);
            CHECK(qtrace(N, 1, id("S")) == p.dS);
            CHECK(qtrace(N, 1, comp(B, B)) == p.dV * p.dS * p.dS);
            if (N == 1)
                CHECK(qtrace(N, 1, B) == one());
            else
                CHECK(qtrace(N, 1, B).is_zero());
        }
    }

    TEST_CASE("barbell spectra") {
        Scalar inv = (q(1) + one()).inv();
        Spectrum s2 = spectrum_SS(2);
        CHECK(s2.eigen == Eigen{{Scalar(0), 2}, {one(), 1}, {Scalar(-1), 1}});
        Spectrum s3 = spectrum_SS(3);
        CHECK(s3.eigen == Eigen{{inv, 3}, {-(q(1) + one() + q(-1)) * inv, 1}});
        Spectrum s4 = spectrum_SS(4);
        CHECK(s4.eigen == Eigen{{Scalar(0), 6}, {one(), 4}, {Scalar(-1), 4}, {qint(2), 1}, {-qint(2), 1}});
        Spectrum s5 = spectrum_SS(5);
        REQUIRE(s5.eigen.size() == 3);
        CHECK(s5.eigen[0] == std::pair<Scalar, int>{inv, 10});
        CHECK(s5.eigen[1] == std::pair<Scalar, int>{-(qint(1) + qint(2)) * inv, 5});
        CHECK(s5.eigen[2] == std::pair<Scalar, int>{(qint(2) + qint(3)) * inv, 1});

        for (int N = 0; N <= 5; ++N)
            for (int eps : {1, -1}) {
                Spectrum s = spectrum_SS(N, eps);
                CHECK(s.matches_corrected);
                CHECK(s.matches_literal == (N % 2 == 0));
                int total = 0;
                for (const auto& [l, m] : s.eigen) total += m;
                CHECK(total == 1 << (2 * (N / 2)));
            }
    }

    TEST_CASE("eigenspace quantum dimensions") {
        for (int N : {3, 5}) {
            int n = N / 2;
            Mat A = spectrum_scale(N).inv() * to_dense(incarnate(N, 1, barbell()));
            Spectrum s = spectrum_SS(N);
            int d = A.rows();
            Scalar sum;
            for (std::size_t a = 0; a < s.eigen.size(); ++a) {
                Mat P = Mat::identity(d);
                for (std::size_t b = 0; b < s.eigen.size(); ++b)
                    if (a != b)
                        P = ((s.eigen[a].first - s.eigen[b].first).inv()) *
                            matmul(P, A - s.eigen[b].first * Mat::identity(d));
                Scalar qd = qtrace_matrix(N, 1, "SS", to_sparse(P));
                int k = int(a) + 1;
                CHECK(qd == qbinom0(N - 1, n - k + 1) + qbinom0(N - 1, n - k));
                sum += qd;
            }
            CHECK(sum == qparams(N).dS * qparams(N).dS);
        }
    }

    TEST_CASE("endomorphism ranks") {
        std::vector<int> want = {1, 1, 3, 2, 5, 3};
        for (int N = 0; N <= 5; ++N) {
            EndoRank r = endo_rank_detail(N, 1, "SS");
            CHECK(r.intertwiners == want[N]);
            CHECK(r.barbell_span == want[N]);
            CHECK(endo_rank(N, 1, "SS") == want[N]);
        }
        CHECK(endo_rank(2, 1, "SSS") == 10);
        CHECK(endo_rank(3, 1, "SSS") == 5);
        CHECK_THROWS_AS(endo_rank(3, 1, "SV"), DomainError);
    }
}
