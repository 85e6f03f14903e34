#include "qsb/uqrep.hpp"

#include <bit>
#include <cctype>
#include <stdexcept>

namespace qsb {

Weight operator+(const Weight& a, const Weight& b) {
    if (a.d.size() != b.d.size()) throw DimensionError("weight rank mismatch");
    Weight r = a;
    for (std::size_t i = 0; i < r.d.size(); ++i) r.d[i] += b.d[i];
    return r;
}

Weight operator-(const Weight& a, const Weight& b) {
    if (a.d.size() != b.d.size()) throw DimensionError("weight rank mismatch");
    Weight r = a;
    for (std::size_t i = 0; i < r.d.size(); ++i) r.d[i] -= b.d[i];
    return r;
}

int pairing_u(const Weight& a, const Weight& b) {
    if (a.d.size() != b.d.size()) throw DimensionError("weight rank mismatch");
    int s = 0;
    for (std::size_t i = 0; i < a.d.size(); ++i) s += a.d[i] * b.d[i];
    return s;
}

CartanData CartanData::make(int N) {
    if (N < 0) throw DomainError("N must be natural");
    CartanData c;
    c.N = N;
    c.n = N / 2;
    bool b = N % 2 == 1;
    c.rho2.assign(c.n + 1, 0);
    for (int i = 1; i <= c.n; ++i) c.rho2[i] = b ? 2 * i - 1 : 2 * (i - 1);
    for (int i = 1; i <= c.n; ++i) {
        Weight w{std::vector<int>(c.n, 0)};
        if (i == 1) {
            w.d[0] = 2;
            // type D, n >= 2: alpha_1 = eps_1 + eps_2
            if (!b && c.n >= 2) w.d[1] = 2;
        } else {
            w.d[i - 1] = 2;
            w.d[i - 2] = -2;
        }
        c.alpha.push_back(w);
        c.half.push_back(b && i == 1);
    }
    c.a.assign(c.n, std::vector<int>(c.n, 0));
    for (int i = 0; i < c.n; ++i)
        for (int j = 0; j < c.n; ++j)
            c.a[i][j] = 2 * pairing_u(c.alpha[i], c.alpha[j]) / pairing_u(c.alpha[i], c.alpha[i]);
    return c;
}

std::string GenTag::name() const {
    std::string s = i > 0 ? std::to_string(i) : "";
    switch (kind) {
        case 'e': return "e" + s;
        case 'f': return "f" + s;
        case 'k': return "k" + s;
        case 'K': return "k" + s + "^-1";
        case 's': return "sigma";
        case 'x': return "xi";
    }
    return "?";
}

std::vector<GenTag> generators(int N) {
    if (N < 0) throw DomainError("N must be natural");
    if (N == 0) return {{'s', 0}};
    if (N == 1) return {{'x', 0}};
    if (N == 2) return {{'k', 0}, {'K', 0}, {'s', 0}};
    std::vector<GenTag> g;
    for (int i = 1; i <= N / 2; ++i)
        for (char k : {'e', 'f', 'k', 'K'}) g.push_back({k, i});
    if (N % 2 == 0) g.push_back({'s', 0});
    return g;
}

const Mat& ModuleSpec::act(const GenTag& g) const {
    for (const auto& [t, m] : actions)
        if (t == g) return m;
    throw DomainError("generator " + g.name() + " not defined for N=" + std::to_string(N));
}

Scalar counit(const GenTag& g) { return (g.kind == 'e' || g.kind == 'f') ? Scalar() : Scalar(1); }

namespace {

// diag(q^{(alpha, wt)}) for the k-type generator with root `alpha`
Mat k_from_weights(const std::vector<Weight>& wts, const Weight& alpha, int sign) {
    std::vector<Scalar> d;
    for (const auto& w : wts) d.push_back(Scalar::u_pow(sign * pairing_u(alpha, w)));
    return Mat::diag(d);
}

Weight root_of(const CartanData& c, const GenTag& g) {
    // N = 2: k = q^{(eps_1, .)}
    return c.alpha[(g.i > 0 ? g.i : 1) - 1];
}

void fill_k(ModuleSpec& m, const CartanData& c) {
    for (auto& [g, mat] : m.actions)
        if (g.kind == 'k' || g.kind == 'K') mat = k_from_weights(m.weights, root_of(c, g), g.kind == 'k' ? 1 : -1);
}

ModuleSpec blank(int N, std::string kind, std::vector<std::string> labels, std::vector<Weight> wts) {
    ModuleSpec m;
    m.N = N;
    m.kind = std::move(kind);
    m.labels = std::move(labels);
    m.weights = std::move(wts);
    int d = m.dim();
    for (const auto& g : generators(N)) m.actions.push_back({g, Mat(d, d)});
    return m;
}

Mat& slot(ModuleSpec& m, GenTag g) {
    for (auto& [t, mat] : m.actions)
        if (t == g) return mat;
    throw DomainError("missing generator");
}

std::string vlabel(int i) { return "v" + std::to_string(i); }

}  // namespace

ModuleSpec module_trivial(int N) {
    ModuleSpec m = blank(N, "triv", {"1"}, {Weight{std::vector<int>(N / 2, 0)}});
    for (auto& [g, mat] : m.actions) mat(0, 0) = counit(g);
    return m;
}

ModuleSpec module_V(int N) {
    CliffordCtx cc = CliffordCtx::make(N);
    CartanData c = CartanData::make(N);
    int n = c.n;
    std::vector<int> vs = N == 0 ? std::vector<int>{} : cc.vset();
    std::vector<std::string> labels;
    std::vector<Weight> wts;
    for (int j : vs) {
        labels.push_back(vlabel(j));
        Weight w{std::vector<int>(n, 0)};
        if (j != 0) w.d[std::abs(j) - 1] = j > 0 ? 2 : -2;
        wts.push_back(w);
    }
    ModuleSpec m = blank(N, "V", labels, wts);
    if (N == 0) return m;
    auto pos = [&](int j) {
        for (std::size_t k = 0; k < vs.size(); ++k)
            if (vs[k] == j) return int(k);
        return -1;
    };
    // E_{a,b}: v_b -> v_a; ignored when a or b is outside Vset
    auto addE = [&](Mat& M, int a, int b, const Scalar& s) {
        int r = pos(a), col = pos(b);
        if (r >= 0 && col >= 0) M(r, col) += s;
    };
    Scalar q = Scalar::q_pow(1), qi = Scalar::q_pow(-1), one(1);
    if (N == 1) {
        slot(m, {'x', 0})(0, 0) = one;
        return m;
    }
    fill_k(m, c);
    if (N % 2 == 0) {
        Mat& s = slot(m, {'s', 0});
        for (int j : vs) {
            if (std::abs(j) == 1) addE(s, -j, j, -one);
            else addE(s, j, j, -one);
        }
    }
    if (N == 2) return m;
    for (int i = 2; i <= n; ++i) {
        Mat& e = slot(m, {'e', i});
        addE(e, i, i - 1, one);
        addE(e, 1 - i, -i, -qi);
        Mat& f = slot(m, {'f', i});
        addE(f, i - 1, i, one);
        addE(f, -i, 1 - i, -q);
    }
    Mat& e1 = slot(m, {'e', 1});
    Mat& f1 = slot(m, {'f', 1});
    if (N % 2 == 0) {
        addE(e1, 2, -1, one);
        addE(e1, 1, -2, -qi);
        addE(f1, -1, 2, one);
        addE(f1, -2, 1, -q);
    } else {
        addE(e1, 1, 0, q + one);
        addE(e1, 0, -1, -qi);
        addE(f1, 0, 1, Scalar::q_half(-1));
        addE(f1, -1, 0, -(Scalar::q_half(1) * (q + one)));
    }
    return m;
}

ModuleSpec module_S(int N, int eps) {
    CliffordCtx cc = CliffordCtx::make(N, eps);
    CartanData c = CartanData::make(N);
    int n = c.n;
    std::vector<std::string> labels;
    std::vector<Weight> wts;
    for (unsigned I = 0; I < unsigned(cc.dim()); ++I) {
        labels.push_back(subset_label(I));
        Weight w{std::vector<int>(n, 0)};
        for (int i = 1; i <= n; ++i) w.d[i - 1] = (I >> (i - 1) & 1u) ? -1 : 1;
        wts.push_back(w);
    }
    ModuleSpec m = blank(N, "S", labels, wts);
    m.kind = N % 2 ? (cc.eps > 0 ? "S+" : "S-") : "S";
    if (N == 0) {
        slot(m, {'s', 0})(0, 0) = Scalar(-1);
        return m;
    }
    if (N == 1) {
        slot(m, {'x', 0})(0, 0) = Scalar(-1);
        return m;
    }
    auto P = [&](int j) { return classical_psi(cc, j); };
    if (N % 2 == 0) slot(m, {'s', 0}) = Scalar::i() * (P(1) - P(-1));
    if (N == 2) {
        slot(m, {'k', 0}) = Mat::diag({Scalar::q_half(1), Scalar::q_half(-1)});
        slot(m, {'K', 0}) = Mat::diag({Scalar::q_half(-1), Scalar::q_half(1)});
        return m;
    }
    Scalar q = Scalar::q_pow(1);
    for (int i = 2; i <= n; ++i) {
        slot(m, {'e', i}) = matmul(P(i), P(-(i - 1)));
        slot(m, {'f', i}) = matmul(P(i - 1), P(-i));
        Mat k = matmul(omega_power(cc, i, 1), omega_power(cc, i - 1, -1));
        slot(m, {'k', i}) = k;
        slot(m, {'K', i}) = matmul(omega_power(cc, i, -1), omega_power(cc, i - 1, 1));
    }
    if (N % 2 == 0) {
        slot(m, {'e', 1}) = matmul(P(2), P(1));
        slot(m, {'f', 1}) = matmul(P(-1), P(-2));
        slot(m, {'k', 1}) = q * matmul(omega_power(cc, 2, 1), omega_power(cc, 1, 1));
        slot(m, {'K', 1}) = q.inv() * matmul(omega_power(cc, 2, -1), omega_power(cc, 1, -1));
    } else {
        slot(m, {'e', 1}) = matmul(P(1), P(0));
        slot(m, {'f', 1}) = matmul(P(0), P(-1));
        slot(m, {'k', 1}) = Scalar::q_half(1) * omega_power(cc, 1, 1);
        slot(m, {'K', 1}) = Scalar::q_half(-1) * omega_power(cc, 1, -1);
    }
    return m;
}

ModuleSpec tensor_module(const std::vector<ModuleSpec>& specs) {
    if (specs.empty()) throw DomainError("tensor_module needs at least one factor; use module_trivial");
    ModuleSpec acc = specs[0];
    for (std::size_t s = 1; s < specs.size(); ++s) {
        const ModuleSpec& b = specs[s];
        if (b.N != acc.N) throw DomainError("tensor factors have different N");
        ModuleSpec r;
        r.N = acc.N;
        r.kind = acc.kind + "(x)" + b.kind;
        for (int x = 0; x < acc.dim(); ++x)
            for (int y = 0; y < b.dim(); ++y) {
                r.labels.push_back(acc.labels[x] + "(x)" + b.labels[y]);
                r.weights.push_back(acc.weights[x] + b.weights[y]);
            }
        Mat Ia = Mat::identity(acc.dim()), Ib = Mat::identity(b.dim());
        for (const auto& g : generators(acc.N)) {
            Mat m;
            if (g.kind == 'e')
                m = kron(acc.act(g), b.act({'k', g.i})) + kron(Ia, b.act(g));
            else if (g.kind == 'f')
                m = kron(acc.act(g), Ib) + kron(acc.act({'K', g.i}), b.act(g));
            else
                m = kron(acc.act(g), b.act(g));
            r.actions.push_back({g, std::move(m)});
        }
        acc = std::move(r);
    }
    return acc;
}

ModuleSpec module_word(int N, int eps, const std::string& word) {
    std::vector<ModuleSpec> f;
    for (char ch : word) {
        char c = char(std::toupper(static_cast<unsigned char>(ch)));
        if (c == 'S') f.push_back(module_S(N, eps));
        else if (c == 'V') f.push_back(module_V(N));
        else if (std::isalpha(static_cast<unsigned char>(c))) throw DomainError(std::string("unknown object letter ") + ch);
    }
    if (f.empty()) return module_trivial(N);
    return tensor_module(f);
}

namespace {

Mat mpow(const Mat& a, int k) {
    Mat r = Mat::identity(a.rows());
    for (int j = 0; j < k; ++j) r = matmul(r, a);
    return r;
}

Scalar qi_binom(int m, int r, bool half) { return qfact(m, half) / (qfact(r, half) * qfact(m - r, half)); }

}  // namespace

Report verify_module(const ModuleSpec& m) {
    Report rep;
    const std::string suite = "module " + m.kind;
    int N = m.N, d = m.dim();
    auto put = [&](const std::string& rel, const Mat& l, const Mat& r) {
        rep.add(suite, rel, N, 1, mat_diff(l, r, &m.labels, &m.labels));
    };
    Mat I = Mat::identity(d), Z(d, d);
    auto A = [&](char k, int i) -> const Mat& { return m.act({k, i}); };
    auto mm = [](const Mat& a, const Mat& b) { return matmul(a, b); };
    if (N == 0) {
        put("sigma^2=1", mm(A('s', 0), A('s', 0)), I);
        return rep;
    }
    if (N == 1) {
        put("xi^2=1", mm(A('x', 0), A('x', 0)), I);
        return rep;
    }
    CartanData c = CartanData::make(N);
    if (N == 2) {
        put("k k^-1=1", mm(A('k', 0), A('K', 0)), I);
        put("k^-1 k=1", mm(A('K', 0), A('k', 0)), I);
        put("sigma^2=1", mm(A('s', 0), A('s', 0)), I);
        put("sigma k=k^-1 sigma", mm(A('s', 0), A('k', 0)), mm(A('K', 0), A('s', 0)));
        put("k vs weights", A('k', 0), k_from_weights(m.weights, c.alpha[0], 1));
        return rep;
    }
    int n = c.n;
    for (int i = 1; i <= n; ++i) {
        std::string s = std::to_string(i);
        put("k" + s + " k" + s + "^-1=1", mm(A('k', i), A('K', i)), I);
        put("k" + s + "^-1 k" + s + "=1", mm(A('K', i), A('k', i)), I);
        put("k" + s + " vs weights", A('k', i), k_from_weights(m.weights, c.alpha[i - 1], 1));
        for (int j = 1; j <= n; ++j) {
            std::string ij = "(" + s + "," + std::to_string(j) + ")";
            int p = pairing_u(c.alpha[i - 1], c.alpha[j - 1]);
            put("kk commute" + ij, mm(A('k', i), A('k', j)), mm(A('k', j), A('k', i)));
            put("k e" + ij, mm(A('k', i), A('e', j)), Scalar::u_pow(p) * mm(A('e', j), A('k', i)));
            put("k f" + ij, mm(A('k', i), A('f', j)), Scalar::u_pow(-p) * mm(A('f', j), A('k', i)));
            Mat rhs = Z;
            if (i == j) {
                int qu = c.qi_u(i);
                rhs = (Scalar::u_pow(qu) - Scalar::u_pow(-qu)).inv() * (A('k', i) - A('K', i));
            }
            put("ef-fe" + ij, mm(A('e', i), A('f', j)) - mm(A('f', j), A('e', i)), rhs);
            if (i == j) continue;
            int deg = 1 - c.a[i - 1][j - 1];
            for (char k : {'e', 'f'}) {
                Mat acc = Z;
                for (int r = 0; r <= deg; ++r) {
                    Scalar coef = qi_binom(deg, r, c.half[i - 1]) * Scalar(r % 2 ? -1 : 1);
                    acc = acc + coef * mm(mm(mpow(A(k, i), deg - r), A(k, j)), mpow(A(k, i), r));
                }
                put(std::string("serre ") + k + ij, acc, Z);
            }
        }
    }
    if (N % 2 == 0) {
        const Mat& s = A('s', 0);
        put("sigma^2=1", mm(s, s), I);
        auto swap = [](int i) { return i == 1 ? 2 : i == 2 ? 1 : i; };
        for (int i = 1; i <= n; ++i)
            for (char k : {'e', 'f', 'k', 'K'})
                put(std::string("sigma ") + k + std::to_string(i) + " sigma", mm(mm(s, A(k, i)), s), A(k, swap(i)));
    }
    return rep;
}

LabeledOp form_V(int N) {
    ModuleSpec V = module_V(N);
    CliffordCtx cc = CliffordCtx::make(N);
    std::vector<int> vs = N == 0 ? std::vector<int>{} : cc.vset();
    int d = V.dim();
    LabeledOp op;
    op.cod = {"1"};
    op.mat = Mat(1, d * d);
    Scalar q1 = Scalar::q_pow(1) + Scalar(1);
    for (int a = 0; a < d; ++a)
        for (int b = 0; b < d; ++b) {
            op.dom.push_back(V.labels[a] + "(x)" + V.labels[b]);
            int i = vs[a], j = vs[b];
            if (i != -j) continue;
            Scalar v(1);
            if (j > 0) v = cc.q_rho(j, -2);
            if (j == 0) v = q1;
            op.mat(0, a * d + b) = v;
        }
    return op;
}

LabeledOp form_S(int N) {
    CliffordCtx cc = CliffordCtx::make(N);
    int d = cc.dim(), n = cc.n;
    unsigned full = unsigned(d - 1);
    LabeledOp op;
    op.cod = {"1"};
    op.mat = Mat(1, d * d);
    for (unsigned I = 0; I < unsigned(d); ++I)
        for (unsigned J = 0; J < unsigned(d); ++J) {
            op.dom.push_back(subset_label(I) + "(x)" + subset_label(J));
            if (I != (full & ~J)) continue;
            int size = std::popcount(I);
            Scalar v((n * (N + 1) * size) % 2 ? -1 : 1);
            for (int i = 1; i <= n; ++i)
                if (I >> (i - 1) & 1u) v = v * Scalar(i % 2 ? -1 : 1) * cc.q_rho(i, -1);
            op.mat(0, I * d + J) = v;
        }
    return op;
}

LabeledOp dual_cup(const LabeledOp& form) {
    int dd = form.mat.cols();
    int d = 0;
    while (d * d < dd) ++d;
    if (d * d != dd || form.mat.rows() != 1) throw DimensionError("form must be 1 x d^2");
    Mat G(d, d);
    for (int x = 0; x < d; ++x)
        for (int y = 0; y < d; ++y) G(x, y) = form.mat(0, x * d + y);
    // x^vee = sum_c (G^{-1})_{x,c} b_c, so that Phi(x^vee, y) = delta_{x,y}
    Mat Gi = inverse(G);
    LabeledOp op;
    op.dom = {"1"};
    op.cod = form.dom;
    op.mat = Mat(dd, 1);
    for (int x = 0; x < d; ++x)
        for (int c2 = 0; c2 < d; ++c2) op.mat(x * d + c2, 0) = Gi(x, c2);
    return op;
}

LabeledOp tau_op(int N, int eps) {
    if (N < 1) throw DomainError("tau needs N >= 1");
    CliffordCtx cc = CliffordCtx::make(N, eps);
    int ds = cc.dim();
    std::vector<int> vs = cc.vset();
    LabeledOp op;
    op.mat = Mat(ds, int(vs.size()) * ds);
    for (unsigned I = 0; I < unsigned(ds); ++I) op.cod.push_back(subset_label(I));
    for (std::size_t a = 0; a < vs.size(); ++a) {
        Mat psi = quantum_psi(cc, vs[a]);
        for (int I = 0; I < ds; ++I) {
            op.dom.push_back(vlabel(vs[a]) + "(x)" + subset_label(unsigned(I)));
            for (int r = 0; r < ds; ++r) op.mat(r, int(a) * ds + I) = psi(r, I);
        }
    }
    return op;
}

Report verify_tau(int N, int eps) {
    if (N < 1) throw DomainError("tau needs N >= 1");
    Report rep;
    CliffordCtx cc = CliffordCtx::make(N, eps);
    ModuleSpec V = module_V(N), S = module_S(N, eps), VS = tensor_module({V, S});
    LabeledOp t = tau_op(N, eps);
    const std::string suite = "tau";
    for (const auto& g : generators(N))
        rep.add(suite, "tau hom " + g.name(), N, cc.eps,
                mat_diff(matmul(t.mat, VS.act(g)), matmul(S.act(g), t.mat), &t.cod, &t.dom));
    std::vector<int> vs = cc.vset();
    std::vector<Mat> psi;
    for (int j : vs) psi.push_back(quantum_psi(cc, j));
    int ds = S.dim();
    // image in the Clifford algebra of the column of a V-operator
    auto bar = [&](const Mat& a, int col) {
        Mat r(ds, ds);
        for (std::size_t k = 0; k < vs.size(); ++k)
            if (!a(int(k), col).is_zero()) r = r + a(int(k), col) * psi[k];
        return r;
    };
    for (const auto& g : generators(N))
        for (std::size_t j = 0; j < vs.size(); ++j) {
            int c = int(j);
            Mat lhs = matmul(S.act(g), psi[j]), rhs;
            std::string name;
            if (g.kind == 'e') {
                name = "froste";
                rhs = matmul(bar(V.act(g), c), S.act({'k', g.i})) + matmul(psi[j], S.act(g));
            } else if (g.kind == 'f') {
                name = "frostf";
                rhs = bar(V.act(g), c) + matmul(bar(V.act({'K', g.i}), c), S.act(g));
            } else {
                name = (g.kind == 'k' || g.kind == 'K') ? "frostk" : "frosts";
                rhs = matmul(bar(V.act(g), c), S.act(g));
            }
            rep.add(suite, name + " " + g.name() + " psi_" + std::to_string(vs[j]), N, cc.eps,
                    mat_diff(lhs, rhs, &S.labels, &S.labels));
        }
    return rep;
}

Report verify_form_invariance(int N, int eps) {
    if (N < 1) throw DomainError("form invariance needs N >= 1");
    Report rep;
    CliffordCtx cc = CliffordCtx::make(N, eps);
    ModuleSpec V = module_V(N), S = module_S(N, eps);
    ModuleSpec VV = tensor_module({V, V}), SS = tensor_module({S, S});
    LabeledOp fv = form_V(N), fs = form_S(N);
    for (const auto& g : generators(N)) {
        rep.add("form", "Phi_V " + g.name(), N, cc.eps,
                mat_diff(matmul(fv.mat, VV.act(g)), counit(g) * fv.mat, &fv.cod, &fv.dom));
        rep.add("form", "Phi_S " + g.name(), N, cc.eps,
                mat_diff(matmul(fs.mat, SS.act(g)), counit(g) * fs.mat, &fs.cod, &fs.dom));
    }
    int d = S.dim();
    Mat I = Mat::identity(d);
    Scalar sgn((N * cc.n) % 2 ? -1 : 1);
    for (int i = cc.type_b() ? 0 : 1; i <= cc.n; ++i) {
        Mat P = classical_psi(cc, i), Pd = classical_psi(cc, -i);
        rep.add("form", "bounce Psi+_" + std::to_string(i), N, cc.eps,
                mat_diff(matmul(fs.mat, kron(Pd, I)), sgn * cc.q_rho(i, -1) * matmul(fs.mat, kron(I, Pd))));
        rep.add("form", "bounce Psi_" + std::to_string(i), N, cc.eps,
                mat_diff(matmul(fs.mat, kron(P, I)), sgn * cc.q_rho(i, 1) * matmul(fs.mat, kron(I, P))));
    }
    return rep;
}

Scalar qdim(const ModuleSpec& m) {
    CartanData c = CartanData::make(m.N);
    Scalar s;
    for (const auto& w : m.weights) {
        int e = 0;
        for (int i = 1; i <= c.n; ++i) e += 2 * c.rho2[i] * w.d[i - 1];
        s += Scalar::u_pow(e);
    }
    return s;
}

}  // namespace qsb
