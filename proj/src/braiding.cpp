#include "qsb/braiding.hpp"
#include "qsb/echelon.hpp"

#include <map>
#include <mutex>
#include <tuple>

namespace qsb {

Mat flip_mat(int da, int db) {
    Mat m(da * db, da * db);
    for (int a = 0; a < da; ++a)
        for (int b = 0; b < db; ++b) m(b * da + a, a * db + b) = Scalar(1);
    return m;
}

std::optional<std::vector<int>> positive_root_coeffs(const CartanData& c, const Weight& nu) {
    int n = c.n;
    bool zero = true;
    for (int x : nu.d) zero = zero && x == 0;
    if (zero || n == 0) return std::nullopt;
    // solve sum_i x_i alpha_i = nu over Q
    std::vector<std::vector<Rat>> m(n, std::vector<Rat>(n + 1));
    for (int r = 0; r < n; ++r) {
        for (int i = 0; i < n; ++i) m[r][i] = Rat(c.alpha[i].d[r]);
        m[r][n] = Rat(nu.d[r]);
    }
    for (int col = 0, row = 0; col < n; ++col) {
        int p = row;
        while (p < n && m[p][col].is_zero()) ++p;
        if (p == n) return std::nullopt;
        std::swap(m[p], m[row]);
        for (int r = 0; r < n; ++r) {
            if (r == row || m[r][col].is_zero()) continue;
            Rat f = m[r][col] / m[row][col];
            for (int k = col; k <= n; ++k) m[r][k] = m[r][k] - f * m[row][k];
        }
        ++row;
    }
    std::vector<int> x(n);
    for (int i = 0; i < n; ++i) {
        Rat v = m[i][n] / m[i][i];
        if (!v.is_integer() || v.sign() < 0) return std::nullopt;
        x[i] = int(std::stoll(v.str()));
    }
    return x;
}

namespace {

std::vector<std::string> tensor_labels(const ModuleSpec& A, const ModuleSpec& B) {
    std::vector<std::string> l;
    for (const auto& a : A.labels)
        for (const auto& b : B.labels) l.push_back(a + "(x)" + b);
    return l;
}

// flip o D: a (x) b -> q^{(wt a, wt b)} b (x) a
Mat flip_d(const ModuleSpec& A, const ModuleSpec& B) {
    int da = A.dim(), db = B.dim();
    Mat m(da * db, da * db);
    for (int a = 0; a < da; ++a)
        for (int b = 0; b < db; ++b)
            m(b * da + a, a * db + b) = Scalar::u_pow(pairing_u(A.weights[a], B.weights[b]));
    return m;
}

}  // namespace

namespace {

// Closed-form T_{V,V}; `weight_ratio` selects the coefficient of the
// E_{-j,i} (x) E_{j,-i} terms.
BraidOp closed_vv(int N, bool weight_ratio) {
    if (N < 1) throw DomainError("braid_VV needs N >= 1");
    ModuleSpec V = module_V(N);
    CliffordCtx cc = CliffordCtx::make(N);
    std::vector<int> vs = cc.vset();
    int d = V.dim();
    auto pos = [&](int j) {
        for (int k = 0; k < d; ++k)
            if (vs[k] == j) return k;
        return -1;
    };
    Mat T(d * d, d * d);
    // (E_{ab} (x) E_{ce}) contributes at row (a,c), column (b,e)
    auto add = [&](int a, int b, int c, int e, const Scalar& s) {
        int pa = pos(a), pb = pos(b), pc = pos(c), pe = pos(e);
        if (pa < 0 || pb < 0 || pc < 0 || pe < 0) return;
        T(pa * d + pc, pb * d + pe) += s;
    };
    Scalar q = Scalar::q_pow(1), qi = Scalar::q_pow(-1), one(1), dq = q - qi;
    // Phi_V(v_i (x) v_{-i})
    auto phi = [&](int i) { return i > 0 ? one : i == 0 ? q + one : cc.q_rho(-i, -2); };
    for (int i : vs) {
        if (i != 0) add(i, i, i, i, q);
        else add(0, 0, 0, 0, one);
        if (i != 0) add(-i, i, i, -i, qi);
        for (int j : vs) {
            if (i != j && i != -j) add(j, i, i, j, one);
            if (i < j) {
                add(i, i, j, j, dq);
                Scalar c = -dq;
                if (weight_ratio) {
                    c *= phi(i) / phi(j);
                } else {
                    int ex = (i == 0) - (j == 0);
                    if (ex > 0) c *= q + one;
                    if (ex < 0) c *= (q + one).inv();
                }
                add(-j, i, j, -i, c);
            }
        }
    }
    BraidOp op;
    op.src = op.dst = "VV";
    op.dom = op.cod = tensor_labels(V, V);
    op.mat = std::move(T);
    return op;
}

}  // namespace

BraidOp braid_VV(int N) { return closed_vv(N, true); }
BraidOp braid_VV_displayed(int N) { return closed_vv(N, false); }

BraidOp braid_solve(int N, const ModuleSpec& A, const ModuleSpec& B) {
    if (A.N != N || B.N != N) throw DomainError("braid_solve: module N mismatch");
    BraidOp op;
    op.src = A.kind + B.kind;
    op.dst = B.kind + A.kind;
    op.dom = tensor_labels(A, B);
    op.cod = tensor_labels(B, A);
    Mat P = flip_d(A, B);
    if (N <= 2) {
        op.mat = std::move(P);
        return op;
    }
    CartanData c = CartanData::make(N);
    int da = A.dim(), db = B.dim(), dim = da * db;
    // unknown 0: coefficient of the identity; then theta entries (row, col) in A (x) B
    std::vector<std::pair<int, int>> unk{{-1, -1}};
    for (int a = 0; a < da; ++a)
        for (int b = 0; b < db; ++b)
            for (int a2 = 0; a2 < da; ++a2) {
                Weight nu = A.weights[a2] - A.weights[a];
                if (!positive_root_coeffs(c, nu)) continue;
                for (int b2 = 0; b2 < db; ++b2)
                    if (B.weights[b2] == B.weights[b] - nu) unk.push_back({a2 * db + b2, a * db + b});
            }
    ModuleSpec AB = tensor_module({A, B}), BA = tensor_module({B, A});
    Echelon ech;
    for (const auto& g : generators(N)) {
        if (g.kind != 'e' && g.kind != 'f') continue;
        const Mat &X = AB.act(g), &Y = BA.act(g);
        // equation (i, j) of T X - Y T
        std::map<std::pair<int, int>, SRow> eqs;
        auto put = [&](int i, int j, int k, const Scalar& v) {
            if (v.is_zero()) return;
            Scalar& s = eqs[{i, j}][k];
            s += v;
        };
        for (int k = 0; k < int(unk.size()); ++k) {
            // T_k = P E_{r,col}; P has a single entry per column
            auto term = [&](int r, int col, const Scalar& w) {
                int pr = 0;
                while (P(pr, r).is_zero()) ++pr;
                Scalar s = P(pr, r) * w;
                for (int j = 0; j < dim; ++j) put(pr, j, k, s * X(col, j));
                for (int i = 0; i < dim; ++i) put(i, col, k, -(Y(i, pr) * s));
            };
            if (k == 0)
                for (int r = 0; r < dim; ++r) term(r, r, Scalar(1));
            else
                term(unk[k].first, unk[k].second, Scalar(1));
        }
        for (auto& [key, row] : eqs) {
            std::erase_if(row, [](const auto& kv) { return kv.second.is_zero(); });
            if (!row.empty()) ech.add(std::move(row));
        }
    }
    int nunk = int(unk.size());
    int nullity = nunk - int(ech.piv.size());
    if (nullity != 1)
        throw AmbiguityError("braid solve " + op.src + " at N=" + std::to_string(N) + ": solution space has dimension " +
                             std::to_string(nullity));
    int free_col = 0;
    while (ech.piv.count(free_col)) ++free_col;
    std::vector<Scalar> x(nunk);
    x[free_col] = Scalar(1);
    for (auto it = ech.piv.rbegin(); it != ech.piv.rend(); ++it) {
        Scalar s;
        for (const auto& [k, v] : it->second)
            if (k != it->first) s += v * x[k];
        x[it->first] = -s;
    }
    if (x[0].is_zero()) throw AmbiguityError("braid solve " + op.src + ": identity coefficient vanishes");
    Scalar norm = x[0].inv();
    Mat M = Mat::identity(dim);
    for (int k = 1; k < nunk; ++k) M(unk[k].first, unk[k].second) += norm * x[k];
    op.mat = matmul(P, M);
    return op;
}

namespace {

struct BraidCache {
    std::mutex mu;
    std::map<std::tuple<int, int, char, char>, std::unique_ptr<BraidOp>> ops;
    std::map<std::tuple<int, int, char, char>, std::unique_ptr<Mat>> invs;
};

BraidCache& cache() {
    static BraidCache c;
    return c;
}

ModuleSpec letter(int N, int eps, char a) {
    if (a == 'S') return module_S(N, eps);
    if (a == 'V') return module_V(N);
    throw DomainError(std::string("unknown object ") + a);
}

}  // namespace

const BraidOp& braid(int N, int eps, char a, char b) {
    auto& c = cache();
    auto key = std::make_tuple(N, N % 2 ? eps : 1, a, b);
    {
        std::lock_guard lk(c.mu);
        auto it = c.ops.find(key);
        if (it != c.ops.end()) return *it->second;
    }
    auto op = std::make_unique<BraidOp>(braid_solve(N, letter(N, eps, a), letter(N, eps, b)));
    std::lock_guard lk(c.mu);
    auto [it, fresh] = c.ops.emplace(key, std::move(op));
    return *it->second;
}

const Mat& braid_inverse(int N, int eps, char a, char b) {
    auto& c = cache();
    auto key = std::make_tuple(N, N % 2 ? eps : 1, a, b);
    {
        std::lock_guard lk(c.mu);
        auto it = c.invs.find(key);
        if (it != c.invs.end()) return *it->second;
    }
    auto m = std::make_unique<Mat>(inverse(braid(N, eps, a, b).mat));
    std::lock_guard lk(c.mu);
    auto [it, fresh] = c.invs.emplace(key, std::move(m));
    return *it->second;
}

Report verify_braiding(int N, int eps) {
    Report rep;
    const std::string suite = "braiding";
    CliffordCtx cc = CliffordCtx::make(N, eps);
    eps = cc.eps;
    Params par = qparams(N);
    const char objs[2] = {'V', 'S'};
    auto mod = [&](char a) { return letter(N, eps, a); };
    auto dimof = [&](char a) { return mod(a).dim(); };
    for (char a : objs)
        for (char b : objs) {
            std::string ab = std::string(1, a) + b;
            const BraidOp& T = braid(N, eps, a, b);
            ModuleSpec AB = tensor_module({mod(a), mod(b)}), BA = tensor_module({mod(b), mod(a)});
            for (const auto& g : generators(N))
                rep.add(suite, "T_" + ab + " intertwines " + g.name(), N, eps,
                        mat_diff(matmul(T.mat, AB.act(g)), matmul(BA.act(g), T.mat), &T.cod, &T.dom));
            int d = AB.dim();
            rep.add(suite, "T_" + ab + " invertible", N, eps,
                    mat_diff(matmul(T.mat, braid_inverse(N, eps, a, b)), Mat::identity(d)));
            // highest (x) lowest
            ModuleSpec A = mod(a), B = mod(b);
            if (A.dim() > 0 && B.dim() > 0) {
                int h = 0, l = B.dim() - 1;
                Mat lhs(B.dim() * A.dim(), 1), rhs(B.dim() * A.dim(), 1);
                for (int r = 0; r < lhs.rows(); ++r) lhs(r, 0) = T.mat(r, h * B.dim() + l);
                rhs(l * A.dim() + h, 0) = Scalar::u_pow(pairing_u(A.weights[h], B.weights[l]));
                rep.add(suite, "T_" + ab + " highest(x)lowest", N, eps, mat_diff(lhs, rhs));
            }
        }
    if (N >= 1) {
        rep.add(suite, "braid_solve VV = explicit TVV", N, eps,
                mat_diff(braid(N, eps, 'V', 'V').mat, braid_VV(N).mat));
        LabeledOp fv = form_V(N);
        rep.add(suite, "Phi_V T_VV = kappa^2 Phi_V", N, eps,
                mat_diff(matmul(fv.mat, braid(N, eps, 'V', 'V').mat), (par.kappa * par.kappa) * fv.mat));
    }
    LabeledOp fs = form_S(N);
    rep.add(suite, "Phi_S sigma_N T_SS = t Phi_S", N, eps,
            mat_diff(matmul(fs.mat, par.sigmaN * braid(N, eps, 'S', 'S').mat), par.t * fs.mat));
    // Yang-Baxter on all ordered triples
    for (char a : objs)
        for (char b : objs)
            for (char c : objs) {
                int da = dimof(a), db = dimof(b), dc = dimof(c);
                Mat Ia = Mat::identity(da), Ib = Mat::identity(db), Ic = Mat::identity(dc);
                const Mat &Tab = braid(N, eps, a, b).mat, &Tac = braid(N, eps, a, c).mat,
                          &Tbc = braid(N, eps, b, c).mat;
                Mat lhs = matmul(kron(Tbc, Ia), matmul(kron(Ib, Tac), kron(Tab, Ic)));
                Mat rhs = matmul(kron(Ic, Tab), matmul(kron(Tac, Ib), kron(Ia, Tbc)));
                rep.add(suite, std::string("YBE ") + a + b + c, N, eps, mat_diff(lhs, rhs));
            }
    if (N % 2 == 0 && N >= 2) {
        for (char a : objs)
            for (char b : objs) {
                const Mat& T = braid(N, eps, a, b).mat;
                Mat sa = mod(a).act({'s', 0}), sb = mod(b).act({'s', 0});
                rep.add(suite, std::string("sigma conj T_") + a + b, N, eps,
                        mat_diff(matmul(kron(sb, sa), matmul(T, kron(sa, sb))), T));
            }
    }
    // full twist on S (x) S: eigenvalues q^{-2(l,l+2rho)+(m,m+2rho)}, m = eps_k+...+eps_n
    if (N >= 2) {
        const Mat& T = braid(N, eps, 'S', 'S').mat;
        int n = cc.n;
        int base = 0;
        for (int j = 1; j <= n; ++j) base -= 2 + 4 * cc.rho2[j];
        std::vector<Scalar> cand;
        for (int k = 1; k <= n + 1; ++k) {
            int e = base;
            for (int j = k; j <= n; ++j) e += 4 + 4 * cc.rho2[j];
            cand.push_back(Scalar::u_pow(e));
        }
        std::optional<std::string> w;
        try {
            eig_split(matmul(T, T), cand);
        } catch (const IncompleteSpectrumError& ex) {
            w = ex.what();
        }
        rep.add(suite, "T_SS^2 eigenvalues", N, eps, w);
    }
    return rep;
}

}  // namespace qsb
