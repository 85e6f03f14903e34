#include "qsb/clifford.hpp"

#include <bit>
#include <stdexcept>

namespace qsb {

CliffordCtx CliffordCtx::make(int N, int eps) {
    if (N < 0) throw DomainError("N must be natural");
    if (eps != 1 && eps != -1) throw DomainError("eps must be +1 or -1");
    CliffordCtx c;
    c.N = N;
    c.n = N / 2;
    c.eps = c.type_b() ? eps : 1;
    c.rho2.assign(c.n + 1, 0);
    for (int i = 1; i <= c.n; ++i) c.rho2[i] = c.type_b() ? 2 * i - 1 : 2 * (i - 1);
    return c;
}

std::vector<int> CliffordCtx::vset() const {
    std::vector<int> v;
    for (int i = n; i >= 1; --i) v.push_back(i);
    if (type_b()) v.push_back(0);
    for (int i = 1; i <= n; ++i) v.push_back(-i);
    return v;
}

bool CliffordCtx::in_vset(int j) const { return (j == 0) ? type_b() : (std::abs(j) <= n); }

Scalar CliffordCtx::q_rho(int j, int power) const {
    int r2 = rho2[std::abs(j)] * (j < 0 ? -1 : 1);
    return Scalar::u_pow(2 * r2 * power);
}

std::string subset_label(unsigned mask) {
    if (mask == 0) return "x{}";
    std::string s;
    for (int i = 31; i >= 0; --i)
        if (mask >> i & 1u) s += (s.empty() ? "" : ",") + std::to_string(i + 1);
    return "x{" + s + "}";
}

namespace {

// #{k in I : k > i}
int above(unsigned mask, int i) { return std::popcount(mask >> i); }

void require(const CliffordCtx& c, int j) {
    if (!c.in_vset(j)) throw DomainError("index " + std::to_string(j) + " not in Vset for N=" + std::to_string(c.N));
}

}  // namespace

Mat classical_psi(const CliffordCtx& c, int j) {
    require(c, j);
    Mat m(c.dim(), c.dim());
    for (unsigned I = 0; I < unsigned(c.dim()); ++I) {
        if (j == 0) {
            m(I, I) = Scalar(std::popcount(I) % 2 ? -c.eps : c.eps);
            continue;
        }
        int i = std::abs(j);
        unsigned bit = 1u << (i - 1);
        int sgn = above(I, i) % 2 ? -1 : 1;
        if (j > 0 && (I & bit)) m(I & ~bit, I) = Scalar(sgn);
        if (j < 0 && !(I & bit)) m(I | bit, I) = Scalar(sgn);
    }
    return m;
}

Mat omega_power(const CliffordCtx& c, int i, int k) {
    if (i < 1 || i > c.n) throw DomainError("omega index out of range");
    Mat m(c.dim(), c.dim());
    for (unsigned I = 0; I < unsigned(c.dim()); ++I) m(I, I) = (I >> (i - 1) & 1u) ? Scalar::q_pow(-k) : Scalar(1);
    return m;
}

Mat omega_above(const CliffordCtx& c, int i, int k) {
    Mat m(c.dim(), c.dim());
    for (unsigned I = 0; I < unsigned(c.dim()); ++I) m(I, I) = Scalar::q_pow(-k * above(I, i));
    return m;
}

Mat quantum_psi(const CliffordCtx& c, int j) {
    require(c, j);
    return c.q_rho(j) * matmul(omega_above(c, std::abs(j), -1), classical_psi(c, j));
}

Mat quantum_psi_direct(const CliffordCtx& c, int j) {
    require(c, j);
    Mat m(c.dim(), c.dim());
    for (unsigned I = 0; I < unsigned(c.dim()); ++I) {
        if (j == 0) {
            int k = std::popcount(I);
            m(I, I) = Scalar(c.eps) * Scalar(k % 2 ? -1 : 1) * Scalar::q_pow(k);
            continue;
        }
        int i = std::abs(j);
        unsigned bit = 1u << (i - 1);
        int a = above(I, i);
        Scalar coef = Scalar(a % 2 ? -1 : 1) * Scalar::q_pow(a) * c.q_rho(j);
        if (j > 0 && (I & bit)) m(I & ~bit, I) = coef;
        if (j < 0 && !(I & bit)) m(I | bit, I) = coef;
    }
    return m;
}

Report verify_clifford(const CliffordCtx& c) {
    Report rep;
    const std::string suite = "clifford";
    auto put = [&](const std::string& name, const Mat& l, const Mat& r) {
        rep.add(suite, name, c.N, c.eps, mat_diff(l, r));
    };
    int d = c.dim(), n = c.n;
    Mat I = Mat::identity(d), Z(d, d);
    Scalar q = Scalar::q_pow(1), qi = Scalar::q_pow(-1);
    std::vector<Mat> psi(2 * n + 1), psid(2 * n + 1), P(2 * n + 1), Pd(2 * n + 1);
    int lo = c.type_b() ? 0 : 1;
    for (int i = lo; i <= n; ++i) {
        psi[i] = quantum_psi(c, i);
        psid[i] = quantum_psi(c, -i);
        P[i] = classical_psi(c, i);
        Pd[i] = classical_psi(c, -i);
    }
    auto mm = [](const Mat& a, const Mat& b) { return matmul(a, b); };

    for (int j : c.vset()) put("moca=gouda psi_" + std::to_string(j), quantum_psi(c, j), quantum_psi_direct(c, j));

    for (int i = lo; i <= n; ++i)
        for (int j = lo; j < i; ++j) {
            std::string ij = "(" + std::to_string(i) + "," + std::to_string(j) + ")";
            put("apostille1" + ij, mm(psi[i], psi[j]), (-q) * mm(psi[j], psi[i]));
            put("apostille2" + ij, mm(psid[i], psid[j]), (-qi) * mm(psid[j], psid[i]));
        }
    for (int i = 1; i <= n; ++i) {
        put("apostille3 psi_" + std::to_string(i), mm(psi[i], psi[i]), Z);
        put("apostille3 psi+_" + std::to_string(i), mm(psid[i], psid[i]), Z);
    }
    for (int i = lo; i <= n; ++i)
        for (int j = lo; j <= n; ++j)
            if (i != j)
                put("apostille4(" + std::to_string(i) + "," + std::to_string(j) + ")", mm(psi[i], psid[j]),
                    (-q) * mm(psid[j], psi[i]));
    auto tail = [&](int i) {
        Mat s(d, d);
        for (int j = i + 1; j <= n; ++j) s = s + mm(psid[j], psi[j]);
        return (q * q - Scalar(1)) * s + I;
    };
    for (int i = 1; i <= n; ++i) put("apostille5 i=" + std::to_string(i), mm(psi[i], psid[i]) + mm(psid[i], psi[i]), tail(i));
    if (c.type_b()) put("apostille6", mm(psi[0], psi[0]), tail(0));

    // classical Clifford relations and the omega identities
    for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= n; ++j) {
            std::string ij = "(" + std::to_string(i) + "," + std::to_string(j) + ")";
            put("classicCl PP" + ij, mm(P[i], P[j]) + mm(P[j], P[i]), Z);
            put("classicCl P+P+" + ij, mm(Pd[i], Pd[j]) + mm(Pd[j], Pd[i]), Z);
            put("classicCl PP+" + ij, mm(P[i], Pd[j]) + mm(Pd[j], P[i]), i == j ? I : Z);
            Mat wj = omega_power(c, j, 1), wji = omega_power(c, j, -1);
            Scalar qd = i == j ? q : Scalar(1), qdi = i == j ? qi : Scalar(1);
            put("notary2 Psi" + ij, mm(mm(wj, P[i]), wji), qd * P[i]);
            put("notary2 Psi+" + ij, mm(mm(wj, Pd[i]), wji), qdi * Pd[i]);
            put("notary1 commute" + ij, mm(omega_power(c, i, 1), wj), mm(wj, omega_power(c, i, 1)));
        }
    if (c.type_b()) {
        put("mesh Psi0^2", mm(P[0], P[0]), I);
        for (int i = 1; i <= n; ++i) {
            put("mesh Psi0 Psi_" + std::to_string(i), mm(P[0], P[i]) + mm(P[i], P[0]), Z);
            put("mesh Psi0 Psi+_" + std::to_string(i), mm(P[0], Pd[i]) + mm(Pd[i], P[0]), Z);
        }
    }
    for (int i = 1; i <= n; ++i) {
        std::string s = std::to_string(i);
        Mat w = omega_power(c, i, 1);
        put("omega def " + s, w, mm(P[i], Pd[i]) + qi * mm(Pd[i], P[i]));
        put("notary1 w Psi " + s, mm(w, P[i]), P[i]);
        put("notary1 Psi w " + s, mm(P[i], w), qi * P[i]);
        put("notary1 Psi+ w " + s, mm(Pd[i], w), Pd[i]);
        put("notary1 w Psi+ " + s, mm(w, Pd[i]), qi * Pd[i]);
        for (int k = -2; k <= 2; ++k)
            put("notary3 " + s + "^" + std::to_string(k), omega_power(c, i, k),
                I + (Scalar::q_pow(-k) - Scalar(1)) * mm(Pd[i], P[i]));
    }
    for (int i = 2; i <= n; ++i) {
        std::string s = std::to_string(i);
        Mat ei = mm(P[i], Pd[i - 1]), fi = mm(P[i - 1], Pd[i]);
        Mat ki = mm(omega_power(c, i, 1), omega_power(c, i - 1, -1));
        put("demon1 i=" + s, mm(ei, psi[i - 1]), mm(psi[i], ki) + mm(psi[i - 1], ei));
        put("demon2 i=" + s, mm(fi, psi[i]), psi[i - 1] + qi * mm(psi[i], fi));
    }
    return rep;
}

Mat barbell_op(const CliffordCtx& c) {
    int d = c.dim();
    Mat b(d * d, d * d);
    Scalar q1 = (Scalar::q_pow(1) + Scalar(1)).inv();
    for (int i : c.vset()) {
        int a = std::abs(i);
        Mat left = matmul(omega_above(c, a, 1), classical_psi(c, i));
        Mat right = matmul(omega_above(c, a, -1), classical_psi(c, -i));
        Mat t = kron(left, right);
        b = b + (i == 0 ? q1 * t : t);
    }
    return b;
}

Report restrict_check(int N, int eps) {
    if (N < 2) throw DomainError("restrict_check needs N >= 2");
    Report rep;
    CliffordCtx big = CliffordCtx::make(N, eps), small = CliffordCtx::make(N - 2, eps);
    Mat B = barbell_op(big), b = barbell_op(small);
    int D = big.dim(), d = small.dim();
    unsigned top = 1u << (big.n - 1);
    // S_1 basis: masks containing bit n-1; drop it to land in the smaller space
    auto embed = [&](unsigned m) { return int(m | top); };
    for (unsigned I = 0; I < unsigned(d); ++I)
        for (unsigned J = 0; J < unsigned(d); ++J) {
            int col_big = embed(I) * D + embed(J), col_small = int(I) * d + int(J);
            Mat lhs(D * D, 1), rhs(D * D, 1);
            for (int r = 0; r < D * D; ++r) lhs(r, 0) = B(r, col_big);
            for (int r = 0; r < d * d; ++r) rhs(embed(unsigned(r / d)) * D + embed(unsigned(r % d)), 0) = b(r, col_small);
            rep.add("clifford", "restrict " + subset_label(embed(I)) + "(x)" + subset_label(embed(J)), N, big.eps,
                    mat_diff(lhs, rhs));
        }
    return rep;
}

}  // namespace qsb
