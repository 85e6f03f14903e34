#include "qsb/spectra.hpp"

#include "qsb/echelon.hpp"

namespace qsb {

std::vector<Scalar> spectrum_candidates(int N) {
    int n = N / 2;
    std::vector<Scalar> c;
    if (N % 2) {
        Scalar inv = (Scalar::q_pow(1) + Scalar(1)).inv();
        for (int k = 1; k <= n + 1; ++k) c.push_back(Scalar(k % 2 ? 1 : -1) * inv * (qint(k - 1) + qint(k)));
    } else {
        c.push_back(Scalar(0));
        for (int k = 1; k <= n; ++k) {
            c.push_back(qint(k));
            c.push_back(-qint(k));
        }
    }
    return c;
}

Scalar barbell_scale(int N) {
    int n = N / 2;
    return Scalar((N * n) % 2 ? -1 : 1) * (Scalar::q_half(N - 2) + Scalar::q_half(2 - N));
}

Scalar spectrum_scale(int N) { return N % 2 ? Scalar::q_half(1) * barbell_scale(N) : barbell_scale(N); }

Mat barbell_clifford_corrected(int N, int eps) {
    CliffordCtx cc = CliffordCtx::make(N, eps);
    Mat b = barbell_op(cc);
    if (N % 2) {
        Mat t0 = kron(matmul(omega_above(cc, 0, 1), classical_psi(cc, 0)),
                      matmul(omega_above(cc, 0, -1), classical_psi(cc, 0)));
        b = b + ((Scalar::q_half(1) - Scalar(1)) / (Scalar::q_pow(1) + Scalar(1))) * t0;
    }
    return barbell_scale(N) * b;
}

Spectrum spectrum_SS(int N, int eps) {
    eps = normalize_eps(N, eps);
    Spectrum s;
    Mat fb = to_dense(incarnate(N, eps, barbell()));
    if (N >= 1) {
        s.matches_literal = barbell_scale(N) * barbell_op(CliffordCtx::make(N, eps)) == fb;
        s.matches_corrected = barbell_clifford_corrected(N, eps) == fb;
    } else {
        s.matches_literal = s.matches_corrected = fb.is_zero();  // B_0 = 0
    }
    for (auto& [lam, m] : eig_split(spectrum_scale(N).inv() * fb, spectrum_candidates(N)))
        if (m > 0) s.eigen.emplace_back(lam, m);
    return s;
}

Scalar qtrace_matrix(int N, int eps, const Word& w, const SMat<Scalar>& x) {
    Word rw(w.rbegin(), w.rend());
    SMat<Scalar> v = incarnate(N, eps, cup_nest(w));
    v = apply_block(x, v, 1, obj_dim(N, rw));
    SMat<Scalar> r = mul(incarnate(N, eps, cap_nest(w)), v);
    return r.at(0, 0);
}

Scalar qtrace(int N, int eps, const Diagram& d) {
    Scalar right = evaluate_closed(N, eps, right_closure(d));
    Scalar left = evaluate_closed(N, eps, left_closure(d));
    if (!(right == left))
        throw SphericalityError("right closure " + right.pretty() + " differs from left closure " + left.pretty());
    return right;
}

int intertwiner_dim(int N, int eps, const Word& w) {
    eps = normalize_eps(N, eps);
    ModuleSpec m = module_word(N, eps, w);
    int d = m.dim();
    std::vector<int> var(std::size_t(d) * d, -1);
    int count = 0;
    for (int a = 0; a < d; ++a)
        for (int b = 0; b < d; ++b)
            if (m.weights[a] == m.weights[b]) var[std::size_t(a) * d + b] = count++;
    Echelon ech;
    for (const auto& g : generators(N)) {
        if (g.kind == 'k' || g.kind == 'K') continue;  // implied by the weight blocks
        const Mat& G = m.act(g);
        // (G X - X G)_{ij}
        for (int i = 0; i < d; ++i)
            for (int j = 0; j < d; ++j) {
                SRow row;
                for (int k = 0; k < d; ++k) {
                    if (!G(i, k).is_zero()) {
                        int v = var[std::size_t(k) * d + j];
                        if (v >= 0) row[v] += G(i, k);
                    }
                    if (!G(k, j).is_zero()) {
                        int v = var[std::size_t(i) * d + k];
                        if (v >= 0) row[v] -= G(k, j);
                    }
                }
                std::erase_if(row, [](const auto& e) { return e.second.is_zero(); });
                if (!row.empty()) ech.add(std::move(row));
            }
    }
    return count - ech.rank();
}

namespace {

// Dimension of the unital algebra generated by `gens`.
template <class K>
int algebra_rank(const std::vector<SMat<K>>& gens, int d) {
    BasicEchelon<K> ech;
    auto vec = [d](const SMat<K>& m) {
        typename BasicEchelon<K>::SRow r;
        for (int j = 0; j < m.cols(); ++j)
            for (const auto& [i, v] : m.col(j)) r[j * d + i] = v;
        return r;
    };
    std::vector<SMat<K>> basis = {SMat<K>::identity(d)};
    ech.add(vec(basis[0]));
    for (std::size_t k = 0; k < basis.size(); ++k)
        for (const auto& g : gens) {
            SMat<K> p = mul(g, basis[k]);
            if (ech.add(vec(p))) basis.push_back(std::move(p));
        }
    return ech.rank();
}

}  // namespace

EndoRank endo_rank_detail(int N, int eps, const Word& w) {
    eps = normalize_eps(N, eps);
    for (char c : w)
        if (c != 'S') throw DomainError("endo_rank expects a word over S, got \"" + w + "\"");
    EndoRank r;
    r.intertwiners = intertwiner_dim(N, eps, w);
    int L = int(w.size()), d = int(obj_dim(N, w));
    std::vector<SMat<Scalar>> gens;
    for (int i = 0; i + 2 <= L; ++i)
        gens.push_back(incarnate(N, eps, tens_all({id(power('S', i)), barbell(), id(power('S', L - i - 2))})));
    GaussRat u = probe_point();
    std::vector<SMat<GaussRat>> pg;
    try {
        for (const auto& g : gens) pg.push_back(map_entries<GaussRat>(g, [&](const Scalar& s) { return s.eval(u); }));
        r.barbell_span = algebra_rank(pg, d);
    } catch (const DomainError&) {
        r.barbell_span = -1;
    }
    // The probe rank is a lower bound; recompute exactly when it falls short.
    if (r.barbell_span != r.intertwiners) {
        r.barbell_span = algebra_rank(gens, d);
        r.exact_span = true;
    }
    return r;
}

int endo_rank(int N, int eps, const Word& w) {
    EndoRank r = endo_rank_detail(N, eps, w);
    if (r.barbell_span != r.intertwiners)
        throw std::runtime_error("barbell span has rank " + std::to_string(r.barbell_span) +
                                 " but the intertwiner space has dimension " + std::to_string(r.intertwiners));
    return r.intertwiners;
}

}  // namespace qsb
