#include "qsb/verify.hpp"

namespace qsb {

std::optional<std::string> check_relation(int N, int eps, const RelationPair& p, bool probe) {
    auto rows = obj_labels(N, eps, p.cod), cols = obj_labels(N, eps, p.dom);
    if (probe) {
        GaussRat u = probe_point();
        try {
            auto a = incarnate_probe(N, eps, p.lhs, p.dom, p.cod, u);
            auto b = incarnate_probe(N, eps, p.rhs, p.dom, p.cod, u);
            if (!(a == b)) {
                for (int j = 0; j < a.cols(); ++j)
                    for (int i = 0; i < a.rows(); ++i)
                        if (!(a.at(i, j) == b.at(i, j)))
                            return "probe u=" + u.str() + " differs at (" + rows[i] + ", " + cols[j] +
                                   "): " + a.at(i, j).str() + " vs " + b.at(i, j).str();
            }
        } catch (const DomainError&) {
            // the probe hit a pole; fall through to the exact comparison
        }
    }
    SMat<Scalar> a = incarnate(N, eps, p.lhs, p.dom, p.cod), b = incarnate(N, eps, p.rhs, p.dom, p.cod);
    return smat_diff(a, b, &rows, &cols);
}

Report verify(int N, int eps, const std::string& suite, int rmax, bool probe) {
    eps = normalize_eps(N, eps);
    std::vector<RelationPair> pairs = relation_suite(suite, N, rmax);
    std::vector<std::optional<std::string>> res(pairs.size());
    std::vector<std::string> errs(pairs.size());
#pragma omp parallel for schedule(dynamic)
    for (std::size_t k = 0; k < pairs.size(); ++k) {
        try {
            res[k] = check_relation(N, eps, pairs[k], probe);
        } catch (const std::exception& e) {
            res[k] = std::string("error: ") + e.what();
        }
    }
    Report rep;
    for (std::size_t k = 0; k < pairs.size(); ++k) rep.add(pairs[k].suite, pairs[k].name, N, eps, res[k], pairs[k].r);
    return rep;
}

std::vector<std::pair<std::string, Diagram>> closed_diagrams() {
    Diagram B = barbell();
    return {
        {"spin loop", parse("cupS ; capS")},
        {"vector loop", parse("cupV ; capV")},
        {"spin curl", parse("cupS ; xSS ; capS")},
        {"spin curl inverse", parse("cupS ; xSSi ; capS")},
        {"vector curl", parse("cupV ; xVV ; capV")},
        {"vector curl inverse", parse("cupV ; xVVi ; capV")},
        {"barbell closure", right_closure(B)},
        {"double barbell closure", right_closure(comp(B, B))},
        {"bump closure", right_closure(parse("splitVS ; mergeVS"))},
        {"mixed double crossing closure", right_closure(parse("xSV ; xVS"))},
        {"barbell with crossing closure", right_closure(comp(parse("xSS"), B))},
    };
}

Report symmetry_checks(int N, int eps) {
    eps = normalize_eps(N, eps);
    Report rep;
    for (const auto& [name, d] : closed_diagrams()) {
        Scalar v = evaluate_closed(N, eps, d);
        rep.add("symmetry", "bar " + name, N, eps, scalar_diff(evaluate_closed(N, eps, bar(d)), bar_map(v)));
        rep.add("symmetry", "flip_v " + name, N, eps, scalar_diff(evaluate_closed(N, eps, flip_v(d)), v));
    }
    return rep;
}

}  // namespace qsb
