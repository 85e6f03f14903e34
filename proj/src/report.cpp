#include "qsb/report.hpp"

#include <json.hpp>

#include <sstream>

namespace qsb {

std::string Report::to_jsonl() const {
    std::ostringstream os;
    for (const auto& c : checks) {
        nlohmann::ordered_json j;
        j["suite"] = c.suite;
        j["relation"] = c.relation;
        j["N"] = c.N;
        j["eps"] = c.eps;
        if (c.r) j["r"] = *c.r;
        j["pass"] = c.pass;
        if (c.witness) j["witness"] = *c.witness;
        os << j.dump() << '\n';
    }
    return os.str();
}

namespace {

std::string label(const std::vector<std::string>* l, int k) {
    if (l && k < int(l->size())) return std::to_string(k) + " [" + (*l)[k] + "]";
    return std::to_string(k);
}

std::string entry_text(int i, int j, const Scalar& x, const Scalar& y, const std::vector<std::string>* rl,
                       const std::vector<std::string>* cl) {
    return "row " + label(rl, i) + ", col " + label(cl, j) + ": lhs=" + x.str() + " rhs=" + y.str();
}

}  // namespace

std::optional<std::string> mat_diff(const Mat& a, const Mat& b, const std::vector<std::string>* rl,
                                    const std::vector<std::string>* cl) {
    if (a.rows() != b.rows() || a.cols() != b.cols())
        return "shape " + std::to_string(a.rows()) + "x" + std::to_string(a.cols()) + " vs " +
               std::to_string(b.rows()) + "x" + std::to_string(b.cols());
    for (int j = 0; j < a.cols(); ++j)
        for (int i = 0; i < a.rows(); ++i)
            if (!(a(i, j) == b(i, j))) return entry_text(i, j, a(i, j), b(i, j), rl, cl);
    return std::nullopt;
}

std::optional<std::string> smat_diff(const SMat<Scalar>& a, const SMat<Scalar>& b,
                                     const std::vector<std::string>* rl, const std::vector<std::string>* cl) {
    if (a.rows() != b.rows() || a.cols() != b.cols())
        return "shape " + std::to_string(a.rows()) + "x" + std::to_string(a.cols()) + " vs " +
               std::to_string(b.rows()) + "x" + std::to_string(b.cols());
    for (int j = 0; j < a.cols(); ++j) {
        const auto &x = a.col(j), &y = b.col(j);
        std::size_t p = 0, s = 0;
        while (p < x.size() || s < y.size()) {
            int ix = p < x.size() ? x[p].first : a.rows();
            int iy = s < y.size() ? y[s].first : a.rows();
            int i = std::min(ix, iy);
            Scalar vx = ix == i ? x[p++].second : Scalar();
            Scalar vy = iy == i ? y[s++].second : Scalar();
            if (!(vx == vy)) return entry_text(i, j, vx, vy, rl, cl);
        }
    }
    return std::nullopt;
}

std::optional<std::string> scalar_diff(const Scalar& a, const Scalar& b) {
    if (a == b) return std::nullopt;
    return "lhs=" + a.str() + " rhs=" + b.str();
}

}  // namespace qsb
