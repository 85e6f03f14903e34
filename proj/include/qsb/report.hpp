#pragma once

#include "qsb/sparse.hpp"

#include <optional>
#include <string>
#include <vector>

namespace qsb {

struct Check {
    std::string suite, relation;
    int N = 0;
    int eps = 1;
    std::optional<int> r;
    bool pass = false;
    std::optional<std::string> witness;
};

struct Report {
    std::vector<Check> checks;

    bool all_pass() const {
        for (const auto& c : checks)
            if (!c.pass) return false;
        return true;
    }
    std::size_t failures() const {
        std::size_t f = 0;
        for (const auto& c : checks) f += !c.pass;
        return f;
    }
    void append(const Report& o) { checks.insert(checks.end(), o.checks.begin(), o.checks.end()); }
    void add(std::string suite, std::string relation, int N, int eps, std::optional<std::string> witness,
             std::optional<int> r = std::nullopt) {
        checks.push_back({std::move(suite), std::move(relation), N, eps, r, !witness.has_value(), std::move(witness)});
    }
    // One JSON record per line.
    std::string to_jsonl() const;
};

// nullopt when equal, else a description of the first differing entry
// (column-major scan), with optional basis labels.
std::optional<std::string> mat_diff(const Mat& a, const Mat& b, const std::vector<std::string>* row_labels = nullptr,
                                    const std::vector<std::string>* col_labels = nullptr);
std::optional<std::string> smat_diff(const SMat<Scalar>& a, const SMat<Scalar>& b,
                                     const std::vector<std::string>* row_labels = nullptr,
                                     const std::vector<std::string>* col_labels = nullptr);
std::optional<std::string> scalar_diff(const Scalar& a, const Scalar& b);

}  // namespace qsb
