#pragma once

#include "qsb/clifford.hpp"

#include <string>
#include <vector>

namespace qsb {

// Weight stored doubled: coordinate i-1 holds 2*(lambda, eps_i).
struct Weight {
    std::vector<int> d;
    friend bool operator==(const Weight&, const Weight&) = default;
    friend auto operator<=>(const Weight&, const Weight&) = default;
};

Weight operator+(const Weight& a, const Weight& b);
Weight operator-(const Weight& a, const Weight& b);
// u-exponent of q^{(a,b)}
int pairing_u(const Weight& a, const Weight& b);

struct CartanData {
    int N = 0, n = 0;
    std::vector<Weight> alpha;              // simple roots alpha_1..alpha_n
    std::vector<std::vector<int>> a;        // Cartan matrix a_ij
    std::vector<bool> half;                 // d_i = 1/2 (type B, i = 1)
    std::vector<int> rho2;                  // 2*rho_i

    static CartanData make(int N);
    // u-exponent of q_i
    int qi_u(int i) const { return half[i - 1] ? 2 : 4; }
};

// e_i, f_i, k_i, k_i^{-1} (kinds 'e','f','k','K'), sigma 's', xi 'x'.
// For N = 2 the single Cartan generator is k = k_1.
struct GenTag {
    char kind = 'e';
    int i = 0;
    std::string name() const;
    friend bool operator==(const GenTag&, const GenTag&) = default;
};

std::vector<GenTag> generators(int N);

struct ModuleSpec {
    int N = 0;
    std::string kind;
    std::vector<std::string> labels;
    std::vector<Weight> weights;
    std::vector<std::pair<GenTag, Mat>> actions;

    int dim() const { return int(labels.size()); }
    const Mat& act(const GenTag& g) const;
};

ModuleSpec module_trivial(int N);
ModuleSpec module_V(int N);
ModuleSpec module_S(int N, int eps = 1);
ModuleSpec tensor_module(const std::vector<ModuleSpec>& specs);
// Word over {S, V}, left factor first.
ModuleSpec module_word(int N, int eps, const std::string& word);

Report verify_module(const ModuleSpec& m);

LabeledOp form_V(int N);
LabeledOp form_S(int N);
LabeledOp dual_cup(const LabeledOp& form);
LabeledOp tau_op(int N, int eps = 1);
Report verify_tau(int N, int eps = 1);
Report verify_form_invariance(int N, int eps = 1);
Scalar qdim(const ModuleSpec& m);

// Counit value of a generator.
Scalar counit(const GenTag& g);

}  // namespace qsb
