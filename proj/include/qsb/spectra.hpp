#pragma once

#include "qsb/verify.hpp"

namespace qsb {

struct SphericalityError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Candidate eigenvalues of B_N on S (x) S: (-1)^{k-1}(q+1)^{-1}([k-1]+[k]),
// k = 1..n+1, for odd N; 0, +-[1], ..., +-[n] for even N.
std::vector<Scalar> spectrum_candidates(int N);
// (-1)^{Nn}(q^{(N-2)/2} + q^{(2-N)/2}), the displayed factor relating
// F(barbell) to the Clifford element B_N.
Scalar barbell_scale(int N);
// Factor s with F(barbell)/s having the candidate spectrum: barbell_scale
// for even N, q^{1/2} barbell_scale for odd N (forced by trace2).
Scalar spectrum_scale(int N);
// barbell_scale * (B_N + [N odd] (q^{1/2}-1)(q+1)^{-1} w Psi_0 (x) w^{-1} Psi_0),
// w = omega_{>0}; equals F(barbell) for every N.
Mat barbell_clifford_corrected(int N, int eps = 1);

struct Spectrum {
    std::vector<std::pair<Scalar, int>> eigen;  // of F(barbell)/spectrum_scale; nonzero multiplicities
    bool matches_literal = false;               // F(barbell) = barbell_scale * B_N
    bool matches_corrected = false;             // F(barbell) = barbell_clifford_corrected
};
Spectrum spectrum_SS(int N, int eps = 1);

// F of the right closure; throws SphericalityError when the left closure
// disagrees.
Scalar qtrace(int N, int eps, const Diagram& d);
// Quantum trace of an arbitrary operator on the object `w`.
Scalar qtrace_matrix(int N, int eps, const Word& w, const SMat<Scalar>& x);

// Dimension of End_{U_q}(w) from the commutation constraints.
int intertwiner_dim(int N, int eps, const Word& w);
struct EndoRank {
    int intertwiners = 0;
    int barbell_span = 0;
    bool exact_span = false;  // span rank recomputed exactly after the probe
};
// w over {S}; the span is the unital algebra generated by barbells placed
// on adjacent strands.
EndoRank endo_rank_detail(int N, int eps, const Word& w);
// Asserts barbell_span == intertwiners and returns it.
int endo_rank(int N, int eps, const Word& w);

}  // namespace qsb
