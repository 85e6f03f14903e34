#pragma once

#include "qsb/braiding.hpp"
#include "qsb/diagram.hpp"

namespace qsb {

// Even N ignores eps; it is normalized to +1.
int normalize_eps(int N, int eps);
long obj_dim(int N, const Word& w);
// "1" for the empty word, else module labels joined by "(x)".
std::vector<std::string> obj_labels(int N, int eps, const Word& w);

// Image of a primitive or derived generator.
const SMat<Scalar>& generator_matrix(int N, int eps, const std::string& name);
// A_r, optionally reflected and/or barred, on V^r.
const SMat<Scalar>& asym_matrix(int N, int eps, int r, bool flipped = false, bool barred = false);

SMat<Scalar> incarnate(int N, int eps, const Diagram& d);
SMat<Scalar> incarnate(int N, int eps, const Lin& l, const Word& dom, const Word& cod);
// Same functor with u specialized to a Gaussian rational; throws DomainError
// when the point is a pole of some generator image.
SMat<GaussRat> incarnate_probe(int N, int eps, const Diagram& d, const GaussRat& u);
SMat<GaussRat> incarnate_probe(int N, int eps, const Lin& l, const Word& dom, const Word& cod, const GaussRat& u);

LabeledOp evaluate(int N, int eps, const Diagram& d);
// Value of a closed diagram (dom = cod = empty word).
Scalar evaluate_closed(int N, int eps, const Diagram& d);

}  // namespace qsb
