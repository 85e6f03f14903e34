#pragma once

#include "qsb/diagram.hpp"
#include "qsb/report.hpp"

#include <optional>

namespace qsb {

// lhs = rhs as linear combinations of diagrams of type dom -> cod. An empty
// side means zero.
struct RelationPair {
    std::string suite, name;
    Lin lhs, rhs;
    Word dom, cod;
    std::optional<int> r;
    std::string condition;
};

Lin lin(const Diagram& d, const Scalar& c = Scalar(1));
Lin operator+(Lin a, const Lin& b);
Lin operator*(const Scalar& c, Lin a);

// cupNest(w) : "" -> w rev(w) and capNest(w) : w rev(w) -> "".
Diagram cup_nest(const Word& w);
Diagram cap_nest(const Word& w);
// Closure of an endomorphism on the right (strands bend to the right) or
// on the left.
Diagram right_closure(const Diagram& f);
Diagram left_closure(const Diagram& f);

// B : S S -> S S, a vector strand between two spin strands.
Diagram barbell();
// r vector strands entering a spin loop, b leaving it: V^a -> V^b.
Diagram loop_gadget(int a, int b);

// Suites: defining, derived, asym, all. The asym suite uses 1 <= r <= rmax.
std::vector<RelationPair> relation_suite(const std::string& name, int N, int rmax = 3);
const std::vector<std::string>& suite_names();

}  // namespace qsb
