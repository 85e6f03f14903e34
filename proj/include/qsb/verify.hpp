#pragma once

#include "qsb/evaluate.hpp"
#include "qsb/relations.hpp"

namespace qsb {

// Each relation is compared entrywise in the image of F. With probe set,
// both sides are first specialized at the probe point; a mismatch there is
// already a proof of inequality, otherwise the exact comparison decides.
Report verify(int N, int eps, const std::string& suite, int rmax = 3, bool probe = false);
std::optional<std::string> check_relation(int N, int eps, const RelationPair& p, bool probe = false);

// Closed diagrams used for the bar and reflection symmetry checks.
std::vector<std::pair<std::string, Diagram>> closed_diagrams();
// F(bar d) = bar_map(F(d)) and F(flip_v d) = F(d) on closed_diagrams().
Report symmetry_checks(int N, int eps);

}  // namespace qsb
