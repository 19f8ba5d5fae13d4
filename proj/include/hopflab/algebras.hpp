#pragma once

#include <functional>

#include "hopflab/groups.hpp"
#include "hopflab/hopf.hpp"

namespace hopflab {

/// kG on the group basis, Delta(g) = g (x) g. Grading is zero everywhere.
HopfData group_algebra(const GroupTable& g);
/// k^G on the delta basis.
HopfData function_algebra(const GroupTable& g);

/// Right action of F on G: act(eta, f) = eta <| f.
using RightAction = std::function<int(int eta, int f)>;

/// k^G # kF for a right action of F on G by group automorphisms (the
/// matched pair with trivial left action and trivial cocycles). Basis
/// delta_eta # f has index eta * |F| + f.
HopfData matched_pair_extension(const GroupTable& g, const GroupTable& f, const RightAction& act);

/// Conjugation action eta <| f = f^{-1} eta f of a subgroup F of G, given
/// by the ambient indices of F's elements.
RightAction conjugation_action(const GroupTable& g, const std::vector<int>& f_in_g);

}  // namespace hopflab
