#pragma once

#include "hnpoly/polygon.hpp"

#include <span>
#include <utility>
#include <vector>

namespace hnpoly {

/// A combinatorial witness for a multi-step filtration of chain.back() with
/// successive quotients graded[0], graded[1], ... . chain starts at the zero
/// bundle; rank and degree increments along the chain match the graded
/// pieces, and every partial chain member sits weakly below the polygon of
/// the corresponding partial direct sum.
struct FiltrationWitness {
    std::vector<Bundle> chain;   // E_0 = 0, ..., E_k = E
    std::vector<Bundle> graded;  // F_1, ..., F_k
};

/// Does e occur as an extension of f2 by f1? Criterion: the polygon of e
/// lies weakly below the polygon of f1 (+) f2 with the same endpoints.
/// Requires f1, f2 nonzero semistable with mu(f1) < mu(f2); other inputs
/// throw std::invalid_argument (the equal-slope extension problem is
/// deliberately out of scope).
bool exists_extension(const Bundle& f1, const Bundle& f2, const Bundle& e);

/// The polygon condition alone, for any list of nonzero semistable graded
/// pieces in any slope order. Necessary for e to carry a filtration with
/// these gradeds.
bool necessary_condition(const Bundle& e, std::span<const Bundle> graded);

/// Decides whether e admits a filtration with the given semistable graded
/// pieces; requires mu strictly increasing along graded. True iff
/// polygon_of(e) <= polygon_of(sum of graded) with equal endpoints.
bool exists_filtration(const Bundle& e, std::span<const Bundle> graded);

/// Constructs a concrete chain realizing exists_filtration (which must hold;
/// throws otherwise). Works down from the top piece: place its polygon as
/// the initial segment, take the upper concave hull with polygon_of(e) to
/// split off the next chain member, and recurse.
FiltrationWitness build_filtration_witness(const Bundle& e, std::span<const Bundle> graded);

/// All bundles realizable as extensions of f2 by f1, i.e. all concave
/// lattice paths between the chord and polygon_of(f1 (+) f2). Sorted by
/// height profile, highest first, so the split bundle leads. Preconditions
/// as exists_extension.
std::vector<Bundle> enumerate_extensions(const Bundle& f1, const Bundle& f2);

/// Strict-slope reduction: when mu_max(e) equals mu(f2) = s, both e and f2
/// carry a common top block O(s)^n which splits off the extension problem.
/// Returns (e', f2') with that block removed from both, so that either f2'
/// is zero or mu_max(e') < mu(f2'). Identity when mu_max(e) < mu(f2).
/// Throws if f2 is not semistable, or if e has more top-slope multiplicity
/// than f2 can absorb.
std::pair<Bundle, Bundle> split_common_top(const Bundle& e, const Bundle& f2);

}  // namespace hnpoly
