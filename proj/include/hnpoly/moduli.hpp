#pragma once

#include "hnpoly/polygon.hpp"

namespace hnpoly {

/// Whether a stratum is known to be inhabited. Strata whose nonemptiness the
/// checkable criteria cannot decide are reported unknown rather than
/// guessed.
enum class Nonempty { yes, no, unknown };

const char* to_string(Nonempty n);

/// An exact stratum dimension. The value is meaningful only when
/// nonempty_known != no.
struct StratumDim {
    Int value{};
    Nonempty nonempty_known = Nonempty::unknown;
};

/// Dimension of the space of global sections: deg of the slope->=0 part.
Int dim_h0(const Bundle& e);

/// Dimension of the space of bundle maps e -> f: deg_hom_nonneg(e, f).
Int dim_hom(const Bundle& e, const Bundle& f);

/// Dimension of the automorphism space: deg_hom_nonneg(e, e). Zero exactly
/// for semistable bundles.
Int dim_aut(const Bundle& e);

/// Checkable necessary condition for q to occur as a quotient of e: with
/// right endpoints aligned at the origin, on every unit strip covered by q's
/// polygon the slope of q is at least the slope of e. Requires q nonzero and
/// rank q <= rank e (throws otherwise).
bool quotient_necessary(const Bundle& e, const Bundle& q);

/// Dual condition for k to occur as a subbundle of e.
bool subbundle_necessary(const Bundle& e, const Bundle& k);

/// Dimension of the stratum of maps e -> f with image class q:
///   dim_hom(e,q) + dim_hom(q,f) - dim_aut(q).
/// nonempty_known is yes only when a checkable certificate exists for both a
/// surjection e -> q and an injection q -> f; no when a necessary condition
/// fails; unknown otherwise. Throws on zero q.
StratumDim dim_hom_stratum(const Bundle& e, const Bundle& f, const Bundle& q);

/// Dimension of the stratum of surjections e -> f with kernel class k:
///   dim_hom(k,e) - dim_aut(k).
/// Requires f semistable and rank/degree additivity k + f = e.
StratumDim dim_surj_with_kernel(const Bundle& e, const Bundle& f, const Bundle& k);

/// Dimension of the stratum of extensions of f2 by f1 isomorphic to e:
///   deg_hom(f1,f2) - instability(e),
/// which equals twice the area between polygon_of(e) and
/// polygon_of(f1 (+) f2). Requires f1, f2 nonzero semistable with
/// mu(f1) < mu(f2) and matching endpoints. nonempty_known is decided by the
/// extension criterion.
StratumDim dim_ext_stratum(const Bundle& f1, const Bundle& f2, const Bundle& e);

}  // namespace hnpoly
