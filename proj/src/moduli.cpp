#include "hnpoly/moduli.hpp"

#include "hnpoly/extensions.hpp"

#include <stdexcept>

namespace hnpoly {

namespace {

/// Sub-multiset test on canonical blocks: does big contain small as a direct
/// summand?
bool is_direct_summand(const Bundle& small, const Bundle& big) {
    auto it = big.summands().begin();
    for (const auto& s : small.summands()) {
        while (it != big.summands().end() && it->slope != s.slope) ++it;
        if (it == big.summands().end() || it->multiplicity < s.multiplicity) return false;
    }
    return true;
}

/// Certifiable existence of a surjection e ->> q.
bool surjection_certified(const Bundle& e, const Bundle& q) {
    if (q == e) return true;
    if (is_direct_summand(q, e)) return true;  // project onto the summand
    // Semistable target of smaller rank dominating every slope of e.
    return q.is_semistable() && e.rank() > q.rank() && e.mu_max() <= q.mu();
}

/// Certifiable existence of an injection q -> f (the dual situation).
bool injection_certified(const Bundle& q, const Bundle& f) {
    return surjection_certified(dual(f), dual(q));
}

}  // namespace

const char* to_string(Nonempty n) {
    switch (n) {
        case Nonempty::yes: return "yes";
        case Nonempty::no: return "no";
        case Nonempty::unknown: return "unknown";
    }
    return "unknown";
}

Int dim_h0(const Bundle& e) { return truncate(e, Slope(0), SlopeCmp::ge).degree(); }

Int dim_hom(const Bundle& e, const Bundle& f) { return deg_hom_nonneg(e, f); }

Int dim_aut(const Bundle& e) { return deg_hom_nonneg(e, e); }

bool quotient_necessary(const Bundle& e, const Bundle& q) {
    if (q.is_zero()) throw std::invalid_argument("quotient_necessary needs nonzero q");
    if (q.rank() > e.rank()) throw std::invalid_argument("rank q exceeds rank e");
    Polygon pe = polygon_of(e);
    Polygon pq = polygon_of(q);
    const Int re = pe.end().x;
    const Int rq = pq.end().x;
    // Right endpoints aligned at the origin; compare slopes strip by strip.
    for (Int i = 1; i <= rq; ++i) {
        Rational dq = pq.height_at(rq - i + 1) - pq.height_at(rq - i);
        Rational de = pe.height_at(re - i + 1) - pe.height_at(re - i);
        if (dq < de) return false;
    }
    return true;
}

bool subbundle_necessary(const Bundle& e, const Bundle& k) {
    return quotient_necessary(dual(e), dual(k));
}

StratumDim dim_hom_stratum(const Bundle& e, const Bundle& f, const Bundle& q) {
    if (q.is_zero()) throw std::invalid_argument("dim_hom_stratum needs nonzero q");
    StratumDim d;
    d.value = dim_hom(e, q) + dim_hom(q, f) - dim_aut(q);
    const bool necessary = q.rank() <= e.rank() && q.rank() <= f.rank() &&
                           quotient_necessary(e, q) && subbundle_necessary(f, q);
    if (!necessary)
        d.nonempty_known = Nonempty::no;
    else if (surjection_certified(e, q) && injection_certified(q, f))
        d.nonempty_known = Nonempty::yes;
    else
        d.nonempty_known = Nonempty::unknown;
    return d;
}

StratumDim dim_surj_with_kernel(const Bundle& e, const Bundle& f, const Bundle& k) {
    if (f.is_zero() || !f.is_semistable())
        throw std::invalid_argument("dim_surj_with_kernel needs semistable nonzero f");
    if (k.rank() + f.rank() != e.rank() || k.degree() + f.degree() != e.degree())
        throw std::invalid_argument("kernel and quotient must add up to e in rank and degree");
    StratumDim d;
    d.value = dim_hom(k, e) - dim_aut(k);
    const bool necessary = !k.is_zero() && polygon_leq(polygon_of(e), polygon_of(direct_sum(k, f))) &&
                           quotient_necessary(e, f) && subbundle_necessary(e, k);
    if (k.is_zero()) {
        // Rank-zero kernel: surjections e ->> f of equal rank are bijections.
        d.nonempty_known = e == f ? Nonempty::yes : Nonempty::no;
    } else if (!necessary) {
        d.nonempty_known = Nonempty::no;
    } else if (e == direct_sum(k, f)) {
        d.nonempty_known = Nonempty::yes;  // the split surjection
    } else if (k.is_semistable() && k.mu() < f.mu()) {
        d.nonempty_known = exists_extension(k, f, e) ? Nonempty::yes : Nonempty::no;
    } else {
        d.nonempty_known = Nonempty::unknown;
    }
    return d;
}

StratumDim dim_ext_stratum(const Bundle& f1, const Bundle& f2, const Bundle& e) {
    if (f1.is_zero() || !f1.is_semistable() || f2.is_zero() || !f2.is_semistable())
        throw std::invalid_argument("dim_ext_stratum needs nonzero semistable f1, f2");
    if (f1.mu() >= f2.mu())
        throw std::invalid_argument("dim_ext_stratum requires mu(f1) < mu(f2)");
    if (e.rank() != f1.rank() + f2.rank() || e.degree() != f1.degree() + f2.degree())
        throw std::invalid_argument("endpoints of e must match f1 (+) f2");
    StratumDim d;
    d.value = deg_hom(f1, f2) - instability(e);
    d.nonempty_known = exists_extension(f1, f2, e) ? Nonempty::yes : Nonempty::no;
    return d;
}

}  // namespace hnpoly
