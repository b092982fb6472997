#pragma once

#include "hnpoly/polygon.hpp"
#include "hnpoly/strata.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace hnpoly {

/// How to run a sweep: the serial reference path, or the OpenMP kernel.
/// Both produce byte-identical reports; the serial path is kept as the
/// reference the parallel kernel is tested and benchmarked against.
enum class ExecMode { serial, parallel };

/// One counterexample (or equality) record: the instance inputs in canonical
/// text form, what was compared, and both sides.
struct SweepRecord {
    std::string instance;
    std::string note;
    std::string lhs;
    std::string rhs;

    friend bool operator==(const SweepRecord&, const SweepRecord&) = default;
};

/// Outcome of a sweep. instances_checked counts the individual checks
/// evaluated; a sweep passed exactly when violations is empty.
/// equality_cases lists checks that landed on equality, whether or not
/// equality is admissible for that sweep. Records are sorted, so identical
/// inputs yield identical reports regardless of scheduling.
struct SweepReport {
    std::int64_t instances_checked = 0;
    std::vector<SweepRecord> violations;
    std::vector<SweepRecord> equality_cases;

    bool passed() const { return violations.empty(); }
    void merge(SweepReport&& other);
    void finalize();  // sort records

    friend bool operator==(const SweepReport&, const SweepReport&) = default;
};

/// Default desk-scale sweep bounds. Slopes range over reduced d/h with
/// |d| <= max_num and 1 <= h <= max_den.
struct SweepBounds {
    long max_rank = 5;
    long max_num = 3;
    long max_den = 3;
};

/// All reduced slopes d/h with |d| <= max_num, 1 <= h <= max_den, sorted
/// descending.
std::vector<Slope> slope_set(long max_num, long max_den);

/// All nonzero semistable bundles O(s)^m of rank <= max_rank over the slope
/// set; deterministic order.
std::vector<Bundle> semistable_bundles(long max_rank, long max_num, long max_den);

/// All nonzero bundles of rank <= max_rank over the slope set; deterministic
/// order.
std::vector<Bundle> all_bundles(long max_rank, long max_num, long max_den);

/// Independent recursive counter of concave lattice paths from the origin to
/// ceiling's endpoint lying weakly below it. The oracle down_set is checked
/// against.
Int count_paths_below(const Polygon& ceiling);

/// The hypothesis set swept by verify_step1: every nonzero q != f with
/// rank q <= rank f, mu_max(q) <= mu(f) and quotient_necessary(e, q).
/// Requires f nonzero semistable, rank e > rank f, mu_max(e) < mu(f).
std::vector<Bundle> candidates_step1(const Bundle& e, const Bundle& f);

/// Checks the strict surjection inequality
///   dim_hom(e,q) + dim_hom(q,f) < dim_hom(e,f) + dim_aut(q)
/// for every candidate q. Equality is a violation and is also recorded in
/// equality_cases.
SweepReport verify_step1(const Bundle& e, const Bundle& f);

/// The hypothesis set swept by verify_step2: every non-semistable k with the
/// rank and degree of d and mu_max(k) <= mu_max(e). Requires d, f nonzero
/// semistable with mu(d) <= mu(f), polygon_of(e) <= polygon_of(d (+) f) with
/// equal endpoints, and mu_max(e) < mu(f).
std::vector<Bundle> candidates_step2(const Bundle& d, const Bundle& f, const Bundle& e);

/// Checks the strict kernel inequality
///   dim_hom(k,e) < dim_aut(k) + dim_hom(e,f)
/// for every candidate k.
SweepReport verify_step2(const Bundle& d, const Bundle& f, const Bundle& e);

/// For every extension e of f2 by f1 checks that the stratum dimension
/// formula, the enclosed-area computation, antitonicity along polygon_leq,
/// and nonnegativity (zero exactly at the split bundle) all agree.
SweepReport cross_check_dimensions(const Bundle& f1, const Bundle& f2);

// Exhaustive desk-scale sweeps. Each merges the per-instance reports over
// the full hypothesis set at the given bounds.

/// Stable pairs: rank multiplicativity and degree bilinearity of tensor, and
/// semistability of the product.
SweepReport sweep_tensor(long max_num, long max_den, ExecMode mode);

/// All nonzero bundles of rank <= max_rank: instability equals twice the
/// enclosed area over the chord, and vanishes exactly for semistable
/// bundles.
SweepReport sweep_area_identity(const SweepBounds& b, ExecMode mode);

/// verify_step1 over all (e, f) in its hypothesis set with
/// rank e <= max_rank_e, rank f <= max_rank_f.
SweepReport sweep_step1(long max_rank_e, long max_rank_f, long max_num, long max_den,
                        ExecMode mode);

/// verify_step2 over all (d, f, e) in its hypothesis set with
/// rank d + rank f <= max_total_rank.
SweepReport sweep_step2(long max_total_rank, long max_num, long max_den, ExecMode mode);

/// cross_check_dimensions over all semistable pairs with each rank
/// <= max_rank_each and mu(f1) < mu(f2).
SweepReport sweep_quantitative_dim(long max_rank_each, long max_num, long max_den,
                                   ExecMode mode);

/// Filtration witnesses over all strictly-slope-increasing semistable pairs
/// and triples of total rank <= max_total_rank and every feasible e:
/// validates every witness invariant, and for pairs checks agreement of the
/// two-step criterion with the extension criterion (on infeasible e as
/// well).
SweepReport sweep_filtration(long max_total_rank, long max_num, long max_den, ExecMode mode);

/// down_set size against the independent path counter, over all ceilings of
/// width <= max_width whose breakpoints have |y| <= max_abs_deg.
SweepReport sweep_downset_counts(long max_width, long max_abs_deg, ExecMode mode);

}  // namespace hnpoly
