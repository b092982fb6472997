#pragma once

#include "hnpoly/rational.hpp"

#include <span>
#include <vector>

namespace hnpoly {

/// One isotypic block O(slope)^multiplicity. The block has rank
/// multiplicity * slope.den() and degree multiplicity * slope.num().
struct StableSummand {
    Slope slope;
    Int multiplicity;

    Int rank() const { return multiplicity * slope.den(); }
    Int degree() const { return multiplicity * slope.num(); }

    friend bool operator==(const StableSummand&, const StableSummand&) = default;
};

/// Raw construction data for make_bundle: a slope num/den plus a multiplicity.
struct RawSummand {
    Int num;
    Int den;
    Int mult;
};

/// An isomorphism class of vector bundles, kept in canonical form: reduced
/// slopes, equal slopes merged, blocks sorted by strictly decreasing slope.
/// The empty sequence is the zero bundle. Values are immutable once built;
/// every operation below is a pure function, safe for concurrent use.
class Bundle {
public:
    Bundle() = default;  // zero bundle

    /// Canonicalizes arbitrary block data (merging, sorting). Throws
    /// std::invalid_argument on nonpositive multiplicity.
    static Bundle of(std::vector<StableSummand> blocks);

    /// O(slope)^mult.
    static Bundle stable(Slope slope, Int mult = Int(1));

    const std::vector<StableSummand>& summands() const { return summands_; }
    bool is_zero() const { return summands_.empty(); }

    Int rank() const;
    Int degree() const;

    /// Slope degree/rank in lowest terms. Throws std::domain_error on the
    /// zero bundle.
    Slope mu() const;
    /// Largest/smallest HN slope. Throw on the zero bundle.
    Slope mu_max() const;
    Slope mu_min() const;

    /// Exactly one block / one block of multiplicity one. Throw on zero.
    bool is_semistable() const;
    bool is_stable() const;

    friend bool operator==(const Bundle&, const Bundle&) = default;

private:
    std::vector<StableSummand> summands_;
};

/// Canonicalize raw (num, den, mult) triples: fractions reduced, equal slopes
/// merged, sorted strictly descending. Throws on zero denominator or
/// nonpositive multiplicity.
Bundle make_bundle(std::span<const RawSummand> raw);
Bundle make_bundle(std::initializer_list<RawSummand> raw);

/// O(lambda)^m -> O(-lambda)^m blockwise; an involution.
Bundle dual(const Bundle& b);

/// Multiset union of blocks, canonicalized. Rank and degree add.
Bundle direct_sum(const Bundle& a, const Bundle& b);

/// Blockwise tensor product:
///   O(r/s)^m (x) O(r'/s')^m' = O(r/s + r'/s')^(m m' gcd(ss', rs'+r's)).
/// Rank multiplies; degree is rank(a) deg(b) + rank(b) deg(a).
Bundle tensor(const Bundle& a, const Bundle& b);

/// tensor(dual(a), b).
Bundle hom_bundle(const Bundle& a, const Bundle& b);

enum class SlopeCmp { ge, gt, le, lt };

/// Direct sum of the blocks whose slope compares as requested against
/// lambda. The le/lt variants stand in for the quotients by the ge/gt parts:
/// the HN filtration splits, so the quotient is represented by the
/// complementary summand.
Bundle truncate(const Bundle& b, const Slope& lambda, SlopeCmp cmp);

}  // namespace hnpoly
