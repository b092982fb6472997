#include "hnpoly/bundle.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace hnpoly {

Bundle Bundle::of(std::vector<StableSummand> blocks) {
    // Merge equal slopes, then sort strictly descending.
    std::map<Slope, Int, std::greater<>> merged;
    for (auto& s : blocks) {
        if (s.multiplicity <= 0) throw std::invalid_argument("block multiplicity must be positive");
        merged[s.slope] += s.multiplicity;
    }
    Bundle b;
    b.summands_.reserve(merged.size());
    for (auto& [slope, mult] : merged) b.summands_.push_back({slope, mult});
    return b;
}

Bundle Bundle::stable(Slope slope, Int mult) {
    if (mult <= 0) throw std::invalid_argument("block multiplicity must be positive");
    Bundle b;
    b.summands_.push_back({std::move(slope), std::move(mult)});
    return b;
}

Int Bundle::rank() const {
    Int r = 0;
    for (const auto& s : summands_) r += s.rank();
    return r;
}

Int Bundle::degree() const {
    Int d = 0;
    for (const auto& s : summands_) d += s.degree();
    return d;
}

Slope Bundle::mu() const {
    if (is_zero()) throw std::domain_error("slope of the zero bundle");
    return Slope(degree(), rank());
}

Slope Bundle::mu_max() const {
    if (is_zero()) throw std::domain_error("slope of the zero bundle");
    return summands_.front().slope;
}

Slope Bundle::mu_min() const {
    if (is_zero()) throw std::domain_error("slope of the zero bundle");
    return summands_.back().slope;
}

bool Bundle::is_semistable() const {
    if (is_zero()) throw std::domain_error("semistability of the zero bundle");
    return summands_.size() == 1;
}

bool Bundle::is_stable() const {
    if (is_zero()) throw std::domain_error("stability of the zero bundle");
    return summands_.size() == 1 && summands_.front().multiplicity == 1;
}

Bundle make_bundle(std::span<const RawSummand> raw) {
    std::vector<StableSummand> blocks;
    blocks.reserve(raw.size());
    for (const auto& r : raw) {
        if (r.den == 0) throw std::invalid_argument("slope with zero denominator");
        if (r.den < 0) throw std::invalid_argument("slope denominator must be positive");
        if (r.mult <= 0) throw std::invalid_argument("block multiplicity must be positive");
        blocks.push_back({Slope(r.num, r.den), r.mult});
    }
    return Bundle::of(std::move(blocks));
}

Bundle make_bundle(std::initializer_list<RawSummand> raw) {
    return make_bundle(std::span<const RawSummand>(raw.begin(), raw.size()));
}

Bundle dual(const Bundle& b) {
    std::vector<StableSummand> blocks;
    blocks.reserve(b.summands().size());
    for (const auto& s : b.summands()) blocks.push_back({-s.slope, s.multiplicity});
    return Bundle::of(std::move(blocks));
}

Bundle direct_sum(const Bundle& a, const Bundle& b) {
    std::vector<StableSummand> blocks(a.summands());
    blocks.insert(blocks.end(), b.summands().begin(), b.summands().end());
    return Bundle::of(std::move(blocks));
}

Bundle tensor(const Bundle& a, const Bundle& b) {
    std::vector<StableSummand> blocks;
    for (const auto& x : a.summands()) {
        for (const auto& y : b.summands()) {
            const Int& r = x.slope.num();
            const Int& s = x.slope.den();
            const Int& rp = y.slope.num();
            const Int& sp = y.slope.den();
            Int g = gcd(s * sp, r * sp + rp * s);
            blocks.push_back({x.slope + y.slope, x.multiplicity * y.multiplicity * g});
        }
    }
    return Bundle::of(std::move(blocks));
}

Bundle hom_bundle(const Bundle& a, const Bundle& b) { return tensor(dual(a), b); }

Bundle truncate(const Bundle& b, const Slope& lambda, SlopeCmp cmp) {
    std::vector<StableSummand> blocks;
    for (const auto& s : b.summands()) {
        bool keep = false;
        switch (cmp) {
            case SlopeCmp::ge: keep = s.slope >= lambda; break;
            case SlopeCmp::gt: keep = s.slope > lambda; break;
            case SlopeCmp::le: keep = s.slope <= lambda; break;
            case SlopeCmp::lt: keep = s.slope < lambda; break;
        }
        if (keep) blocks.push_back(s);
    }
    return Bundle::of(std::move(blocks));
}

}  // namespace hnpoly
