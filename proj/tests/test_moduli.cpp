#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "hnpoly/extensions.hpp"
#include "hnpoly/moduli.hpp"
#include "hnpoly/verify.hpp"

#include <random>

using namespace hnpoly;

namespace {

Bundle stable(long num, long den, long mult = 1) {
    return Bundle::stable(Slope(num, den), Int(mult));
}

}  // namespace

TEST_CASE("dim_h0") {
    CHECK(dim_h0(stable(2, 3)) == 2);
    CHECK(dim_h0(stable(-1, 1)) == 0);
    CHECK(dim_h0(make_bundle({{0, 1, 1}, {1, 1, 1}})) == 1);
    CHECK(dim_h0(Bundle{}) == 0);
}

TEST_CASE("dim_hom and dim_aut") {
    CHECK(dim_hom(stable(0, 1), stable(1, 1)) == 1);
    CHECK(dim_hom(stable(1, 1), stable(0, 1)) == 0);
    CHECK(dim_aut(stable(1, 2, 5)) == 0);
    CHECK(dim_aut(make_bundle({{1, 1, 1}, {0, 1, 1}})) == 1);

    // dim_hom(O, F) is the section dimension of F
    for (const Bundle& f : all_bundles(4, 3, 3)) CHECK(dim_hom(stable(0, 1), f) == dim_h0(f));
}

TEST_CASE("quotient_necessary") {
    Bundle e = stable(0, 1, 2);
    CHECK(quotient_necessary(e, e));
    CHECK_FALSE(quotient_necessary(e, stable(-1, 1)));
    CHECK(quotient_necessary(e, stable(0, 1)));
    CHECK(quotient_necessary(e, stable(1, 1)));
    CHECK_THROWS_AS(quotient_necessary(e, Bundle{}), std::invalid_argument);
    CHECK_THROWS_AS(quotient_necessary(e, stable(0, 1, 3)), std::invalid_argument);

    // projections of a direct sum onto its summands are genuine quotients
    Bundle sum = make_bundle({{1, 1, 1}, {-1, 2, 1}});
    CHECK(quotient_necessary(sum, stable(1, 1)));
    CHECK(quotient_necessary(sum, stable(-1, 2)));
    // a target steeper than any strip of e is ruled out
    CHECK_FALSE(quotient_necessary(make_bundle({{1, 1, 1}, {0, 1, 1}}), stable(-1, 1)));
}

TEST_CASE("subbundle_necessary mirrors quotient_necessary under duality") {
    std::vector<Bundle> pool = all_bundles(4, 2, 2);
    std::mt19937 rng(41);
    std::uniform_int_distribution<size_t> pick(0, pool.size() - 1);
    for (int i = 0; i < 300; ++i) {
        const Bundle& e = pool[pick(rng)];
        const Bundle& q = pool[pick(rng)];
        if (q.rank() > e.rank()) continue;
        CHECK(subbundle_necessary(e, q) == quotient_necessary(dual(e), dual(q)));
    }
    // the top HN block is always a subbundle
    for (const Bundle& e : pool) {
        Bundle top = Bundle::stable(e.mu_max(), e.summands().front().multiplicity);
        CHECK(subbundle_necessary(e, top));
    }
}

TEST_CASE("dim_hom_stratum") {
    // image O(0) inside maps O(0)^2 -> O(1)
    StratumDim d = dim_hom_stratum(stable(0, 1, 2), stable(1, 1), stable(0, 1));
    CHECK(d.value == 1);
    CHECK(d.value < dim_hom(stable(0, 1, 2), stable(1, 1)));

    // full-image stratum: q = f semistable, value collapses to dim_hom
    Bundle e = stable(0, 1, 2);
    Bundle f = stable(1, 1);
    StratumDim full = dim_hom_stratum(e, f, f);
    CHECK(full.value == dim_hom(e, f));
    CHECK(full.nonempty_known == Nonempty::yes);

    // q = e = f semistable: the automorphism stratum
    StratumDim aut = dim_hom_stratum(f, f, f);
    CHECK(aut.value == 0);
    CHECK(aut.nonempty_known == Nonempty::yes);

    // failing the necessary conditions reports a known-empty stratum
    StratumDim empty = dim_hom_stratum(stable(0, 1, 2), stable(1, 1), stable(-1, 1));
    CHECK(empty.nonempty_known == Nonempty::no);

    CHECK_THROWS_AS(dim_hom_stratum(e, f, Bundle{}), std::invalid_argument);
}

TEST_CASE("dim_hom_stratum never exceeds dim_hom on admissible strata") {
    // the stratification refines the hom space: every stratum passing the
    // checkable conditions fits inside, with equality only at full image
    std::vector<Bundle> es = all_bundles(4, 2, 2);
    std::vector<Bundle> fs = semistable_bundles(2, 2, 2);
    for (const Bundle& e : es) {
        for (const Bundle& f : fs) {
            if (e.rank() <= f.rank() || !(e.mu_max() < f.mu())) continue;
            for (const Bundle& q : candidates_step1(e, f)) {
                StratumDim d = dim_hom_stratum(e, f, q);
                CHECK(d.value < dim_hom(e, f));
            }
            StratumDim at_f = dim_hom_stratum(e, f, f);
            CHECK(at_f.value == dim_hom(e, f));
        }
    }
}

TEST_CASE("dim_surj_with_kernel") {
    Bundle e = make_bundle({{1, 1, 1}, {1, 2, 1}});
    Bundle f = stable(2, 1);
    StratumDim d1 = dim_surj_with_kernel(e, f, make_bundle({{1, 1, 1}, {-1, 1, 1}}));
    CHECK(d1.value == 3);
    CHECK(d1.nonempty_known == Nonempty::unknown);

    StratumDim d2 = dim_surj_with_kernel(e, f, stable(0, 1, 2));
    CHECK(d2.value == 4);
    CHECK(d2.nonempty_known == Nonempty::yes);
    CHECK(d2.value == dim_hom(e, f) - 0);  // open semistable-kernel stratum

    CHECK_THROWS_AS(dim_surj_with_kernel(e, Bundle{}, e), std::invalid_argument);
    CHECK_THROWS_AS(dim_surj_with_kernel(e, f, stable(0, 1)), std::invalid_argument);
    CHECK_THROWS_AS(dim_surj_with_kernel(e, make_bundle({{1, 1, 1}, {0, 1, 1}}), stable(0, 1)),
                    std::invalid_argument);
}

TEST_CASE("non-semistable kernels sit strictly below the hom dimension") {
    std::vector<Bundle> ds = semistable_bundles(3, 2, 2);
    std::vector<Bundle> fs = semistable_bundles(3, 2, 2);
    int checked = 0;
    for (const Bundle& dd : ds) {
        for (const Bundle& f : fs) {
            if (dd.mu() > f.mu() || dd.rank() + f.rank() > 5) continue;
            for (const Polygon& pe : down_set(polygon_of(direct_sum(dd, f)))) {
                Bundle e = bundle_of(pe);
                if (!(e.mu_max() < f.mu())) continue;
                for (const Bundle& k : candidates_step2(dd, f, e)) {
                    StratumDim d = dim_surj_with_kernel(e, f, k);
                    CHECK(d.value < dim_hom(e, f));
                    ++checked;
                }
            }
        }
    }
    CHECK(checked > 50);
}

TEST_CASE("dim_ext_stratum") {
    Bundle f1 = stable(-1, 2, 2);
    Bundle f2 = stable(9, 4);
    Bundle e = make_bundle({{1, 3, 1}, {6, 5, 1}});
    StratumDim d = dim_ext_stratum(f1, f2, e);
    CHECK(d.value == 31);
    CHECK(d.nonempty_known == Nonempty::yes);

    StratumDim split = dim_ext_stratum(f1, f2, direct_sum(f1, f2));
    CHECK(split.value == 0);

    // the semistable middle realizes the maximal dimension when it exists
    Bundle chord = bundle_of(chord_of(polygon_of(direct_sum(f1, f2))));
    StratumDim top = dim_ext_stratum(f1, f2, chord);
    CHECK(top.value == deg_hom(f1, f2));

    CHECK_THROWS_AS(dim_ext_stratum(f2, f1, e), std::invalid_argument);
    CHECK_THROWS_AS(dim_ext_stratum(f1, f2, stable(1, 1)), std::invalid_argument);
}

TEST_CASE("dim_ext_stratum is antitone and vanishes exactly at the split bundle") {
    std::vector<Bundle> pool = semistable_bundles(3, 2, 2);
    for (const Bundle& f1 : pool) {
        for (const Bundle& f2 : pool) {
            if (!(f1.mu() < f2.mu())) continue;
            Bundle split = direct_sum(f1, f2);
            auto exts = enumerate_extensions(f1, f2);
            for (size_t i = 0; i < exts.size(); ++i) {
                StratumDim di = dim_ext_stratum(f1, f2, exts[i]);
                CHECK(di.value >= 0);
                CHECK((di.value == 0) == (exts[i] == split));
                for (size_t j = 0; j < exts.size(); ++j) {
                    if (polygon_leq(polygon_of(exts[i]), polygon_of(exts[j])))
                        CHECK(di.value >= dim_ext_stratum(f1, f2, exts[j]).value);
                }
            }
        }
    }
}
