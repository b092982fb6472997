#include "hnpoly/verify.hpp"

#include "hnpoly/extensions.hpp"
#include "hnpoly/moduli.hpp"
#include "hnpoly/parse.hpp"
#include "hnpoly/pathenum.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace hnpoly {

namespace {

bool record_less(const SweepRecord& a, const SweepRecord& b) {
    return std::tie(a.instance, a.note, a.lhs, a.rhs) < std::tie(b.instance, b.note, b.lhs, b.rhs);
}

/// Runs body(i, local_report) for i in [0, count) and merges the local
/// reports into one sorted, scheduling-independent result. An exception
/// escaping a body is itself recorded as a violation.
SweepReport run_indexed_sweep(size_t count, ExecMode mode,
                              const std::function<void(size_t, SweepReport&)>& body) {
    auto guarded = [&](size_t i, SweepReport& rep) {
        try {
            body(i, rep);
        } catch (const std::exception& ex) {
            rep.violations.push_back({"instance #" + std::to_string(i), "exception", ex.what(), ""});
        }
    };

    SweepReport total;
#ifdef _OPENMP
    if (mode == ExecMode::parallel) {
        std::vector<SweepReport> parts(static_cast<size_t>(omp_get_max_threads()));
#pragma omp parallel for schedule(dynamic)
        for (long long i = 0; i < static_cast<long long>(count); ++i)
            guarded(static_cast<size_t>(i), parts[static_cast<size_t>(omp_get_thread_num())]);
        for (auto& p : parts) total.merge(std::move(p));
        total.finalize();
        return total;
    }
#else
    (void)mode;
#endif
    for (size_t i = 0; i < count; ++i) guarded(i, total);
    total.finalize();
    return total;
}

/// Strict-inequality check shared by the two inequality sweeps: equality is
/// a violation and additionally logged as an equality case.
void check_strict(SweepReport& rep, const std::string& instance, const std::string& note,
                  const Int& lhs, const Int& rhs) {
    ++rep.instances_checked;
    if (lhs >= rhs)
        rep.violations.push_back({instance, note, lhs.get_str(), rhs.get_str()});
    if (lhs == rhs)
        rep.equality_cases.push_back({instance, note, lhs.get_str(), rhs.get_str()});
}

void check_equal(SweepReport& rep, const std::string& instance, const std::string& note,
                 const Int& lhs, const Int& rhs) {
    ++rep.instances_checked;
    if (lhs != rhs) rep.violations.push_back({instance, note, lhs.get_str(), rhs.get_str()});
}

void check_true(SweepReport& rep, const std::string& instance, const std::string& note,
                bool ok) {
    ++rep.instances_checked;
    if (!ok) rep.violations.push_back({instance, note, "false", "true"});
}

std::string pair_key(const char* na, const Bundle& a, const char* nb, const Bundle& b) {
    return std::string(na) + "=" + format_bundle(a) + "; " + nb + "=" + format_bundle(b);
}

std::string triple_key(const char* na, const Bundle& a, const char* nb, const Bundle& b,
                       const char* nc, const Bundle& c) {
    return pair_key(na, a, nb, b) + "; " + nc + "=" + format_bundle(c);
}

Int count_paths_rec(const Point& cur, const Point& end, const Polygon& ceiling,
                    const std::optional<Rational>& last_slope) {
    if (cur.x == end.x) return cur.y == end.y ? Int(1) : Int(0);
    Int total = 0;
    for (Int dx = 1; dx <= end.x - cur.x; ++dx) {
        Int nx = cur.x + dx;
        // dy range: below the ceiling, strictly flatter than the previous
        // edge, and steep enough that the remaining chord can stay flatter.
        Int dy_hi = ceiling.height_at(nx).floor() - cur.y;
        if (last_slope) {
            Rational lim = *last_slope * Rational(dx);
            Int cap = lim.is_integer() ? lim.floor() - 1 : lim.floor();
            if (cap < dy_hi) dy_hi = cap;
        }
        if (nx == end.x) {
            Int dy = end.y - cur.y;
            if (dy <= dy_hi) total += 1;
            continue;
        }
        // strictly steeper than the chord to the endpoint:
        // dy / dx > (end.y - cur.y) / (end.x - cur.x)
        Rational chord(end.y - cur.y, end.x - cur.x);
        Rational bound = chord * Rational(dx);
        Int dy_lo = bound.floor() + 1;
        for (Int dy = dy_lo; dy <= dy_hi; ++dy)
            total += count_paths_rec({nx, cur.y + dy}, end, ceiling, Rational(dy, dx));
    }
    return total;
}

}  // namespace

void SweepReport::merge(SweepReport&& other) {
    instances_checked += other.instances_checked;
    violations.insert(violations.end(), std::make_move_iterator(other.violations.begin()),
                      std::make_move_iterator(other.violations.end()));
    equality_cases.insert(equality_cases.end(),
                          std::make_move_iterator(other.equality_cases.begin()),
                          std::make_move_iterator(other.equality_cases.end()));
}

void SweepReport::finalize() {
    std::sort(violations.begin(), violations.end(), record_less);
    std::sort(equality_cases.begin(), equality_cases.end(), record_less);
}

std::vector<Slope> slope_set(long max_num, long max_den) {
    std::vector<Slope> slopes;
    for (long d = -max_num; d <= max_num; ++d)
        for (long h = 1; h <= max_den; ++h)
            if (gcd(Int(d), Int(h)) == 1) slopes.emplace_back(d, h);
    std::sort(slopes.begin(), slopes.end(), std::greater<>());
    return slopes;
}

std::vector<Bundle> semistable_bundles(long max_rank, long max_num, long max_den) {
    std::vector<Bundle> out;
    for (const Slope& s : slope_set(max_num, max_den)) {
        long h = to_long_checked(s.den());
        for (long m = 1; m * h <= max_rank; ++m) out.push_back(Bundle::stable(s, m));
    }
    return out;
}

std::vector<Bundle> all_bundles(long max_rank, long max_num, long max_den) {
    std::vector<Slope> slopes = slope_set(max_num, max_den);
    std::vector<Bundle> out;
    std::vector<StableSummand> blocks;
    std::function<void(size_t, long)> rec = [&](size_t idx, long budget) {
        if (idx == slopes.size()) {
            if (!blocks.empty()) out.push_back(Bundle::of(blocks));
            return;
        }
        rec(idx + 1, budget);
        long h = to_long_checked(slopes[idx].den());
        blocks.push_back({slopes[idx], Int(0)});
        for (long m = 1; m * h <= budget; ++m) {
            blocks.back().multiplicity = m;
            rec(idx + 1, budget - m * h);
        }
        blocks.pop_back();
    };
    rec(0, max_rank);
    return out;
}

Int count_paths_below(const Polygon& ceiling) {
    return count_paths_rec({0, 0}, ceiling.end(), ceiling, std::nullopt);
}

std::vector<Bundle> candidates_step1(const Bundle& e, const Bundle& f) {
    if (f.is_zero() || !f.is_semistable())
        throw std::invalid_argument("candidates_step1 needs semistable nonzero f");
    if (e.is_zero() || e.rank() <= f.rank())
        throw std::invalid_argument("candidates_step1 needs rank e > rank f");
    if (e.mu_max() >= f.mu())
        throw std::invalid_argument("candidates_step1 needs mu_max(e) < mu(f)");

    Polygon pe = polygon_of(e);
    const Int re = pe.end().x;
    std::vector<Bundle> out;
    for (Int rq = 1; rq <= f.rank(); ++rq) {
        // Degree window: each strip of q at least the matching strip of e,
        // each at most mu(f).
        Int dq_lo = (Rational(pe.end().y) - pe.height_at(re - rq)).ceil();
        Int dq_hi = (f.mu() * Rational(rq)).floor();
        for (Int dq = dq_lo; dq <= dq_hi; ++dq) {
            PathEnumOptions opts;
            opts.max_first_slope = f.mu();
            for (const Polygon& path : concave_paths_to({rq, dq}, opts)) {
                Bundle q = bundle_of(path);
                if (q == f) continue;
                if (quotient_necessary(e, q)) out.push_back(std::move(q));
            }
        }
    }
    return out;
}

SweepReport verify_step1(const Bundle& e, const Bundle& f) {
    SweepReport rep;
    for (const Bundle& q : candidates_step1(e, f)) {
        Int lhs = dim_hom(e, q) + dim_hom(q, f);
        Int rhs = dim_hom(e, f) + dim_aut(q);
        check_strict(rep, triple_key("E", e, "F", f, "Q", q), "surjection inequality", lhs, rhs);
    }
    rep.finalize();
    return rep;
}

std::vector<Bundle> candidates_step2(const Bundle& d, const Bundle& f, const Bundle& e) {
    if (d.is_zero() || !d.is_semistable() || f.is_zero() || !f.is_semistable())
        throw std::invalid_argument("candidates_step2 needs semistable nonzero d and f");
    if (d.mu() > f.mu()) throw std::invalid_argument("candidates_step2 needs mu(d) <= mu(f)");
    if (!polygon_leq(polygon_of(e), polygon_of(direct_sum(d, f))))
        throw std::invalid_argument("candidates_step2 needs polygon_of(e) <= polygon_of(d (+) f)");
    if (e.mu_max() >= f.mu())
        throw std::invalid_argument("candidates_step2 needs mu_max(e) < mu(f)");

    PathEnumOptions opts;
    opts.max_first_slope = e.mu_max();
    std::vector<Bundle> out;
    for (const Polygon& path : concave_paths_to({d.rank(), d.degree()}, opts)) {
        Bundle k = bundle_of(path);
        if (!k.is_semistable()) out.push_back(std::move(k));
    }
    return out;
}

SweepReport verify_step2(const Bundle& d, const Bundle& f, const Bundle& e) {
    SweepReport rep;
    for (const Bundle& k : candidates_step2(d, f, e)) {
        Int lhs = dim_hom(k, e);
        Int rhs = dim_aut(k) + dim_hom(e, f);
        check_strict(rep, triple_key("D", d, "F", f, "E", e) + "; K=" + format_bundle(k),
                     "kernel inequality", lhs, rhs);
    }
    rep.finalize();
    return rep;
}

SweepReport cross_check_dimensions(const Bundle& f1, const Bundle& f2) {
    SweepReport rep;
    Polygon upper = polygon_of(direct_sum(f1, f2));
    Bundle split = direct_sum(f1, f2);
    std::vector<Bundle> exts = enumerate_extensions(f1, f2);
    std::vector<Int> values;
    values.reserve(exts.size());
    for (const Bundle& e : exts) {
        std::string key = triple_key("F1", f1, "F2", f2, "E", e);
        StratumDim d = dim_ext_stratum(f1, f2, e);
        values.push_back(d.value);
        check_equal(rep, key, "dimension equals enclosed area", d.value,
                    twice_area_between(polygon_of(e), upper));
        check_true(rep, key, "stratum known nonempty", d.nonempty_known == Nonempty::yes);
        ++rep.instances_checked;
        if (d.value < 0)
            rep.violations.push_back({key, "dimension nonnegative", d.value.get_str(), "0"});
        if (d.value == 0) {
            rep.equality_cases.push_back({key, "zero dimension", "0", "0"});
            if (!(e == split))
                rep.violations.push_back({key, "zero dimension only at the split bundle",
                                          format_bundle(e), format_bundle(split)});
        }
    }
    // Antitone along the polygon order.
    for (size_t i = 0; i < exts.size(); ++i) {
        Polygon pi = polygon_of(exts[i]);
        for (size_t j = 0; j < exts.size(); ++j) {
            if (i == j) continue;
            if (polygon_leq(pi, polygon_of(exts[j])))
                check_true(rep,
                           triple_key("F1", f1, "F2", f2, "E", exts[i]) + " vs E'=" +
                               format_bundle(exts[j]),
                           "dimension antitone in the polygon order", values[i] >= values[j]);
        }
    }
    rep.finalize();
    return rep;
}

SweepReport sweep_tensor(long max_num, long max_den, ExecMode mode) {
    std::vector<Slope> slopes = slope_set(max_num, max_den);
    std::vector<std::pair<Slope, Slope>> pairs;
    for (const Slope& a : slopes)
        for (const Slope& b : slopes) pairs.emplace_back(a, b);
    return run_indexed_sweep(pairs.size(), mode, [&](size_t i, SweepReport& rep) {
        Bundle a = Bundle::stable(pairs[i].first);
        Bundle b = Bundle::stable(pairs[i].second);
        Bundle t = tensor(a, b);
        std::string key = pair_key("A", a, "B", b);
        check_equal(rep, key, "rank multiplicative", t.rank(), a.rank() * b.rank());
        check_equal(rep, key, "degree bilinear", t.degree(),
                    a.rank() * b.degree() + b.rank() * a.degree());
        check_true(rep, key, "product semistable of summed slope",
                   t.is_semistable() && t.mu() == a.mu() + b.mu());
    });
}

SweepReport sweep_area_identity(const SweepBounds& b, ExecMode mode) {
    std::vector<Bundle> bundles = all_bundles(b.max_rank, b.max_num, b.max_den);
    return run_indexed_sweep(bundles.size(), mode, [&](size_t i, SweepReport& rep) {
        const Bundle& v = bundles[i];
        std::string key = "V=" + format_bundle(v);
        Polygon p = polygon_of(v);
        Int inst = instability(v);
        check_equal(rep, key, "instability equals twice the area over the chord", inst,
                    twice_area_between(chord_of(p), p));
        check_true(rep, key, "instability vanishes iff semistable",
                   (inst == 0) == v.is_semistable());
    });
}

SweepReport sweep_step1(long max_rank_e, long max_rank_f, long max_num, long max_den,
                        ExecMode mode) {
    std::vector<Bundle> es = all_bundles(max_rank_e, max_num, max_den);
    std::vector<Bundle> fs = semistable_bundles(max_rank_f, max_num, max_den);
    std::vector<std::pair<size_t, size_t>> pairs;
    for (size_t i = 0; i < es.size(); ++i)
        for (size_t j = 0; j < fs.size(); ++j)
            if (es[i].rank() > fs[j].rank() && es[i].mu_max() < fs[j].mu())
                pairs.emplace_back(i, j);
    return run_indexed_sweep(pairs.size(), mode, [&](size_t i, SweepReport& rep) {
        rep.merge(verify_step1(es[pairs[i].first], fs[pairs[i].second]));
    });
}

SweepReport sweep_step2(long max_total_rank, long max_num, long max_den, ExecMode mode) {
    std::vector<Bundle> ss = semistable_bundles(max_total_rank - 1, max_num, max_den);
    struct Inst {
        Bundle d, f, e;
    };
    std::vector<Inst> insts;
    for (const Bundle& d : ss) {
        for (const Bundle& f : ss) {
            if (d.rank() + f.rank() > max_total_rank || d.mu() > f.mu()) continue;
            for (const Polygon& pe : down_set(polygon_of(direct_sum(d, f)))) {
                Bundle e = bundle_of(pe);
                if (e.mu_max() < f.mu()) insts.push_back({d, f, e});
            }
        }
    }
    return run_indexed_sweep(insts.size(), mode, [&](size_t i, SweepReport& rep) {
        rep.merge(verify_step2(insts[i].d, insts[i].f, insts[i].e));
    });
}

SweepReport sweep_quantitative_dim(long max_rank_each, long max_num, long max_den,
                                   ExecMode mode) {
    std::vector<Bundle> ss = semistable_bundles(max_rank_each, max_num, max_den);
    std::vector<std::pair<size_t, size_t>> pairs;
    for (size_t i = 0; i < ss.size(); ++i)
        for (size_t j = 0; j < ss.size(); ++j)
            if (ss[i].mu() < ss[j].mu()) pairs.emplace_back(i, j);
    return run_indexed_sweep(pairs.size(), mode, [&](size_t i, SweepReport& rep) {
        rep.merge(cross_check_dimensions(ss[pairs[i].first], ss[pairs[i].second]));
    });
}

namespace {

void check_witness(SweepReport& rep, const Bundle& e, const std::vector<Bundle>& graded) {
    std::string key = "E=" + format_bundle(e) + "; graded=[";
    for (size_t i = 0; i < graded.size(); ++i)
        key += (i ? ", " : "") + format_bundle(graded[i]);
    key += "]";

    FiltrationWitness w = build_filtration_witness(e, graded);
    check_true(rep, key, "chain length", w.chain.size() == graded.size() + 1);
    check_true(rep, key, "chain starts at zero", w.chain.front().is_zero());
    check_true(rep, key, "chain ends at e", w.chain.back() == e);
    Bundle partial_sum;
    for (size_t i = 1; i < w.chain.size(); ++i) {
        const Bundle& prev = w.chain[i - 1];
        const Bundle& cur = w.chain[i];
        const Bundle& piece = graded[i - 1];
        partial_sum = direct_sum(partial_sum, piece);
        check_equal(rep, key, "rank increment", cur.rank() - prev.rank(), piece.rank());
        check_equal(rep, key, "degree increment", cur.degree() - prev.degree(), piece.degree());
        check_true(rep, key, "chain member below its partial sum",
                   polygon_leq(polygon_of(cur), polygon_of(partial_sum)));
        check_true(rep, key, "two-step condition",
                   polygon_leq(polygon_of(cur), polygon_of(direct_sum(prev, piece))));
        check_true(rep, key, "partial filtration feasible",
                   exists_filtration(cur, std::span(graded.data(), i)));
    }
}

}  // namespace

SweepReport sweep_filtration(long max_total_rank, long max_num, long max_den, ExecMode mode) {
    std::vector<Bundle> ss = semistable_bundles(max_total_rank - 1, max_num, max_den);
    struct Inst {
        std::vector<Bundle> graded;
    };
    std::vector<Inst> insts;
    for (size_t i = 0; i < ss.size(); ++i) {
        for (size_t j = 0; j < ss.size(); ++j) {
            if (!(ss[i].mu() < ss[j].mu())) continue;
            Int r2 = ss[i].rank() + ss[j].rank();
            if (r2 > max_total_rank) continue;
            insts.push_back({{ss[i], ss[j]}});
            for (size_t k = 0; k < ss.size(); ++k) {
                if (!(ss[j].mu() < ss[k].mu())) continue;
                if (r2 + ss[k].rank() > max_total_rank) continue;
                insts.push_back({{ss[i], ss[j], ss[k]}});
            }
        }
    }
    return run_indexed_sweep(insts.size(), mode, [&](size_t i, SweepReport& rep) {
        const auto& graded = insts[i].graded;
        Bundle total;
        for (const Bundle& g : graded) total = direct_sum(total, g);
        for (const Polygon& pe : down_set(polygon_of(total)))
            check_witness(rep, bundle_of(pe), graded);
        if (graded.size() == 2) {
            // Agreement of the two-step criterion with the extension
            // criterion, on infeasible polygons too: sweep everything under
            // a strictly higher ceiling.
            Point end = polygon_of(total).end();
            PathEnumOptions opts;
            opts.max_first_slope = total.mu_max() + Rational(1);
            for (const Polygon& pe : concave_paths_to(end, opts)) {
                Bundle e = bundle_of(pe);
                check_true(rep,
                           triple_key("F1", graded[0], "F2", graded[1], "E", e),
                           "two-step criterion agrees with extension criterion",
                           exists_filtration(e, graded) == exists_extension(graded[0], graded[1], e));
            }
        }
    });
}

SweepReport sweep_downset_counts(long max_width, long max_abs_deg, ExecMode mode) {
    std::vector<Polygon> ceilings;
    for (long n = 1; n <= max_width; ++n) {
        for (long d = -max_abs_deg; d <= max_abs_deg; ++d) {
            PathEnumOptions opts;
            opts.y_abs_cap = Int(max_abs_deg);
            auto paths = concave_paths_to({n, d}, opts);
            ceilings.insert(ceilings.end(), paths.begin(), paths.end());
        }
    }
    return run_indexed_sweep(ceilings.size(), mode, [&](size_t i, SweepReport& rep) {
        const Polygon& c = ceilings[i];
        check_equal(rep, "ceiling=" + format_polygon(c), "down_set size equals path count",
                    Int(down_set(c).size()), count_paths_below(c));
    });
}

}  // namespace hnpoly
