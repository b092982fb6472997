#include "hnpoly/cli.hpp"

#include "hnpoly/extensions.hpp"
#include "hnpoly/io_json.hpp"
#include "hnpoly/moduli.hpp"
#include "hnpoly/parse.hpp"
#include "hnpoly/render.hpp"
#include "hnpoly/strata.hpp"
#include "hnpoly/verify.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

namespace hnpoly::cli {

namespace {

using nlohmann::json;

constexpr int kOk = 0;
constexpr int kDomainError = 1;
constexpr int kViolation = 2;

bool looks_like_json(const std::string& text) {
    size_t i = text.find_first_not_of(" \t\n");
    return i != std::string::npos && text[i] == '[';
}

/// Accepts the text grammar or the JSON form [[d,h,m],...].
Bundle parse_bundle_arg(const std::string& text) {
    if (looks_like_json(text)) return bundle_from_json(json::parse(text));
    return parse_bundle(text);
}

/// Accepts either a bundle (text or JSON) or a polygon JSON array. A JSON
/// array of pairs is a polygon; of triples, a bundle.
Polygon parse_polygon_arg(const std::string& text) {
    if (looks_like_json(text)) {
        json j = json::parse(text);
        if (!j.empty() && j[0].is_array() && j[0].size() == 3)
            return polygon_of(bundle_from_json(j));
        return polygon_from_json(j);
    }
    return polygon_of(parse_bundle(text));
}

void emit(std::ostream& out, const std::string& format, const json& j,
          const std::string& text_form) {
    if (format == "json")
        out << j.dump(2) << "\n";
    else
        out << text_form << "\n";
}

json info_json(const Bundle& b) {
    json j;
    j["bundle"] = format_bundle(b);
    j["rank"] = int_to_json(b.rank());
    j["degree"] = int_to_json(b.degree());
    if (!b.is_zero()) {
        j["slope"] = b.mu().str();
        j["semistable"] = b.is_semistable();
        j["stable"] = b.is_stable();
    }
    j["polygon"] = polygon_to_json(polygon_of(b));
    json vecs = json::array();
    for (const auto& v : hn_vectors(b)) vecs.push_back({int_to_json(v.x), int_to_json(v.y)});
    j["hn_vectors"] = vecs;
    j["summands"] = bundle_to_json(b);
    return j;
}

std::string info_text(const Bundle& b) {
    std::ostringstream os;
    os << "bundle:      " << format_bundle(b) << "\n";
    os << "rank:        " << b.rank().get_str() << "\n";
    os << "degree:      " << b.degree().get_str() << "\n";
    if (!b.is_zero()) {
        os << "slope:       " << b.mu().str() << "\n";
        os << "semistable:  " << (b.is_semistable() ? "yes" : "no") << "\n";
        os << "stable:      " << (b.is_stable() ? "yes" : "no") << "\n";
    }
    os << "polygon:     " << format_polygon(polygon_of(b));
    return os.str();
}

struct VerifySelection {
    bool tensor = false, area = false, step1 = false, step2 = false, dims = false,
         filtration = false, closure = false;
    bool any() const { return tensor || area || step1 || step2 || dims || filtration || closure; }
};

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"exact calculus of Harder-Narasimhan polygons for vector bundles on the "
                 "Fargues-Fontaine curve"};
    app.require_subcommand(1);
    app.fallthrough();  // let --format appear after the subcommand

    std::string format = "text";
    app.add_option("--format", format, "output format")
        ->check(CLI::IsMember({"text", "json", "dot", "svg", "tikz"}))
        ->capture_default_str();

    // info
    auto* info = app.add_subcommand("info", "rank, degree, slope and polygon of a bundle");
    std::string info_expr;
    info->add_option("bundle", info_expr, "bundle expression, e.g. \"O(-1/2)^2 + O(9/4)\"")
        ->required();

    // tensor / hom
    auto* tensor_cmd = app.add_subcommand("tensor", "tensor product of two bundles");
    auto* hom_cmd = app.add_subcommand("hom", "the bundle of maps between two bundles");
    std::vector<std::string> binary_args;
    tensor_cmd->add_option("bundles", binary_args, "two bundle expressions")->expected(2);
    hom_cmd->add_option("bundles", binary_args, "two bundle expressions")->expected(2);

    // ext-check / ext-enum
    std::string f1_expr, f2_expr, e_expr;
    auto* ext_check = app.add_subcommand("ext-check", "decide the extension problem");
    ext_check->add_option("--f1", f1_expr, "subobject (semistable)")->required();
    ext_check->add_option("--f2", f2_expr, "quotient (semistable)")->required();
    ext_check->add_option("--e", e_expr, "candidate middle bundle")->required();
    auto* ext_enum = app.add_subcommand("ext-enum", "enumerate all middle bundles");
    ext_enum->add_option("--f1", f1_expr, "subobject (semistable)")->required();
    ext_enum->add_option("--f2", f2_expr, "quotient (semistable)")->required();

    // filtration
    auto* filt = app.add_subcommand("filtration", "decide and construct a multi-step filtration");
    std::vector<std::string> graded_exprs;
    filt->add_option("--e", e_expr, "bundle to filter")->required();
    filt->add_option("--graded", graded_exprs, "graded pieces, slope-increasing (repeatable)")
        ->required();

    // dim
    auto* dim = app.add_subcommand("dim", "moduli dimension formulas");
    std::vector<std::string> h0_args, hom_args, aut_args, homstr_args, surjker_args;
    dim->add_option("--h0", h0_args, "sections of E")->expected(1);
    dim->add_option("--hom", hom_args, "maps E -> F")->expected(2);
    dim->add_option("--aut", aut_args, "automorphisms of E")->expected(1);
    dim->add_option("--hom-stratum", homstr_args, "maps E -> F with image class Q")->expected(3);
    dim->add_option("--surj-kernel", surjker_args, "surjections E -> F with kernel class K")
        ->expected(3);
    bool dim_ext = false;
    dim->add_flag("--ext", dim_ext, "extensions of F2 by F1 isomorphic to E");
    dim->add_option("--f1", f1_expr, "subobject for --ext");
    dim->add_option("--f2", f2_expr, "quotient for --ext");
    dim->add_option("--e", e_expr, "middle bundle for --ext");

    // closure / poset
    auto* closure = app.add_subcommand("closure", "stratum closure order");
    std::string target_expr, stratum_expr;
    closure->add_option("--target", target_expr, "target polygon or bundle")->required();
    closure->add_option("--stratum", stratum_expr, "stratum polygon or bundle")->required();
    auto* poset = app.add_subcommand("poset", "finite closed stratum poset under a ceiling");
    std::string ceiling_expr;
    poset->add_option("--ceiling", ceiling_expr, "ceiling polygon or bundle")->required();

    // verify
    auto* verify = app.add_subcommand("verify", "exhaustive desk-scale verification sweeps");
    VerifySelection sel;
    bool all_sweeps = false, serial = false;
    verify->add_flag("--tensor", sel.tensor, "tensor rank/degree identities");
    verify->add_flag("--area", sel.area, "instability equals enclosed area");
    verify->add_flag("--step1", sel.step1, "surjection inequality sweep");
    verify->add_flag("--step2", sel.step2, "kernel inequality sweep");
    verify->add_flag("--dims", sel.dims, "extension stratum dimension cross-checks");
    verify->add_flag("--filtration", sel.filtration, "filtration witness sweep");
    verify->add_flag("--closure", sel.closure, "down-set counting sweep");
    verify->add_flag("--all", all_sweeps, "run every sweep");
    verify->add_flag("--serial", serial, "use the serial reference instead of OpenMP");
    long max_rank = 5, max_num = 3, max_den = 3, max_rank_e = 6, max_rank_f = 3;
    long max_total_rank = 6, max_rank_each = 4, max_filt_rank = 5, max_width = 6, max_abs_deg = 6;
    long tensor_num = 4, tensor_den = 4;
    verify->add_option("--max-rank", max_rank, "rank bound for the area sweep")
        ->capture_default_str();
    verify->add_option("--max-num", max_num, "slope numerator bound")->capture_default_str();
    verify->add_option("--max-den", max_den, "slope denominator bound")->capture_default_str();
    verify->add_option("--max-rank-e", max_rank_e, "rank bound for E in the step1 sweep")
        ->capture_default_str();
    verify->add_option("--max-rank-f", max_rank_f, "rank bound for F in the step1 sweep")
        ->capture_default_str();
    verify->add_option("--max-total-rank", max_total_rank, "total rank bound for the step2 sweep")
        ->capture_default_str();
    verify->add_option("--max-rank-each", max_rank_each, "per-factor rank bound for --dims")
        ->capture_default_str();
    verify->add_option("--max-filtration-rank", max_filt_rank,
                       "total rank bound for the filtration sweep")
        ->capture_default_str();
    verify->add_option("--max-width", max_width, "ceiling width bound for --closure")
        ->capture_default_str();
    verify->add_option("--max-abs-deg", max_abs_deg, "ceiling height bound for --closure")
        ->capture_default_str();
    verify->add_option("--tensor-max-num", tensor_num, "numerator bound for --tensor")
        ->capture_default_str();
    verify->add_option("--tensor-max-den", tensor_den, "denominator bound for --tensor")
        ->capture_default_str();

    // render
    auto* render = app.add_subcommand("render", "draw a polygon comparison");
    std::string lower_expr, upper_expr, out_path;
    render->add_option("--lower", lower_expr, "lower polygon or bundle")->required();
    render->add_option("--upper", upper_expr, "upper polygon or bundle")->required();
    render->add_option("-o,--output", out_path, "write to a file instead of stdout");

    std::vector<const char*> argv;
    argv.push_back("hnpoly");
    for (const auto& a : args) argv.push_back(a.c_str());

    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::CallForHelp& e) {
        out << app.help();
        return kOk;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n";
        return kDomainError;
    }

    try {
        if (info->parsed()) {
            Bundle b = parse_bundle_arg(info_expr);
            emit(out, format, info_json(b), info_text(b));
            return kOk;
        }
        if (tensor_cmd->parsed() || hom_cmd->parsed()) {
            Bundle a = parse_bundle_arg(binary_args[0]);
            Bundle b = parse_bundle_arg(binary_args[1]);
            Bundle r = tensor_cmd->parsed() ? tensor(a, b) : hom_bundle(a, b);
            emit(out, format, json{{"bundle", format_bundle(r)}, {"summands", bundle_to_json(r)}},
                 format_bundle(r));
            return kOk;
        }
        if (ext_check->parsed()) {
            bool exists =
                exists_extension(parse_bundle_arg(f1_expr), parse_bundle_arg(f2_expr), parse_bundle_arg(e_expr));
            emit(out, format, json{{"exists", exists}},
                 std::string("exists: ") + (exists ? "true" : "false"));
            return kOk;
        }
        if (ext_enum->parsed()) {
            std::vector<Bundle> exts =
                enumerate_extensions(parse_bundle_arg(f1_expr), parse_bundle_arg(f2_expr));
            json list = json::array();
            std::ostringstream text;
            text << "count: " << exts.size();
            for (const auto& e : exts) {
                list.push_back({{"bundle", format_bundle(e)},
                                {"polygon", polygon_to_json(polygon_of(e))}});
                text << "\n" << format_bundle(e);
            }
            emit(out, format, json{{"count", exts.size()}, {"extensions", list}}, text.str());
            return kOk;
        }
        if (filt->parsed()) {
            Bundle e = parse_bundle_arg(e_expr);
            std::vector<Bundle> graded;
            for (const auto& g : graded_exprs) graded.push_back(parse_bundle_arg(g));
            bool exists = exists_filtration(e, graded);
            json j{{"exists", exists}};
            std::ostringstream text;
            text << "exists: " << (exists ? "true" : "false");
            if (exists) {
                FiltrationWitness w = build_filtration_witness(e, graded);
                json chain = json::array(), witness = json::array();
                for (const auto& step : w.chain) {
                    chain.push_back(format_bundle(step));
                    witness.push_back(polygon_to_json(polygon_of(step)));
                    text << "\n" << format_bundle(step);
                }
                j["chain"] = chain;
                j["witness"] = witness;
            }
            emit(out, format, j, text.str());
            return kOk;
        }
        if (dim->parsed()) {
            StratumDim d;
            std::string formula;
            if (!h0_args.empty()) {
                d = {dim_h0(parse_bundle_arg(h0_args[0])), Nonempty::yes};
                formula = "deg E^{>=0}";
            } else if (!hom_args.empty()) {
                d = {dim_hom(parse_bundle_arg(hom_args[0]), parse_bundle_arg(hom_args[1])), Nonempty::yes};
                formula = "deg(E^v (x) F)^{>=0}";
            } else if (!aut_args.empty()) {
                d = {dim_aut(parse_bundle_arg(aut_args[0])), Nonempty::yes};
                formula = "deg(E^v (x) E)^{>=0}";
            } else if (!homstr_args.empty()) {
                d = dim_hom_stratum(parse_bundle_arg(homstr_args[0]),
                                    parse_bundle_arg(homstr_args[1]),
                                    parse_bundle_arg(homstr_args[2]));
                formula =
                    "deg(E^v (x) Q)^{>=0} + deg(Q^v (x) F)^{>=0} - deg(Q^v (x) Q)^{>=0}";
            } else if (!surjker_args.empty()) {
                d = dim_surj_with_kernel(parse_bundle_arg(surjker_args[0]),
                                         parse_bundle_arg(surjker_args[1]),
                                         parse_bundle_arg(surjker_args[2]));
                formula = "deg(K^v (x) E)^{>=0} - deg(K^v (x) K)^{>=0}";
            } else if (dim_ext) {
                d = dim_ext_stratum(parse_bundle_arg(f1_expr), parse_bundle_arg(f2_expr),
                                    parse_bundle_arg(e_expr));
                formula = "deg(F2 (x) F1^v) - deg(E^v (x) E)^{>=0}";
            } else {
                err << "error: dim needs one of --h0/--hom/--aut/--hom-stratum/--surj-kernel/--ext\n";
                return kDomainError;
            }
            emit(out, format, stratum_to_json(d, formula), d.value.get_str());
            return kOk;
        }
        if (closure->parsed()) {
            bool inside = in_closure(parse_polygon_arg(target_expr), parse_polygon_arg(stratum_expr));
            emit(out, format, json{{"in_closure", inside}},
                 std::string("in_closure: ") + (inside ? "true" : "false"));
            return kOk;
        }
        if (poset->parsed()) {
            StrataPoset p = make_poset(parse_polygon_arg(ceiling_expr));
            if (format == "dot") {
                out << to_dot(p);
                return kOk;
            }
            json nodes = json::array(), edges = json::array();
            for (const auto& n : p.nodes) nodes.push_back(polygon_to_json(n));
            std::ostringstream text;
            text << "nodes: " << p.nodes.size();
            for (const auto& n : p.nodes) text << "\n" << format_polygon(n);
            for (const auto& [lo, hi] : hasse_diagram(p)) edges.push_back({lo, hi});
            emit(out, format, json{{"nodes", nodes}, {"edges", edges}}, text.str());
            return kOk;
        }
        if (verify->parsed()) {
            if (all_sweeps)
                sel = {true, true, true, true, true, true, true};
            if (!sel.any()) {
                err << "error: verify needs at least one sweep flag (or --all)\n";
                return kDomainError;
            }
            ExecMode mode = serial ? ExecMode::serial : ExecMode::parallel;
            json sweeps;
            bool ok = true;
            auto add = [&](const char* name, SweepReport rep) {
                ok = ok && rep.passed();
                sweeps[name] = report_to_json(rep);
                if (format != "json") {
                    out << name << ": " << (rep.passed() ? "pass" : "FAIL") << " ("
                        << rep.instances_checked << " checks, " << rep.violations.size()
                        << " violations)\n";
                }
            };
            if (sel.tensor) add("tensor", sweep_tensor(tensor_num, tensor_den, mode));
            if (sel.area)
                add("area", sweep_area_identity({max_rank, max_num, max_den}, mode));
            if (sel.step1)
                add("step1", sweep_step1(max_rank_e, max_rank_f, max_num, max_den, mode));
            if (sel.step2) add("step2", sweep_step2(max_total_rank, max_num, max_den, mode));
            if (sel.dims)
                add("dims", sweep_quantitative_dim(max_rank_each, max_num, max_den, mode));
            if (sel.filtration)
                add("filtration", sweep_filtration(max_filt_rank, max_num, max_den, mode));
            if (sel.closure) add("closure", sweep_downset_counts(max_width, max_abs_deg, mode));
            if (format == "json") out << sweeps.dump(2) << "\n";
            return ok ? kOk : kViolation;
        }
        if (render->parsed()) {
            Polygon lower = parse_polygon_arg(lower_expr);
            Polygon upper = parse_polygon_arg(upper_expr);
            std::string doc = (format == "tikz") ? render_tikz(lower, upper)
                                                 : render_svg(lower, upper);
            if (!out_path.empty()) {
                std::ofstream f(out_path, std::ios::binary);
                if (!f) {
                    err << "error: cannot open output file '" << out_path << "'\n";
                    return kDomainError;
                }
                f << doc;
            } else {
                out << doc;
            }
            return kOk;
        }
    } catch (const std::exception& ex) {
        err << "error: " << ex.what() << "\n";
        return kDomainError;
    }
    err << "error: no subcommand handled\n";
    return kDomainError;
}

}  // namespace hnpoly::cli
