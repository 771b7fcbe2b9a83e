// Command-line front end: generate the library's complex families, solve
// transversal numbers, run structural checks, apply surgery, and reproduce
// the experiment tables.
#include <cstdio>
#include <map>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "sct/sct.hpp"

namespace {

constexpr int kExitValidation = 2;
constexpr int kExitBudget = 3;

std::vector<int> parse_int_list(const std::string& text) {
    std::vector<int> out;
    std::size_t i = 0;
    auto read_int = [&]() {
        std::size_t j = i;
        while (j < text.size() && std::isdigit(static_cast<unsigned char>(text[j]))) ++j;
        if (j == i) throw CLI::ValidationError("expected an integer in '" + text + "'");
        const int v = std::stoi(text.substr(i, j - i));
        i = j;
        return v;
    };
    while (i < text.size()) {
        const int lo = read_int();
        if (i < text.size() && text[i] == '-') {
            ++i;
            const int hi = read_int();
            for (int v = lo; v <= hi; ++v) out.push_back(v);
        } else {
            out.push_back(lo);
        }
        if (i < text.size()) {
            if (text[i] != ',') throw CLI::ValidationError("expected ',' in '" + text + "'");
            ++i;
        }
    }
    return out;
}

sct::VertexSet parse_vertex_set(const std::string& text) {
    sct::VertexSet s;
    for (int v : parse_int_list(text)) {
        if (v < 1 || v > sct::VertexSet::capacity())
            throw CLI::ValidationError("label out of range: " + std::to_string(v));
        s.set(v);
    }
    return s;
}

std::string rational(int num, int den) {
    return std::to_string(num) + "/" + std::to_string(den);
}

struct SolveFlags {
    std::string mode = "exact";
    int threads = 1;
    double time_limit = 0.0; // 0 = unlimited
    std::uint64_t node_limit = 0;
};

sct::SolveBudget to_budget(const SolveFlags& f) {
    sct::SolveBudget b;
    b.threads = f.threads;
    if (f.time_limit > 0) b.time_limit = f.time_limit;
    if (f.node_limit > 0) b.node_limit = f.node_limit;
    return b;
}

void add_budget_flags(CLI::App* cmd, SolveFlags& flags) {
    cmd->add_option("--threads", flags.threads, "worker threads for the exact solver");
    cmd->add_option("--time-limit", flags.time_limit, "solver time limit in seconds");
    cmd->add_option("--node-limit", flags.node_limit, "solver node limit");
}

int run_gen(const sct::ConstructionSpec& spec, const std::string& out_path) {
    const auto c = sct::build_construction(spec);
    const std::string tag = sct::family_name(spec.family);
    if (out_path.empty()) {
        std::cout << sct::serialize_complex(c, tag);
    } else {
        sct::write_complex_file(out_path, c, tag);
    }
    std::fprintf(stderr, "n=%d d=%d m=%lld family=%s covered=%s\n", c.n(), c.facet_size(),
                 c.facet_count(), tag.c_str(), c.covers_universe() ? "all" : "partial");
    return 0;
}

int run_solve(const std::string& in_path, const SolveFlags& flags, const std::string& format) {
    const auto [c, family] = sct::read_complex_file(in_path);
    const auto fv = sct::f_vector(c);
    const auto bounds =
        sct::bound_formulas(c.f0(), c.facet_count(), c.facet_size(), fv.at_dim(1));

    nlohmann::json j;
    j["file"] = in_path;
    j["family"] = family;
    j["n"] = c.f0();
    j["d"] = c.facet_size();
    j["m"] = c.facet_count();
    j["peel_upper"] = bounds.pure_upper;
    if (bounds.turan_upper) j["turan_upper"] = *bounds.turan_upper;

    bool exhausted = false;
    if (flags.mode == "greedy" || flags.mode == "both") {
        const auto g = sct::greedy_transversal(c);
        if (!sct::verify_transversal(c, g.vertices))
            throw sct::Error(sct::Errc::BadParams, "greedy certificate failed verification");
        j["greedy"] = {{"size", g.size},
                       {"tau", static_cast<double>(g.size) / c.f0()},
                       {"certificate", g.vertices.to_string()}};
        if (format == "table")
            std::printf("greedy:  T<=%d tau<=%s=%.4f certificate=%s\n", g.size,
                        rational(g.size, c.f0()).c_str(), double(g.size) / c.f0(),
                        g.vertices.to_string().c_str());
    }
    if (flags.mode == "exact" || flags.mode == "both") {
        const auto t = sct::exact_transversal(c, to_budget(flags));
        if (t.optimal && !sct::verify_transversal(c, t.vertices))
            throw sct::Error(sct::Errc::BadParams, "exact certificate failed verification");
        j["exact"] = {{"optimal", t.optimal},
                      {"T_lower", t.lower_bound},
                      {"T_upper", t.optimal ? t.size : t.upper_bound},
                      {"nodes", t.nodes},
                      {"certificate", t.vertices.to_string()}};
        if (t.optimal) {
            j["exact"]["T"] = t.size;
            j["exact"]["tau"] = static_cast<double>(t.size) / c.f0();
            if (format == "table")
                std::printf("exact:   T=%d tau=%s=%.4f optimal=yes nodes=%llu certificate=%s\n",
                            t.size, rational(t.size, c.f0()).c_str(),
                            double(t.size) / c.f0(),
                            static_cast<unsigned long long>(t.nodes),
                            t.vertices.to_string().c_str());
        } else {
            exhausted = true;
            if (format == "table")
                std::printf("exact:   budget exhausted, T in [%d,%d] nodes=%llu\n",
                            t.lower_bound, t.upper_bound,
                            static_cast<unsigned long long>(t.nodes));
        }
    }
    if (format == "table")
        std::printf("bounds:  peel<=%.6g%s\n", bounds.pure_upper,
                    bounds.turan_upper
                        ? (" turan<=" + std::to_string(*bounds.turan_upper)).c_str()
                        : "");
    else
        std::cout << j.dump(2) << "\n";
    return exhausted ? kExitBudget : 0;
}

int run_check(const std::string& in_path, const std::vector<std::string>& checks) {
    const auto [c, family] = sct::read_complex_file(in_path);
    (void)family;
    bool all_ok = true;
    auto report = [&](const std::string& name, bool ok, const std::string& witness) {
        std::printf("%-18s %s%s\n", name.c_str(), ok ? "PASS" : "FAIL",
                    ok || witness.empty() ? "" : ("  witness " + witness).c_str());
        all_ok = all_ok && ok;
    };
    for (const std::string& spec : checks) {
        const auto colon = spec.find(':');
        const std::string kind = spec.substr(0, colon);
        const std::string arg = colon == std::string::npos ? "" : spec.substr(colon + 1);
        if (kind == "pure") {
            // Parsing already enforces uniform cardinality; report coverage.
            const bool ok = c.covers_universe();
            report("pure", ok,
                   ok ? "" : (sct::VertexSet::range(1, c.n()) - c.used_vertices()).to_string());
        } else if (kind == "pseudomanifold") {
            const auto w = sct::pseudomanifold_witness(c);
            report("pseudomanifold", !w.has_value(), w ? w->to_string() : "");
        } else if (kind == "eulerian") {
            const auto w = sct::eulerian_witness(c);
            report("eulerian", !w.has_value(), w ? w->to_string() : "");
        } else if (kind == "boundary-empty") {
            const auto bd = sct::boundary(c);
            report("boundary-empty", bd.is_void(),
                   bd.is_void() ? "" : bd.facets().front().to_string());
        } else if (kind == "neighborly") {
            const int m = arg.empty() ? c.facet_size() / 2 : std::stoi(arg);
            const auto w = sct::neighborly_witness(c, m);
            report("neighborly:" + std::to_string(m), !w.has_value(), w ? w->to_string() : "");
        } else if (kind == "stacked") {
            const int m = arg.empty() ? (c.facet_size() + 1) / 2 : std::stoi(arg);
            const auto w = sct::stacked_witness(c, m);
            report("stacked:" + std::to_string(m), !w.has_value(), w ? w->to_string() : "");
        } else if (kind == "induced") {
            const sct::VertexSet window = parse_vertex_set(arg);
            std::vector<sct::VertexSet> inside;
            for (const auto& f : c.facets())
                if (window.contains(f)) inside.push_back(f);
            if (inside.empty()) {
                report("induced:" + arg, false, "(no facet inside the window)");
                continue;
            }
            const auto sub =
                sct::PureComplex::from_facets(window.max_label(), inside,
                                              sct::Validate::AllowIsolated);
            report("induced:" + arg, sct::is_induced_subcomplex(c, sub), "");
        } else {
            throw CLI::ValidationError("unknown check '" + spec + "'");
        }
    }
    return all_ok ? 0 : kExitValidation;
}

int run_experiment(const std::string& name, const sct::ExperimentGrid& grid,
                   const SolveFlags& flags, const std::string& format,
                   const std::string& out_path) {
    sct::ExperimentName which;
    if (name == "turan-F") which = sct::ExperimentName::TuranF;
    else if (name == "pseudo-H") which = sct::ExperimentName::PseudoH;
    else if (name == "sibling-D") which = sct::ExperimentName::SiblingD;
    else if (name == "flips-gamma") which = sct::ExperimentName::FlipsGamma;
    else if (name == "spheres-345") which = sct::ExperimentName::Spheres345;
    else throw CLI::ValidationError("unknown experiment '" + name + "'");

    const auto report = sct::run_experiment(which, grid, to_budget(flags));
    std::cout << (format == "structured" ? sct::report_json(report)
                                         : sct::report_table(report));
    if (!out_path.empty()) {
        std::ofstream out(out_path, std::ios::binary);
        if (!out)
            throw sct::Error(sct::Errc::ParseError, "cannot open " + out_path + " for writing");
        out << sct::report_json(report);
    }
    for (const auto& row : report.rows)
        if (row.note == "budget exhausted") return kExitBudget;
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"simplicial complex transversal toolkit"};
    app.require_subcommand(1);

    // gen
    sct::ConstructionSpec spec;
    std::string gen_family, gen_J, gen_out, gen_variant = "even4k";
    auto* gen = app.add_subcommand("gen", "generate a named complex family");
    gen->add_option("family", gen_family,
                    "cyclic|B|F|H|gammaJ|D|Ddirect|K|L7|L8|L11|lambda|lambda7|pi|fliptarget|gammank")
        ->required();
    gen->add_option("--n", spec.n, "vertex count (b for the interval ball)");
    gen->add_option("--d", spec.d, "facet cardinality");
    gen->add_option("--dim", spec.dim, "sphere/ball dimension");
    gen->add_option("--s", spec.s, "gap bound");
    gen->add_option("--a", spec.a, "interval start (B) or interval count (H)");
    gen->add_option("--k", spec.k, "pair count (H), block parameter (fliptarget), flip steps (gammank)");
    gen->add_option("--J", gen_J, "interval sizes, e.g. 2,2,3");
    gen->add_option("--variant", gen_variant, "fliptarget variant: even4k|odd4kminus1");
    gen->add_option("--out", gen_out, "output file (default stdout)");

    // solve
    std::string solve_in, solve_format = "table";
    SolveFlags solve_flags;
    auto* solve = app.add_subcommand("solve", "compute transversal numbers for a complex file");
    solve->add_option("input", solve_in, "complex file")->required();
    solve->add_option("--mode", solve_flags.mode, "exact|greedy|both")
        ->check(CLI::IsMember({"exact", "greedy", "both"}));
    solve->add_option("--format", solve_format, "table|structured")
        ->check(CLI::IsMember({"table", "structured"}));
    add_budget_flags(solve, solve_flags);

    // check
    std::string check_in;
    std::vector<std::string> check_list;
    auto* check = app.add_subcommand("check", "run structural checks on a complex file");
    check->add_option("input", check_in, "complex file")->required();
    check->add_option("--check", check_list,
                      "pure|pseudomanifold|eulerian|boundary-empty|neighborly:m|stacked:m|induced:W")
        ->required();

    // experiment
    std::string exp_name, exp_format = "table", exp_out, exp_ns, exp_ss, exp_ks;
    sct::ExperimentGrid grid;
    SolveFlags exp_flags;
    auto* experiment = app.add_subcommand("experiment", "reproduce a result table");
    experiment->add_option("name", exp_name, "turan-F|pseudo-H|sibling-D|flips-gamma|spheres-345")
        ->required();
    experiment->add_option("--n", exp_ns, "vertex counts, e.g. 8,16,24 or 12-36");
    experiment->add_option("--s", exp_ss, "gap bounds, e.g. 1-3");
    experiment->add_option("--k", exp_ks, "flip steps, e.g. 0-3");
    experiment->add_option("--d", grid.d, "facet cardinality (turan-F)");
    experiment->add_option("--dim", grid.dim, "sphere dimension (sibling-D)");
    experiment->add_option("--a", grid.a, "interval count (pseudo-H)");
    experiment->add_flag("--allow-large", grid.allow_large,
                         "lift the n <= 48 guard on exact solves in dimension >= 4");
    experiment->add_option("--format", exp_format, "table|structured")
        ->check(CLI::IsMember({"table", "structured"}));
    experiment->add_option("--out", exp_out, "also write the structured report here");
    add_budget_flags(experiment, exp_flags);

    // flip
    std::string flip_in, flip_a, flip_b, flip_out;
    auto* flip = app.add_subcommand("flip", "apply one bistellar flip");
    flip->add_option("input", flip_in, "complex file")->required();
    flip->add_option("--A", flip_a, "vertices of A, e.g. 3,5,7")->required();
    flip->add_option("--B", flip_b, "vertices of B, e.g. 2,4,8")->required();
    flip->add_option("--out", flip_out, "output file (default stdout)");

    // replace
    std::string rep_in, rep_ball, rep_with, rep_out;
    auto* replace = app.add_subcommand("replace", "replace a sub-ball by a retriangulation");
    replace->add_option("input", rep_in, "complex file")->required();
    replace->add_option("--ball", rep_ball, "file with the sub-ball to remove")->required();
    replace->add_option("--with", rep_with, "file with the replacement ball")->required();
    replace->add_option("--out", rep_out, "output file (default stdout)");

    CLI11_PARSE(app, argc, argv);

    try {
        if (*gen) {
            using F = sct::ConstructionSpec::Family;
            static const std::map<std::string, F> families = {
                {"cyclic", F::Cyclic},   {"B", F::BBall},        {"F", F::FFamily},
                {"H", F::HFamily},       {"gammaJ", F::GammaJ},  {"D", F::DSphere},
                {"Ddirect", F::DDirect}, {"K", F::KBall},        {"L7", F::L7},
                {"L8", F::L8},           {"L11", F::L11},        {"lambda", F::Lambda},
                {"lambda7", F::Lambda7}, {"pi", F::Pi},          {"fliptarget", F::FlipTarget},
                {"gammank", F::GammaNK},
            };
            const auto it = families.find(gen_family);
            if (it == families.end())
                throw CLI::ValidationError("unknown family '" + gen_family + "'");
            spec.family = it->second;
            spec.variant = gen_variant;
            if (!gen_J.empty()) spec.J = parse_int_list(gen_J);
            return run_gen(spec, gen_out);
        }
        if (*solve) return run_solve(solve_in, solve_flags, solve_format);
        if (*check) return run_check(check_in, check_list);
        if (*experiment) {
            if (!exp_ns.empty()) grid.ns = parse_int_list(exp_ns);
            if (!exp_ss.empty()) grid.ss = parse_int_list(exp_ss);
            if (!exp_ks.empty()) grid.ks = parse_int_list(exp_ks);
            return run_experiment(exp_name, grid, exp_flags, exp_format, exp_out);
        }
        if (*flip) {
            const auto [c, family] = sct::read_complex_file(flip_in);
            const auto flipped =
                sct::bistellar_flip(c, {parse_vertex_set(flip_a), parse_vertex_set(flip_b)});
            if (flip_out.empty())
                std::cout << sct::serialize_complex(flipped, family);
            else
                sct::write_complex_file(flip_out, flipped, family);
            return 0;
        }
        if (*replace) {
            const auto [c, family] = sct::read_complex_file(rep_in);
            const auto [ball_old, f1] = sct::read_complex_file(rep_ball);
            const auto [ball_new, f2] = sct::read_complex_file(rep_with);
            (void)f1;
            (void)f2;
            const auto result = sct::replace_ball(c, ball_old, ball_new);
            if (rep_out.empty())
                std::cout << sct::serialize_complex(result, family);
            else
                sct::write_complex_file(rep_out, result, family);
            return 0;
        }
    } catch (const CLI::ValidationError& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return kExitValidation;
    } catch (const sct::Error& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return e.code() == sct::Errc::BudgetExhausted ? kExitBudget : kExitValidation;
    } catch (const std::exception& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 1;
    }
    return 0;
}
