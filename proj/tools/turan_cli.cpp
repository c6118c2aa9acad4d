#include <turan/canon.hpp>
#include <turan/chromatic.hpp>
#include <turan/dsl.hpp>
#include <turan/enumerate.hpp>
#include <turan/error.hpp>
#include <turan/noninduced.hpp>
#include <turan/oracle.hpp>
#include <turan/ramsey.hpp>
#include <turan/report.hpp>

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

using namespace turan;

namespace
{
    constexpr int exit_ok = 0;
    constexpr int exit_usage = 1;
    constexpr int exit_failure = 2;
    constexpr int exit_undecided = 3;

    struct UsageError : Error
    {
        using Error::Error;
    };

    struct Common
    {
        int workers = 0;
        bool json = false;
        std::string certificate;
    };

    void emit(const Common & c, const Json & j)
    {
        if (! c.certificate.empty()) {
            std::ofstream out(c.certificate);
            if (! out)
                throw UsageError("cannot write " + c.certificate);
            out << j.dump(2) << "\n";
        }
        if (c.json)
            std::cout << j.dump(2) << "\n";
    }

    Interpretation load_interpretation(const std::string & path, const Theory & t)
    {
        if (! path.empty())
            return parse_interpretation(read_file(path), t.language_ptr(), graph_language());
        auto e = t.language().find("E");
        if (! e || t.language().arity(*e) != 2)
            throw UsageError("theory has no binary symbol E; pass --interp");
        return Interpretation::identity(graph_language(), t.language_ptr());
    }

    // Warns by default; strict turns a failed check into a failure.
    bool check_interpretation(const Interpretation & interp, const Theory & t, int bound, bool strict)
    {
        auto report = validate_interpretation(interp, graph_theory(), t, bound);
        if (report.validated)
            return true;
        std::cerr << "warning: interpretation is not into graphs on models of size <= " << bound << ": " << report.message << "\n";
        if (report.counterexample)
            std::cerr << to_text(*report.counterexample);
        return ! strict;
    }

    Json structure_json(const Structure & m) { return to_text(m); }

    std::vector<int> parse_int_list(const std::string & text)
    {
        std::vector<int> out;
        std::stringstream in(text);
        std::string item;
        while (std::getline(in, item, ','))
            if (! item.empty())
                out.push_back(std::stoi(item));
        return out;
    }

    std::string one_based(const std::vector<int> & vs)
    {
        std::string s = "{";
        for (std::size_t i = 0; i < vs.size(); ++i)
            s += (i ? "," : "") + std::to_string(vs[i] + 1);
        return s + "}";
    }

    // ---- chi ----
    struct ChiArgs
    {
        std::string theory, interp;
        std::vector<int> cliques;
        int cap = 16;
        bool no_shortcut = false, strict = false;
        int validate_n = 4;
    };

    int run_chi(const ChiArgs & a, const Common & c)
    {
        Theory t = load_theory(a.theory);
        auto interp = load_interpretation(a.interp, t);
        if (! check_interpretation(interp, t, a.validate_n, a.strict))
            return exit_failure;
        ChiOptions opts;
        opts.cap = a.cap;
        opts.shortcut = ! a.no_shortcut;
        opts.workers = c.workers;
        auto cliques = a.cliques.empty() ? std::vector<int>{2} : a.cliques;
        auto r = chi(interp, t, opts);
        if (! c.json) {
            std::cout << "chi=" << r.value.to_string();
            if (r.value.kind != ChiKind::Undecided)
                for (int k : cliques)
                    std::cout << (cliques.size() == 1 ? " pi=" : " pi^" + std::to_string(k) + "=") << pi(r.value, k).to_string();
            std::cout << "\n";
            std::cout << "family: " << r.family.size() << " minimal non-models, " << r.variable_count << " variables"
                      << (r.extended.shortcut ? ", edge read directly" : ", fresh edge symbol") << "\n";
            if (r.degenerate)
                std::cout << "degenerate: some size has no models\n";
            for (const auto & rec : r.trace)
                std::cout << "level " << rec.level << ": " << (rec.covered ? "covered" : "uncovered") << " (" << rec.boxes << " boxes, "
                          << rec.nodes << " nodes)\n";
            if (r.value.kind == ChiKind::Finite) {
                std::cout << "certificate: " << r.witnesses.size() << " boxes cover the Turán slice at level " << r.value.value << "\n";
                for (const auto & b : r.witnesses)
                    std::cout << "  member " << b.source << " under " << b.order.to_string() << "\n";
            }
            if (r.uncovered) {
                SignatureSpace space(r.extended.theory.language_ptr(), r.uncovered_level);
                std::cout << "uncovered pattern at level " << r.uncovered_level << ":\n" << pattern_to_text(*r.uncovered, space);
            }
            for (const auto & check : r.checks)
                std::cout << "check: " << check << "\n";
        }
        emit(c, chi_to_json(r, cliques));
        return r.value.kind == ChiKind::Undecided ? exit_undecided : exit_ok;
    }

    // ---- chi-noninduced ----
    struct NoninducedArgs
    {
        std::string file;
        std::vector<int> cliques;
        int cap = 16;
        bool agreement = false;
    };

    int run_noninduced(const NoninducedArgs & a, const Common & c)
    {
        auto instance = parse_noninduced(read_file(a.file));
        ChiOptions opts;
        opts.cap = a.cap;
        opts.workers = c.workers;
        auto cliques = a.cliques.empty() ? std::vector<int>{2} : a.cliques;
        auto r = chi_noninduced(instance, opts);
        Json j;
        j["schema"] = "turan.chi-noninduced/1";
        j["chi"] = r.value.to_string();
        Json pis = Json::object();
        if (r.value.kind != ChiKind::Undecided)
            for (int k : cliques)
                pis[std::to_string(k)] = pi(r.value, k).to_string();
        j["pi"] = pis;
        j["family"] = Json::array();
        for (const auto & m : r.family)
            j["family"].push_back(structure_json(m));
        j["witnesses"] = Json::array();
        for (const auto & b : r.witnesses)
            j["witnesses"].push_back(box_to_json(b));
        Json trace = Json::array();
        for (const auto & rec : r.trace)
            trace.push_back(Json{{"level", rec.level}, {"covered", rec.covered}, {"boxes", rec.boxes}});
        j["trace"] = trace;
        if (a.agreement) {
            auto rep = agreement_check(instance, opts);
            j["agreement"] = Json{{"general", rep.general.to_string()}, {"fast", rep.fast.to_string()}, {"agree", rep.agree},
                {"patterns_checked", rep.patterns_checked}, {"claims_hold", rep.claims_hold}, {"detail", rep.detail}};
        }
        if (! c.json) {
            std::cout << "chi=" << r.value.to_string();
            if (r.value.kind != ChiKind::Undecided)
                for (int k : cliques)
                    std::cout << (cliques.size() == 1 ? " pi=" : " pi^" + std::to_string(k) + "=") << pi(r.value, k).to_string();
            std::cout << "\n";
            std::cout << "effective family: " << r.family.size() << " members\n";
            for (const auto & rec : r.trace)
                std::cout << "level " << rec.level << ": " << (rec.covered ? "covered" : "uncovered") << " (" << rec.boxes << " boxes)\n";
            if (a.agreement)
                std::cout << "agreement: general=" << j["agreement"]["general"].get<std::string>()
                          << " fast=" << j["agreement"]["fast"].get<std::string>() << " patterns checked="
                          << j["agreement"]["patterns_checked"].get<std::size_t>() << "\n";
        }
        emit(c, j);
        return r.value.kind == ChiKind::Undecided ? exit_undecided : exit_ok;
    }

    // ---- enumerate ----
    int run_enumerate(const std::string & theory, int n, bool list, const Common & c)
    {
        if (n < 0)
            throw UsageError("--n must be non-negative");
        auto models = enumerate_models(load_theory(theory), n, c.workers);
        Json j{{"schema", "turan.enumerate/1"}, {"n", n}, {"count", models.size()}};
        if (list) {
            j["models"] = Json::array();
            for (const auto & m : models)
                j["models"].push_back(structure_json(m));
        }
        if (! c.json) {
            std::cout << models.size() << "\n";
            if (list)
                for (std::size_t i = 0; i < models.size(); ++i)
                    std::cout << "# model " << i << "\n" << to_text(models[i]);
        }
        emit(c, j);
        return exit_ok;
    }

    // ---- density ----
    int run_density(const std::string & theory, const std::string & interp_path, int clique, int n, const Common & c)
    {
        if (clique < 0 || n < clique)
            throw UsageError("density needs --n >= --t >= 0");
        Theory t = load_theory(theory);
        auto interp = load_interpretation(interp_path, t);
        Json rows = Json::array();
        if (! c.json)
            std::cout << "n\tmodels\tbest\twitness\n";
        for (int k = clique; k <= n; ++k) {
            auto row = density_row(interp, t, clique, k, c.workers);
            rows.push_back(Json{{"n", k}, {"models", row.models}, {"best", row.best.to_string()}, {"witness", row.witness}});
            if (! c.json)
                std::cout << k << "\t" << row.models << "\t" << row.best.to_string() << "\t"
                          << (row.witness >= 0 ? "#" + std::to_string(row.witness) : std::string("-")) << "\n";
        }
        emit(c, Json{{"schema", "turan.density/1"}, {"t", clique}, {"rows", rows}});
        return exit_ok;
    }

    // ---- uniformity ----
    int run_uniformity(const std::string & file, int ell, std::size_t limit, const Common & c)
    {
        if (ell < 1)
            throw UsageError("--ell must be positive");
        auto m = parse_structure(read_file(file));
        SignatureSpace space(m.language_ptr(), ell);
        auto boxes = compatibility_boxes(m, space);
        Json j{{"schema", "turan.uniformity/1"}, {"ell", ell}, {"dimension", space.dimension()}};
        j["boxes"] = Json::array();
        for (const auto & b : boxes)
            j["boxes"].push_back(box_to_json(b));
        if (! c.json) {
            std::cout << "pattern space dimension " << space.dimension() << ", " << boxes.size() << " boxes\n";
            for (const auto & b : boxes)
                std::cout << "# " << b.order.to_string() << "\n" << box_to_text(b, space);
        }
        if (space.dimension() <= 24) {
            auto count = count_covered(space, boxes);
            j["size"] = count;
            if (! c.json)
                std::cout << "|U| = " << count << "\n";
            if (count <= limit) {
                j["patterns"] = Json::array();
                for (const auto & q : covered_patterns(space, boxes)) {
                    j["patterns"].push_back(pattern_to_text(q, space));
                    if (! c.json)
                        std::cout << "---\n" << pattern_to_text(q, space);
                }
            }
        }
        else if (! c.json)
            std::cout << "pattern space too large to count\n";
        emit(c, j);
        return exit_ok;
    }

    // ---- ramsey ----
    Json search_json(const SearchResult & r)
    {
        Json j{{"schema", "turan.ramsey-search/1"}, {"verdict", r.to_string()}, {"configurations", r.configurations}};
        const char * v = r.verdict == SearchVerdict::Exceeds ? "exceeds" : r.verdict == SearchVerdict::Holds ? "holds" : "unknown";
        j["result"] = v;
        if (r.model)
            j["model"] = structure_json(*r.model);
        if (r.order)
            j["order"] = r.order->to_string();
        return j;
    }

    int run_extract(const std::string & file, const std::string & order, int ell, int m, bool reduction, const Common & c)
    {
        auto model = parse_structure(read_file(file));
        SplitOrder s = order.empty() ? block_split_order({model.size()}) : parse_split_order(order, ell);
        if (s.size() != model.size())
            throw UsageError("split order size differs from the structure size");
        auto w = find_uniform_submodel(model, s, m);
        Json j{{"schema", "turan.ramsey-extract/1"}, {"order", s.to_string()}, {"m", m}};
        if (w) {
            if (! verify_witness(model, s, m, *w))
                throw InvariantViolation("uniform witness failed re-verification");
            SignatureSpace space(model.language_ptr(), s.parts);
            std::vector<int> shown;
            for (int v : w->vertices)
                shown.push_back(v + 1);
            j["witness"] = Json{{"vertices", shown}, {"order", w->order.to_string()}, {"pattern", pattern_to_text(w->pattern, space)},
                {"coordinates", coordinates_of(w->pattern)}};
            if (! c.json)
                std::cout << "witness " << one_based(w->vertices) << " with induced order " << w->order.to_string() << "\n"
                          << pattern_to_text(w->pattern, space);
        }
        else {
            j["witness"] = nullptr;
            if (! c.json)
                std::cout << "no uniform submodel of thickness " << m << "\n";
        }
        if (reduction) {
            auto r = reduce_to_hypergraph(model, s);
            Json orders = Json::array();
            for (const auto & [sym, perm] : r.orders) {
                std::vector<int> shown;
                for (int p : perm)
                    shown.push_back(p + 1);
                orders.push_back(Json{{"symbol", model.language()[static_cast<std::size_t>(sym)].name}, {"order", shown}});
            }
            j["reduction"] = Json{{"order", r.order}, {"edge_sets", orders}, {"hypergraph", to_text(r.hypergraph)}};
            if (! c.json) {
                std::cout << "total order:";
                for (int v : r.order)
                    std::cout << " " << v + 1;
                std::cout << "\nhypergraph:\n" << to_text(r.hypergraph);
            }
        }
        emit(c, j);
        return exit_ok;
    }

    int run_witness_search(const std::string & theory, const std::string & arities, int ell, int m, int n, std::size_t cap, const Common & c)
    {
        SearchResult r;
        if (! arities.empty())
            r = hypergraph_witness_search(parse_int_list(arities), ell, m, n, cap);
        else if (! theory.empty())
            r = ramsey_witness_search(load_theory(theory), ell, m, n, cap, c.workers);
        else
            throw UsageError("pass --theory or --arities");
        if (! c.json) {
            std::cout << r.to_string() << "\n";
            if (r.verdict == SearchVerdict::Exceeds)
                std::cout << "R > " << n << "\n";
            else if (r.verdict == SearchVerdict::Holds)
                std::cout << "R <= " << n << "\n";
            if (r.model)
                std::cout << "split order " << r.order->to_string() << "\n" << to_text(*r.model);
        }
        emit(c, search_json(r));
        return r.verdict == SearchVerdict::Unknown ? exit_undecided : exit_ok;
    }

    int run_bound(const std::string & theory, const std::string & arities, int ell, int m, int bits, const Common & c)
    {
        Bound b;
        if (! arities.empty())
            b = hypergraph_ramsey_bound(ell, parse_int_list(arities), m, bits);
        else if (! theory.empty())
            b = theory_ramsey_bound(ell, load_theory(theory).language(), m, bits);
        else
            throw UsageError("pass --theory or --arities");
        if (! c.json)
            std::cout << "bound=" << b.to_string() << "\nmethod: " << b.method << "\n";
        emit(c, Json{{"schema", "turan.ramsey-bound/1"}, {"bound", b.to_string()}, {"method", b.method}});
        return exit_ok;
    }

    // ---- check ----
    struct CheckArgs
    {
        std::string file, interp;
        int clique = 2;
        int n_max = 6, ell_max = 4, cap = 16;
        bool noninduced = false;
    };

    int run_check(const CheckArgs & a, const Common & c)
    {
        std::string text = read_file(a.file);
        bool family_file = a.noninduced || text.find("\n---") != std::string::npos || text.rfind("---", 0) == 0;
        CrossCheckOptions opts;
        opts.clique = a.clique;
        opts.n_max = a.n_max;
        opts.ell_max = a.ell_max;
        opts.workers = c.workers;
        opts.chi.cap = a.cap;
        opts.chi.workers = c.workers;
        opts.strict = false;
        Json j{{"schema", "turan.check/1"}};
        bool ok = true;
        CrossCheckReport report;
        if (family_file) {
            auto instance = parse_noninduced(text);
            auto agreement = agreement_check(instance, opts.chi);
            j["agreement"] = Json{{"general", agreement.general.to_string()}, {"fast", agreement.fast.to_string()},
                {"agree", agreement.agree}, {"patterns_checked", agreement.patterns_checked}, {"claims_hold", agreement.claims_hold},
                {"detail", agreement.detail}};
            ok = agreement.agree && agreement.claims_hold;
            if (! c.json)
                std::cout << "agreement: general=" << agreement.general.to_string() << " fast=" << agreement.fast.to_string()
                          << (ok ? " ok" : " MISMATCH") << " (" << agreement.patterns_checked << " patterns compared)\n";
            Theory t = noninduced_theory(instance);
            report = cross_check(Interpretation::identity(graph_language(), t.language_ptr()), t, opts);
        }
        else {
            Theory t = parse_theory(text);
            report = cross_check(load_interpretation(a.interp, t), t, opts);
        }
        ok = ok && report.passed();
        Json rows = Json::array();
        for (const auto & r : report.densities)
            rows.push_back(Json{{"n", r.n}, {"models", r.models}, {"best", r.best.to_string()}, {"witness", r.witness}});
        Json checks = Json::array();
        for (const auto & ch : report.checks)
            checks.push_back(Json{{"name", ch.name}, {"passed", ch.passed}, {"note", ch.note}});
        j["chi"] = report.chi.to_string();
        j["pi"] = report.limit ? Json(report.limit->to_string()) : Json(nullptr);
        j["densities"] = rows;
        j["chi_direct"] = report.direct;
        j["checks"] = checks;
        j["passed"] = ok;
        if (! c.json)
            std::cout << report.to_text();
        emit(c, j);
        return ok ? exit_ok : exit_failure;
    }

    int run_verify(const std::string & theory, const std::string & certificate, const std::string & interp_path, bool no_shortcut, const Common & c)
    {
        Theory t = load_theory(theory);
        auto interp = load_interpretation(interp_path, t);
        Json j;
        try {
            j = Json::parse(read_file(certificate));
        }
        catch (const Json::parse_error & e) {
            throw UsageError(std::string("certificate is not JSON: ") + e.what());
        }
        auto problem = verify_chi_json(j, build_extended_theory(interp, t, ! no_shortcut));
        if (! c.json)
            std::cout << (problem.empty() ? "certificate verified: chi=" + j.value("chi", std::string("?")) : "certificate rejected: " + problem) << "\n";
        emit(c, Json{{"schema", "turan.verify/1"}, {"verified", problem.empty()}, {"problem", problem}});
        return problem.empty() ? exit_ok : exit_failure;
    }
}

int main(int argc, char ** argv)
{
    CLI::App app{"Abstract chromatic numbers and Turán densities of universal theories"};
    app.require_subcommand(1);
    Common common;
    auto add_common = [&](CLI::App * sub) {
        sub->add_option("--workers", common.workers, "worker threads (0 = all cores)");
        sub->add_flag("--json", common.json, "print JSON instead of text");
        sub->add_option("--emit-certificate", common.certificate, "also write the JSON result to this file");
    };

    ChiArgs chi_args;
    auto * chi_cmd = app.add_subcommand("chi", "abstract chromatic number and Turán densities");
    chi_cmd->add_option("theory", chi_args.theory, "theory file or builtin:NAME")->required();
    chi_cmd->add_option("--interp", chi_args.interp, "interpretation file (default: E itself)");
    chi_cmd->add_option("--t", chi_args.cliques, "clique sizes for pi (repeatable, default 2)");
    chi_cmd->add_option("--cap", chi_args.cap, "largest level tried")->check(CLI::PositiveNumber);
    chi_cmd->add_flag("--no-shortcut", chi_args.no_shortcut, "always add a fresh edge symbol");
    chi_cmd->add_flag("--strict", chi_args.strict, "fail when the interpretation check fails");
    chi_cmd->add_option("--validate-n", chi_args.validate_n, "model size bound for the interpretation check");
    add_common(chi_cmd);

    NoninducedArgs ni_args;
    auto * ni_cmd = app.add_subcommand("chi-noninduced", "chromatic number of a non-induced family (fast path)");
    ni_cmd->add_option("file", ni_args.file, "base theory followed by '---' separated structures")->required();
    ni_cmd->add_option("--t", ni_args.cliques, "clique sizes for pi");
    ni_cmd->add_option("--cap", ni_args.cap, "largest level tried")->check(CLI::PositiveNumber);
    ni_cmd->add_flag("--agreement", ni_args.agreement, "also run the general route and compare");
    add_common(ni_cmd);

    std::string enum_theory;
    int enum_n = 0;
    bool enum_list = false;
    auto * enum_cmd = app.add_subcommand("enumerate", "models up to isomorphism");
    enum_cmd->add_option("theory", enum_theory, "theory file or builtin:NAME")->required();
    enum_cmd->add_option("--n", enum_n, "model size")->required();
    enum_cmd->add_flag("--list", enum_list, "print the models");
    add_common(enum_cmd);

    std::string dens_theory, dens_interp;
    int dens_t = 2, dens_n = 0;
    auto * dens_cmd = app.add_subcommand("density", "largest K_t density per model size");
    dens_cmd->add_option("theory", dens_theory, "theory file or builtin:NAME")->required();
    dens_cmd->add_option("--interp", dens_interp, "interpretation file (default: E itself)");
    dens_cmd->add_option("--t", dens_t, "clique size")->required();
    dens_cmd->add_option("--n", dens_n, "largest model size")->required();
    add_common(dens_cmd);

    std::string uni_file;
    int uni_ell = 1;
    std::size_t uni_limit = 32;
    auto * uni_cmd = app.add_subcommand("uniformity", "boxes and uniformity set of a structure");
    uni_cmd->add_option("structure", uni_file, "structure file with a language line")->required();
    uni_cmd->add_option("--ell", uni_ell, "number of parts")->required();
    uni_cmd->add_option("--list-limit", uni_limit, "list the patterns when there are at most this many");
    add_common(uni_cmd);

    auto * ramsey_cmd = app.add_subcommand("ramsey", "partite Ramsey tools");
    ramsey_cmd->require_subcommand(1);
    std::string ex_file, ex_order;
    int ex_ell = 1, ex_m = 1;
    bool ex_reduction = false;
    auto * ex_cmd = ramsey_cmd->add_subcommand("extract", "find a uniform submodel");
    ex_cmd->add_option("structure", ex_file, "structure file with a language line")->required();
    ex_cmd->add_option("--order", ex_order, "split order \"(parts|ranks)\", 1-based (default: one part in vertex order)");
    ex_cmd->add_option("--ell", ex_ell, "number of parts");
    ex_cmd->add_option("--m", ex_m, "thickness wanted")->required();
    ex_cmd->add_flag("--reduction", ex_reduction, "print the hypergraph reduction");
    add_common(ex_cmd);

    std::string ws_theory, ws_arities;
    int ws_ell = 1, ws_m = 1, ws_n = 1;
    std::size_t ws_cap = 1000000;
    auto * ws_cmd = ramsey_cmd->add_subcommand("witness-search", "exhaustive lower-bound search");
    ws_cmd->add_option("--theory", ws_theory, "theory file or builtin:NAME");
    ws_cmd->add_option("--arities", ws_arities, "hypergraph arities, comma separated");
    ws_cmd->add_option("--ell", ws_ell, "number of parts");
    ws_cmd->add_option("--m", ws_m, "thickness wanted")->required();
    ws_cmd->add_option("--n", ws_n, "vertices per part")->required();
    ws_cmd->add_option("--cap", ws_cap, "largest number of configurations");
    add_common(ws_cmd);

    std::string bd_theory, bd_arities;
    int bd_ell = 1, bd_m = 1, bd_bits = 4096;
    auto * bd_cmd = ramsey_cmd->add_subcommand("bound", "upper bound from the recursions");
    bd_cmd->add_option("--theory", bd_theory, "theory file or builtin:NAME");
    bd_cmd->add_option("--arities", bd_arities, "hypergraph arities, comma separated");
    bd_cmd->add_option("--ell", bd_ell, "number of parts");
    bd_cmd->add_option("--m", bd_m, "thickness wanted")->required();
    bd_cmd->add_option("--bits", bd_bits, "report values above 2^bits as overflow");
    add_common(bd_cmd);

    CheckArgs check_args;
    auto * check_cmd = app.add_subcommand("check", "cross-check solver answers against brute force");
    check_cmd->add_option("file", check_args.file, "theory file or non-induced family file")->required();
    check_cmd->add_option("--interp", check_args.interp, "interpretation file (default: E itself)");
    check_cmd->add_option("--t", check_args.clique, "clique size for densities");
    check_cmd->add_option("--n-max", check_args.n_max, "largest model size");
    check_cmd->add_option("--ell-max", check_args.ell_max, "largest level for the direct test");
    check_cmd->add_option("--cap", check_args.cap, "largest level tried by the solver");
    check_cmd->add_flag("--noninduced", check_args.noninduced, "treat the file as a non-induced family");
    add_common(check_cmd);

    std::string vf_theory, vf_cert, vf_interp;
    bool vf_no_shortcut = false;
    auto * vf_cmd = app.add_subcommand("verify", "re-check a chi certificate written with --json or --emit-certificate");
    vf_cmd->add_option("theory", vf_theory, "theory the certificate claims to answer")->required();
    vf_cmd->add_option("certificate", vf_cert, "JSON certificate")->required();
    vf_cmd->add_option("--interp", vf_interp, "interpretation file (default: E itself)");
    vf_cmd->add_flag("--no-shortcut", vf_no_shortcut, "certificate was made with --no-shortcut");
    add_common(vf_cmd);

    try {
        app.parse(argc, argv);
    }
    catch (const CLI::ParseError & e) {
        int code = app.exit(e);
        return code == 0 ? exit_ok : exit_usage;
    }

    try {
        if (*chi_cmd)
            return run_chi(chi_args, common);
        if (*ni_cmd)
            return run_noninduced(ni_args, common);
        if (*enum_cmd)
            return run_enumerate(enum_theory, enum_n, enum_list, common);
        if (*dens_cmd)
            return run_density(dens_theory, dens_interp, dens_t, dens_n, common);
        if (*uni_cmd)
            return run_uniformity(uni_file, uni_ell, uni_limit, common);
        if (*ex_cmd)
            return run_extract(ex_file, ex_order, ex_ell, ex_m, ex_reduction, common);
        if (*ws_cmd)
            return run_witness_search(ws_theory, ws_arities, ws_ell, ws_m, ws_n, ws_cap, common);
        if (*bd_cmd)
            return run_bound(bd_theory, bd_arities, bd_ell, bd_m, bd_bits, common);
        if (*check_cmd)
            return run_check(check_args, common);
        if (*vf_cmd)
            return run_verify(vf_theory, vf_cert, vf_interp, vf_no_shortcut, common);
    }
    catch (const UsageError & e) {
        std::cerr << "error: " << e.what() << "\n";
        return exit_usage;
    }
    catch (const ParseError & e) {
        std::cerr << "error: " << e.what() << "\n";
        return exit_usage;
    }
    catch (const InputError & e) {
        std::cerr << "error: " << e.what() << "\n";
        return exit_usage;
    }
    catch (const LanguageMismatch & e) {
        std::cerr << "error: " << e.what() << "\n";
        return exit_usage;
    }
    catch (const std::exception & e) {
        std::cerr << "failure: " << e.what() << "\n";
        return exit_failure;
    }
    return exit_usage;
}
