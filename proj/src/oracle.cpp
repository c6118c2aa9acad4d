#include <turan/oracle.hpp>

#include <turan/enumerate.hpp>
#include <turan/error.hpp>
#include <turan/parallel.hpp>

#include <sstream>

namespace turan
{
    namespace
    {
        std::vector<Structure> images(const Interpretation & interp, const Theory & t, int n, int workers)
        {
            auto models = enumerate_models(t, n, workers);
            return parallel_map(models, workers, [&](const Structure & m) { return apply_interpretation(interp, m); });
        }

        DensityRow row_of(const std::vector<Structure> & graphs, int clique, int n, int workers)
        {
            DensityRow row;
            row.n = n;
            row.models = graphs.size();
            if (graphs.empty()) {
                row.best.minus_infinity = true;
                return row;
            }
            Structure k = complete_graph(clique);
            auto values = parallel_map(graphs, workers, [&](const Structure & g) { return density(k.with_language(g.language_ptr()), g); });
            row.best.value = -1;
            for (std::size_t i = 0; i < values.size(); ++i)
                if (values[i] > row.best.value) {
                    row.best.value = values[i];
                    row.witness = static_cast<int>(i);
                }
            return row;
        }

        bool direct_on(const std::vector<Structure> & graphs, int parts, int n, int workers)
        {
            Structure target = turan_graph(n, parts);
            auto hits = parallel_map(graphs, workers, [&](const Structure & g) { return has_noninduced_copy(target.with_language(g.language_ptr()), g); });
            return std::find(hits.begin(), hits.end(), true) != hits.end();
        }
    }

    bool density_less(const DensityValue & a, const DensityValue & b)
    {
        if (a.minus_infinity || b.minus_infinity)
            return a.minus_infinity && ! b.minus_infinity;
        return a.value < b.value;
    }

    DensityValue brute_density(const Interpretation & interp, const Theory & t, int clique, int n, int workers)
    {
        if (clique < 0 || n < clique)
            throw Error("brute density needs n >= t >= 0");
        return row_of(images(interp, t, n, workers), clique, n, workers).best;
    }

    DensityRow density_row(const Interpretation & interp, const Theory & t, int clique, int n, int workers)
    {
        if (clique < 0 || n < clique)
            throw Error("brute density needs n >= t >= 0");
        return row_of(images(interp, t, n, workers), clique, n, workers);
    }

    bool chi_direct(const Interpretation & interp, const Theory & t, int parts, int n, int workers)
    {
        if (parts < 1 || n < 0)
            throw Error("chi_direct needs l >= 1 and n >= 0");
        return direct_on(images(interp, t, n, workers), parts, n, workers);
    }

    bool CrossCheckReport::passed() const
    {
        return std::all_of(checks.begin(), checks.end(), [](const CheckOutcome & c) { return c.passed; });
    }

    std::string CrossCheckReport::to_text() const
    {
        std::ostringstream out;
        out << "chi = " << chi.to_string();
        if (limit)
            out << "   pi^" << clique << " = " << limit->to_string();
        out << "\n\n  n  models  best density  witness\n";
        for (const auto & r : densities) {
            out << "  " << r.n << "  " << r.models << "  " << r.best.to_string() << "  ";
            if (r.witness >= 0)
                out << "#" << r.witness;
            else
                out << "-";
            out << "\n";
        }
        out << "\nchi_direct (rows n, columns l = 1..)\n";
        for (std::size_t n = 0; n < direct.size(); ++n) {
            out << "  " << n + 1 << " ";
            for (bool b : direct[n])
                out << (b ? " T" : " F");
            out << "\n";
        }
        out << "\n";
        for (const auto & c : checks)
            out << (c.passed ? "ok   " : "FAIL ") << c.name << (c.note.empty() ? "" : ": " + c.note) << "\n";
        return out.str();
    }

    CrossCheckReport cross_check(const Interpretation & interp, const Theory & t, const CrossCheckOptions & options)
    {
        CrossCheckReport report;
        report.clique = options.clique;
        ChiResult solved = chi(interp, t, options.chi);
        report.chi = solved.value;
        if (solved.value.kind != ChiKind::Undecided)
            report.limit = pi(solved.value, options.clique);

        auto fail = [&](CheckOutcome & c, const std::string & note) {
            c.passed = false;
            c.note = note;
            if (options.strict)
                throw InvariantViolation("cross-check " + c.name + " failed: " + note);
        };

        std::vector<std::vector<Structure>> graphs;
        for (int n = 0; n <= options.n_max; ++n)
            graphs.push_back(images(interp, t, n, options.workers));

        for (int n = std::max(options.clique, 1); n <= options.n_max; ++n)
            report.densities.push_back(row_of(graphs[static_cast<std::size_t>(n)], options.clique, n, options.workers));

        int ell_top = options.ell_max;
        if (solved.value.kind == ChiKind::Finite)
            ell_top = std::max(ell_top, solved.value.value);
        for (int n = 1; n <= options.n_max; ++n) {
            std::vector<bool> row;
            for (int l = 1; l <= ell_top; ++l)
                row.push_back(direct_on(graphs[static_cast<std::size_t>(n)], l, n, options.workers));
            report.direct.push_back(std::move(row));
        }

        CheckOutcome a{"(a) density non-increasing", true, ""};
        for (std::size_t i = 1; i < report.densities.size(); ++i)
            if (density_less(report.densities[i - 1].best, report.densities[i].best)) {
                fail(a, "n=" + std::to_string(report.densities[i].n) + " exceeds n=" + std::to_string(report.densities[i - 1].n));
                break;
            }
        report.checks.push_back(a);

        CheckOutcome b{"(b) density >= pi", true, ""};
        if (! report.limit)
            b.note = "chi undecided, skipped";
        else
            for (const auto & r : report.densities)
                if (density_less(r.best, *report.limit)) {
                    fail(b, "n=" + std::to_string(r.n) + " density " + r.best.to_string() + " < " + report.limit->to_string());
                    break;
                }
        report.checks.push_back(b);

        CheckOutcome c{"(c) chi_direct true below chi", true, ""};
        int below = 0;
        if (solved.value.kind == ChiKind::Finite)
            below = solved.value.value - 1;
        else
            below = ell_top;
        for (int n = 1; n <= options.n_max && c.passed; ++n)
            for (int l = 1; l <= std::min(below, ell_top); ++l)
                if (! report.direct[static_cast<std::size_t>(n - 1)][static_cast<std::size_t>(l - 1)]) {
                    fail(c, "l=" + std::to_string(l) + " n=" + std::to_string(n));
                    break;
                }
        report.checks.push_back(c);

        CheckOutcome d{"(d) failure at l = chi", true, ""};
        if (solved.value.kind != ChiKind::Finite)
            d.note = "chi not finite, not applicable";
        else {
            int l = solved.value.value;
            for (int n = 1; n <= options.n_max; ++n)
                if (! report.direct[static_cast<std::size_t>(n - 1)][static_cast<std::size_t>(l - 1)]) {
                    report.failure_witness = n;
                    break;
                }
            d.note = report.failure_witness ? "witnessed at n=" + std::to_string(*report.failure_witness) : "unwitnessed at scale";
        }
        report.checks.push_back(d);

        CheckOutcome e{"(e) chi_direct downward closed in l", true, ""};
        for (std::size_t n = 0; n < report.direct.size() && e.passed; ++n)
            for (std::size_t l = 1; l < report.direct[n].size(); ++l)
                if (report.direct[n][l] && ! report.direct[n][l - 1]) {
                    fail(e, "n=" + std::to_string(n + 1) + " l=" + std::to_string(l + 1));
                    break;
                }
        report.checks.push_back(e);

        CheckOutcome f{"(f) solver coverage monotone", true, ""};
        if (solved.value.kind != ChiKind::Undecided) {
            int top = options.ell_max;
            if (solved.value.kind == ChiKind::Finite)
                top = std::max(top, solved.value.value + 1);
            bool seen = false;
            for (int level = 1; level <= top; ++level) {
                bool covered = turan_level_covered(solved, level);
                report.coverage.push_back(covered);
                if (seen && ! covered) {
                    fail(f, "level " + std::to_string(level) + " uncovered after a covered level");
                    break;
                }
                seen = seen || covered;
            }
            // the least covered level is chi itself
            if (f.passed && solved.value.kind == ChiKind::Finite && solved.value.value >= 1) {
                std::size_t at = static_cast<std::size_t>(solved.value.value - 1);
                if (! report.coverage[at] || (at > 0 && report.coverage[at - 1]))
                    fail(f, "least covered level differs from chi");
            }
        }
        else
            f.note = "chi undecided, skipped";
        report.checks.push_back(f);
        return report;
    }
}
