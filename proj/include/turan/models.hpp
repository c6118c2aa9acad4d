#pragma once

#include <turan/structure.hpp>
#include <turan/theory.hpp>

#include <boost/multiprecision/cpp_int.hpp>

#include <vector>

namespace turan
{
    using Rational = boost::multiprecision::cpp_rational;

    /// The language {E/2} shared by every graph helper.
    LanguagePtr graph_language();

    Structure complete_graph(int n);
    Structure empty_graph(int n);
    /// Edge between u and v iff u and v lie in different residue classes mod parts.
    Structure turan_graph(int n, int parts);
    /// E(u, v) iff u < v.
    Structure transitive_tournament(int n);
    Structure cycle_graph(int n);
    /// Graph from a 1-based edge list.
    Structure graph_from_edges(int n, const std::vector<std::pair<int, int>> & edges);

    /// Image of a target-language structure under the interpretation.
    Structure apply_interpretation(const Interpretation & interp, const Structure & m);

    /// Fraction of |small|-subsets of `large` inducing a copy of `small`.
    Rational density(const Structure & small, const Structure & large);

    /// Injective map of G into H sending edges to edges (both over {E}).
    bool has_noninduced_copy(const Structure & g, const Structure & h);

    /// Conjunction over injective tuples of (negated) atoms plus pairwise distinctness.
    Formula open_diagram(const Structure & k);

    /// Adds the axiom "not open_diagram(F)" for every F in the family.
    Theory forb(const Theory & t, const std::vector<Structure> & family);
    /// Graph-theory variant forbidding F as a (not necessarily induced)
    /// subgraph: only the edges of F appear in the forbidden formula.
    /// `edge` names the graph symbol of t.
    Theory forb_noninduced(const Theory & t, const std::vector<Structure> & family, int edge = 0);

    /// Structures obtained by adding edges of symbol `edge` to members, keeping
    /// the relation symmetric; one canonical copy per class.
    std::vector<Structure> upward_closure(const std::vector<Structure> & family, int edge);

    /// Copy with symbol `symbol` emptied.
    Structure erase_symbol(const Structure & m, int symbol);
    /// Restriction to a sub-language given by the list of kept symbol indices.
    Structure reduct(const Structure & m, const LanguagePtr & language, const std::vector<int> & kept);
}
