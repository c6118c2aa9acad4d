#pragma once

#include <turan/pattern.hpp>
#include <turan/theory.hpp>

#include <boost/multiprecision/cpp_int.hpp>

#include <optional>
#include <set>
#include <string>
#include <vector>

namespace turan
{
    using BigInt = boost::multiprecision::cpp_int;

    struct UniformWitness
    {
        /// Chosen vertices, increasing.
        std::vector<int> vertices;
        /// Signatures realized by the tuples of the chosen vertices.
        Pattern pattern;
        /// Split order induced on the chosen vertices (relabeled to 0..|W|-1).
        SplitOrder order;
    };

    /// Exactly `m` vertices from every part such that the induced substructure
    /// is uniform for the induced split order; nothing when no such set exists.
    std::optional<UniformWitness> find_uniform_submodel(const Structure & m, const SplitOrder & s, int thickness);

    /// Re-checks uniformity and thickness of a witness.
    bool verify_witness(const Structure & m, const SplitOrder & s, int thickness, const UniformWitness & w);

    /// Per hyperedge arity, a set of weak compositions.
    using HypergraphPattern = std::vector<std::set<std::vector<int>>>;

    /// Language E1/k1, ..., Et/kt.
    LanguagePtr hypergraph_language(const std::vector<int> & arities);

    /// Whether H (symmetric relations) is Q-uniform with respect to the part map.
    bool hypergraph_is_uniform(const Structure & h, const std::vector<int> & part, int parts, const HypergraphPattern & q);

    struct HypergraphWitness
    {
        std::vector<int> vertices;
        HypergraphPattern pattern;
    };

    /// Exactly `thickness` vertices per part with H restricted being uniform.
    std::optional<HypergraphWitness> hypergraph_uniform_search(const Structure & h, const std::vector<int> & part, int parts, int thickness);

    /// The total order extending the split order, the (symbol, order on
    /// [arity]) list and the derived hypergraph.
    struct OrderedReduction
    {
        SplitOrder split;
        /// Vertices listed in increasing total order.
        std::vector<int> order;
        /// position[v] = index of v in `order`.
        std::vector<int> position;
        /// (symbol, permutation listing [arity] in increasing order).
        std::vector<std::pair<int, std::vector<int>>> orders;
        Structure hypergraph;
    };

    /// Builds the reduction and re-derives every relation of M from the
    /// hypergraph; a mismatch throws InvariantViolation.
    OrderedReduction reduce_to_hypergraph(const Structure & m, const SplitOrder & s);

    /// Pattern over the language of M obtained from a hypergraph pattern.
    Pattern transfer_pattern(const OrderedReduction & reduction, const HypergraphPattern & q, const SignatureSpace & space);

    /// The hypergraph pattern read off H when H is uniform for the part map.
    std::optional<HypergraphPattern> hypergraph_pattern_of(const Structure & h, const std::vector<int> & part, int parts);

    enum class SearchVerdict
    {
        Exceeds, ///< a configuration without a uniform submodel: R > n
        Holds,   ///< every configuration checked has one: R <= n
        Unknown  ///< resource cap reached
    };

    struct SearchResult
    {
        SearchVerdict verdict = SearchVerdict::Unknown;
        std::optional<Structure> model;
        std::optional<SplitOrder> order;
        std::size_t configurations = 0;
        std::string to_string() const;
    };

    /// Tries every model of size parts*n (up to isomorphism) with every split
    /// order whose parts all have n elements.
    SearchResult ramsey_witness_search(const Theory & t, int parts, int thickness, int n, std::size_t cap = 1000000, int workers = 1);

    /// Tries every hypergraph with the given arities on parts*n vertices,
    /// parts given as consecutive blocks of n.
    SearchResult hypergraph_witness_search(const std::vector<int> & arities, int parts, int thickness, int n, std::size_t cap = 1000000);

    struct Bound
    {
        std::optional<BigInt> value; ///< empty when above 2^bit_limit
        int bit_limit = 0;
        std::string method;
        std::string to_string() const;
    };

    /// Classical bound on the c-colour k-uniform Ramsey number for a
    /// monochromatic set of size s (end-homogeneous recursion).
    Bound classical_ramsey_bound(int k, const BigInt & colours, const BigInt & s, int bit_limit = 4096);
    /// Bound on R_{parts, arities}(m) following the induction on the number of arities.
    Bound hypergraph_ramsey_bound(int parts, const std::vector<int> & arities, int m, int bit_limit = 4096);
    /// Bound on R_{parts, T}(m) through the reduction to hypergraphs.
    Bound theory_ramsey_bound(int parts, const Language & language, int m, int bit_limit = 4096);
    /// Arities of the (symbol, order) list of the reduction.
    std::vector<int> reduction_arities(const Language & language);

    /// Split order with parts as consecutive blocks of the given sizes, ranks in index order.
    SplitOrder block_split_order(const std::vector<int> & sizes);
}
