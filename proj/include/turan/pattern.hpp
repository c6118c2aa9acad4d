#pragma once

#include <turan/split_order.hpp>
#include <turan/structure.hpp>

#include <boost/dynamic_bitset.hpp>

#include <functional>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

namespace turan
{
    /// Coordinates of pattern space at a fixed number of parts: one coordinate
    /// per (symbol, split order on [arity]).
    class SignatureSpace
    {
    public:
        SignatureSpace(LanguagePtr language, int parts);

        int parts() const noexcept { return parts_; }
        const Language & language() const noexcept { return *language_; }
        const LanguagePtr & language_ptr() const noexcept { return language_; }

        std::size_t dimension() const noexcept { return dimension_; }
        std::size_t offset(int symbol) const { return offsets_.at(static_cast<std::size_t>(symbol)); }
        std::size_t count(int symbol) const { return signatures_.at(static_cast<std::size_t>(symbol)).size(); }
        const SplitOrder & signature(int symbol, std::size_t index) const { return signatures_[static_cast<std::size_t>(symbol)].at(index); }
        /// Global coordinate of a signature of `symbol`.
        std::size_t coordinate(int symbol, const SplitOrder & signature) const;
        /// (symbol, index within symbol) of a global coordinate.
        std::pair<int, std::size_t> locate(std::size_t coordinate) const;

    private:
        LanguagePtr language_;
        int parts_;
        std::size_t dimension_ = 0;
        std::vector<std::size_t> offsets_;
        std::vector<std::vector<SplitOrder>> signatures_;
        std::vector<std::unordered_map<std::uint64_t, std::size_t>> index_;
    };

    /// A Ramsey pattern: the set of coordinates it contains.
    using Pattern = boost::dynamic_bitset<>;

    /// The patterns Q with required ⊆ Q and Q ∩ forbidden = ∅. Carries the
    /// model index and split order it came from.
    struct Box
    {
        boost::dynamic_bitset<> required;
        boost::dynamic_bitset<> forbidden;
        int source = -1;
        SplitOrder order;

        bool is_void() const { return required.intersects(forbidden); }
        bool contains(const Pattern & q) const { return required.is_subset_of(q) && ! q.intersects(forbidden); }
    };

    /// Constraint on part assignments, checked for every ordered vertex pair.
    using PartConstraint = std::function<bool(int u, int v, int part_u, int part_v)>;

    /// Whether M is Q-uniform with respect to s.
    bool is_uniform(const Structure & m, const SignatureSpace & space, const Pattern & q, const SplitOrder & s);

    /// Box of a single split order (may be void).
    Box box_of(const Structure & m, const SignatureSpace & space, const SplitOrder & s);

    /// One non-void box per split order of V(M) whose part map satisfies
    /// `constraint` (all split orders when empty); duplicates removed.
    std::vector<Box> compatibility_boxes(const Structure & m, const SignatureSpace & space, const PartConstraint & constraint = {},
        int source = -1);

    /// Boxes of every family member, sources set to member indices.
    std::vector<Box> family_boxes(const std::vector<Structure> & family, const SignatureSpace & space, const PartConstraint & constraint = {},
        int workers = 1);

    /// E(u,v) iff the parts of u and v differ.
    PartConstraint turan_constraint(const Structure & m, int edge);
    /// E(u,v) implies the parts of u and v differ.
    PartConstraint proper_constraint(const Structure & m, int edge);
    /// E(u,v) for every pair of distinct vertices (one part).
    PartConstraint complete_constraint(const Structure & m, int edge);

    struct UniformityWitness
    {
        int member = -1;
        SplitOrder order;
    };

    /// Some member and split order for which the member is Q-uniform.
    std::optional<UniformityWitness> pattern_in_uniformity_set(const Pattern & q, const std::vector<Structure> & family,
        const SignatureSpace & space);

    /// A slice of pattern space: the coordinates in `mask` are fixed to the
    /// corresponding bits of `values`; the rest are free.
    struct Slice
    {
        boost::dynamic_bitset<> mask;
        boost::dynamic_bitset<> values;

        std::size_t free_dimensions() const { return mask.size() - mask.count(); }
    };

    Slice full_slice(const SignatureSpace & space);
    /// Q_E = every signature on [2] (one part only).
    Slice complete_slice(const SignatureSpace & space, int edge);
    /// Q_E = the signatures whose two elements lie in different parts.
    Slice turan_slice(const SignatureSpace & space, int edge);

    /// Pattern of the lower level: keeps the signatures of Q whose parts are
    /// all below lower.parts().
    Pattern restrict_pattern(const Pattern & q, const SignatureSpace & space, const SignatureSpace & lower);

    /// Proper split orderings of M over L ∪ {E}: boxes over the space of L
    /// (E excluded) for split orders whose part map properly colours E.
    /// `kept[i]` is the symbol of M that the i-th symbol of the space reads.
    std::vector<Box> proper_split_orderings(const Structure & m, int edge, const SignatureSpace & space, const std::vector<int> & kept,
        int source = -1);

    /// Number of patterns in the union of boxes (space dimension <= 24).
    std::uint64_t count_covered(const SignatureSpace & space, const std::vector<Box> & boxes);
    /// Every pattern in the union of boxes (space dimension <= 24).
    std::vector<Pattern> covered_patterns(const SignatureSpace & space, const std::vector<Box> & boxes);

    /// "P: {sig, ...}" per symbol, one per line.
    std::string pattern_to_text(const Pattern & q, const SignatureSpace & space);
    /// "P: {required} / {forbidden}" per symbol, one per line.
    std::string box_to_text(const Box & box, const SignatureSpace & space);
    Pattern parse_pattern(std::string_view text, const SignatureSpace & space);
}
