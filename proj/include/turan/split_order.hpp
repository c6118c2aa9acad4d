#pragma once

#include <compare>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace turan
{
    /// Part map f: [n] -> [parts] plus a total order inside every part, stored
    /// as the 0-based rank of each element among its part.
    struct SplitOrder
    {
        std::vector<int> part;
        std::vector<int> rank;
        int parts = 1;

        int size() const noexcept { return static_cast<int>(part.size()); }
        /// u strictly before v (same part, smaller rank).
        bool precedes(int u, int v) const { return part[static_cast<std::size_t>(u)] == part[static_cast<std::size_t>(v)] && rank[static_cast<std::size_t>(u)] < rank[static_cast<std::size_t>(v)]; }
        bool valid() const;
        /// Members of each part in increasing order.
        std::vector<std::vector<int>> blocks() const;

        /// "(p1,...,pn|r1,...,rn)", 1-based.
        std::string to_string() const;

        auto operator<=>(const SplitOrder &) const = default;
        bool operator==(const SplitOrder &) const = default;
    };

    /// All (q_1..q_parts) with sum k, lexicographic.
    std::vector<std::vector<int>> weak_compositions(int parts, int k);

    /// Every split order on [k] with `parts` parts (parts may be empty): part
    /// maps in lexicographic order, then rank vectors in lexicographic order.
    std::vector<SplitOrder> split_orders(int parts, int k);

    /// Split order on [alpha.size()] pulled back along the injective tuple alpha.
    SplitOrder induce(const SplitOrder & s, std::span<const int> alpha);

    /// Smallest part size (0 when some part is empty).
    int thickness(const SplitOrder & s);

    /// Part sizes, an element of the weak compositions of n.
    std::vector<int> composition_of(const SplitOrder & s);

    SplitOrder parse_split_order(std::string_view text, int parts);

    /// Mixed-radix key, unique among split orders with the same parts and size.
    std::uint64_t signature_key(const SplitOrder & s);
}
