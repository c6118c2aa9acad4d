#pragma once

#include <turan/pattern.hpp>

#include <optional>
#include <vector>

namespace turan
{
    enum class CoverMethod
    {
        Automatic, ///< enumeration when at most 16 free coordinates, splitting otherwise
        Split,
        Enumerate
    };

    struct CoverResult
    {
        bool covered = false;
        /// A pattern of the slice outside every box (when not covered).
        std::optional<Pattern> uncovered;
        /// Indices of the boxes that the proof of coverage relied on.
        std::vector<std::size_t> used;
        std::uint64_t nodes = 0;
    };

    /// Decides whether every pattern of the slice lies in some box.
    CoverResult slice_covered(const Slice & slice, const std::vector<Box> & boxes, CoverMethod method = CoverMethod::Automatic);
}
