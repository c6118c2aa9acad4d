#include <turan/cover.hpp>
#include <turan/error.hpp>

#include <algorithm>
#include <set>

namespace turan
{
    namespace
    {
        using Bits = boost::dynamic_bitset<>;

        struct Cube
        {
            Bits pos;
            Bits neg;
            std::size_t box;
        };

        class Splitter
        {
        public:
            Splitter(std::vector<Cube> cubes, std::size_t free) :
                cubes_(std::move(cubes)),
                assigned_(free),
                values_(free)
            {
            }

            bool run(std::vector<int> active)
            {
                ++nodes;
                std::vector<int> live;
                live.reserve(active.size());
                for (int c : active) {
                    auto & cube = cubes_[static_cast<std::size_t>(c)];
                    if ((cube.pos & assigned_).is_subset_of(values_) && ! (cube.neg & assigned_).intersects(values_)) {
                        if ((cube.pos | cube.neg).is_subset_of(assigned_)) {
                            used.insert(cube.box);
                            return true;
                        }
                        live.push_back(c);
                    }
                }
                if (live.empty()) {
                    witness = values_;
                    return false;
                }
                // unit cube: one open literal decides one branch
                for (int c : live) {
                    auto & cube = cubes_[static_cast<std::size_t>(c)];
                    Bits open = (cube.pos | cube.neg) - assigned_;
                    if (open.count() == 1) {
                        std::size_t x = open.find_first();
                        bool literal = cube.pos.test(x);
                        used.insert(cube.box);
                        assigned_.set(x);
                        values_.set(x, ! literal);
                        bool ok = run(live);
                        assigned_.reset(x);
                        values_.reset(x);
                        return ok;
                    }
                }
                std::vector<std::size_t> frequency(assigned_.size(), 0);
                for (int c : live) {
                    auto & cube = cubes_[static_cast<std::size_t>(c)];
                    Bits open = (cube.pos | cube.neg) - assigned_;
                    for (auto x = open.find_first(); x != Bits::npos; x = open.find_next(x))
                        ++frequency[x];
                }
                std::size_t x = static_cast<std::size_t>(std::max_element(frequency.begin(), frequency.end()) - frequency.begin());
                assigned_.set(x);
                for (bool value : {false, true}) {
                    values_.set(x, value);
                    if (! run(live)) {
                        assigned_.reset(x);
                        values_.reset(x);
                        return false;
                    }
                }
                assigned_.reset(x);
                values_.reset(x);
                return true;
            }

            std::set<std::size_t> used;
            Bits witness;
            std::uint64_t nodes = 0;

        private:
            std::vector<Cube> cubes_;
            Bits assigned_;
            Bits values_;
        };
    }

    CoverResult slice_covered(const Slice & slice, const std::vector<Box> & boxes, CoverMethod method)
    {
        std::size_t dim = slice.mask.size();
        std::vector<std::size_t> free;
        for (std::size_t i = 0; i < dim; ++i)
            if (! slice.mask.test(i))
                free.push_back(i);
        std::vector<Cube> cubes;
        for (std::size_t b = 0; b < boxes.size(); ++b) {
            auto & box = boxes[b];
            if (box.required.size() != dim || box.forbidden.size() != dim)
                throw Error("box and slice live in different pattern spaces");
            if (box.is_void())
                continue;
            if (! (box.required & slice.mask).is_subset_of(slice.values) || (box.forbidden & slice.mask).intersects(slice.values))
                continue;
            Cube cube{Bits(free.size()), Bits(free.size()), b};
            for (std::size_t i = 0; i < free.size(); ++i) {
                cube.pos.set(i, box.required.test(free[i]));
                cube.neg.set(i, box.forbidden.test(free[i]));
            }
            cubes.push_back(std::move(cube));
        }
        auto expand = [&](const Bits & assignment) {
            Pattern q = slice.values & slice.mask;
            for (std::size_t i = 0; i < free.size(); ++i)
                q.set(free[i], assignment.test(i));
            return q;
        };
        CoverResult result;
        bool enumerate = method == CoverMethod::Enumerate || (method == CoverMethod::Automatic && free.size() <= 16);
        if (enumerate) {
            if (free.size() > 24)
                throw Error("slice too large to enumerate");
            std::vector<std::pair<std::uint32_t, std::uint32_t>> masks;
            for (auto & c : cubes)
                masks.emplace_back(static_cast<std::uint32_t>(c.pos.to_ulong()), static_cast<std::uint32_t>(c.neg.to_ulong()));
            std::set<std::size_t> used;
            std::uint32_t total = std::uint32_t{1} << free.size();
            for (std::uint32_t a = 0; a < total; ++a) {
                ++result.nodes;
                bool hit = false;
                for (std::size_t c = 0; c < masks.size() && ! hit; ++c)
                    if ((a & masks[c].first) == masks[c].first && (a & masks[c].second) == 0) {
                        hit = true;
                        used.insert(cubes[c].box);
                    }
                if (! hit) {
                    result.covered = false;
                    result.uncovered = expand(Bits(free.size(), a));
                    return result;
                }
            }
            result.covered = true;
            result.used.assign(used.begin(), used.end());
            return result;
        }
        std::vector<int> all(cubes.size());
        for (std::size_t i = 0; i < all.size(); ++i)
            all[i] = static_cast<int>(i);
        Splitter splitter(std::move(cubes), free.size());
        result.covered = splitter.run(all);
        result.nodes = splitter.nodes;
        if (result.covered)
            result.used.assign(splitter.used.begin(), splitter.used.end());
        else
            result.uncovered = expand(splitter.witness);
        return result;
    }
}
