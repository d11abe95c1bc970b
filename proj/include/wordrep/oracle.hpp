#pragma once

#include <algorithm>
#include <array>
#include <cassert>
#include <compare>
#include <cstdint>
#include <vector>

#include "wordrep/errors.hpp"
#include "wordrep/grid.hpp"
#include "wordrep/numbers.hpp"

// Brute-force ground truth.  Everything here counts by direct enumeration of
// set partitions of the grid cells, with at most one circled cell per block.
// It is deliberately independent of the generating-function and summation
// modules so that the three can check each other.

namespace wordrep {

// The four grid symmetries: identity, reflection across the horizontal axis
// (top row swaps with bottom row), reflection across the vertical axis, and
// the half turn.  Together they form the Klein four-group.
enum class SymmetryKind { identity, horizontal_reflect, vertical_reflect, rotate180 };

// Image of each cell index under `op`, row-major.
inline std::vector<int> cell_map(SymmetryKind op, GridShape shape) {
    std::vector<int> perm(shape.cells());
    for (int r = 0; r < shape.rows; ++r)
        for (int c = 0; c < shape.cols; ++c) {
            int rr = r;
            int cc = c;
            if (op == SymmetryKind::horizontal_reflect || op == SymmetryKind::rotate180)
                rr = shape.rows - 1 - r;
            if (op == SymmetryKind::vertical_reflect || op == SymmetryKind::rotate180)
                cc = shape.cols - 1 - c;
            perm[r * shape.cols + c] = rr * shape.cols + cc;
        }
    return perm;
}

inline SymmetryKind compose(SymmetryKind a, SymmetryKind b) {
    // each symmetry toggles the row flip, the column flip, or both
    auto bits = [](SymmetryKind s) -> unsigned {
        switch (s) {
            case SymmetryKind::identity: return 0u;
            case SymmetryKind::horizontal_reflect: return 1u;
            case SymmetryKind::vertical_reflect: return 2u;
            default: return 3u;
        }
    };
    constexpr SymmetryKind table[4] = {SymmetryKind::identity, SymmetryKind::horizontal_reflect,
                                       SymmetryKind::vertical_reflect, SymmetryKind::rotate180};
    return table[bits(a) ^ bits(b)];
}

// Smallest subgroup containing `ops`: identity included, duplicates dropped.
inline std::vector<SymmetryKind> subgroup_closure(std::vector<SymmetryKind> ops) {
    std::vector<SymmetryKind> group{SymmetryKind::identity};
    auto add = [&](SymmetryKind s) {
        if (std::find(group.begin(), group.end(), s) == group.end()) group.push_back(s);
    };
    for (SymmetryKind s : ops) add(s);
    for (std::size_t before = 0; before != group.size();) {
        before = group.size();
        for (std::size_t i = 0; i < before; ++i)
            for (std::size_t j = 0; j < before; ++j) add(compose(group[i], group[j]));
    }
    std::sort(group.begin(), group.end());
    return group;
}

// A set partition of the grid cells plus at most one circled cell per block.
// block_of is a restricted growth string: block_of[0] == 0 and each label is
// at most 1 + max of the earlier ones.  circled is a bitmask over cell
// indices, which limits shapes to 32 cells (far beyond what enumeration can
// reach anyway).  The derived ordering, block string first and circle mask
// second, is the canonical order used for orbit representatives.
struct CircledPartition {
    GridShape shape;
    std::vector<std::uint8_t> block_of;
    std::uint32_t circled = 0;

    int block_count() const {
        return block_of.empty() ? 0 : 1 + *std::max_element(block_of.begin(), block_of.end());
    }

    bool valid() const {
        if (static_cast<int>(block_of.size()) != shape.cells() || shape.cells() > 32)
            return false;
        int top = -1;
        for (std::uint8_t b : block_of) {
            if (b > top + 1) return false;
            top = std::max(top, int(b));
        }
        if (block_of.size() < 32 && circled >> block_of.size()) return false;
        std::vector<int> circles_in(top + 1, 0);
        for (std::size_t i = 0; i < block_of.size(); ++i)
            if (circled & (1u << i))
                if (++circles_in[block_of[i]] > 1) return false;
        return true;
    }

    friend auto operator<=>(const CircledPartition&, const CircledPartition&) = default;
};

// Relabels a block string into restricted growth form, numbering blocks in
// order of first appearance.
inline void canonicalize_blocks(std::vector<std::uint8_t>& raw) {
    std::array<std::uint8_t, 33> relabel;
    relabel.fill(0xFF);
    std::uint8_t next = 0;
    for (std::uint8_t& b : raw) {
        if (relabel[b] == 0xFF) relabel[b] = next++;
        b = relabel[b];
    }
}

// Applies a symmetry: the cell at perm(c) of the result carries what cell c
// carried before, and blocks are then renumbered canonically.
inline CircledPartition act(SymmetryKind op, const CircledPartition& a) {
    std::vector<int> perm = cell_map(op, a.shape);
    CircledPartition out;
    out.shape = a.shape;
    out.block_of.resize(a.block_of.size());
    for (std::size_t c = 0; c < perm.size(); ++c) {
        out.block_of[perm[c]] = a.block_of[c];
        if (a.circled & (1u << c)) out.circled |= 1u << perm[c];
    }
    canonicalize_blocks(out.block_of);
    return out;
}

// Calls visit(block_of) for every set partition of `cells` cells, as
// restricted growth strings in lexicographic order.
template <class Visitor>
void for_each_partition(int cells, Visitor&& visit) {
    assert(cells >= 1 && cells <= 32);
    std::vector<std::uint8_t> a(cells, 0);
    std::vector<std::uint8_t> prefix_top(cells, 0);  // max label strictly before i
    for (;;) {
        visit(static_cast<const std::vector<std::uint8_t>&>(a));
        for (int i = 1; i < cells; ++i)
            prefix_top[i] = std::max(prefix_top[i - 1], a[i - 1]);
        int pos = cells - 1;
        while (pos > 0 && a[pos] > prefix_top[pos]) --pos;  // a[pos] can grow iff <= prefix max
        if (pos == 0) return;
        ++a[pos];
        std::fill(a.begin() + pos + 1, a.end(), std::uint8_t{0});
    }
}

// Number of ways to circle at most one cell per block: the product of
// (1 + block size) over all blocks.
inline Natural circled_weight(const std::vector<std::uint8_t>& block_of) {
    std::array<int, 32> size{};
    int top = 0;
    for (std::uint8_t b : block_of) {
        ++size[b];
        top = std::max(top, int(b));
    }
    Natural w = 1;
    for (int b = 0; b <= top; ++b) w *= 1 + size[b];
    return w;
}

struct OracleLimit {
    int max_cells = 10;
};

inline void require_within(GridShape shape, OracleLimit limit) {
    int budget = std::min(limit.max_cells, 32);
    if (shape.cells() > budget) throw OracleLimitError(shape.cells(), budget);
}

// Total number of circled-partition arrays on the shape.
inline Natural count_all(GridShape shape, OracleLimit limit = {}) {
    require_within(shape, limit);
    Natural total = 0;
    for_each_partition(shape.cells(),
                       [&](const std::vector<std::uint8_t>& p) { total += circled_weight(p); });
    return total;
}

namespace detail {

inline bool partition_invariant(const std::vector<std::uint8_t>& p,
                                const std::vector<std::vector<int>>& perms,
                                std::vector<std::uint8_t>& scratch) {
    for (const std::vector<int>& perm : perms) {
        scratch.assign(p.size(), 0);
        for (std::size_t c = 0; c < p.size(); ++c) scratch[perm[c]] = p[c];
        canonicalize_blocks(scratch);
        if (scratch != p) return false;
    }
    return true;
}

// Per-block cell lists, label order.
inline std::vector<std::vector<int>> block_members(const std::vector<std::uint8_t>& p) {
    std::vector<std::vector<int>> members(1 + *std::max_element(p.begin(), p.end()));
    for (std::size_t c = 0; c < p.size(); ++c) members[p[c]].push_back(int(c));
    return members;
}

// Advances an odometer of per-block circle choices (0 = no circle, k = k-th
// member cell).  Returns false once all combinations have been visited.
inline bool next_choice(std::vector<std::size_t>& choice,
                        const std::vector<std::vector<int>>& members) {
    for (std::size_t b = 0; b < choice.size(); ++b) {
        if (++choice[b] <= members[b].size()) return true;
        choice[b] = 0;
    }
    return false;
}

inline std::uint32_t choice_mask(const std::vector<std::size_t>& choice,
                                 const std::vector<std::vector<int>>& members) {
    std::uint32_t mask = 0;
    for (std::size_t b = 0; b < choice.size(); ++b)
        if (choice[b] > 0) mask |= 1u << members[b][choice[b] - 1];
    return mask;
}

}  // namespace detail

// Number of arrays fixed by every symmetry in `ops` (more precisely, by the
// subgroup they generate).  A partition contributes only if it is invariant
// as a partition.  Its circle choices then factor over block orbits: within
// an orbit, the representative's choice determines every other block's, and
// the choice must be stable under the representative's stabilizer, which
// pins any circled cell to one fixed by every stabilizer element.  So each
// block orbit contributes 1 + (number of such cells in the representative).
inline Natural count_fixed(GridShape shape, const std::vector<SymmetryKind>& ops,
                           OracleLimit limit = {}) {
    require_within(shape, limit);
    std::vector<std::vector<int>> perms;
    for (SymmetryKind s : subgroup_closure(ops))
        if (s != SymmetryKind::identity) perms.push_back(cell_map(s, shape));
    if (perms.empty()) return count_all(shape, limit);

    Natural total = 0;
    std::vector<std::uint8_t> scratch;
    for_each_partition(shape.cells(), [&](const std::vector<std::uint8_t>& p) {
        if (!detail::partition_invariant(p, perms, scratch)) return;
        std::vector<std::vector<int>> members = detail::block_members(p);
        std::vector<char> done(members.size(), 0);
        Natural contribution = 1;
        for (std::size_t b = 0; b < members.size(); ++b) {
            if (done[b]) continue;
            int rep = members[b][0];
            std::vector<const std::vector<int>*> stabilizer;
            for (const std::vector<int>& perm : perms) {
                std::uint8_t image = p[perm[rep]];
                done[image] = 1;
                if (image == b) stabilizer.push_back(&perm);
            }
            done[b] = 1;
            int fixed_cells = 0;
            for (int c : members[b]) {
                bool fixed = true;
                for (const std::vector<int>* perm : stabilizer)
                    if ((*perm)[c] != c) {
                        fixed = false;
                        break;
                    }
                if (fixed) ++fixed_cells;
            }
            contribution *= 1 + fixed_cells;
        }
        total += contribution;
    });
    return total;
}

// The same count by the slowest possible route: enumerate every circle
// assignment and test invariance array by array.  Only for tiny shapes.
inline Natural count_fixed_naive(GridShape shape, const std::vector<SymmetryKind>& ops,
                                 OracleLimit limit = {}) {
    require_within(shape, limit);
    std::vector<SymmetryKind> group = subgroup_closure(ops);
    Natural total = 0;
    for_each_partition(shape.cells(), [&](const std::vector<std::uint8_t>& p) {
        std::vector<std::vector<int>> members = detail::block_members(p);
        std::vector<std::size_t> choice(members.size(), 0);
        do {
            CircledPartition a{shape, p, detail::choice_mask(choice, members)};
            bool invariant = true;
            for (SymmetryKind s : group)
                if (s != SymmetryKind::identity && !(act(s, a) == a)) {
                    invariant = false;
                    break;
                }
            if (invariant) ++total;
        } while (detail::next_choice(choice, members));
    });
    return total;
}

// Number of orbits of arrays under the full symmetry group, counted by
// keeping exactly the arrays that are minimal in their orbit.  Most
// partitions are settled without touching circles: if some symmetry sends
// the partition to a strictly smaller one, nothing built on it can be
// minimal, and if every non-identity image is strictly larger, every circle
// assignment is minimal.  Only partitions with a nontrivial stabilizer need
// their circle assignments screened.
inline Natural count_orbits(GridShape shape, OracleLimit limit = {}) {
    require_within(shape, limit);
    std::vector<std::vector<int>> perms;
    for (SymmetryKind s : {SymmetryKind::horizontal_reflect, SymmetryKind::vertical_reflect,
                           SymmetryKind::rotate180})
        perms.push_back(cell_map(s, shape));

    Natural total = 0;
    std::vector<std::uint8_t> image;
    for_each_partition(shape.cells(), [&](const std::vector<std::uint8_t>& p) {
        std::vector<const std::vector<int>*> stabilizer;
        for (const std::vector<int>& perm : perms) {
            image.assign(p.size(), 0);
            for (std::size_t c = 0; c < p.size(); ++c) image[perm[c]] = p[c];
            canonicalize_blocks(image);
            if (image < p) return;
            if (image == p) stabilizer.push_back(&perm);
        }
        if (stabilizer.empty()) {
            total += circled_weight(p);
            return;
        }
        std::vector<std::vector<int>> members = detail::block_members(p);
        std::vector<std::size_t> choice(members.size(), 0);
        do {
            std::uint32_t mask = detail::choice_mask(choice, members);
            bool minimal = true;
            for (const std::vector<int>* perm : stabilizer) {
                std::uint32_t moved = 0;
                for (std::size_t c = 0; c < p.size(); ++c)
                    if (mask & (1u << c)) moved |= 1u << (*perm)[c];
                if (moved < mask) {
                    minimal = false;
                    break;
                }
            }
            if (minimal) ++total;
        } while (detail::next_choice(choice, members));
    });
    return total;
}

}  // namespace wordrep
