#ifndef TREEIDEAL_TREEFAM_HPP
#define TREEIDEAL_TREEFAM_HPP

#include "treeideal/combgen.hpp"
#include "treeideal/seqtree.hpp"

#include <cstdint>
#include <vector>

namespace treeideal {

// Depth-bounded description of a Silver tree: positions below `depth` whose
// bit is pinned, and the pinned values. Free positions branch both ways.
struct SilverSpec {
    std::size_t depth = 0;
    std::vector<std::size_t> fixed_positions; // sorted, subset of [0, depth)
    std::vector<int> values;                  // parallel to fixed_positions, bits

    void validate() const; // throws ArgumentError
    bool is_fixed(std::size_t pos) const;
    int value_at(std::size_t pos) const;
    std::vector<std::size_t> free_positions() const;
};

// All binary sequences of length <= depth matching the pinned values.
// Guarded by an estimate of the node count, not by depth alone.
Tree silver_tree_of_spec(const SilverSpec& s);

// Largest number of nested split levels of an embedded complete binary
// subtree. Single-child steps pass the rank through; a two-child node offers
// min(left, right) + 1.
std::size_t split_rank(const Tree& t);

// True iff some node's subtree contains the depth-d truncation of the
// increasing-sequence bush over B.
bool is_mathias_upto(const Tree& t, const NatSet& b, std::size_t depth);

// Every node shorter than the horizon has an extension with at least
// `width` immediate successors.
bool miller_proxy(const Tree& t, std::size_t horizon, std::size_t width);

// Every extension of the stem shorter than the horizon has at least `width`
// immediate successors. The stem must be a node.
bool laver_proxy(const Tree& t, const FinSeq& stem, std::size_t horizon, std::size_t width);

} // namespace treeideal

#endif
