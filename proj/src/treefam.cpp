#include "treeideal/treefam.hpp"
#include "treeideal/errors.hpp"

#include <algorithm>
#include <map>

namespace treeideal {

void SilverSpec::validate() const {
    if (fixed_positions.size() != values.size())
        throw ArgumentError("silver spec: positions and values differ in length");
    for (std::size_t i = 0; i < fixed_positions.size(); ++i) {
        if (i > 0 && fixed_positions[i - 1] >= fixed_positions[i])
            throw ArgumentError("silver spec: positions not strictly sorted");
        if (fixed_positions[i] >= depth)
            throw ArgumentError("silver spec: position beyond depth");
        if (values[i] != 0 && values[i] != 1)
            throw ArgumentError("silver spec: value is not a bit");
    }
}

bool SilverSpec::is_fixed(std::size_t pos) const {
    return std::binary_search(fixed_positions.begin(), fixed_positions.end(), pos);
}

int SilverSpec::value_at(std::size_t pos) const {
    auto it = std::lower_bound(fixed_positions.begin(), fixed_positions.end(), pos);
    if (it == fixed_positions.end() || *it != pos) throw ArgumentError("position is not fixed");
    return values[static_cast<std::size_t>(it - fixed_positions.begin())];
}

std::vector<std::size_t> SilverSpec::free_positions() const {
    std::vector<std::size_t> out;
    for (std::size_t p = 0; p < depth; ++p)
        if (!is_fixed(p)) out.push_back(p);
    return out;
}

Tree silver_tree_of_spec(const SilverSpec& s) {
    s.validate();

    // Node count is sum over levels of 2^{free positions below the level}.
    constexpr std::uint64_t kNodeBudget = 1'000'000;
    std::uint64_t estimate = 0, level_width = 1;
    for (std::size_t p = 0; p <= s.depth; ++p) {
        estimate += level_width;
        if (estimate > kNodeBudget) throw CapacityError("silver tree would exceed the node budget");
        if (p < s.depth && !s.is_fixed(p)) {
            if (level_width > kNodeBudget) throw CapacityError("silver tree would exceed the node budget");
            level_width *= 2;
        }
    }

    SeqSet nodes;
    std::vector<FinSeq> level{FinSeq{}};
    nodes.push_back(FinSeq{});
    for (std::size_t p = 0; p < s.depth; ++p) {
        std::vector<FinSeq> next;
        for (const FinSeq& n : level) {
            if (s.is_fixed(p)) {
                next.push_back(n.extended(static_cast<std::uint64_t>(s.value_at(p))));
            } else {
                next.push_back(n.extended(0));
                next.push_back(n.extended(1));
            }
        }
        for (const FinSeq& n : next) nodes.push_back(n);
        level = std::move(next);
    }
    normalize_seq_set(nodes);
    return Tree::from_nodes(std::move(nodes));
}

std::size_t split_rank(const Tree& t) {
    if (t.empty()) return 0;
    if (!t.is_binary()) throw ArgumentError("split rank is defined for binary trees");

    // Nodes sorted length-lex; process deepest first so children are ready.
    std::map<FinSeq, std::size_t> rank;
    const SeqSet& ns = t.nodes();
    for (std::size_t i = ns.size(); i-- > 0;) {
        const FinSeq& n = ns[i];
        bool has0 = t.contains(n.extended(0));
        bool has1 = t.contains(n.extended(1));
        std::size_t r = 0;
        if (has0 && has1) {
            std::size_t r0 = rank[n.extended(0)];
            std::size_t r1 = rank[n.extended(1)];
            r = std::max({r0, r1, std::min(r0, r1) + 1});
        } else if (has0 || has1) {
            r = rank[n.extended(has0 ? 0 : 1)];
        }
        rank[n] = r;
    }
    return rank[FinSeq{}];
}

bool is_mathias_upto(const Tree& t, const NatSet& b, std::size_t depth) {
    SeqSet bush = mathias_bush(b, depth);
    if (bush.empty()) return true;
    Tree bush_tree = prefix_closure(bush, true);
    for (const FinSeq& at : t.nodes()) {
        Tree sub = subtree_at(t, at);
        if (bush_tree.subtree_of(sub)) return true;
    }
    return false;
}

namespace {

std::size_t successor_count(const Tree& t, const FinSeq& n) {
    return t.children(n).size();
}

} // namespace

bool miller_proxy(const Tree& t, std::size_t horizon, std::size_t width) {
    for (const FinSeq& s : t.nodes()) {
        if (s.size() >= horizon) continue;
        bool found = false;
        for (const FinSeq& ext : t.nodes()) {
            if (!s.is_prefix_of(ext)) continue;
            if (successor_count(t, ext) >= width) { found = true; break; }
        }
        if (!found) return false;
    }
    return true;
}

bool laver_proxy(const Tree& t, const FinSeq& stem, std::size_t horizon, std::size_t width) {
    if (!t.contains(stem)) throw ArgumentError("stem is not a node of the tree");
    for (const FinSeq& ext : t.nodes()) {
        if (!stem.is_prefix_of(ext) || ext.size() >= horizon) continue;
        if (successor_count(t, ext) < width) return false;
    }
    return true;
}

} // namespace treeideal
