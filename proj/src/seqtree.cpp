#include "treeideal/seqtree.hpp"
#include "treeideal/errors.hpp"

#include <algorithm>

namespace treeideal {

FinSeq FinSeq::prefix(std::size_t k) const {
    return FinSeq(std::vector<std::uint64_t>(entries_.begin(), entries_.begin() + std::min(k, entries_.size())));
}

FinSeq FinSeq::extended(std::uint64_t v) const {
    std::vector<std::uint64_t> e = entries_;
    e.push_back(v);
    return FinSeq(std::move(e));
}

FinSeq FinSeq::concat(const FinSeq& tail) const {
    std::vector<std::uint64_t> e = entries_;
    e.insert(e.end(), tail.entries_.begin(), tail.entries_.end());
    return FinSeq(std::move(e));
}

bool FinSeq::is_prefix_of(const FinSeq& o) const {
    if (size() > o.size()) return false;
    return std::equal(entries_.begin(), entries_.end(), o.entries_.begin());
}

bool FinSeq::is_proper_prefix_of(const FinSeq& o) const {
    return size() < o.size() && is_prefix_of(o);
}

bool FinSeq::is_binary() const {
    return std::all_of(entries_.begin(), entries_.end(), [](std::uint64_t v) { return v <= 1; });
}

bool FinSeq::all_entries_increasing() const {
    for (std::size_t i = 1; i < entries_.size(); ++i)
        if (entries_[i - 1] >= entries_[i]) return false;
    return true;
}

std::strong_ordering operator<=>(const FinSeq& a, const FinSeq& b) {
    if (a.size() != b.size()) return a.size() <=> b.size();
    for (std::size_t i = 0; i < a.size(); ++i)
        if (a.entries_[i] != b.entries_[i]) return a.entries_[i] <=> b.entries_[i];
    return std::strong_ordering::equal;
}

void normalize_seq_set(SeqSet& s) {
    std::sort(s.begin(), s.end());
    s.erase(std::unique(s.begin(), s.end()), s.end());
}

bool seq_set_contains(const SeqSet& s, const FinSeq& x) {
    return std::binary_search(s.begin(), s.end(), x);
}

bool seq_subset(const SeqSet& a, const SeqSet& b) {
    return std::all_of(a.begin(), a.end(), [&](const FinSeq& s) { return seq_set_contains(b, s); });
}

bool is_tree(const SeqSet& nodes) {
    for (const FinSeq& s : nodes) {
        if (s.empty()) continue;
        if (!seq_set_contains(nodes, s.prefix(s.size() - 1))) return false;
    }
    return true;
}

Tree Tree::from_nodes(SeqSet nodes) {
    normalize_seq_set(nodes);
    if (!is_tree(nodes)) throw ArgumentError("node set is not prefix-closed");
    Tree t;
    t.nodes_ = std::move(nodes);
    return t;
}

bool Tree::is_binary() const {
    return std::all_of(nodes_.begin(), nodes_.end(), [](const FinSeq& s) { return s.is_binary(); });
}

std::vector<FinSeq> Tree::children(const FinSeq& s) const {
    std::vector<FinSeq> out;
    for (const FinSeq& n : nodes_)
        if (n.size() == s.size() + 1 && s.is_prefix_of(n)) out.push_back(n);
    return out;
}

std::size_t Tree::max_node_length() const {
    return nodes_.empty() ? 0 : nodes_.back().size();
}

bool Chain::valid() const {
    for (std::size_t i = 1; i < nodes.size(); ++i)
        if (!nodes[i - 1].is_proper_prefix_of(nodes[i])) return false;
    return true;
}

bool Chain::within(const Tree& t) const {
    return std::all_of(nodes.begin(), nodes.end(), [&](const FinSeq& s) { return t.contains(s); });
}

Tree prefix_closure(const SeqSet& seqs, bool inclusive) {
    SeqSet out;
    for (const FinSeq& s : seqs) {
        std::size_t top = inclusive ? s.size() + 1 : s.size();
        for (std::size_t k = 0; k < top; ++k) out.push_back(s.prefix(k));
    }
    normalize_seq_set(out);
    return Tree::from_nodes(std::move(out));
}

std::optional<Chain> longest_branch(const Tree& t) {
    if (t.empty()) return std::nullopt;
    // Nodes are sorted length-lex, so the last node is a deepest one; the
    // first node of that depth is the lexicographically least.
    std::size_t depth = t.nodes().back().size();
    const FinSeq* pick = nullptr;
    for (const FinSeq& s : t.nodes())
        if (s.size() == depth) { pick = &s; break; }
    Chain c;
    for (std::size_t k = 0; k <= pick->size(); ++k) c.nodes.push_back(pick->prefix(k));
    return c;
}

Tree subtree_at(const Tree& t, const FinSeq& at) {
    SeqSet out;
    for (const FinSeq& n : t.nodes())
        if (at.is_prefix_of(n))
            out.push_back(FinSeq(std::vector<std::uint64_t>(n.entries().begin() + static_cast<std::ptrdiff_t>(at.size()),
                                                            n.entries().end())));
    normalize_seq_set(out);
    return Tree::from_nodes(std::move(out));
}

std::vector<Chain> maximal_branches(const Tree& t) {
    std::vector<Chain> out;
    for (const FinSeq& s : t.nodes()) {
        if (!t.children(s).empty()) continue;
        Chain c;
        for (std::size_t k = 0; k <= s.size(); ++k) c.nodes.push_back(s.prefix(k));
        out.push_back(std::move(c));
    }
    return out;
}

} // namespace treeideal
