#ifndef TREEIDEAL_SEQTREE_HPP
#define TREEIDEAL_SEQTREE_HPP

#include <compare>
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace treeideal {

// A finite sequence of naturals. Doubles as a bit sequence when every entry
// is 0 or 1. Ordered length-lexicographically: shorter first, then entrywise.
class FinSeq {
public:
    FinSeq() = default;
    explicit FinSeq(std::vector<std::uint64_t> entries) : entries_(std::move(entries)) {}
    FinSeq(std::initializer_list<std::uint64_t> entries) : entries_(entries) {}

    std::size_t size() const { return entries_.size(); }
    bool empty() const { return entries_.empty(); }
    std::uint64_t operator[](std::size_t i) const { return entries_[i]; }
    const std::vector<std::uint64_t>& entries() const { return entries_; }

    // First k entries.
    FinSeq prefix(std::size_t k) const;
    FinSeq extended(std::uint64_t v) const;
    FinSeq concat(const FinSeq& tail) const;

    bool is_prefix_of(const FinSeq& o) const;
    bool is_proper_prefix_of(const FinSeq& o) const;
    bool is_binary() const;

    bool all_entries_increasing() const;

    friend std::strong_ordering operator<=>(const FinSeq& a, const FinSeq& b);
    friend bool operator==(const FinSeq& a, const FinSeq& b) = default;

private:
    std::vector<std::uint64_t> entries_;
};

using BitSeq = FinSeq; // entries restricted to {0,1}

// Set of sequences kept sorted length-lex and deduplicated.
using SeqSet = std::vector<FinSeq>;
void normalize_seq_set(SeqSet& s);
bool seq_set_contains(const SeqSet& s, const FinSeq& x);
bool seq_subset(const SeqSet& a, const SeqSet& b);

bool is_tree(const SeqSet& nodes);

// A finite prefix-closed set of sequences. Nodes are stored sorted
// length-lex, which is also the serialization order.
class Tree {
public:
    Tree() = default;
    // Validates prefix closure; throws ArgumentError if it fails.
    static Tree from_nodes(SeqSet nodes);

    const SeqSet& nodes() const { return nodes_; }
    std::size_t size() const { return nodes_.size(); }
    bool empty() const { return nodes_.empty(); }
    bool contains(const FinSeq& s) const { return seq_set_contains(nodes_, s); }
    bool is_binary() const;
    bool subtree_of(const Tree& o) const { return seq_subset(nodes_, o.nodes_); }

    // Immediate successors s^v present in the tree, sorted by v.
    std::vector<FinSeq> children(const FinSeq& s) const;
    std::size_t max_node_length() const;

    friend bool operator==(const Tree& a, const Tree& b) = default;

private:
    SeqSet nodes_;
};

// Strictly increasing under the proper-prefix order; element i+1 extends
// element i.
struct Chain {
    std::vector<FinSeq> nodes;

    std::size_t size() const { return nodes.size(); }
    bool valid() const;
    bool within(const Tree& t) const;
};

// Closure under prefixes. Inclusive keeps each sequence itself; the
// exclusive variant keeps only proper prefixes.
Tree prefix_closure(const SeqSet& seqs, bool inclusive);

// All prefixes of a deepest node (ties broken by the lexicographically least
// such node), as a chain rooted at the empty sequence. Absent for the empty
// tree.
std::optional<Chain> longest_branch(const Tree& t);

// { tail : at ^ tail in t }. Empty when `at` is not a node.
Tree subtree_at(const Tree& t, const FinSeq& at);

// All maximal chains: one per node with no extension in the tree.
std::vector<Chain> maximal_branches(const Tree& t);

} // namespace treeideal

#endif
