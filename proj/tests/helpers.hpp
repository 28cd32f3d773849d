#ifndef TREEIDEAL_TEST_HELPERS_HPP
#define TREEIDEAL_TEST_HELPERS_HPP

#include "treeideal/combgen.hpp"
#include "treeideal/seqtree.hpp"

#include <cstdint>
#include <initializer_list>
#include <vector>

namespace treeideal::test {

inline FinSeq seq(std::initializer_list<std::uint64_t> e) { return FinSeq(e); }

inline Tree tree_of(std::initializer_list<FinSeq> nodes) {
    return Tree::from_nodes(SeqSet(nodes));
}

// Inclusive prefix closure of the listed sequences.
inline Tree closure_of(std::initializer_list<FinSeq> seqs) {
    return prefix_closure(SeqSet(seqs), true);
}

inline NatSet nats(std::initializer_list<std::uint64_t> e) { return NatSet(e); }

// Deterministic generator for property-style tests.
struct Lcg {
    std::uint64_t state;
    explicit Lcg(std::uint64_t seed) : state(seed) {}
    std::uint64_t next() {
        state = state * 6364136223846793005ULL + 1442695040888963407ULL;
        return state >> 33;
    }
    std::uint64_t below(std::uint64_t n) { return next() % n; }
};

// Independent subset-sum oracle: plain bitmask enumeration.
inline NatSet brute_fs(const NatSet& b) {
    std::vector<BigNat> sums;
    for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << b.size()); ++mask) {
        BigNat s;
        for (std::size_t i = 0; i < b.size(); ++i)
            if ((mask >> i) & 1) s += b[i];
        sums.push_back(std::move(s));
    }
    return NatSet(std::move(sums));
}

// Independent k-sum oracle over bitmasks.
inline NatSet brute_fs_k(const NatSet& b, unsigned k) {
    std::vector<BigNat> sums;
    for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << b.size()); ++mask) {
        unsigned bits = 0;
        for (std::size_t i = 0; i < b.size(); ++i) bits += (mask >> i) & 1;
        if (bits != k) continue;
        BigNat s;
        for (std::size_t i = 0; i < b.size(); ++i)
            if ((mask >> i) & 1) s += b[i];
        sums.push_back(std::move(s));
    }
    return NatSet(std::move(sums));
}

} // namespace treeideal::test

#endif
