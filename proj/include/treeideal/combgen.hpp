#ifndef TREEIDEAL_COMBGEN_HPP
#define TREEIDEAL_COMBGEN_HPP

#include "treeideal/bignat.hpp"
#include "treeideal/seqtree.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <variant>
#include <vector>

namespace treeideal {

// Finite strictly-sorted set of naturals.
class NatSet {
public:
    NatSet() = default;
    explicit NatSet(std::vector<BigNat> elems);
    NatSet(std::initializer_list<std::uint64_t> elems);

    std::size_t size() const { return elems_.size(); }
    bool empty() const { return elems_.empty(); }
    const std::vector<BigNat>& elements() const { return elems_; }
    const BigNat& operator[](std::size_t i) const { return elems_[i]; }
    const BigNat& max() const;

    bool contains(const BigNat& v) const;
    bool subset_of(const NatSet& o) const;
    void insert(BigNat v);
    void merge(const NatSet& o);

    friend bool operator==(const NatSet& a, const NatSet& b) = default;

private:
    std::vector<BigNat> elems_;
};

// Unordered pairs {a,b}, a < b, stored ascending.
class PairSet {
public:
    using Pair = std::pair<BigNat, BigNat>;

    PairSet() = default;

    std::size_t size() const { return elems_.size(); }
    bool empty() const { return elems_.empty(); }
    const std::vector<Pair>& elements() const { return elems_; }

    bool contains(const BigNat& a, const BigNat& b) const;
    bool subset_of(const PairSet& o) const;
    // Inserts {a,b}; the two components must differ.
    void insert(BigNat a, BigNat b);
    void merge(const PairSet& o);

    friend bool operator==(const PairSet& a, const PairSet& b) = default;

private:
    std::vector<Pair> elems_;
};

// Which value-set generator a reduction or witness query talks about.
struct GeneratorKind {
    enum class Tag { FS, FSK, Delta, Pairs, Mathias };

    Tag tag = Tag::FS;
    unsigned k = 0; // FSK only, >= 2

    static GeneratorKind fs() { return {Tag::FS, 0}; }
    static GeneratorKind fsk(unsigned k);
    static GeneratorKind delta() { return {Tag::Delta, 0}; }
    static GeneratorKind pairs() { return {Tag::Pairs, 0}; }
    static GeneratorKind mathias() { return {Tag::Mathias, 0}; }

    // "fs", "fs2", "fs3", ..., "delta", "pairs", "mathias"
    static std::optional<GeneratorKind> parse(const std::string& name);
    std::string name() const;

    friend bool operator==(const GeneratorKind&, const GeneratorKind&) = default;
};

// All nonempty finite subset sums. Guarded at |B| <= 20.
NatSet fs(const NatSet& b);

// Sums of exactly k distinct elements; k >= 2.
NatSet fs_k(const NatSet& b, unsigned k);

// Positive pairwise differences.
NatSet delta(const NatSet& b);

// All 2-element subsets.
PairSet pairs(const NatSet& b);

// Strictly increasing sequences over b of length 1..depth. Elements must fit
// in sequence entries (64 bits).
SeqSet mathias_bush(const NatSet& b, std::size_t depth);

using GenImage = std::variant<NatSet, PairSet, SeqSet>;

// Dispatches on kind; for Mathias the depth is |B| (every increasing
// sequence over B).
GenImage rho_extended(const GeneratorKind& kind, const NatSet& b);

bool gen_image_subset(const GenImage& a, const GenImage& b);

} // namespace treeideal

#endif
