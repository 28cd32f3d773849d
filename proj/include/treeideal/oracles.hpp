#ifndef TREEIDEAL_ORACLES_HPP
#define TREEIDEAL_ORACLES_HPP

#include "treeideal/combgen.hpp"

#include <cstdint>
#include <functional>
#include <optional>
#include <variant>

namespace treeideal {

// Bounded witness search: the candidate set A (target), the witness size s,
// and the universe bound U the witness elements are drawn from. Witness
// images (sums) may exceed U; they still have to land inside the target.
// Completeness relative to the target needs U >= max(target); the searches
// used here deliberately run with smaller U and only claim what they find.
struct WitnessQuery {
    GeneratorKind kind;
    std::variant<NatSet, PairSet> target;
    std::size_t witness_size = 1;
    std::uint64_t universe_bound = 0;
};

// Lexicographically least B subset of [0, U] with |B| = s and
// rho_extended(kind, B) inside the target. Membership of B itself follows
// the defining clause of each family: an FS witness is inside the target
// automatically (singletons are sums), an FS_k witness must be, while delta
// and pairs witnesses range over all naturals. Mathias queries are rejected:
// bush images never embed in a number or pair set.
// Throws CapacityError when C(U+1, s) > 10^8.
std::optional<NatSet> find_witness(const WitnessQuery& q);

// Color of the unordered pair {a,b}, called with a < b.
using PairColoring = std::function<int(const BigNat&, const BigNat&)>;

// Lexicographically least D subset of C with |D| = s and all 2-subsets of D
// the same color. Exhaustive; |C| <= 12.
std::optional<NatSet> ramsey_extract(const NatSet& c, const PairColoring& coloring, std::size_t s);

} // namespace treeideal

#endif
