#ifndef TREEIDEAL_DIVLATTICE_HPP
#define TREEIDEAL_DIVLATTICE_HPP

#include "treeideal/combgen.hpp"

#include <cstdint>
#include <utility>

namespace treeideal {

// Outcome of turning an m-sum witness into an n-sum witness (n | m): the
// consumed elements, the shift b they fund, and the shifted remainder of the
// chosen residue class.
struct TransferResult {
    NatSet shifted_set; // (B_p minus consumed) + b, elementwise
    BigNat shift_amount;
    NatSet consumed;    // n(m/n - 1) smallest elements of the class
};

// Picks the most populated residue class mod n (ties to the smallest
// residue), consumes its n(m/n - 1) smallest elements, shifts the rest by
// b = (sum of consumed)/n. Every n-sum of the result is an m-sum of B,
// rechecked by enumeration before returning.
// n >= 2 and n | m, else ArgumentError; class too small -> CapacityError.
TransferResult transfer_witness(const NatSet& b, std::uint64_t n, std::uint64_t m);

// For n not dividing m: A = { j <= bound : n does not divide j } together
// with the witness W = {1, n+1, 2n+1, ...} truncated so every m-sum stays
// within bound. Each m-sum of W is congruent to m mod n, hence in A;
// rechecked by enumeration.
std::pair<NatSet, NatSet> counterexample_set(std::uint64_t n, std::uint64_t m, std::uint64_t bound);

// True iff no n-element subset of [0, universe] with all elements congruent
// mod n has its sum in A. Exhaustive scan of each residue class.
bool verify_non_ipn(const NatSet& a, std::uint64_t n, std::uint64_t universe);

} // namespace treeideal

#endif
