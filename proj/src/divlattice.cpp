#include "treeideal/divlattice.hpp"
#include "treeideal/errors.hpp"

#include <algorithm>
#include <vector>

namespace treeideal {

TransferResult transfer_witness(const NatSet& b, std::uint64_t n, std::uint64_t m) {
    if (n < 2) throw ArgumentError("transfer needs n >= 2");
    if (m == 0 || m % n != 0) throw ArgumentError("n does not divide m");
    std::uint64_t k = m / n;

    // Most populated residue class mod n, ties to the smallest residue.
    std::vector<std::vector<BigNat>> classes(n);
    for (const BigNat& x : b.elements()) classes[x.mod_small(n)].push_back(x);
    std::size_t best = 0;
    for (std::size_t p = 1; p < n; ++p)
        if (classes[p].size() > classes[best].size()) best = p;
    const std::vector<BigNat>& cls = classes[best];

    std::size_t need = static_cast<std::size_t>(n * (k - 1));
    if (cls.size() < need + n)
        throw CapacityError("largest residue class holds " + std::to_string(cls.size()) +
                            " elements; transfer needs " + std::to_string(need + n));

    std::vector<BigNat> consumed(cls.begin(), cls.begin() + static_cast<std::ptrdiff_t>(need));
    BigNat total;
    for (const BigNat& x : consumed) total += x;
    if (total.mod_small(n) != 0) throw Error("internal: consumed sum not divisible");
    BigNat shift = total.div_small(n);

    std::vector<BigNat> rest;
    for (std::size_t i = need; i < cls.size(); ++i) rest.push_back(cls[i] + shift);

    TransferResult r{NatSet(std::move(rest)), std::move(shift), NatSet(std::move(consumed))};

    // Every n-sum of the shifted set must be an m-sum of B.
    if (n <= r.shifted_set.size()) {
        NatSet small = fs_k(r.shifted_set, static_cast<unsigned>(n));
        NatSet large = fs_k(b, static_cast<unsigned>(m));
        if (!small.subset_of(large)) throw Error("internal: transfer guarantee failed");
    }
    return r;
}

std::pair<NatSet, NatSet> counterexample_set(std::uint64_t n, std::uint64_t m, std::uint64_t bound) {
    if (n < 2) throw ArgumentError("counterexample needs n >= 2");
    if (m < 2) throw ArgumentError("counterexample needs m >= 2");
    if (m % n == 0) throw ArgumentError("n divides m");

    std::vector<BigNat> a;
    for (std::uint64_t j = 0; j <= bound; ++j)
        if (j % n != 0) a.push_back(BigNat(j));
    NatSet aset(std::move(a));

    // Largest initial segment of {kn+1} whose top m-sum stays within bound.
    std::vector<std::uint64_t> w;
    for (std::uint64_t kk = 0;; ++kk) {
        std::uint64_t next = kk * n + 1;
        if (next > bound) break;
        w.push_back(next);
        if (w.size() >= m) {
            std::uint64_t top = 0;
            for (std::size_t i = w.size() - m; i < w.size(); ++i) top += w[i];
            if (top > bound) { w.pop_back(); break; }
        }
    }
    std::vector<BigNat> wb;
    for (std::uint64_t v : w) wb.push_back(BigNat(v));
    NatSet wset(std::move(wb));

    if (m <= wset.size()) {
        NatSet sums = fs_k(wset, static_cast<unsigned>(m));
        if (!sums.subset_of(aset)) throw Error("internal: counterexample guarantee failed");
    }
    return {std::move(aset), std::move(wset)};
}

bool verify_non_ipn(const NatSet& a, std::uint64_t n, std::uint64_t universe) {
    if (n < 2) throw ArgumentError("verify_non_ipn needs n >= 2");
    if (!a.empty() && BigNat(universe) < a.max())
        throw ArgumentError("set extends beyond the universe bound");

    for (std::uint64_t p = 0; p < n; ++p) {
        std::vector<std::uint64_t> cls;
        for (std::uint64_t x = p; x <= universe; x += n) cls.push_back(x);
        if (cls.size() < n) continue;
        // Enumerate n-subsets of the class.
        std::vector<std::size_t> idx(n);
        for (std::size_t i = 0; i < n; ++i) idx[i] = i;
        while (true) {
            std::uint64_t sum = 0;
            for (std::size_t i : idx) sum += cls[i];
            if (a.contains(BigNat(sum))) return false;
            std::size_t i = n;
            bool advanced = false;
            while (i-- > 0) {
                if (idx[i] != i + cls.size() - n) {
                    ++idx[i];
                    for (std::size_t j = i + 1; j < n; ++j) idx[j] = idx[j - 1] + 1;
                    advanced = true;
                    break;
                }
            }
            if (!advanced) break;
        }
    }
    return true;
}

} // namespace treeideal
