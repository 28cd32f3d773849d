#include "treeideal/oracles.hpp"
#include "treeideal/errors.hpp"

namespace treeideal {

namespace {

// C(n, k) clamped at limit+1 to avoid overflow.
std::uint64_t binomial_clamped(std::uint64_t n, std::uint64_t k, std::uint64_t limit) {
    if (k > n) return 0;
    k = std::min(k, n - k);
    unsigned __int128 r = 1;
    for (std::uint64_t i = 1; i <= k; ++i) {
        r = r * (n - k + i) / i;
        if (r > limit) return limit + 1;
    }
    return static_cast<std::uint64_t>(r);
}

constexpr std::uint64_t kSearchLimit = 100'000'000;

struct Searcher {
    const GeneratorKind& kind;
    const NatSet* nat_target = nullptr;
    const PairSet* pair_target = nullptr;
    std::size_t want;
    std::uint64_t bound;

    std::vector<std::uint64_t> picked;
    // FS only: all nonempty subset sums of the picked elements.
    std::vector<BigNat> partial_sums;

    bool element_ok(std::uint64_t x) {
        BigNat bx(x);
        switch (kind.tag) {
            case GeneratorKind::Tag::FS: {
                // Every new subset sum through x must land in the target.
                if (!nat_target->contains(bx)) return false;
                for (const BigNat& s : partial_sums)
                    if (!nat_target->contains(s + bx)) return false;
                return true;
            }
            case GeneratorKind::Tag::FSK: {
                // An FS_k witness lives inside the target set itself.
                if (!nat_target->contains(bx)) return false;
                if (picked.size() + 1 < kind.k) return true;
                // New k-sums = x plus each (k-1)-subset of the picked set.
                bool ok = true;
                for_each_subsets(kind.k - 1, [&](const BigNat& part) {
                    if (!nat_target->contains(part + bx)) ok = false;
                });
                return ok;
            }
            case GeneratorKind::Tag::Delta: {
                for (std::uint64_t p : picked)
                    if (!nat_target->contains(BigNat(x - p))) return false;
                return true;
            }
            case GeneratorKind::Tag::Pairs: {
                for (std::uint64_t p : picked)
                    if (!pair_target->contains(BigNat(p), bx)) return false;
                return true;
            }
            default:
                return false;
        }
    }

    // Visits the sums of all size-r subsets of the picked set.
    template <typename F>
    void for_each_subsets(std::size_t r, F&& visit) {
        std::vector<std::size_t> idx;
        auto rec = [&](auto&& self, std::size_t from, BigNat sum) -> void {
            if (idx.size() == r) {
                visit(sum);
                return;
            }
            for (std::size_t i = from; i < picked.size(); ++i) {
                idx.push_back(i);
                self(self, i + 1, sum + BigNat(picked[i]));
                idx.pop_back();
            }
        };
        rec(rec, 0, BigNat(0));
    }

    bool search(std::uint64_t from) {
        if (picked.size() == want) return true;
        for (std::uint64_t x = from; x <= bound; ++x) {
            if (!element_ok(x)) continue;
            picked.push_back(x);
            std::size_t sums_before = partial_sums.size();
            if (kind.tag == GeneratorKind::Tag::FS) {
                partial_sums.push_back(BigNat(x));
                for (std::size_t i = 0; i < sums_before; ++i)
                    partial_sums.push_back(partial_sums[i] + BigNat(x));
            }
            if (search(x + 1)) return true;
            picked.pop_back();
            partial_sums.resize(sums_before);
            if (x == bound) break; // avoid wraparound at UINT64_MAX
        }
        return false;
    }
};

} // namespace

std::optional<NatSet> find_witness(const WitnessQuery& q) {
    if (q.witness_size < 1) throw ArgumentError("witness size must be at least 1");
    if (q.kind.tag == GeneratorKind::Tag::Mathias)
        throw ArgumentError("mathias images are sequence sets; no set witness query");
    if (binomial_clamped(q.universe_bound + 1, q.witness_size, kSearchLimit) > kSearchLimit)
        throw CapacityError("witness search space exceeds 10^8 candidates");

    Searcher s{q.kind, nullptr, nullptr, q.witness_size, q.universe_bound, {}, {}};
    if (q.kind.tag == GeneratorKind::Tag::Pairs) {
        if (!std::holds_alternative<PairSet>(q.target))
            throw ArgumentError("pairs query needs a pair-set target");
        s.pair_target = &std::get<PairSet>(q.target);
    } else {
        if (!std::holds_alternative<NatSet>(q.target))
            throw ArgumentError("query needs a number-set target");
        s.nat_target = &std::get<NatSet>(q.target);
    }

    if (!s.search(0)) return std::nullopt;

    std::vector<BigNat> elems;
    for (std::uint64_t v : s.picked) elems.push_back(BigNat(v));
    NatSet witness(std::move(elems));

    // Soundness recheck by direct recomputation.
    GenImage img = rho_extended(q.kind, witness);
    GenImage target = s.pair_target ? GenImage(*s.pair_target) : GenImage(*s.nat_target);
    if (!gen_image_subset(img, target))
        throw Error("internal: witness failed recomputation");
    if (q.kind.tag == GeneratorKind::Tag::FSK && !witness.subset_of(*s.nat_target))
        throw Error("internal: fsk witness escaped the target");
    return witness;
}

std::optional<NatSet> ramsey_extract(const NatSet& c, const PairColoring& coloring, std::size_t s) {
    if (c.size() > 12) throw CapacityError("ramsey_extract: base set larger than 12");
    if (s == 0) return NatSet{};
    if (s > c.size()) return std::nullopt;

    std::vector<std::size_t> idx;
    auto mono = [&](std::size_t next) {
        // All pairs through the new element must match the color of the
        // first pair of the selection so far.
        if (idx.empty()) return true;
        int want = coloring(c[idx[0]], c[next]);
        for (std::size_t i : idx)
            if (coloring(c[i], c[next]) != want) return false;
        if (idx.size() >= 2) {
            int base = coloring(c[idx[0]], c[idx[1]]);
            if (want != base) return false;
        }
        return true;
    };
    auto rec = [&](auto&& self, std::size_t from) -> bool {
        if (idx.size() == s) return true;
        for (std::size_t i = from; i < c.size(); ++i) {
            if (!mono(i)) continue;
            idx.push_back(i);
            if (self(self, i + 1)) return true;
            idx.pop_back();
        }
        return false;
    };
    if (!rec(rec, 0)) return std::nullopt;

    std::vector<BigNat> out;
    for (std::size_t i : idx) out.push_back(c[i]);
    return NatSet(std::move(out));
}

} // namespace treeideal
