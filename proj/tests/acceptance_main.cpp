// Acceptance suite: one pass/fail line per criterion, exhaustive at the
// stated scales. Exit code = number of failing criteria.

#include "treeideal/divlattice.hpp"
#include "treeideal/errors.hpp"
#include "treeideal/oracles.hpp"
#include "treeideal/reduce.hpp"
#include "treeideal/silverred.hpp"
#include "treeideal/treefam.hpp"

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

using namespace treeideal;

namespace {

struct Outcome {
    bool pass = true;
    long checks = 0;
    std::string detail;

    void fail(const std::string& msg) {
        pass = false;
        if (detail.empty()) detail = msg;
    }
    void expect(bool cond, const std::string& msg) {
        ++checks;
        if (!cond) fail(msg);
    }
};

// ---- shared tree universe: every binary tree with at most 8 nodes ----

// Trees with exactly n >= 1 nodes, nodes listed relative to the root: a root
// plus every split of the remaining budget between the two subtrees.
const std::vector<SeqSet>& trees_exact(std::size_t n) {
    static std::vector<std::vector<SeqSet>> memo(9);
    std::vector<SeqSet>& out = memo[n];
    if (!out.empty()) return out;
    if (n == 1) {
        out.push_back({FinSeq{}});
        return out;
    }
    // A size-0 child means "absent".
    auto options = [](std::size_t k) {
        std::vector<SeqSet> opts;
        if (k == 0)
            opts.push_back({});
        else
            opts = trees_exact(k);
        return opts;
    };
    for (std::size_t a = 0; a <= n - 1; ++a) {
        std::size_t b = n - 1 - a;
        for (const SeqSet& left : options(a))
            for (const SeqSet& right : options(b)) {
                SeqSet nodes{FinSeq{}};
                for (const FinSeq& s : left) nodes.push_back(FinSeq{0}.concat(s));
                for (const FinSeq& s : right) nodes.push_back(FinSeq{1}.concat(s));
                normalize_seq_set(nodes);
                out.push_back(std::move(nodes));
            }
    }
    return out;
}

const std::vector<Tree>& tree_universe() {
    static std::vector<Tree> all;
    if (!all.empty()) return all;
    all.push_back(Tree{});
    for (std::size_t n = 1; n <= 8; ++n)
        for (const SeqSet& nodes : trees_exact(n)) all.push_back(Tree::from_nodes(nodes));
    return all;
}

const std::vector<GeneratorKind>& all_kinds() {
    static std::vector<GeneratorKind> kinds{GeneratorKind::fs(), GeneratorKind::fsk(2),
                                            GeneratorKind::delta(), GeneratorKind::pairs(),
                                            GeneratorKind::mathias()};
    return kinds;
}

const Encoder& encoder_for_kind(const GeneratorKind& kind) {
    static Encoder p4 = Encoder::make(EncoderFlavor::P4, 2, 7);
    static Encoder p2 = Encoder::make(EncoderFlavor::P2, 2, 7);
    static Encoder gen = Encoder::make(EncoderFlavor::General, 2, 7);
    switch (required_flavor(kind)) {
        case EncoderFlavor::P4: return p4;
        case EncoderFlavor::P2: return p2;
        default: return gen;
    }
}

bool payload_contains(const ReductionImage& img, const GenImage& gen) {
    if (std::holds_alternative<NatSet>(gen)) return std::get<NatSet>(gen).subset_of(img.nats());
    if (std::holds_alternative<PairSet>(gen)) return std::get<PairSet>(gen).subset_of(img.pair_set());
    const SeqSet& bush = std::get<SeqSet>(gen);
    return std::all_of(bush.begin(), bush.end(),
                       [&](const FinSeq& s) { return img.tree().contains(s); });
}

// ---- criteria ----

Outcome criterion_forward_inclusion() {
    Outcome o;
    for (const Tree& t : tree_universe())
        for (const GeneratorKind& kind : all_kinds()) {
            const Encoder& e = encoder_for_kind(kind);
            ReductionImage img = phi(t, kind, e);
            for (const Chain& branch : maximal_branches(t)) {
                if (branch.size() < 2) continue;
                try {
                    NatSet w = forward_witness(t, branch, kind, e);
                    o.expect(payload_contains(img, rho_extended(kind, w)),
                             "witness image escapes phi for kind " + kind.name());
                } catch (const Error& err) {
                    o.fail("forward_witness failed: " + std::string(err.what()));
                }
            }
        }
    return o;
}

Outcome criterion_round_trip() {
    Outcome o;
    for (const Tree& t : tree_universe())
        for (const Chain& branch : maximal_branches(t)) {
            if (branch.size() < 2) continue;
            std::size_t depth = branch.nodes.back().size();
            for (const GeneratorKind& kind : all_kinds()) {
                const Encoder& e = encoder_for_kind(kind);
                try {
                    NatSet w = forward_witness(t, branch, kind, e);
                    Chain c;
                    switch (kind.tag) {
                        case GeneratorKind::Tag::FS:
                            c = extract_hindman(w, t, e);
                            break;
                        case GeneratorKind::Tag::FSK: {
                            if (depth < 2) continue;
                            auto r = extract_h2(w, t, e);
                            if (!std::holds_alternative<Chain>(r)) {
                                o.fail("fs2 round trip produced a certificate");
                                continue;
                            }
                            c = std::get<Chain>(r);
                            break;
                        }
                        case GeneratorKind::Tag::Delta:
                            if (depth < 2) continue;
                            c = extract_delta(w, t, e);
                            break;
                        case GeneratorKind::Tag::Pairs:
                            if (depth < 2) continue;
                            c = extract_ramsey(w, t, e);
                            break;
                        case GeneratorKind::Tag::Mathias: {
                            std::vector<std::uint64_t> codes;
                            for (std::size_t k = 0; k < depth; ++k)
                                codes.push_back(e.code(branch.nodes.back().prefix(k)).to_uint64());
                            c = extract_mathias(FinSeq(std::move(codes)), t, e);
                            break;
                        }
                    }
                    o.expect(c.size() >= depth, "chain shorter than the branch for " + kind.name());
                    o.expect(c.valid() && c.within(t), "extracted chain invalid for " + kind.name());
                } catch (const Error& err) {
                    o.fail("round trip failed for " + kind.name() + ": " + err.what());
                }
            }
        }
    return o;
}

Outcome criterion_backward_vs_oracle() {
    Outcome o;
    constexpr std::uint64_t kBound = 64;
    for (const Tree& t : tree_universe())
        for (const GeneratorKind& kind : all_kinds()) {
            if (kind.tag == GeneratorKind::Tag::Mathias) continue;
            const Encoder& e = encoder_for_kind(kind);
            ReductionImage img = phi(t, kind, e);
            std::size_t smin = kind.tag == GeneratorKind::Tag::FS ? 1 : 2;
            for (std::size_t s = smin; s <= 4; ++s) {
                WitnessQuery q;
                q.kind = kind;
                q.witness_size = s;
                q.universe_bound = kBound;
                if (kind.tag == GeneratorKind::Tag::Pairs)
                    q.target = img.pair_set();
                else
                    q.target = img.nats();
                std::optional<NatSet> w;
                try {
                    w = find_witness(q);
                } catch (const Error& err) {
                    o.fail("find_witness failed: " + std::string(err.what()));
                    continue;
                }
                if (!w) continue;
                o.expect(payload_contains(img, rho_extended(kind, *w)), "oracle witness unsound");
                try {
                    switch (kind.tag) {
                        case GeneratorKind::Tag::FS: {
                            Chain c = extract_hindman(*w, t, e);
                            o.expect(c.size() >= w->size(), "fs chain shorter than witness");
                            o.expect(c.valid() && c.within(t), "fs chain invalid");
                            break;
                        }
                        case GeneratorKind::Tag::FSK: {
                            std::size_t pure = 0;
                            for (const BigNat& v : w->elements())
                                if (v.is_power_of_two() && *v.lowest_set_bit() % 2 == 0) ++pure;
                            auto r = extract_h2(*w, t, e);
                            if (std::holds_alternative<ViolationCert>(r)) {
                                o.fail("oracle fs2 witness produced a certificate");
                                break;
                            }
                            const Chain& c = std::get<Chain>(r);
                            o.expect(c.size() >= pure, "fs2 chain shorter than the pure part");
                            o.expect(c.valid() && c.within(t), "fs2 chain invalid");
                            break;
                        }
                        case GeneratorKind::Tag::Delta: {
                            Chain c = extract_delta(*w, t, e);
                            o.expect(c.size() + 1 >= w->size(), "delta chain too short");
                            o.expect(c.valid() && c.within(t), "delta chain invalid");
                            break;
                        }
                        case GeneratorKind::Tag::Pairs: {
                            Chain c = extract_ramsey(*w, t, e);
                            o.expect(c.size() >= w->size(), "pairs chain shorter than witness");
                            o.expect(c.valid() && c.within(t), "pairs chain invalid");
                            break;
                        }
                        default:
                            break;
                    }
                } catch (const Error& err) {
                    o.fail("extraction failed on oracle witness for " + kind.name() + ": " + err.what());
                }
            }
        }
    return o;
}

Outcome criterion_mathias_depth() {
    Outcome o;
    const Encoder& e = encoder_for_kind(GeneratorKind::mathias());
    for (const Tree& t : tree_universe()) {
        ReductionImage img = phi(t, GeneratorKind::mathias(), e);
        o.expect(img.tree().max_node_length() == t.max_node_length(),
                 "mathias image depth differs from tree depth");
    }
    return o;
}

Outcome criterion_divisibility() {
    Outcome o;
    std::vector<NatSet> sets;
    for (std::uint64_t i = 0; i < 20; ++i) {
        std::vector<BigNat> e;
        std::uint64_t offset = 1 + (i % 7), step = 60 * (1 + i);
        for (std::uint64_t j = 1; j <= 10; ++j) e.push_back(BigNat(offset + step * j));
        sets.push_back(NatSet(std::move(e)));
    }
    for (std::uint64_t n = 2; n <= 6; ++n)
        for (std::uint64_t m = 2; m <= 6; ++m) {
            if (m % n == 0) {
                for (const NatSet& b : sets) {
                    try {
                        TransferResult r = transfer_witness(b, n, m);
                        o.expect(fs_k(r.shifted_set, static_cast<unsigned>(n))
                                     .subset_of(fs_k(b, static_cast<unsigned>(m))),
                                 "transfer guarantee failed");
                    } catch (const Error& err) {
                        o.fail("transfer failed: " + std::string(err.what()));
                    }
                }
            } else {
                try {
                    auto [a, w] = counterexample_set(n, m, 200);
                    o.expect(m <= w.size(), "counterexample witness too small");
                    if (m <= w.size())
                        o.expect(fs_k(w, static_cast<unsigned>(m)).subset_of(a),
                                 "counterexample sums escape A");
                    o.expect(verify_non_ipn(a, n, 200), "A admits an n-sum witness");
                } catch (const Error& err) {
                    o.fail("counterexample failed: " + std::string(err.what()));
                }
            }
        }
    return o;
}

Outcome criterion_ramsey_exhaustion() {
    Outcome o;
    NatSet c{{0, 1, 2, 3, 4, 5}};
    // Pair index table for the 15 edges of the 6-set.
    int pair_index[6][6];
    int next = 0;
    for (int i = 0; i < 6; ++i)
        for (int j = i + 1; j < 6; ++j) pair_index[i][j] = next++;
    for (std::uint32_t mask = 0; mask < (1u << 15); ++mask) {
        auto coloring = [&](const BigNat& a, const BigNat& b) {
            int i = static_cast<int>(a.to_uint64()), j = static_cast<int>(b.to_uint64());
            return static_cast<int>((mask >> pair_index[i][j]) & 1);
        };
        auto d = ramsey_extract(c, coloring, 3);
        if (!d) {
            o.fail("coloring " + std::to_string(mask) + " has no monochromatic triple");
            ++o.checks;
            continue;
        }
        int col = coloring((*d)[0], (*d)[1]);
        bool mono = coloring((*d)[0], (*d)[2]) == col && coloring((*d)[1], (*d)[2]) == col;
        o.expect(mono && d->size() == 3, "extracted triple is not monochromatic");
    }
    return o;
}

Outcome criterion_h2_violations() {
    Outcome o;
    Tree dummy = prefix_closure({FinSeq{0, 0}}, true);
    Encoder e = Encoder::make(EncoderFlavor::P4, 1, 2);
    std::vector<NatSet> crafted{
        NatSet{{3, 5}},      // sum 8 = 2^3, single one at an odd position
        NatSet{{2, 8}},      // 10 = 1010, ones at odd positions
        NatSet{{1, 2}},      // 3 = 11, adjacent ones
        NatSet{{5, 21}},     // 26, three ones
        NatSet{{6, 10}},     // 16, single one
        NatSet{{3, 12}},     // 15, four ones
        NatSet{{7, 9}},      // 16, single one
        NatSet{{5, 4096}},   // low-spread pair: 4101 has three ones
        NatSet{{5, 6}},      // 11 = 1011
        NatSet{{2, 4, 10}},  // 2+4 = 6 = 110
        NatSet{{1, 3}},      // 4 = 100, single one beside a pure power
        NatSet{{4, 11}},     // 15
        NatSet{{16, 48}},    // 64 = 2^6
        NatSet{{9, 10}},     // 19 = 10011
        NatSet{{31, 33}},    // 64
        NatSet{{2, 6, 34}},  // 8 = 2^3
        NatSet{{10, 40}},    // 50 = 110010
        NatSet{{32, 34}},    // 66 = 1000010
        NatSet{{20, 24}},    // 44 = 101100
        NatSet{{17, 68}},    // 85 = 1010101
    };
    for (const NatSet& b : crafted) {
        auto r = extract_h2(b, dummy, e);
        if (!std::holds_alternative<ViolationCert>(r)) {
            o.fail("crafted set produced no certificate");
            ++o.checks;
            continue;
        }
        const ViolationCert& cert = std::get<ViolationCert>(r);
        o.expect(cert.elements.size() == 2, "certificate does not name a pair");
        o.expect(b.contains(cert.elements[0]) && b.contains(cert.elements[1]),
                 "certificate pair is not from the witness");
        o.expect(!h2_pair_shape_ok(cert.elements[0], cert.elements[1]),
                 "certificate pair actually satisfies the shape");
    }
    return o;
}

std::vector<FinSeq> silver_range() {
    std::vector<FinSeq> taus;
    for (std::uint64_t a = 0; a <= 4; ++a) {
        taus.push_back(FinSeq{a});
        for (std::uint64_t b = 0; b <= 4; ++b) {
            taus.push_back(FinSeq{a, b});
            for (std::uint64_t c = 0; c <= 4; ++c) taus.push_back(FinSeq{a, b, c});
        }
    }
    return taus;
}

Outcome criterion_silver_round_trip() {
    Outcome o;
    for (const FinSeq& tau : silver_range()) {
        Tree t = prefix_closure({tau}, true);
        try {
            SilverSpec spec = silver_forward(tau);
            o.expect(silver_tree_of_spec(spec).subtree_of(phi_silver(t)),
                     "forward containment failed");
            auto r = silver_decode(spec, t);
            o.expect(std::holds_alternative<FinSeq>(r) && std::get<FinSeq>(r) == tau,
                     "decode did not invert encode");
        } catch (const Error& err) {
            o.fail("silver round trip failed: " + std::string(err.what()));
        }
    }
    return o;
}

SilverSpec relocate_block0(const SilverSpec& s, std::size_t to) {
    std::size_t islot = s.free_positions().front();
    std::vector<std::pair<std::size_t, int>> fixed;
    for (std::size_t i = 0; i < s.fixed_positions.size(); ++i)
        if (s.fixed_positions[i] != to) fixed.emplace_back(s.fixed_positions[i], s.values[i]);
    fixed.emplace_back(islot, 0);
    std::sort(fixed.begin(), fixed.end());
    SilverSpec out;
    out.depth = s.depth;
    for (auto& [p, v] : fixed) {
        out.fixed_positions.push_back(p);
        out.values.push_back(v);
    }
    return out;
}

Outcome criterion_silver_rejection() {
    Outcome o;
    for (const FinSeq& tau : silver_range()) {
        Tree t = prefix_closure({tau}, true);
        Tree image = phi_silver(t);
        SilverSpec spec = silver_forward(tau);
        std::size_t beta_len = 2 * bin_alpha(tau[0]).size();
        std::size_t width = beta_len + 5;
        for (std::size_t to = 0; to < width; ++to) {
            if (to == beta_len + 2) continue; // the legitimate i-slot
            SilverSpec moved = relocate_block0(spec, to);
            try {
                auto r = silver_decode(moved, t);
                if (!std::holds_alternative<SilverViolation>(r)) {
                    o.fail("relocated spec decoded cleanly");
                    ++o.checks;
                    continue;
                }
                const SilverViolation& v = std::get<SilverViolation>(r);
                o.expect(v.position == to, "violation blames the wrong position");
                o.expect(silver_tree_of_spec(moved).contains(v.pattern),
                         "forbidden pattern is not in the spec tree");
                o.expect(!image.contains(v.pattern), "forbidden pattern is in the image");
            } catch (const Error& err) {
                o.fail("silver rejection failed: " + std::string(err.what()));
            }
        }
    }
    return o;
}

Outcome criterion_sacks_structure() {
    Outcome o;
    for (std::size_t d = 0; d <= 5; ++d) {
        // Full cylinders above every stem.
        for (std::size_t stem_len = 0; stem_len <= d; ++stem_len) {
            if (d - stem_len > 4) continue; // |K| would exceed 16
            for (std::uint64_t stem = 0; stem < (std::uint64_t{1} << stem_len); ++stem) {
                SeqSet branches;
                for (std::uint64_t tail = 0; tail < (std::uint64_t{1} << (d - stem_len)); ++tail) {
                    std::vector<std::uint64_t> bits;
                    for (std::size_t i = 0; i < stem_len; ++i) bits.push_back((stem >> i) & 1);
                    for (std::size_t i = 0; i < d - stem_len; ++i) bits.push_back((tail >> i) & 1);
                    branches.push_back(FinSeq(std::move(bits)));
                }
                normalize_seq_set(branches);
                std::size_t rank = split_rank(phi_sacks(branches, d));
                std::size_t lg = 0;
                while ((std::size_t{1} << (lg + 1)) <= branches.size()) ++lg;
                o.expect(rank == d - stem_len, "cylinder rank differs from free depth");
                o.expect(rank <= lg, "rank exceeds log2 of branch count");
            }
        }
    }
    // All branch sets over depth <= 3.
    for (std::size_t d = 0; d <= 3; ++d) {
        std::vector<FinSeq> leaves;
        for (std::uint64_t m = 0; m < (std::uint64_t{1} << d); ++m) {
            std::vector<std::uint64_t> bits;
            for (std::size_t i = 0; i < d; ++i) bits.push_back((m >> i) & 1);
            leaves.push_back(FinSeq(std::move(bits)));
        }
        for (std::uint64_t subset = 1; subset < (std::uint64_t{1} << leaves.size()); ++subset) {
            SeqSet branches;
            for (std::size_t i = 0; i < leaves.size(); ++i)
                if ((subset >> i) & 1) branches.push_back(leaves[i]);
            normalize_seq_set(branches);
            std::size_t rank = split_rank(phi_sacks(branches, d));
            std::size_t lg = 0;
            while ((std::size_t{1} << (lg + 1)) <= branches.size()) ++lg;
            o.expect(rank <= lg, "rank exceeds log2 of branch count");
        }
    }
    return o;
}

Outcome criterion_monotonicity() {
    Outcome o;
    for (std::uint32_t f = 0; f < 256; ++f) {
        std::vector<BigNat> fe;
        for (std::uint32_t i = 0; i < 8; ++i)
            if ((f >> i) & 1) fe.push_back(BigNat(i + 1));
        NatSet fset(std::move(fe));
        std::vector<GenImage> f_images;
        for (const GeneratorKind& k : all_kinds()) f_images.push_back(rho_extended(k, fset));
        for (std::uint32_t sub = f;; sub = (sub - 1) & f) {
            std::vector<BigNat> ee;
            for (std::uint32_t i = 0; i < 8; ++i)
                if ((sub >> i) & 1) ee.push_back(BigNat(i + 1));
            NatSet eset(std::move(ee));
            for (std::size_t ki = 0; ki < all_kinds().size(); ++ki)
                o.expect(gen_image_subset(rho_extended(all_kinds()[ki], eset), f_images[ki]),
                         "generator not monotone");
            if (sub == 0) break;
        }
    }
    return o;
}

} // namespace

int main() {
    struct Entry {
        int id;
        const char* label;
        std::function<Outcome()> run;
    };
    std::vector<Entry> entries{
        {1, "forward inclusion", criterion_forward_inclusion},
        {2, "round-trip extraction", criterion_round_trip},
        {3, "backward completeness vs oracle", criterion_backward_vs_oracle},
        {4, "mathias depth identity", criterion_mathias_depth},
        {5, "divisibility transfer and counterexamples", criterion_divisibility},
        {6, "finite ramsey exhaustion over the 6-set", criterion_ramsey_exhaustion},
        {7, "fs2 violation finder", criterion_h2_violations},
        {8, "silver round trip", criterion_silver_round_trip},
        {9, "silver rejection", criterion_silver_rejection},
        {10, "sacks split structure", criterion_sacks_structure},
        {11, "generator monotonicity", criterion_monotonicity},
    };
    int failures = 0;
    for (const Entry& e : entries) {
        auto start = std::chrono::steady_clock::now();
        Outcome o = e.run();
        double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        if (o.pass) {
            std::printf("criterion %2d: PASS  %s (%ld checks, %.1fs)\n", e.id, e.label, o.checks, secs);
        } else {
            ++failures;
            std::printf("criterion %2d: FAIL  %s (%s)\n", e.id, e.label, o.detail.c_str());
        }
        std::fflush(stdout);
    }
    return failures;
}
