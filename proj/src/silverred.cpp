#include "treeideal/silverred.hpp"
#include "treeideal/errors.hpp"

#include <algorithm>

namespace treeideal {

BitSeq bin_alpha(std::uint64_t n) {
    if (n == 0) return BitSeq{0};
    std::vector<std::uint64_t> bits;
    while (n != 0) {
        bits.push_back(n & 1);
        n >>= 1;
    }
    std::reverse(bits.begin(), bits.end());
    return BitSeq(std::move(bits));
}

BitSeq beta(const BitSeq& a) {
    std::vector<std::uint64_t> out;
    out.reserve(2 * a.size());
    for (std::size_t i = 0; i < a.size(); ++i) {
        out.push_back(a[i]);
        out.push_back(a[i]);
    }
    return BitSeq(std::move(out));
}

SeqSet gamma(const FinSeq& sigma) {
    if (sigma.empty()) return {};
    if (sigma.size() > 12) throw CapacityError("gamma input longer than 12");

    std::vector<BitSeq> doubled;
    for (std::size_t j = 0; j < sigma.size(); ++j) doubled.push_back(beta(bin_alpha(sigma[j])));

    SeqSet out;
    for (std::uint64_t choice = 0; choice < (std::uint64_t{1} << sigma.size()); ++choice) {
        std::vector<std::uint64_t> bits;
        for (std::size_t j = 0; j < sigma.size(); ++j) {
            for (std::size_t i = 0; i < doubled[j].size(); ++i) bits.push_back(doubled[j][i]);
            bits.push_back(0);
            bits.push_back(1);
            bits.push_back((choice >> j) & 1);
            bits.push_back(0);
            bits.push_back(1);
        }
        out.push_back(BitSeq(std::move(bits)));
    }
    normalize_seq_set(out);
    return out;
}

Tree phi_silver(const Tree& t) {
    SeqSet all;
    for (const FinSeq& n : t.nodes()) {
        if (n.empty()) continue;
        for (FinSeq& s : gamma(n)) all.push_back(std::move(s));
    }
    normalize_seq_set(all);
    return prefix_closure(all, true);
}

SilverSpec silver_forward(const FinSeq& tau) {
    if (tau.empty()) throw ArgumentError("silver_forward needs a nonempty sequence");

    SilverSpec spec;
    std::size_t pos = 0;
    for (std::size_t j = 0; j < tau.size(); ++j) {
        BitSeq bb = beta(bin_alpha(tau[j]));
        for (std::size_t i = 0; i < bb.size(); ++i) {
            spec.fixed_positions.push_back(pos);
            spec.values.push_back(static_cast<int>(bb[i]));
            ++pos;
        }
        // Terminator 0 1 i 0 1; the i bit stays free.
        const int term[5] = {0, 1, -1, 0, 1};
        for (int bit : term) {
            if (bit >= 0) {
                spec.fixed_positions.push_back(pos);
                spec.values.push_back(bit);
            }
            ++pos;
        }
    }
    spec.depth = pos;
    spec.validate();

    Tree spread = silver_tree_of_spec(spec);
    Tree image = phi_silver(prefix_closure({tau}, true));
    if (!spread.subtree_of(image)) throw Error("internal: forward spec escapes its own image");
    return spec;
}

std::optional<BlockParse> parse_blocks(const BitSeq& x) {
    BlockParse parse;
    std::size_t p = 0;
    while (p < x.size()) {
        BlockParse::Block blk;
        blk.start = p;
        std::vector<std::uint64_t> alpha_bits;
        // Beta part: equal-bit pairs until the 01 terminator opens.
        while (true) {
            if (p + 1 >= x.size()) return std::nullopt;
            std::uint64_t b0 = x[p], b1 = x[p + 1];
            if (b0 == b1) {
                alpha_bits.push_back(b0);
                p += 2;
                continue;
            }
            if (b0 == 0 && b1 == 1) break; // terminator
            return std::nullopt;           // "10" at an even in-block offset
        }
        if (alpha_bits.empty()) return std::nullopt;
        if (alpha_bits.size() > 1 && alpha_bits[0] == 0) return std::nullopt; // leading zero
        if (alpha_bits.size() > 64) return std::nullopt;
        blk.beta_len = 2 * alpha_bits.size();
        for (std::uint64_t bit : alpha_bits) blk.value = (blk.value << 1) | bit;
        // 0 1 i 0 1
        if (p + 4 >= x.size()) return std::nullopt;
        if (x[p] != 0 || x[p + 1] != 1 || x[p + 3] != 0 || x[p + 4] != 1) return std::nullopt;
        blk.i_slot = p + 2;
        blk.i_bit = static_cast<int>(x[p + 2]);
        p += 5;
        parse.blocks.push_back(blk);
    }
    if (parse.blocks.empty()) return std::nullopt;
    return parse;
}

std::string silver_case_name(SilverCase c) {
    switch (c) {
        case SilverCase::LastTwo: return "LAST_TWO";
        case SilverCase::PlusTwo: return "PLUS_TWO";
        case SilverCase::PlusOne: return "PLUS_ONE";
        case SilverCase::InsideBetaOdd: return "INSIDE_BETA_ODD";
        case SilverCase::InsideBetaEven: return "INSIDE_BETA_EVEN";
    }
    return "?";
}

namespace {

// The fill of the spec's maximal node chosen by `choice` bits on the free
// positions, ascending.
BitSeq filled_node(const SilverSpec& s, const std::vector<std::size_t>& free, std::uint64_t choice) {
    std::vector<std::uint64_t> bits(s.depth, 0);
    for (std::size_t i = 0; i < s.fixed_positions.size(); ++i)
        bits[s.fixed_positions[i]] = static_cast<std::uint64_t>(s.values[i]);
    for (std::size_t i = 0; i < free.size(); ++i)
        bits[free[i]] = (choice >> i) & 1;
    return BitSeq(std::move(bits));
}

SilverCase classify_offset(std::size_t offset, std::size_t beta_len) {
    if (offset == beta_len + 3 || offset == beta_len + 4) return SilverCase::LastTwo;
    if (offset == beta_len + 1) return SilverCase::PlusTwo;
    if (offset == beta_len) return SilverCase::PlusOne;
    // Inside the beta part. The names follow the parity of 1-based position
    // labels: first bit of a pair (even 0-based offset) is the odd case.
    return offset % 2 == 0 ? SilverCase::InsideBetaOdd : SilverCase::InsideBetaEven;
}

} // namespace

std::variant<FinSeq, SilverViolation> silver_decode(const SilverSpec& s, const Tree& t) {
    s.validate();
    Tree spread = silver_tree_of_spec(s);
    Tree image = phi_silver(t);

    const FinSeq* missing = nullptr;
    for (const FinSeq& n : spread.nodes())
        if (!image.contains(n)) { missing = &n; break; }

    std::vector<std::size_t> free = s.free_positions();
    if (free.size() > 20) throw CapacityError("too many free positions to scan");

    if (missing == nullptr) {
        // Containment holds; the value sequence must parse into blocks whose
        // i-slots cover every free position.
        BitSeq canonical = filled_node(s, free, 0);
        auto parse = parse_blocks(canonical);
        if (!parse)
            throw ArgumentError("spec value sequence does not parse into complete blocks");
        std::vector<std::uint64_t> entries;
        std::vector<std::size_t> slots;
        for (const auto& blk : parse->blocks) {
            entries.push_back(blk.value);
            slots.push_back(blk.i_slot);
        }
        for (std::size_t f : free)
            if (!std::binary_search(slots.begin(), slots.end(), f))
                throw ArgumentError("free position " + std::to_string(f) +
                                    " sits at a non-i-slot but the image matches to the spec depth");
        return FinSeq(std::move(entries));
    }

    // Some node of the spec's tree is absent from the image. Blame a free
    // position: find any fill of the free bits that parses, and take the
    // least free position that is not one of its i-slots.
    for (std::uint64_t choice = 0; choice < (std::uint64_t{1} << free.size()); ++choice) {
        BitSeq node = filled_node(s, free, choice);
        auto parse = parse_blocks(node);
        if (!parse) continue;
        std::vector<std::size_t> slots;
        for (const auto& blk : parse->blocks) slots.push_back(blk.i_slot);
        for (std::size_t f : free) {
            if (std::binary_search(slots.begin(), slots.end(), f)) continue;
            // Locate f's block.
            for (const auto& blk : parse->blocks) {
                std::size_t width = blk.beta_len + 5;
                if (f < blk.start || f >= blk.start + width) continue;
                return SilverViolation{classify_offset(f - blk.start, blk.beta_len), f, *missing};
            }
        }
        throw ContainmentError("spec tree escapes the image although all free positions are i-slots");
    }
    throw ContainmentError("spec tree escapes the image and no fill parses into blocks");
}

Tree phi_sacks(const SeqSet& branches, std::size_t depth) {
    for (const FinSeq& b : branches) {
        if (b.size() != depth) throw ArgumentError("ragged branch lengths");
        if (!b.is_binary()) throw ArgumentError("branch entries must be bits");
    }
    return prefix_closure(branches, true);
}

} // namespace treeideal
