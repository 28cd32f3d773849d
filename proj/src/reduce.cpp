#include "treeideal/reduce.hpp"

#include <algorithm>

namespace treeideal {

std::optional<EncoderFlavor> parse_flavor(const std::string& name) {
    if (name == "general") return EncoderFlavor::General;
    if (name == "p2") return EncoderFlavor::P2;
    if (name == "p4") return EncoderFlavor::P4;
    return std::nullopt;
}

std::string flavor_name(EncoderFlavor f) {
    switch (f) {
        case EncoderFlavor::General: return "general";
        case EncoderFlavor::P2: return "p2";
        case EncoderFlavor::P4: return "p4";
    }
    return "?";
}

Encoder Encoder::make(EncoderFlavor flavor, std::uint64_t alphabet_bound, std::size_t depth_bound) {
    if (alphabet_bound < 1 || depth_bound < 1)
        throw ArgumentError("encoder needs alphabet_bound >= 1 and depth_bound >= 1");
    constexpr std::size_t kMaxTable = 10'000;

    Encoder e;
    e.flavor_ = flavor;
    e.alphabet_bound_ = alphabet_bound;
    e.depth_bound_ = depth_bound;
    e.seqs_.push_back(FinSeq{});
    std::size_t level_begin = 0;
    for (std::size_t len = 1; len <= depth_bound; ++len) {
        std::size_t level_end = e.seqs_.size();
        for (std::size_t i = level_begin; i < level_end; ++i)
            for (std::uint64_t v = 0; v < alphabet_bound; ++v) {
                if (e.seqs_.size() >= kMaxTable)
                    throw CapacityError("encoder table exceeds 10^4 sequences");
                e.seqs_.push_back(e.seqs_[i].extended(v));
            }
        level_begin = level_end;
    }
    for (std::size_t i = 0; i < e.seqs_.size(); ++i) e.index_[e.seqs_[i]] = i;
    return e;
}

bool Encoder::in_domain(const FinSeq& s) const {
    return index_.count(s) != 0;
}

std::size_t Encoder::index_of(const FinSeq& s) const {
    auto it = index_.find(s);
    if (it == index_.end()) throw ArgumentError("sequence outside encoder domain");
    return it->second;
}

const FinSeq& Encoder::sequence_at(std::size_t index) const {
    if (index >= seqs_.size()) throw ArgumentError("encoder index out of range");
    return seqs_[index];
}

BigNat Encoder::code_of_index(std::size_t index) const {
    if (index >= seqs_.size()) throw ArgumentError("encoder index out of range");
    switch (flavor_) {
        case EncoderFlavor::General: return BigNat(index);
        case EncoderFlavor::P2: return BigNat::power_of_two(index);
        case EncoderFlavor::P4: return BigNat::power_of_two(2 * index);
    }
    throw ArgumentError("unknown encoder flavor");
}

BigNat Encoder::code(const FinSeq& s) const {
    return code_of_index(index_of(s));
}

std::optional<FinSeq> Encoder::decode(const BigNat& code) const {
    std::size_t index = 0;
    switch (flavor_) {
        case EncoderFlavor::General: {
            if (!code.fits_uint64()) return std::nullopt;
            std::uint64_t v = code.to_uint64();
            if (v >= seqs_.size()) return std::nullopt;
            index = static_cast<std::size_t>(v);
            break;
        }
        case EncoderFlavor::P2: {
            if (!code.is_power_of_two()) return std::nullopt;
            index = *code.lowest_set_bit();
            break;
        }
        case EncoderFlavor::P4: {
            if (!code.is_power_of_two()) return std::nullopt;
            std::size_t bit = *code.lowest_set_bit();
            if (bit % 2 != 0) return std::nullopt;
            index = bit / 2;
            break;
        }
    }
    if (index >= seqs_.size()) return std::nullopt;
    return seqs_[index];
}

const NatSet& ReductionImage::nats() const {
    if (!std::holds_alternative<NatSet>(payload)) throw ArgumentError("image payload is not a number set");
    return std::get<NatSet>(payload);
}

const PairSet& ReductionImage::pair_set() const {
    if (!std::holds_alternative<PairSet>(payload)) throw ArgumentError("image payload is not a pair set");
    return std::get<PairSet>(payload);
}

const Tree& ReductionImage::tree() const {
    if (!std::holds_alternative<Tree>(payload)) throw ArgumentError("image payload is not a tree");
    return std::get<Tree>(payload);
}

ViolationError::ViolationError(ViolationCert c)
    : Error("violation: " + c.tag + " (" + c.condition + ")"), cert(std::move(c)) {}

EncoderFlavor required_flavor(const GeneratorKind& kind) {
    switch (kind.tag) {
        case GeneratorKind::Tag::FS:
        case GeneratorKind::Tag::FSK: return EncoderFlavor::P4;
        case GeneratorKind::Tag::Delta: return EncoderFlavor::P2;
        case GeneratorKind::Tag::Pairs:
        case GeneratorKind::Tag::Mathias: return EncoderFlavor::General;
    }
    throw ArgumentError("unknown generator kind");
}

namespace {

NatSet prefix_codes(const FinSeq& node, const Encoder& e) {
    std::vector<BigNat> codes;
    for (std::size_t k = 0; k < node.size(); ++k) codes.push_back(e.code(node.prefix(k)));
    return NatSet(std::move(codes));
}

bool image_contains(const ReductionImage& img, const GenImage& gen) {
    if (std::holds_alternative<NatSet>(gen)) return std::get<NatSet>(gen).subset_of(img.nats());
    if (std::holds_alternative<PairSet>(gen)) return std::get<PairSet>(gen).subset_of(img.pair_set());
    const SeqSet& bush = std::get<SeqSet>(gen);
    const Tree& t = img.tree();
    return std::all_of(bush.begin(), bush.end(), [&](const FinSeq& s) { return t.contains(s); });
}

// Decodes each value ascending and checks the result is a chain inside t.
Chain chain_of_codes(const std::vector<BigNat>& codes, const Tree& t, const Encoder& e) {
    Chain c;
    for (const BigNat& v : codes) {
        auto pre = e.decode(v);
        if (!pre)
            throw ViolationError({"missing-preimage", {v}, "value " + v.to_decimal() + " is not a code"});
        c.nodes.push_back(*pre);
    }
    for (std::size_t i = 1; i < c.nodes.size(); ++i)
        if (!c.nodes[i - 1].is_proper_prefix_of(c.nodes[i]))
            throw ViolationError({"incomparable-preimages",
                                  {codes[i - 1], codes[i]},
                                  "preimages of " + codes[i - 1].to_decimal() + " and " +
                                      codes[i].to_decimal() + " are not prefix-comparable"});
    for (const FinSeq& n : c.nodes)
        if (!t.contains(n))
            throw ViolationError({"preimage-outside-tree", {}, "a decoded node is not in the tree"});
    return c;
}

bool is_power_of_four(const BigNat& v) {
    if (!v.is_power_of_two()) return false;
    return *v.lowest_set_bit() % 2 == 0;
}

} // namespace

ReductionImage phi(const Tree& t, const GeneratorKind& kind, const Encoder& e, bool allow_flavor_mismatch) {
    if (!allow_flavor_mismatch && e.flavor() != required_flavor(kind))
        throw ArgumentError("encoder flavor " + flavor_name(e.flavor()) + " does not match kind " + kind.name());
    for (const FinSeq& n : t.nodes())
        if (!e.in_domain(n)) throw ArgumentError("tree node outside encoder domain");

    ReductionImage img;
    img.kind = kind;
    img.flavor = e.flavor();
    if (kind.tag == GeneratorKind::Tag::Mathias) {
        SeqSet bush_union;
        for (const FinSeq& n : t.nodes()) {
            GenImage g = rho_extended(kind, prefix_codes(n, e));
            for (FinSeq& s : std::get<SeqSet>(g)) bush_union.push_back(std::move(s));
        }
        normalize_seq_set(bush_union);
        img.payload = prefix_closure(bush_union, true);
        return img;
    }
    if (kind.tag == GeneratorKind::Tag::Pairs) {
        PairSet acc;
        for (const FinSeq& n : t.nodes()) acc.merge(std::get<PairSet>(rho_extended(kind, prefix_codes(n, e))));
        img.payload = std::move(acc);
        return img;
    }
    NatSet acc;
    for (const FinSeq& n : t.nodes()) acc.merge(std::get<NatSet>(rho_extended(kind, prefix_codes(n, e))));
    img.payload = std::move(acc);
    return img;
}

NatSet forward_witness(const Tree& t, const Chain& branch, const GeneratorKind& kind, const Encoder& e,
                       bool allow_flavor_mismatch) {
    if (branch.size() < 2) throw ArgumentError("branch must have at least two nodes");
    if (!branch.valid() || !branch.within(t)) throw ArgumentError("not a chain in the tree");

    NatSet witness = prefix_codes(branch.nodes.back(), e);
    ReductionImage img = phi(t, kind, e, allow_flavor_mismatch);
    if (!image_contains(img, rho_extended(kind, witness)))
        throw ArgumentError("forward witness image is not contained in phi; encoder/kind mismatch");
    return witness;
}

Chain extract_ramsey(const NatSet& b, const Tree& t, const Encoder& e) {
    if (b.size() < 2) throw ArgumentError("ramsey extraction needs at least two codes");
    return chain_of_codes(b.elements(), t, e);
}

Chain extract_hindman(const NatSet& b, const Tree& t, const Encoder& e) {
    if (b.empty()) throw ArgumentError("hindman extraction needs a nonempty witness");

    // Accumulate in ascending order; supports must stay disjoint or some sum
    // would carry a one into an odd position.
    BigNat acc;
    std::vector<BigNat> seen;
    for (const BigNat& x : b.elements()) {
        for (const BigNat& p : seen)
            for (std::size_t i : x.set_bits())
                if (p.bit(i))
                    throw ViolationError({"overlapping-supports",
                                          {p, x},
                                          "both have bit " + std::to_string(i) + " set"});
        acc += x;
        seen.push_back(x);
    }
    for (std::size_t pos : acc.set_bits())
        if (pos % 2 != 0)
            throw ViolationError({"odd-position-one",
                                  {acc},
                                  "sum " + acc.to_decimal() + " has a one at odd position " + std::to_string(pos)});

    std::vector<BigNat> powers;
    for (std::size_t pos : acc.set_bits()) powers.push_back(BigNat::power_of_two(pos));
    return chain_of_codes(powers, t, e);
}

bool h2_pair_shape_ok(const BigNat& a, const BigNat& b, std::string* tag, std::string* condition) {
    BigNat sum = a + b;
    if (sum.popcount() != 2) {
        if (tag) *tag = "sum-not-two-ones";
        if (condition)
            *condition = "sum " + sum.to_decimal() + " has " + std::to_string(sum.popcount()) +
                         " ones instead of two";
        return false;
    }
    for (std::size_t pos : sum.set_bits()) {
        if (pos % 2 != 0) {
            if (tag) *tag = "odd-position-one";
            if (condition)
                *condition = "sum " + sum.to_decimal() + " has a one at odd position " + std::to_string(pos);
            return false;
        }
    }
    return true;
}

std::variant<Chain, ViolationCert> extract_h2(const NatSet& b, const Tree& t, const Encoder& e) {
    if (b.size() < 2) throw ArgumentError("fs2 extraction needs at least two elements");

    std::vector<BigNat> pure;
    for (const BigNat& x : b.elements())
        if (is_power_of_four(x)) pure.push_back(x);
    if (pure.size() >= 2) return chain_of_codes(pure, t, e);

    for (std::size_t i = 0; i < b.size(); ++i)
        for (std::size_t j = i + 1; j < b.size(); ++j) {
            std::string tag, cond;
            if (!h2_pair_shape_ok(b[i], b[j], &tag, &cond))
                return ViolationCert{tag, {b[i], b[j]}, cond};
        }

    // Every pair sum is a sum of two powers of 4, so the finite sample is
    // consistent; fall back to the decomposition of the smallest pair sum,
    // whose two codes lie on a common branch.
    BigNat sum = b[0] + b[1];
    std::vector<BigNat> powers;
    for (std::size_t pos : sum.set_bits()) powers.push_back(BigNat::power_of_two(pos));
    return chain_of_codes(powers, t, e);
}

Chain extract_delta(const NatSet& b, const Tree& t, const Encoder& e) {
    if (b.size() < 2) throw ArgumentError("delta extraction needs at least two elements");

    NatSet diffs = delta(b);
    std::size_t n0 = 0;
    bool have = false;
    for (const BigNat& d : diffs.elements()) {
        std::size_t low = *d.lowest_set_bit();
        if (!have || low < n0) { n0 = low; have = true; }
    }

    // Difference-preserving shift so the minimum becomes 2^{n0}.
    const BigNat& low = b[0];
    BigNat target = BigNat::power_of_two(n0);
    std::vector<BigNat> shifted;
    for (const BigNat& x : b.elements()) {
        BigNat y = x - low + target;
        if (!y.is_power_of_two())
            throw ViolationError({"shifted-not-power-of-two",
                                  {y},
                                  "shifted element " + y.to_decimal() + " is not a power of 2"});
        shifted.push_back(std::move(y));
    }

    ReductionImage img = phi(t, GeneratorKind::delta(), e);
    for (std::size_t i = 1; i < shifted.size(); ++i) {
        BigNat d = shifted[i] - shifted[i - 1];
        if (!img.nats().contains(d))
            throw ViolationError({"difference-outside-image",
                                  {shifted[i - 1], shifted[i]},
                                  "difference " + d.to_decimal() + " is not in the image"});
    }
    return chain_of_codes(shifted, t, e);
}

Chain extract_mathias(const FinSeq& tau, const Tree& t, const Encoder& e) {
    if (tau.empty()) throw ArgumentError("mathias extraction needs a nonempty node");
    if (!tau.all_entries_increasing())
        throw ViolationError({"not-increasing", {}, "code sequence is not strictly increasing"});
    std::vector<BigNat> codes;
    for (std::size_t i = 0; i < tau.size(); ++i) codes.push_back(BigNat(tau[i]));
    return chain_of_codes(codes, t, e);
}

} // namespace treeideal
