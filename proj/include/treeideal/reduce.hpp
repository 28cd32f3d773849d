#ifndef TREEIDEAL_REDUCE_HPP
#define TREEIDEAL_REDUCE_HPP

#include "treeideal/bignat.hpp"
#include "treeideal/combgen.hpp"
#include "treeideal/errors.hpp"
#include "treeideal/seqtree.hpp"

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <variant>
#include <vector>

namespace treeideal {

enum class EncoderFlavor { General, P2, P4 };

std::optional<EncoderFlavor> parse_flavor(const std::string& name);
std::string flavor_name(EncoderFlavor f);

// Monotone injection from an initial length-lex segment of the sequences
// over a bounded alphabet into codes: the index itself (General), 2^index
// (P2) or 4^index (P4). Prefixes enumerate earlier, so a prefix always gets
// a smaller code.
class Encoder {
public:
    static Encoder make(EncoderFlavor flavor, std::uint64_t alphabet_bound, std::size_t depth_bound);

    EncoderFlavor flavor() const { return flavor_; }
    std::size_t size() const { return seqs_.size(); }
    std::uint64_t alphabet_bound() const { return alphabet_bound_; }
    std::size_t depth_bound() const { return depth_bound_; }

    bool in_domain(const FinSeq& s) const;
    std::size_t index_of(const FinSeq& s) const; // throws ArgumentError
    const FinSeq& sequence_at(std::size_t index) const;

    BigNat code(const FinSeq& s) const;
    BigNat code_of_index(std::size_t index) const;
    // Preimage of a code value; absent when the value is not a code.
    std::optional<FinSeq> decode(const BigNat& code) const;

private:
    EncoderFlavor flavor_ = EncoderFlavor::General;
    std::uint64_t alphabet_bound_ = 0;
    std::size_t depth_bound_ = 0;
    std::vector<FinSeq> seqs_;            // index -> sequence, length-lex
    std::map<FinSeq, std::size_t> index_; // sequence -> index
};

// Image of a tree under the unified reduction: a number set for the
// sum/difference kinds, a pair set for pairs, a tree for mathias (the union
// of bushes, treefied).
struct ReductionImage {
    GeneratorKind kind;
    EncoderFlavor flavor = EncoderFlavor::General;
    std::variant<NatSet, PairSet, Tree> payload;

    const NatSet& nats() const;
    const PairSet& pair_set() const;
    const Tree& tree() const;
};

// Certificate that a claimed witness breaks the shape every image element
// must have. Recomputing the condition on the offending elements reproduces
// the failure.
struct ViolationCert {
    std::string tag;               // e.g. "overlapping-supports"
    std::vector<BigNat> elements;  // one or two offending naturals
    std::string condition;         // human-readable restatement of the failure
};

struct ViolationError : Error {
    ViolationCert cert;
    explicit ViolationError(ViolationCert c);
};

// The flavor each kind's extraction argument needs.
EncoderFlavor required_flavor(const GeneratorKind& kind);

// Union over all nodes of rho_extended applied to the codes of the node's
// proper prefixes. Every node of t must lie in the encoder domain. Flavor
// must match the kind unless allow_flavor_mismatch.
ReductionImage phi(const Tree& t, const GeneratorKind& kind, const Encoder& e,
                   bool allow_flavor_mismatch = false);

// Codes of the proper prefixes of the branch's last node. Rechecks that the
// generator image of the witness is contained in phi(t).
NatSet forward_witness(const Tree& t, const Chain& branch, const GeneratorKind& kind,
                       const Encoder& e, bool allow_flavor_mismatch = false);

// Pairs kind. Preimages of B ascending form a chain: each pair of B lies in
// the image, which forces the preimages prefix-comparable.
Chain extract_ramsey(const NatSet& b, const Tree& t, const Encoder& e);

// FS kind, P4 codes. Elements of a genuine witness have pairwise disjoint
// binary supports; their total decomposes into powers of 4 whose preimages
// chain. Throws ViolationError when the support or parity shape fails.
Chain extract_hindman(const NatSet& b, const Tree& t, const Encoder& e);

// FS_2 kind, P4 codes. Three arms: enough elements of B are powers of 4 ->
// chain their preimages; some pair sum breaks the two-ones-at-even-positions
// shape -> certificate naming the pair; otherwise chain the decomposition of
// the smallest pair sum.
std::variant<Chain, ViolationCert> extract_h2(const NatSet& b, const Tree& t, const Encoder& e);

// Delta kind, P2 codes. Shifts B so its minimum becomes 2^{n0} where n0 is
// the least low bit over Delta(B), then walks the shifted set, which must
// consist of powers of 2 (ViolationError otherwise).
Chain extract_delta(const NatSet& b, const Tree& t, const Encoder& e);

// Mathias kind. tau is a node of the mathias image: an increasing code
// sequence whose entrywise preimages chain in t.
Chain extract_mathias(const FinSeq& tau, const Tree& t, const Encoder& e);

// True when a + b could be an element of an FS_2/P4 image: exactly two ones,
// both at even bit positions. On failure, fills tag/condition as the
// certificate would.
bool h2_pair_shape_ok(const BigNat& a, const BigNat& b, std::string* tag = nullptr,
                      std::string* condition = nullptr);

} // namespace treeideal

#endif
