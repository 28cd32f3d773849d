#ifndef TREEIDEAL_SILVERRED_HPP
#define TREEIDEAL_SILVERRED_HPP

#include "treeideal/seqtree.hpp"
#include "treeideal/treefam.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <variant>
#include <vector>

namespace treeideal {

// Binary expansion, most significant bit first, no leading zeros; 0 -> (0).
BitSeq bin_alpha(std::uint64_t n);

// Each bit doubled in place: (a0 a1 ...) -> (a0 a0 a1 a1 ...).
BitSeq beta(const BitSeq& a);

// All concatenations of blocks beta(bin_alpha(n_j)) ++ 0 1 i_j 0 1, one per
// choice of the i bits. Empty input yields the empty set. |sigma| <= 12.
SeqSet gamma(const FinSeq& sigma);

// Inclusive prefix closure of the union of gamma over all nodes.
Tree phi_silver(const Tree& t);

// Silver description of the image of the branch through tau: everything
// pinned except the i-slot of each block.
SilverSpec silver_forward(const FinSeq& tau);

// Where a misplaced free position lands inside its block. Offsets are
// 0-based from the block start; the block is beta-part (length L) followed
// by 0 1 i 0 1:
//   offset L+3, L+4  -> LAST_TWO      (the trailing 01 pair)
//   offset L+1       -> PLUS_TWO      (the 1 of the leading 01)
//   offset L         -> PLUS_ONE      (the 0 of the leading 01)
//   offset < L, odd  -> INSIDE_BETA_EVEN  (second bit of a beta pair)
//   offset < L, even -> INSIDE_BETA_ODD   (first bit of a beta pair)
// Offset L+2 is the i-slot and is the one permitted free position.
enum class SilverCase { LastTwo, PlusTwo, PlusOne, InsideBetaOdd, InsideBetaEven };

std::string silver_case_name(SilverCase c);

struct SilverViolation {
    SilverCase kase;
    std::size_t position;  // the offending free position
    BitSeq pattern;        // node of the spec's tree absent from the image
};

// Either the decoded entry sequence (when every free position is an i-slot)
// or a violation locating the misplaced free position, with a witness node
// the spec's tree contains but the image does not. Throws ContainmentError
// when the mismatch cannot be blamed on a free position.
std::variant<FinSeq, SilverViolation> silver_decode(const SilverSpec& s, const Tree& t);

// Inclusive prefix closure of a set of equal-length branches.
Tree phi_sacks(const SeqSet& branches, std::size_t depth);

// Strict block-grammar parse of a full bit sequence.
struct BlockParse {
    struct Block {
        std::uint64_t value = 0;   // number encoded by the beta part
        std::size_t start = 0;     // offset of the block
        std::size_t beta_len = 0;  // length of the beta part
        std::size_t i_slot = 0;    // offset of the free i bit
        int i_bit = 0;
    };
    std::vector<Block> blocks;
};

std::optional<BlockParse> parse_blocks(const BitSeq& x);

} // namespace treeideal

#endif
