#ifndef TREEIDEAL_IO_HPP
#define TREEIDEAL_IO_HPP

#include "treeideal/combgen.hpp"
#include "treeideal/reduce.hpp"
#include "treeideal/seqtree.hpp"
#include "treeideal/treefam.hpp"

#include <iosfwd>
#include <string>
#include <vector>

namespace treeideal {

// Sequence lines: entries comma-separated in decimal, "-" for the empty
// sequence. File readers skip blank lines and lines starting with "#".

FinSeq parse_seq_line(const std::string& line);
std::string format_seq(const FinSeq& s);

// Lines in file order (chains care about it; tree readers normalize).
std::vector<FinSeq> read_seq_lines(std::istream& in);

Tree read_tree(std::istream& in); // validates prefix closure
std::string dump_tree(const Tree& t);
std::string dump_seqs(const SeqSet& s);
std::string dump_chain(const Chain& c);

NatSet read_nat_set(std::istream& in);
std::string dump_nat_set(const NatSet& s);

PairSet read_pair_set(std::istream& in);
std::string dump_pair_set(const PairSet& s);

SilverSpec read_silver_spec(std::istream& in);
std::string dump_silver_spec(const SilverSpec& s);

BitSeq parse_bit_line(const std::string& line);
std::string format_bits(const BitSeq& s);
SeqSet read_branches(std::istream& in); // equal-length bit lines
std::string dump_branches(const SeqSet& s);

// Header "kind=<tag> flavor=<flavor>" followed by the payload in its own
// format.
std::string dump_reduction_image(const ReductionImage& img);

} // namespace treeideal

#endif
