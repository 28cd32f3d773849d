#include "treeideal/io.hpp"
#include "treeideal/errors.hpp"

#include <algorithm>
#include <istream>
#include <sstream>

namespace treeideal {

namespace {

std::string trimmed(const std::string& line) {
    std::size_t a = line.find_first_not_of(" \t\r");
    if (a == std::string::npos) return "";
    std::size_t b = line.find_last_not_of(" \t\r");
    return line.substr(a, b - a + 1);
}

// Non-comment lines, trimmed; blanks dropped unless keep_blank.
std::vector<std::string> content_lines(std::istream& in, bool keep_blank = false) {
    std::vector<std::string> out;
    std::string line;
    while (std::getline(in, line)) {
        std::string t = trimmed(line);
        if (!t.empty() && t[0] == '#') continue;
        if (t.empty() && !keep_blank) continue;
        out.push_back(t);
    }
    return out;
}

std::uint64_t parse_u64(const std::string& s) {
    if (s.empty()) throw ParseError("empty number");
    std::uint64_t v = 0;
    for (char c : s) {
        if (c < '0' || c > '9') throw ParseError("bad digit in '" + s + "'");
        std::uint64_t d = static_cast<std::uint64_t>(c - '0');
        if (v > (UINT64_MAX - d) / 10) throw ParseError("number too large: " + s);
        v = v * 10 + d;
    }
    return v;
}

std::vector<std::string> split(const std::string& s, char sep) {
    std::vector<std::string> out;
    std::string cur;
    for (char c : s) {
        if (c == sep) {
            out.push_back(cur);
            cur.clear();
        } else {
            cur.push_back(c);
        }
    }
    out.push_back(cur);
    return out;
}

} // namespace

FinSeq parse_seq_line(const std::string& line) {
    std::string t = trimmed(line);
    if (t == "-") return FinSeq{};
    if (t.empty()) throw ParseError("empty sequence line (use '-' for the empty sequence)");
    std::vector<std::uint64_t> entries;
    for (const std::string& part : split(t, ',')) entries.push_back(parse_u64(trimmed(part)));
    return FinSeq(std::move(entries));
}

std::string format_seq(const FinSeq& s) {
    if (s.empty()) return "-";
    std::string out;
    for (std::size_t i = 0; i < s.size(); ++i) {
        if (i > 0) out.push_back(',');
        out += std::to_string(s[i]);
    }
    return out;
}

std::vector<FinSeq> read_seq_lines(std::istream& in) {
    std::vector<FinSeq> out;
    for (const std::string& line : content_lines(in)) out.push_back(parse_seq_line(line));
    return out;
}

Tree read_tree(std::istream& in) {
    SeqSet nodes = read_seq_lines(in);
    normalize_seq_set(nodes);
    return Tree::from_nodes(std::move(nodes));
}

std::string dump_seqs(const SeqSet& s) {
    std::string out;
    for (const FinSeq& n : s) {
        out += format_seq(n);
        out.push_back('\n');
    }
    return out;
}

std::string dump_tree(const Tree& t) {
    return dump_seqs(t.nodes());
}

std::string dump_chain(const Chain& c) {
    return dump_seqs(c.nodes);
}

NatSet read_nat_set(std::istream& in) {
    std::vector<BigNat> elems;
    for (const std::string& line : content_lines(in)) elems.push_back(BigNat::from_decimal(line));
    return NatSet(std::move(elems));
}

std::string dump_nat_set(const NatSet& s) {
    std::string out;
    for (const BigNat& v : s.elements()) {
        out += v.to_decimal();
        out.push_back('\n');
    }
    return out;
}

PairSet read_pair_set(std::istream& in) {
    PairSet out;
    for (const std::string& line : content_lines(in)) {
        std::istringstream ls(line);
        std::string a, b, extra;
        if (!(ls >> a >> b) || (ls >> extra))
            throw ParseError("pair line must hold exactly two numbers: " + line);
        BigNat x = BigNat::from_decimal(a), y = BigNat::from_decimal(b);
        if (!(x < y)) throw ParseError("pair must be written ascending: " + line);
        out.insert(std::move(x), std::move(y));
    }
    return out;
}

std::string dump_pair_set(const PairSet& s) {
    std::string out;
    for (const auto& [a, b] : s.elements()) {
        out += a.to_decimal();
        out.push_back(' ');
        out += b.to_decimal();
        out.push_back('\n');
    }
    return out;
}

SilverSpec read_silver_spec(std::istream& in) {
    std::vector<std::string> lines = content_lines(in, /*keep_blank=*/true);
    // Drop trailing blank lines but keep interior ones: the positions and
    // bits lines may legitimately be empty.
    while (!lines.empty() && lines.back().empty()) lines.pop_back();
    while (lines.size() < 3) lines.push_back("");
    if (lines[0].compare(0, 2, "d=") != 0) throw ParseError("silver spec must start with 'd=<depth>'");

    SilverSpec s;
    s.depth = parse_u64(lines[0].substr(2));
    std::istringstream ps(lines[1]), bs(lines[2]);
    std::string tok;
    while (ps >> tok) s.fixed_positions.push_back(parse_u64(tok));
    while (bs >> tok) {
        if (tok != "0" && tok != "1") throw ParseError("silver spec bits must be 0 or 1");
        s.values.push_back(tok == "1" ? 1 : 0);
    }
    s.validate();
    return s;
}

std::string dump_silver_spec(const SilverSpec& s) {
    std::string out = "d=" + std::to_string(s.depth) + "\n";
    for (std::size_t i = 0; i < s.fixed_positions.size(); ++i) {
        if (i > 0) out.push_back(' ');
        out += std::to_string(s.fixed_positions[i]);
    }
    out.push_back('\n');
    for (std::size_t i = 0; i < s.values.size(); ++i) {
        if (i > 0) out.push_back(' ');
        out += std::to_string(s.values[i]);
    }
    out.push_back('\n');
    return out;
}

BitSeq parse_bit_line(const std::string& line) {
    std::string t = trimmed(line);
    std::vector<std::uint64_t> bits;
    for (char c : t) {
        if (c != '0' && c != '1') throw ParseError("bit lines may hold only 0 and 1");
        bits.push_back(c == '1' ? 1 : 0);
    }
    return BitSeq(std::move(bits));
}

std::string format_bits(const BitSeq& s) {
    std::string out;
    for (std::size_t i = 0; i < s.size(); ++i) out.push_back(s[i] ? '1' : '0');
    return out;
}

SeqSet read_branches(std::istream& in) {
    SeqSet out;
    for (const std::string& line : content_lines(in)) out.push_back(parse_bit_line(line));
    for (const FinSeq& b : out)
        if (b.size() != out.front().size()) throw ParseError("branch lines must have equal length");
    normalize_seq_set(out);
    return out;
}

std::string dump_branches(const SeqSet& s) {
    std::string out;
    for (const FinSeq& b : s) {
        out += format_bits(b);
        out.push_back('\n');
    }
    return out;
}

std::string dump_reduction_image(const ReductionImage& img) {
    std::string out = "kind=" + img.kind.name() + " flavor=" + flavor_name(img.flavor) + "\n";
    if (std::holds_alternative<NatSet>(img.payload))
        out += dump_nat_set(std::get<NatSet>(img.payload));
    else if (std::holds_alternative<PairSet>(img.payload))
        out += dump_pair_set(std::get<PairSet>(img.payload));
    else
        out += dump_tree(std::get<Tree>(img.payload));
    return out;
}

} // namespace treeideal
