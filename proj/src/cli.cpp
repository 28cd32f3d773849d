#include "treeideal/cli.hpp"

#include "treeideal/divlattice.hpp"
#include "treeideal/errors.hpp"
#include "treeideal/io.hpp"
#include "treeideal/oracles.hpp"
#include "treeideal/reduce.hpp"
#include "treeideal/silverred.hpp"
#include "treeideal/treefam.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <fstream>
#include <map>
#include <ostream>
#include <sstream>

namespace treeideal {

namespace {

std::uint64_t parse_u64_cli(const std::string& s) {
    if (s.empty()) throw ParseError("empty number");
    std::uint64_t v = 0;
    for (char c : s) {
        if (c < '0' || c > '9') throw ParseError("bad digit in '" + s + "'");
        v = v * 10 + static_cast<std::uint64_t>(c - '0');
    }
    return v;
}

std::ifstream open_file(const std::string& path) {
    std::ifstream f(path);
    if (!f) throw ParseError("cannot open file: " + path);
    return f;
}

Tree load_tree(const std::string& path) {
    auto f = open_file(path);
    return read_tree(f);
}

NatSet load_nat_set(const std::string& path) {
    auto f = open_file(path);
    return read_nat_set(f);
}

GeneratorKind parse_kind_or_throw(const std::string& name) {
    auto k = GeneratorKind::parse(name);
    if (!k) throw ArgumentError("unknown kind: " + name);
    return *k;
}

EncoderFlavor parse_flavor_or_throw(const std::string& name) {
    auto f = parse_flavor(name);
    if (!f) throw ArgumentError("unknown encoder flavor: " + name);
    return *f;
}

// Encoder covering the tree: alphabet one past the largest entry, depth the
// longest node, unless overridden.
Encoder encoder_for(const Tree& t, EncoderFlavor flavor, std::uint64_t alphabet, std::uint64_t depth) {
    if (alphabet == 0) {
        alphabet = 1;
        for (const FinSeq& n : t.nodes())
            for (std::uint64_t v : n.entries()) alphabet = std::max(alphabet, v + 1);
    }
    if (depth == 0) depth = std::max<std::uint64_t>(t.max_node_length(), 1);
    return Encoder::make(flavor, alphabet, static_cast<std::size_t>(depth));
}

void print_cert(std::ostream& out, const ViolationCert& cert) {
    out << "violation: " << cert.tag << "\n";
    out << "elements:";
    for (const BigNat& v : cert.elements) out << ' ' << v.to_decimal();
    out << "\n";
    out << "condition: " << cert.condition << "\n";
}

void print_payload(std::ostream& out, const ReductionImage& img) {
    if (std::holds_alternative<NatSet>(img.payload))
        out << dump_nat_set(std::get<NatSet>(img.payload));
    else if (std::holds_alternative<PairSet>(img.payload))
        out << dump_pair_set(std::get<PairSet>(img.payload));
    else
        out << dump_tree(std::get<Tree>(img.payload));
}

struct Options {
    std::string in_file, set_file, tree_file, witness_file, spec_file, chain_file;
    std::string coloring_file, branches_file, out_file, forward_file;
    std::string kind, encoder, tau, stem, at;
    std::uint64_t k = 2, n = 0, m = 0, bound = 0, size = 0, depth = 0, horizon = 0, width = 0;
    std::uint64_t alphabet = 0, enc_depth = 0;
    bool exclusive = false, force = false;
};

int cmd_tree_validate(const Options& o, std::ostream& out) {
    auto f = open_file(o.in_file);
    SeqSet nodes = read_seq_lines(f);
    normalize_seq_set(nodes);
    bool ok = is_tree(nodes);
    out << (ok ? "true" : "false") << "\n";
    return ok ? 0 : 1;
}

int cmd_tree_closure(const Options& o, std::ostream& out) {
    auto f = open_file(o.in_file);
    SeqSet seqs = read_seq_lines(f);
    normalize_seq_set(seqs);
    out << dump_tree(prefix_closure(seqs, !o.exclusive));
    return 0;
}

int cmd_tree_branch(const Options& o, std::ostream& out) {
    auto b = longest_branch(load_tree(o.in_file));
    if (!b) {
        out << "no branch\n";
        return 1;
    }
    out << dump_chain(*b);
    return 0;
}

int cmd_tree_subtree(const Options& o, std::ostream& out) {
    out << dump_tree(subtree_at(load_tree(o.in_file), parse_seq_line(o.at)));
    return 0;
}

int cmd_gen(const std::string& which, const Options& o, std::ostream& out) {
    NatSet b = load_nat_set(o.set_file);
    if (which == "fs") {
        out << dump_nat_set(fs(b));
    } else if (which == "fsk") {
        out << dump_nat_set(fs_k(b, static_cast<unsigned>(o.k)));
    } else if (which == "delta") {
        out << dump_nat_set(delta(b));
    } else if (which == "pairs") {
        out << dump_pair_set(pairs(b));
    } else if (which == "bush") {
        out << dump_seqs(mathias_bush(b, static_cast<std::size_t>(o.depth)));
    } else { // rho
        GenImage img = rho_extended(parse_kind_or_throw(o.kind), b);
        if (std::holds_alternative<NatSet>(img))
            out << dump_nat_set(std::get<NatSet>(img));
        else if (std::holds_alternative<PairSet>(img))
            out << dump_pair_set(std::get<PairSet>(img));
        else
            out << dump_seqs(std::get<SeqSet>(img));
    }
    return 0;
}

int cmd_reduce(const Options& o, std::ostream& out) {
    Tree t = load_tree(o.in_file);
    GeneratorKind kind = parse_kind_or_throw(o.kind);
    Encoder e = encoder_for(t, parse_flavor_or_throw(o.encoder), o.alphabet, o.enc_depth);
    if (!o.forward_file.empty()) {
        auto f = open_file(o.forward_file);
        Chain branch{read_seq_lines(f)};
        out << dump_nat_set(forward_witness(t, branch, kind, e, o.force));
        return 0;
    }
    ReductionImage img = phi(t, kind, e, o.force);
    if (!o.out_file.empty()) {
        std::ofstream of(o.out_file);
        if (!of) throw ParseError("cannot write file: " + o.out_file);
        of << dump_reduction_image(img);
    }
    print_payload(out, img);
    return 0;
}

int cmd_extract(const Options& o, std::ostream& out) {
    Tree t = load_tree(o.tree_file);
    GeneratorKind kind = parse_kind_or_throw(o.kind);
    Encoder e = encoder_for(t, parse_flavor_or_throw(o.encoder), o.alphabet, o.enc_depth);

    if (kind.tag == GeneratorKind::Tag::Mathias) {
        auto f = open_file(o.witness_file);
        std::vector<FinSeq> seqs = read_seq_lines(f);
        if (seqs.size() != 1) throw ParseError("mathias extraction expects one sequence line");
        out << dump_chain(extract_mathias(seqs[0], t, e));
        return 0;
    }

    NatSet b = load_nat_set(o.witness_file);
    if (kind.tag == GeneratorKind::Tag::Pairs) {
        out << dump_chain(extract_ramsey(b, t, e));
    } else if (kind.tag == GeneratorKind::Tag::FS) {
        out << dump_chain(extract_hindman(b, t, e));
    } else if (kind.tag == GeneratorKind::Tag::FSK && kind.k == 2) {
        auto r = extract_h2(b, t, e);
        if (std::holds_alternative<ViolationCert>(r)) {
            print_cert(out, std::get<ViolationCert>(r));
            return 1;
        }
        out << dump_chain(std::get<Chain>(r));
    } else if (kind.tag == GeneratorKind::Tag::Delta) {
        out << dump_chain(extract_delta(b, t, e));
    } else {
        throw ArgumentError("no extractor for kind " + kind.name());
    }
    return 0;
}

int cmd_oracle(const Options& o, std::ostream& out) {
    GeneratorKind kind = parse_kind_or_throw(o.kind);
    WitnessQuery q;
    q.kind = kind;
    q.witness_size = static_cast<std::size_t>(o.size);
    q.universe_bound = o.bound;
    if (kind.tag == GeneratorKind::Tag::Pairs) {
        auto f = open_file(o.set_file);
        q.target = read_pair_set(f);
    } else {
        q.target = load_nat_set(o.set_file);
    }
    auto w = find_witness(q);
    if (!w) {
        out << "no witness\n";
        return 1;
    }
    out << dump_nat_set(*w);
    return 0;
}

int cmd_ramsey(const Options& o, std::ostream& out) {
    NatSet c = load_nat_set(o.set_file);
    auto f = open_file(o.coloring_file);
    std::map<std::pair<BigNat, BigNat>, int> colors;
    std::string line;
    while (std::getline(f, line)) {
        std::istringstream ls(line);
        std::string a, b, col;
        if (line.empty() || line[0] == '#') continue;
        if (!(ls >> a >> b >> col)) throw ParseError("coloring line must be 'a b color': " + line);
        colors[{BigNat::from_decimal(a), BigNat::from_decimal(b)}] = static_cast<int>(parse_u64_cli(col));
    }
    auto coloring = [&](const BigNat& a, const BigNat& b) {
        auto it = colors.find({a, b});
        if (it == colors.end())
            throw ArgumentError("coloring is missing pair " + a.to_decimal() + " " + b.to_decimal());
        return it->second;
    };
    auto d = ramsey_extract(c, coloring, static_cast<std::size_t>(o.size));
    if (!d) {
        out << "no witness\n";
        return 1;
    }
    out << dump_nat_set(*d);
    return 0;
}

int cmd_divide_transfer(const Options& o, std::ostream& out) {
    TransferResult r = transfer_witness(load_nat_set(o.set_file), o.n, o.m);
    out << "shift=" << r.shift_amount.to_decimal() << "\n";
    out << "consumed=";
    for (std::size_t i = 0; i < r.consumed.size(); ++i) {
        if (i > 0) out << ',';
        out << r.consumed[i].to_decimal();
    }
    out << "\n";
    out << dump_nat_set(r.shifted_set);
    return 0;
}

int cmd_divide_counterexample(const Options& o, std::ostream& out) {
    auto [a, w] = counterexample_set(o.n, o.m, o.bound);
    out << "A:\n" << dump_nat_set(a);
    out << "W:\n" << dump_nat_set(w);
    return 0;
}

int cmd_divide_verify(const Options& o, std::ostream& out) {
    bool ok = verify_non_ipn(load_nat_set(o.set_file), o.n, o.bound);
    out << (ok ? "true" : "false") << "\n";
    return ok ? 0 : 1;
}

int cmd_family(const std::string& which, const Options& o, std::ostream& out) {
    Tree t = load_tree(o.in_file);
    if (which == "rank") {
        out << split_rank(t) << "\n";
        return 0;
    }
    bool ok = false;
    if (which == "miller") {
        ok = miller_proxy(t, static_cast<std::size_t>(o.horizon), static_cast<std::size_t>(o.width));
    } else if (which == "laver") {
        ok = laver_proxy(t, parse_seq_line(o.stem), static_cast<std::size_t>(o.horizon),
                         static_cast<std::size_t>(o.width));
    } else { // mathias
        ok = is_mathias_upto(t, load_nat_set(o.set_file), static_cast<std::size_t>(o.depth));
    }
    out << (ok ? "true" : "false") << "\n";
    return ok ? 0 : 1;
}

int cmd_silver(const std::string& which, const Options& o, std::ostream& out) {
    if (which == "encode") {
        out << dump_silver_spec(silver_forward(parse_seq_line(o.tau)));
        return 0;
    }
    if (which == "phi") {
        out << dump_tree(phi_silver(load_tree(o.in_file)));
        return 0;
    }
    auto sf = open_file(o.spec_file);
    SilverSpec spec = read_silver_spec(sf);
    if (which == "tree") {
        out << dump_tree(silver_tree_of_spec(spec));
        return 0;
    }
    // decode
    auto r = silver_decode(spec, load_tree(o.tree_file));
    if (std::holds_alternative<SilverViolation>(r)) {
        const SilverViolation& v = std::get<SilverViolation>(r);
        out << "violation: " << silver_case_name(v.kase) << "\n";
        out << "position: " << v.position << "\n";
        out << "pattern: " << format_bits(v.pattern) << "\n";
        return 1;
    }
    out << format_seq(std::get<FinSeq>(r)) << "\n";
    return 0;
}

int cmd_sacks(const std::string& which, const Options& o, std::ostream& out) {
    if (which == "rank") {
        out << split_rank(load_tree(o.in_file)) << "\n";
        return 0;
    }
    auto f = open_file(o.branches_file);
    SeqSet branches = read_branches(f);
    std::size_t depth = branches.empty() ? 0 : branches.front().size();
    out << dump_tree(phi_sacks(branches, depth));
    return 0;
}

int cmd_verify_reduction(const Options& o, std::ostream& out) {
    Tree t = load_tree(o.tree_file);
    GeneratorKind kind = parse_kind_or_throw(o.kind);
    Encoder e = encoder_for(t, parse_flavor_or_throw(o.encoder), o.alphabet, o.enc_depth);
    NatSet b = load_nat_set(o.witness_file);
    ReductionImage img = phi(t, kind, e, o.force);
    GenImage gen = rho_extended(kind, b);
    bool ok = false;
    if (std::holds_alternative<NatSet>(gen) && std::holds_alternative<NatSet>(img.payload))
        ok = std::get<NatSet>(gen).subset_of(std::get<NatSet>(img.payload));
    else if (std::holds_alternative<PairSet>(gen) && std::holds_alternative<PairSet>(img.payload))
        ok = std::get<PairSet>(gen).subset_of(std::get<PairSet>(img.payload));
    else if (std::holds_alternative<SeqSet>(gen) && std::holds_alternative<Tree>(img.payload)) {
        const Tree& it = std::get<Tree>(img.payload);
        const SeqSet& bush = std::get<SeqSet>(gen);
        ok = std::all_of(bush.begin(), bush.end(), [&](const FinSeq& s) { return it.contains(s); });
    } else {
        throw ArgumentError("witness and image shapes do not match");
    }
    out << (ok ? "ok" : "inclusion fails") << "\n";
    return ok ? 0 : 1;
}

int cmd_verify_chain(const Options& o, std::ostream& out) {
    Tree t = load_tree(o.tree_file);
    auto f = open_file(o.chain_file);
    Chain c{read_seq_lines(f)};
    bool ok = c.valid() && c.within(t);
    out << (ok ? "ok" : "invalid chain") << "\n";
    return ok ? 0 : 1;
}

} // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"finite tree reductions, combinatorial witnesses and their extraction"};
    app.require_subcommand(1);

    Options o;
    int rc = 0;
    auto run = [&](auto fn) { return [&o, &out, fn, &rc]() { rc = fn(o, out); }; };

    auto* tree = app.add_subcommand("tree", "tree utilities");
    tree->require_subcommand(1);
    auto* tval = tree->add_subcommand("validate", "check prefix closure");
    tval->add_option("--in", o.in_file)->required();
    tval->callback(run(cmd_tree_validate));
    auto* tclo = tree->add_subcommand("closure", "prefix closure of a sequence set");
    tclo->add_option("--in", o.in_file)->required();
    tclo->add_flag("--exclusive", o.exclusive, "keep proper prefixes only");
    tclo->callback(run(cmd_tree_closure));
    auto* tbr = tree->add_subcommand("branch", "longest branch");
    tbr->add_option("--in", o.in_file)->required();
    tbr->callback(run(cmd_tree_branch));
    auto* tsub = tree->add_subcommand("subtree", "subtree above a node");
    tsub->add_option("--in", o.in_file)->required();
    tsub->add_option("--at", o.at)->required();
    tsub->callback(run(cmd_tree_subtree));

    auto* gen = app.add_subcommand("gen", "combinatorial generators");
    gen->require_subcommand(1);
    for (const char* name : {"fs", "fsk", "delta", "pairs", "bush", "rho"}) {
        auto* g = gen->add_subcommand(name);
        g->add_option("--set", o.set_file)->required();
        if (std::string(name) == "fsk") g->add_option("--k", o.k);
        if (std::string(name) == "bush") g->add_option("--depth", o.depth)->required();
        if (std::string(name) == "rho") g->add_option("--kind", o.kind)->required();
        std::string which = name;
        g->callback([&o, &out, which, &rc]() { rc = cmd_gen(which, o, out); });
    }

    auto* red = app.add_subcommand("reduce", "image of a tree under the unified reduction");
    red->add_option("--kind", o.kind)->required();
    red->add_option("--encoder", o.encoder)->required();
    red->add_option("--in", o.in_file)->required();
    red->add_option("--alphabet", o.alphabet);
    red->add_option("--depth", o.enc_depth);
    red->add_option("--out", o.out_file, "also write the image with its header line");
    red->add_option("--forward", o.forward_file, "print the forward witness of this branch instead");
    red->add_flag("--force", o.force, "allow encoder flavor/kind mismatch");
    red->callback(run(cmd_reduce));

    auto* ext = app.add_subcommand("extract", "turn a witness into a chain");
    ext->add_option("--kind", o.kind)->required();
    ext->add_option("--witness", o.witness_file)->required();
    ext->add_option("--tree", o.tree_file)->required();
    ext->add_option("--encoder", o.encoder)->required();
    ext->add_option("--alphabet", o.alphabet);
    ext->add_option("--depth", o.enc_depth);
    ext->callback(run(cmd_extract));

    auto* ora = app.add_subcommand("oracle", "bounded witness search");
    ora->add_option("--kind", o.kind)->required();
    ora->add_option("--set", o.set_file)->required();
    ora->add_option("--size", o.size)->required();
    ora->add_option("--bound", o.bound)->required();
    ora->callback(run(cmd_oracle));

    auto* ram = app.add_subcommand("ramsey", "monochromatic subset search");
    ram->add_option("--set", o.set_file)->required();
    ram->add_option("--coloring", o.coloring_file)->required();
    ram->add_option("--size", o.size)->required();
    ram->callback(run(cmd_ramsey));

    auto* div = app.add_subcommand("divide", "divisibility structure of the sum families");
    div->require_subcommand(1);
    auto* dtr = div->add_subcommand("transfer", "m-sum witness to n-sum witness");
    dtr->add_option("--set", o.set_file)->required();
    dtr->add_option("--n", o.n)->required();
    dtr->add_option("--m", o.m)->required();
    dtr->callback(run(cmd_divide_transfer));
    auto* dce = div->add_subcommand("counterexample", "separating set for n not dividing m");
    dce->add_option("--n", o.n)->required();
    dce->add_option("--m", o.m)->required();
    dce->add_option("--bound", o.bound)->default_val(100);
    dce->callback(run(cmd_divide_counterexample));
    auto* dve = div->add_subcommand("verify", "residue obstruction check");
    dve->add_option("--set", o.set_file)->required();
    dve->add_option("--n", o.n)->required();
    dve->add_option("--bound", o.bound)->required();
    dve->callback(run(cmd_divide_verify));

    auto* fam = app.add_subcommand("family", "tree family predicates");
    fam->require_subcommand(1);
    for (const char* name : {"miller", "laver", "mathias", "rank"}) {
        auto* f = fam->add_subcommand(name);
        f->add_option("--in", o.in_file)->required();
        std::string which = name;
        if (which == "miller" || which == "laver") {
            f->add_option("--horizon", o.horizon)->required();
            f->add_option("--width", o.width)->required();
        }
        if (which == "laver") f->add_option("--stem", o.stem)->required();
        if (which == "mathias") {
            f->add_option("--set", o.set_file)->required();
            f->add_option("--depth", o.depth)->required();
        }
        f->callback([&o, &out, which, &rc]() { rc = cmd_family(which, o, out); });
    }

    auto* sil = app.add_subcommand("silver", "silver reduction");
    sil->require_subcommand(1);
    auto* sen = sil->add_subcommand("encode", "spec of the image of a branch");
    sen->add_option("--tau", o.tau)->required();
    sen->callback([&o, &out, &rc]() { rc = cmd_silver("encode", o, out); });
    auto* sde = sil->add_subcommand("decode", "decode a spec against an image");
    sde->add_option("--spec", o.spec_file)->required();
    sde->add_option("--tree", o.tree_file)->required();
    sde->callback([&o, &out, &rc]() { rc = cmd_silver("decode", o, out); });
    auto* sph = sil->add_subcommand("phi", "image tree of a tree");
    sph->add_option("--in", o.in_file)->required();
    sph->callback([&o, &out, &rc]() { rc = cmd_silver("phi", o, out); });
    auto* str = sil->add_subcommand("tree", "expand a spec into its tree");
    str->add_option("--spec", o.spec_file)->required();
    str->callback([&o, &out, &rc]() { rc = cmd_silver("tree", o, out); });

    auto* sac = app.add_subcommand("sacks", "branch-set closure and split structure");
    sac->require_subcommand(1);
    auto* sph2 = sac->add_subcommand("phi", "closure of a branch set");
    sph2->add_option("--branches", o.branches_file)->required();
    sph2->callback([&o, &out, &rc]() { rc = cmd_sacks("phi", o, out); });
    auto* srk = sac->add_subcommand("rank", "split rank of a binary tree");
    srk->add_option("--in", o.in_file)->required();
    srk->callback([&o, &out, &rc]() { rc = cmd_sacks("rank", o, out); });

    auto* ver = app.add_subcommand("verify", "recheck printed witnesses");
    ver->require_subcommand(1);
    auto* vre = ver->add_subcommand("reduction", "witness image inside phi");
    vre->add_option("--kind", o.kind)->required();
    vre->add_option("--encoder", o.encoder)->required();
    vre->add_option("--tree", o.tree_file)->required();
    vre->add_option("--witness", o.witness_file)->required();
    vre->add_option("--alphabet", o.alphabet);
    vre->add_option("--depth", o.enc_depth);
    vre->add_flag("--force", o.force);
    vre->callback(run(cmd_verify_reduction));
    auto* vch = ver->add_subcommand("chain", "chain validity inside a tree");
    vch->add_option("--tree", o.tree_file)->required();
    vch->add_option("--chain", o.chain_file)->required();
    vch->callback(run(cmd_verify_chain));

    std::vector<std::string> argv(args.rbegin(), args.rend());
    try {
        app.parse(argv);
    } catch (const CLI::CallForHelp& e) {
        out << app.help();
        return 0;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const ViolationError& e) {
        print_cert(out, e.cert);
        return 1;
    } catch (const Error& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    }
    return rc;
}

} // namespace treeideal
