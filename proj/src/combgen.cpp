#include "treeideal/combgen.hpp"
#include "treeideal/errors.hpp"

#include <algorithm>

namespace treeideal {

NatSet::NatSet(std::vector<BigNat> elems) : elems_(std::move(elems)) {
    std::sort(elems_.begin(), elems_.end());
    elems_.erase(std::unique(elems_.begin(), elems_.end()), elems_.end());
}

NatSet::NatSet(std::initializer_list<std::uint64_t> elems) {
    for (auto v : elems) elems_.push_back(BigNat(v));
    std::sort(elems_.begin(), elems_.end());
    elems_.erase(std::unique(elems_.begin(), elems_.end()), elems_.end());
}

const BigNat& NatSet::max() const {
    if (elems_.empty()) throw ArgumentError("max of empty set");
    return elems_.back();
}

bool NatSet::contains(const BigNat& v) const {
    return std::binary_search(elems_.begin(), elems_.end(), v);
}

bool NatSet::subset_of(const NatSet& o) const {
    return std::all_of(elems_.begin(), elems_.end(), [&](const BigNat& v) { return o.contains(v); });
}

void NatSet::insert(BigNat v) {
    auto it = std::lower_bound(elems_.begin(), elems_.end(), v);
    if (it == elems_.end() || *it != v) elems_.insert(it, std::move(v));
}

void NatSet::merge(const NatSet& o) {
    for (const BigNat& v : o.elems_) insert(v);
}

bool PairSet::contains(const BigNat& a, const BigNat& b) const {
    Pair p = a < b ? Pair{a, b} : Pair{b, a};
    return std::binary_search(elems_.begin(), elems_.end(), p);
}

bool PairSet::subset_of(const PairSet& o) const {
    return std::all_of(elems_.begin(), elems_.end(),
                       [&](const Pair& p) { return std::binary_search(o.elems_.begin(), o.elems_.end(), p); });
}

void PairSet::insert(BigNat a, BigNat b) {
    if (a == b) throw ArgumentError("pair components must differ");
    Pair p = a < b ? Pair{std::move(a), std::move(b)} : Pair{std::move(b), std::move(a)};
    auto it = std::lower_bound(elems_.begin(), elems_.end(), p);
    if (it == elems_.end() || *it != p) elems_.insert(it, std::move(p));
}

void PairSet::merge(const PairSet& o) {
    for (const Pair& p : o.elems_) insert(p.first, p.second);
}

GeneratorKind GeneratorKind::fsk(unsigned k) {
    if (k < 2) throw ArgumentError("fsk requires k >= 2");
    return {Tag::FSK, k};
}

std::optional<GeneratorKind> GeneratorKind::parse(const std::string& name) {
    if (name == "fs") return fs();
    if (name == "delta") return delta();
    if (name == "pairs") return pairs();
    if (name == "mathias") return mathias();
    if (name.size() > 2 && name.compare(0, 2, "fs") == 0) {
        unsigned k = 0;
        for (std::size_t i = 2; i < name.size(); ++i) {
            if (name[i] < '0' || name[i] > '9') return std::nullopt;
            k = k * 10 + static_cast<unsigned>(name[i] - '0');
            if (k > 99) return std::nullopt;
        }
        if (k >= 2) return fsk(k);
    }
    return std::nullopt;
}

std::string GeneratorKind::name() const {
    switch (tag) {
        case Tag::FS: return "fs";
        case Tag::FSK: return "fs" + std::to_string(k);
        case Tag::Delta: return "delta";
        case Tag::Pairs: return "pairs";
        case Tag::Mathias: return "mathias";
    }
    return "?";
}

NatSet fs(const NatSet& b) {
    if (b.size() > 20) throw CapacityError("fs: set larger than 20 elements");
    std::vector<BigNat> sums;
    sums.reserve((std::size_t{1} << b.size()));
    // Subset sums by doubling: for each element, extend all previous sums.
    sums.push_back(BigNat(0));
    for (const BigNat& v : b.elements()) {
        std::size_t n = sums.size();
        for (std::size_t i = 0; i < n; ++i) sums.push_back(sums[i] + v);
    }
    sums.erase(sums.begin()); // drop the empty sum
    return NatSet(std::move(sums));
}

namespace {

// Visits all size-k index subsets of [0, n).
template <typename F>
void for_each_combination(std::size_t n, std::size_t k, F&& visit) {
    if (k > n) return;
    std::vector<std::size_t> idx(k);
    for (std::size_t i = 0; i < k; ++i) idx[i] = i;
    while (true) {
        visit(const_cast<const std::vector<std::size_t>&>(idx));
        std::size_t i = k;
        while (i-- > 0) {
            if (idx[i] != i + n - k) {
                ++idx[i];
                for (std::size_t j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
                break;
            }
            if (i == 0) return;
        }
    }
}

} // namespace

NatSet fs_k(const NatSet& b, unsigned k) {
    if (k < 2) throw ArgumentError("fs_k requires k >= 2");
    std::vector<BigNat> sums;
    for_each_combination(b.size(), k, [&](const std::vector<std::size_t>& idx) {
        BigNat s;
        for (std::size_t i : idx) s += b[i];
        sums.push_back(std::move(s));
    });
    return NatSet(std::move(sums));
}

NatSet delta(const NatSet& b) {
    std::vector<BigNat> diffs;
    for (std::size_t i = 0; i < b.size(); ++i)
        for (std::size_t j = i + 1; j < b.size(); ++j) diffs.push_back(b[j] - b[i]);
    return NatSet(std::move(diffs));
}

PairSet pairs(const NatSet& b) {
    PairSet out;
    for (std::size_t i = 0; i < b.size(); ++i)
        for (std::size_t j = i + 1; j < b.size(); ++j) out.insert(b[i], b[j]);
    return out;
}

SeqSet mathias_bush(const NatSet& b, std::size_t depth) {
    std::vector<std::uint64_t> vals;
    vals.reserve(b.size());
    for (const BigNat& v : b.elements()) {
        if (!v.fits_uint64()) throw CapacityError("mathias_bush: element exceeds 64 bits");
        vals.push_back(v.to_uint64());
    }
    SeqSet out;
    std::vector<std::uint64_t> cur;
    auto rec = [&](auto&& self, std::size_t from) -> void {
        if (cur.size() >= depth) return;
        for (std::size_t i = from; i < vals.size(); ++i) {
            cur.push_back(vals[i]);
            out.push_back(FinSeq(cur));
            self(self, i + 1);
            cur.pop_back();
        }
    };
    rec(rec, 0);
    normalize_seq_set(out);
    return out;
}

GenImage rho_extended(const GeneratorKind& kind, const NatSet& b) {
    switch (kind.tag) {
        case GeneratorKind::Tag::FS: return fs(b);
        case GeneratorKind::Tag::FSK: return fs_k(b, kind.k);
        case GeneratorKind::Tag::Delta: return delta(b);
        case GeneratorKind::Tag::Pairs: return pairs(b);
        case GeneratorKind::Tag::Mathias: return mathias_bush(b, b.size());
    }
    throw ArgumentError("unknown generator kind");
}

bool gen_image_subset(const GenImage& a, const GenImage& b) {
    if (a.index() != b.index()) throw ArgumentError("generator images of different shapes");
    if (std::holds_alternative<NatSet>(a))
        return std::get<NatSet>(a).subset_of(std::get<NatSet>(b));
    if (std::holds_alternative<PairSet>(a))
        return std::get<PairSet>(a).subset_of(std::get<PairSet>(b));
    return seq_subset(std::get<SeqSet>(a), std::get<SeqSet>(b));
}

} // namespace treeideal
