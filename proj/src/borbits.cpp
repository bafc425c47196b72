#include "orbit_atlas/borbits.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <regex>
#include <sstream>

namespace orbit_atlas {

bool BOrbit::operator==(const BOrbit& o) const {
    if (group != o.group || korbit != o.korbit || !(w == o.w)) return false;
    if (!fibre || !o.fibre) return !fibre && !o.fibre;
    return *fibre == *o.fibre;
}

std::string BOrbit::key() const { return canonical_key(*this); }

ParabolicSubset kside_parabolic_subset(const GroupDatum& g, const KOrbitTag& q) {
    check_korbit(g, q);
    ParabolicSubset s;
    int l = g.l();
    if (q.kind == KOrbitTag::Pair) {
        for (int k = q.i; k <= q.j - 2; ++k) s.push_back(k);
    } else if (q.kind == KOrbitTag::NonClosed) {
        if (g.family == Family::SOodd) {
            if (l - q.i >= 2)
                for (int k = q.i + 1; k <= l; ++k) s.push_back(k);
        } else {
            for (int k = q.i; k <= l - 1; ++k) s.push_back(k);
        }
    }
    return s;
}

GroupDatum fibre_group(const GroupDatum& g, const KOrbitTag& q) {
    auto sp = special_parabolic(g, q);
    if (!sp.levi) throw AtlasError("closed K-orbits carry no fibre");
    return sp.levi->theta_fixed();
}

int kside_rank(const GroupDatum& g) {
    return g.family == Family::GL ? g.n - 1 : (g.n - 1) / 2;
}

namespace {

// First K-coordinate (0-based) occupied by the fibre group's coordinates.
int fibre_offset(const GroupDatum& g, const KOrbitTag& q) {
    return g.family == Family::SOodd ? q.i : q.i - 1;
}

}  // namespace

int fibre_root_index(const GroupDatum& g, const KOrbitTag& q, const Root& kroot) {
    GroupDatum f = fibre_group(g, q);
    RootSystem frs = root_system(f);
    int off = fibre_offset(g, q);
    Root r(frs.dim, 0);
    for (int a = 0; a < static_cast<int>(kroot.size()); ++a) {
        if (kroot[a] == 0) continue;
        if (a < off || a >= off + frs.dim) return 0;
        r[a - off] = kroot[a];
    }
    return simple_index(frs, r);
}

int block_root_index(const GroupDatum& g, const KOrbitTag& q, int k) {
    return g.family == Family::SOodd ? k - q.i : k - q.i + 1;
}

namespace {

std::vector<BOrbit> build(const GroupDatum& g) {
    std::vector<BOrbit> out;
    RootSystem krs = kside_root_system(g);
    for (const auto& q : enumerate_korbits(g)) {
        auto reps = coset_reps(krs, kside_parabolic_subset(g, q));
        if (q.is_closed()) {
            for (const auto& w : reps) out.push_back({g, q, w, nullptr});
            continue;
        }
        const auto& fibres = enumerate_borbits(fibre_group(g, q));
        for (const auto& w : reps)
            for (const auto& f : fibres) out.push_back({g, q, w, std::make_shared<const BOrbit>(f)});
    }
    return out;
}

}  // namespace

const std::vector<BOrbit>& enumerate_borbits(const GroupDatum& g) {
    static std::recursive_mutex mu;
    static std::map<GroupDatum, std::unique_ptr<const std::vector<BOrbit>>> cache;
    std::lock_guard lock(mu);
    auto it = cache.find(g);
    if (it == cache.end()) it = cache.emplace(g, std::make_unique<const std::vector<BOrbit>>(build(g))).first;
    return *it->second;
}

void check_borbit(const BOrbit& q) {
    check_korbit(q.group, q.korbit);
    if (q.w.rs != kside_root_system(q.group) || !is_valid(q.w))
        throw AtlasError("w is not an element of the smaller Weyl group");
    if (!(min_coset_rep(q.w, kside_parabolic_subset(q.group, q.korbit)) == q.w))
        throw AtlasError("w is not a minimal coset representative");
    if (q.korbit.is_closed() != !q.fibre) throw AtlasError("fibre must be present exactly for non-closed K-orbits");
    if (q.fibre) {
        if (q.fibre->group != fibre_group(q.group, q.korbit)) throw AtlasError("fibre lives on the wrong group");
        check_borbit(*q.fibre);
    }
}

int borbit_dim(const BOrbit& q) {
    int d = q.w.length();
    if (q.fibre) d += borbit_dim(*q.fibre) + kside_rank(*special_parabolic(q.group, q.korbit).levi);
    return d;
}

BOrbit to_op(const BOrbit& q) {
    if (q.korbit != open_korbit(q.group) || !q.fibre)
        throw AtlasError("orbit does not lie in the open K-orbit");
    return *q.fibre;
}

BOrbit from_op(const GroupDatum& g, const BOrbit& op) {
    KOrbitTag open = open_korbit(g);
    if (open.is_closed()) throw AtlasError(g.name() + " has a closed open K-orbit");
    BOrbit out{g, open, identity(kside_root_system(g)), std::make_shared<const BOrbit>(op)};
    check_borbit(out);
    return out;
}

namespace {

ExactMatrix kside_weyl(const GroupDatum& g, const WeylElement& w) {
    if (w.rs.dim == 0) return ExactMatrix::identity(g.n);
    return embed_kside(g, weyl_matrix(g.theta_fixed(), w));
}

}  // namespace

ExactMatrix borbit_element(const BOrbit& q) {
    const GroupDatum& g = q.group;
    auto sp = special_parabolic(g, q.korbit);
    ExactMatrix kw = kside_weyl(g, q.w);
    if (!q.fibre) return kw * weyl_matrix(g, sp.twist);
    const GroupDatum& block = *sp.levi;
    ExactMatrix gf = borbit_element(*q.fibre);
    ExactMatrix h = embed_kside(block, gf.inverse()) * open_fibre_element(block);
    ExactMatrix p = ExactMatrix::identity(g.n);
    if (q.korbit.kind == KOrbitTag::Pair) p = weyl_matrix(g, cycle_w(g.n, q.korbit.j));
    return kw * embed_block(g, sp.block_basis, h) * p;
}

SymbolicFlag borbit_rep(const BOrbit& q) {
    SymbolicFlag f = flag_of(q.group, borbit_element(q));
    if (auto d = f.defect()) throw AtlasError("representative is not a valid flag: " + *d);
    return f;
}

std::string canonical_key(const BOrbit& q) {
    std::string s = q.group.name() + "|" + q.korbit.to_string() + "|w=" + q.w.to_string() + "|";
    return s + (q.fibre ? canonical_key(*q.fibre) : ".");
}

namespace {

BOrbit parse_from(const std::vector<std::string>& tok, size_t& pos) {
    if (pos + 3 > tok.size()) throw AtlasError("truncated orbit key");
    GroupDatum g = parse_group(tok[pos]);
    KOrbitTag q = parse_korbit(g, tok[pos + 1]);
    static const std::regex wre(R"(w=\[(-?\d+(,-?\d+)*)?\])");
    if (!std::regex_match(tok[pos + 2], wre)) throw AtlasError("bad Weyl element in key: " + tok[pos + 2]);
    std::vector<int> img;
    std::string body = tok[pos + 2].substr(3, tok[pos + 2].size() - 4);
    std::stringstream ss(body);
    for (std::string part; std::getline(ss, part, ',');) img.push_back(std::stoi(part));
    BOrbit out{g, q, make_weyl(kside_root_system(g), img), nullptr};
    pos += 3;
    if (pos >= tok.size()) throw AtlasError("truncated orbit key");
    if (tok[pos] == ".") {
        ++pos;
    } else {
        out.fibre = std::make_shared<const BOrbit>(parse_from(tok, pos));
    }
    return out;
}

}  // namespace

BOrbit parse_key(const std::string& key) {
    std::vector<std::string> tok;
    std::stringstream ss(key);
    for (std::string part; std::getline(ss, part, '|');) tok.push_back(part);
    size_t pos = 0;
    BOrbit out = parse_from(tok, pos);
    if (pos != tok.size()) throw AtlasError("trailing data in orbit key");
    check_borbit(out);
    return out;
}

}  // namespace orbit_atlas
