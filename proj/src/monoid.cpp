#include "orbit_atlas/monoid.hpp"

#include <algorithm>
#include <map>
#include <memory>
#include <regex>

namespace orbit_atlas {

std::string SimpleRootRef::to_string() const {
    return (side == Side::Left ? "L:" : "R:") + std::to_string(index);
}

SimpleRootRef parse_root_ref(const std::string& s) {
    static const std::regex re(R"(([LR]):(\d+))");
    std::smatch m;
    if (!std::regex_match(s, m, re)) throw AtlasError("bad root spec: " + s);
    return {m[1] == "L" ? Side::Left : Side::Right, std::stoi(m[2])};
}

std::string MonoidOutcome::to_string() const {
    switch (kind) {
        case Raised: return "raised: " + result->key();
        case Fixed: return "fixed: " + reason;
        case Deferred: return "deferred: " + reason;
    }
    return "?";
}

namespace {

const char* kKOrbitMoves = "K-orbit moves (sequel case)";
const char* kOpenBlockRoot = "root is real or complex-unstable for the block's open K-orbit (no covered rule)";

MonoidOutcome raised(BOrbit b, RootType t) {
    return {MonoidOutcome::Raised, std::move(b), t, ""};
}

MonoidOutcome fixed(RootType t) {
    return {MonoidOutcome::Fixed, std::nullopt, t, to_string(t)};
}

MonoidOutcome deferred(std::string why) {
    return {MonoidOutcome::Deferred, std::nullopt, std::nullopt, std::move(why)};
}

// Replace the fibre of q by the result of a fibre move.
MonoidOutcome wrap(const BOrbit& q, MonoidOutcome inner) {
    if (inner.kind == MonoidOutcome::Raised) {
        BOrbit b = q;
        b.fibre = std::make_shared<const BOrbit>(*inner.result);
        inner.result = std::move(b);
    }
    return inner;
}

MonoidOutcome act_left(const BOrbit& q, int k) {
    const GroupDatum& g = q.group;
    RootSystem krs = kside_root_system(g);
    if (k < 1 || k > krs.num_simple()) throw AtlasError("invalid root index: L:" + std::to_string(k));
    ParabolicSubset s = kside_parabolic_subset(g, q.korbit);
    WeylElement sw = compose(simple_reflection(krs, k), q.w);
    if (q.fibre && min_coset_rep(sw, s) == q.w) {
        // alpha lies in w(Phi_l): move inside the fibre, which is stored in op-form
        Root beta = act(inverse(q.w), simple_roots(krs)[k - 1]);
        int idx = fibre_root_index(g, q.korbit, beta);
        if (idx == 0) throw AtlasError("internal: fibre root is not simple");
        return wrap(q, act(*q.fibre, {Side::Right, idx}));
    }
    WeylElement w2 = left_monoid_coset(q.w, k, s);
    if (w2 == q.w) return fixed(RootType::ComplexUnstable);
    BOrbit b = q;
    b.w = w2;
    return raised(b, RootType::ComplexStable);
}

MonoidOutcome act_right(const BOrbit& q, int k) {
    const GroupDatum& g = q.group;
    if (k < 1 || k > g.num_simple()) throw AtlasError("invalid root index: R:" + std::to_string(k));
    if (korbit_monoid(g, q.korbit, k) != q.korbit) return deferred(kKOrbitMoves);
    SpecialParabolic sp = special_parabolic(g, q.korbit);
    if (std::find(sp.S.begin(), sp.S.end(), k) != sp.S.end()) {
        const GroupDatum& block = *sp.levi;
        int kb = block_root_index(g, q.korbit, k);
        RootType t = korbit_root_type(block, open_korbit(block), kb);
        if (t == RootType::Compact) return wrap(q, act(*q.fibre, {Side::Left, kb - 1}));
        if (enumerate_borbits(q.fibre->group).size() == 1) return fixed(t);
        return deferred(kOpenBlockRoot);
    }
    // compact root outside S: coset move by the twisted root
    Root beta = act(sp.twist, simple_roots(g)[k - 1]);
    RootSystem krs = kside_root_system(g);
    Root kb(krs.dim, 0);
    for (int a = 0; a < static_cast<int>(beta.size()); ++a) {
        if (beta[a] == 0) continue;
        if (a >= krs.dim) throw AtlasError("internal: twisted root leaves the smaller group");
        kb[a] = beta[a];
    }
    int idx = simple_index(krs, kb);
    if (idx == 0) throw AtlasError("internal: twisted root is not simple for the smaller group");
    WeylElement w2 = right_monoid_coset_strong(q.w, idx, kside_parabolic_subset(g, q.korbit));
    if (w2 == q.w) return fixed(RootType::ComplexUnstable);
    BOrbit b = q;
    b.w = w2;
    return raised(b, RootType::ComplexStable);
}

}  // namespace

MonoidOutcome act(const BOrbit& q, const SimpleRootRef& a) {
    return a.side == Side::Left ? act_left(q, a.index) : act_right(q, a.index);
}

std::optional<RootType> classify_root(const BOrbit& q, const SimpleRootRef& a) {
    return act(q, a).type;
}

WeakOrderGraph weak_order_graph(const GroupDatum& g) {
    WeakOrderGraph out;
    out.group = g;
    int left = kside_root_system(g).num_simple(), right = g.num_simple();
    for (const auto& q : enumerate_borbits(g)) {
        std::string key = q.key();
        out.nodes.push_back(key);
        out.dims.push_back(borbit_dim(q));
        for (int s = 0; s < 2; ++s) {
            Side side = s == 0 ? Side::Left : Side::Right;
            for (int k = 1; k <= (s == 0 ? left : right); ++k) {
                SimpleRootRef r{side, k};
                MonoidOutcome o = act(q, r);
                if (o.kind == MonoidOutcome::Raised) {
                    out.edges.push_back({key, o.result->key(), r, false});
                } else if (o.kind == MonoidOutcome::Deferred) {
                    std::string to;
                    if (side == Side::Right) {
                        KOrbitTag t = korbit_monoid(g, q.korbit, k);
                        if (t != q.korbit) to = t.to_string();
                    }
                    out.edges.push_back({key, to, r, true});
                }
            }
        }
    }
    return out;
}

namespace {

std::string edge_label(const SimpleRootRef& r) {
    std::string s = r.to_string();
    return s.insert(2, "a");
}

}  // namespace

std::string WeakOrderGraph::to_dot() const {
    std::string s = "digraph \"" + group.name() + "\" {\n";
    std::map<std::string, std::string> id;
    for (size_t i = 0; i < nodes.size(); ++i) {
        id[nodes[i]] = "n" + std::to_string(i);
        s += "  n" + std::to_string(i) + " [label=\"" + nodes[i] + "\\ndim " + std::to_string(dims[i]) + "\"];\n";
    }
    std::map<std::string, std::string> pending;
    for (const auto& e : edges) {
        if (!e.deferred) continue;
        std::string label = e.to.empty() ? "?" : e.to + "?";
        if (!pending.count(label)) {
            pending[label] = "u" + std::to_string(pending.size());
            s += "  " + pending[label] + " [shape=plaintext,label=\"" + label + "\"];\n";
        }
    }
    for (const auto& e : edges) {
        if (e.deferred) {
            std::string label = e.to.empty() ? "?" : e.to + "?";
            s += "  " + id[e.from] + " -> " + pending[label] + " [style=dashed,label=\"" + edge_label(e.root) + "?\"];\n";
        } else {
            s += "  " + id[e.from] + " -> " + id[e.to] + " [label=\"" + edge_label(e.root) + "\"];\n";
        }
    }
    return s + "}\n";
}

}  // namespace orbit_atlas
