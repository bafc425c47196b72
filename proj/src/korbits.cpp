#include "orbit_atlas/korbits.hpp"

#include <algorithm>
#include <regex>

namespace orbit_atlas {

std::string KOrbitTag::to_string() const {
    switch (kind) {
        case Closed:
        case NonClosed: return "Q_" + std::to_string(i);
        case Pair: return "Q_{" + std::to_string(i) + "," + std::to_string(j) + "}";
        case Plus: return "Q_+";
        case Minus: return "Q_-";
    }
    return "?";
}

void check_korbit(const GroupDatum& g, const KOrbitTag& q) {
    int n = g.n, l = g.l();
    bool ok = false;
    switch (g.family) {
        case Family::GL:
            ok = (q.kind == KOrbitTag::Closed && q.i >= 1 && q.i <= n) ||
                 (q.kind == KOrbitTag::Pair && q.i >= 1 && q.i < q.j && q.j <= n);
            break;
        case Family::SOodd:
            ok = q.kind == KOrbitTag::Plus || q.kind == KOrbitTag::Minus ||
                 (q.kind == KOrbitTag::NonClosed && q.i >= 0 && q.i <= l - 1);
            break;
        case Family::SOeven:
            ok = q.kind == KOrbitTag::Plus || (q.kind == KOrbitTag::NonClosed && q.i >= 1 && q.i <= l - 1);
            break;
    }
    if (!ok) throw AtlasError("K-orbit " + q.to_string() + " does not exist for " + g.name());
}

KOrbitTag parse_korbit(const GroupDatum& g, const std::string& s) {
    static const std::regex single(R"(Q_(\d+))"), pair(R"(Q_\{(\d+),(\d+)\})");
    std::smatch m;
    KOrbitTag q;
    if (s == "Q_+") q.kind = KOrbitTag::Plus;
    else if (s == "Q_-") q.kind = KOrbitTag::Minus;
    else if (std::regex_match(s, m, single)) {
        q.kind = g.family == Family::GL ? KOrbitTag::Closed : KOrbitTag::NonClosed;
        q.i = std::stoi(m[1]);
    } else if (std::regex_match(s, m, pair)) {
        q.kind = KOrbitTag::Pair;
        q.i = std::stoi(m[1]);
        q.j = std::stoi(m[2]);
    } else {
        throw AtlasError("bad K-orbit tag: " + s);
    }
    check_korbit(g, q);
    return q;
}

std::string to_string(RootType t) {
    switch (t) {
        case RootType::Compact: return "compact";
        case RootType::Real: return "real";
        case RootType::Noncompact: return "noncompact";
        case RootType::ComplexStable: return "complex-stable";
        case RootType::ComplexUnstable: return "complex-unstable";
    }
    return "?";
}

// Closed orbits first, then by increasing dimension.
std::vector<KOrbitTag> enumerate_korbits(const GroupDatum& g) {
    std::vector<KOrbitTag> out;
    int n = g.n, l = g.l();
    switch (g.family) {
        case Family::GL:
            for (int i = 1; i <= n; ++i) out.push_back({KOrbitTag::Closed, i, 0});
            for (int d = 1; d < n; ++d)
                for (int i = 1; i + d <= n; ++i) out.push_back({KOrbitTag::Pair, i, i + d});
            break;
        case Family::SOodd:
            out.push_back({KOrbitTag::Plus, 0, 0});
            out.push_back({KOrbitTag::Minus, 0, 0});
            for (int i = l - 1; i >= 0; --i) out.push_back({KOrbitTag::NonClosed, i, 0});
            break;
        case Family::SOeven:
            out.push_back({KOrbitTag::Plus, 0, 0});
            for (int i = l - 1; i >= 1; --i) out.push_back({KOrbitTag::NonClosed, i, 0});
            break;
    }
    return out;
}

KOrbitTag open_korbit(const GroupDatum& g) {
    switch (g.family) {
        case Family::GL: return g.n == 1 ? KOrbitTag{KOrbitTag::Closed, 1, 0} : KOrbitTag{KOrbitTag::Pair, 1, g.n};
        case Family::SOodd: return {KOrbitTag::NonClosed, 0, 0};
        case Family::SOeven: return g.l() == 1 ? KOrbitTag{KOrbitTag::Plus, 0, 0} : KOrbitTag{KOrbitTag::NonClosed, 1, 0};
    }
    return {};
}

int dim_flag_variety(const GroupDatum& g) {
    int n = g.n, l = g.l();
    switch (g.family) {
        case Family::GL: return n * (n - 1) / 2;
        case Family::SOodd: return l * l;
        case Family::SOeven: return l * (l - 1);
    }
    return 0;
}

int korbit_codim(const GroupDatum& g, const KOrbitTag& q) {
    check_korbit(g, q);
    int n = g.n, l = g.l();
    switch (q.kind) {
        case KOrbitTag::Closed: return n - 1;
        case KOrbitTag::Pair: return n - 1 - (q.j - q.i);
        case KOrbitTag::Plus:
        case KOrbitTag::Minus: return g.family == Family::SOodd ? l : l - 1;
        case KOrbitTag::NonClosed: return g.family == Family::SOodd ? q.i : q.i - 1;
    }
    return 0;
}

RootType korbit_root_type(const GroupDatum& g, const KOrbitTag& q, int k) {
    check_korbit(g, q);
    if (k < 1 || k > g.num_simple()) throw AtlasError("simple root index out of range: " + std::to_string(k));
    int l = g.l(), i = q.i, j = q.j;
    switch (g.family) {
        case Family::GL:
            if (q.kind == KOrbitTag::Closed) return (k == i - 1 || k == i) ? RootType::Noncompact : RootType::Compact;
            if (k == i - 1 || k == j) return RootType::ComplexStable;
            if (k == i) return j == i + 1 ? RootType::Real : RootType::ComplexUnstable;
            if (k == j - 1) return RootType::ComplexUnstable;
            return RootType::Compact;
        case Family::SOodd:
            if (q.kind != KOrbitTag::NonClosed) return k == l ? RootType::Noncompact : RootType::Compact;
            if (i >= 1 && k == i) return RootType::ComplexStable;
            if (k == i + 1) return i == l - 1 ? RootType::Real : RootType::ComplexUnstable;
            return RootType::Compact;
        case Family::SOeven:
            if (q.kind == KOrbitTag::Plus) return (k == l - 1 || k == l) ? RootType::ComplexStable : RootType::Compact;
            if (k == i - 1) return RootType::ComplexStable;
            if (k == i || (i == l - 1 && k == l)) return RootType::ComplexUnstable;
            return RootType::Compact;
    }
    return RootType::Compact;
}

KOrbitTag korbit_monoid(const GroupDatum& g, const KOrbitTag& q, int k) {
    RootType t = korbit_root_type(g, q, k);
    if (t != RootType::ComplexStable && t != RootType::Noncompact) return q;
    int l = g.l(), i = q.i, j = q.j;
    switch (g.family) {
        case Family::GL:
            if (q.kind == KOrbitTag::Closed) return k == i - 1 ? KOrbitTag{KOrbitTag::Pair, i - 1, i} : KOrbitTag{KOrbitTag::Pair, i, i + 1};
            return k == i - 1 ? KOrbitTag{KOrbitTag::Pair, i - 1, j} : KOrbitTag{KOrbitTag::Pair, i, j + 1};
        case Family::SOodd:
            if (q.kind != KOrbitTag::NonClosed) return {KOrbitTag::NonClosed, l - 1, 0};
            return {KOrbitTag::NonClosed, i - 1, 0};
        case Family::SOeven:
            if (q.kind == KOrbitTag::Plus) return {KOrbitTag::NonClosed, l - 1, 0};
            return {KOrbitTag::NonClosed, i - 1, 0};
    }
    return q;
}

WeylElement cycle_w(int n, int i) {
    std::vector<int> img(n);
    for (int k = 1; k <= n; ++k) img[k - 1] = k < i ? k : (k == i ? n : k - 1);
    return make_weyl({RootKind::A, n}, img);
}

SpecialParabolic special_parabolic(const GroupDatum& g, const KOrbitTag& q) {
    check_korbit(g, q);
    RootSystem rs = root_system(g);
    SpecialParabolic sp{{}, identity(rs), std::nullopt, {}};
    int l = g.l(), n = g.n;
    switch (q.kind) {
        case KOrbitTag::Closed:
            sp.twist = cycle_w(n, q.i);
            break;
        case KOrbitTag::Minus:
            sp.twist = simple_reflection(rs, l);
            break;
        case KOrbitTag::Plus:
            break;
        case KOrbitTag::Pair:
            sp.twist = cycle_w(n, q.i);
            for (int k = q.i; k < q.j; ++k) sp.S.push_back(k);
            sp.levi = gl(q.j - q.i + 1);
            for (int k = q.i; k < q.j; ++k) sp.block_basis.push_back(k);
            sp.block_basis.push_back(n);
            break;
        case KOrbitTag::NonClosed: {
            int first = g.family == Family::SOodd ? q.i + 1 : q.i;
            for (int k = first; k <= l; ++k) sp.S.push_back(k);
            int m = l - first + 1;
            sp.levi = so(g.family == Family::SOodd ? 2 * m + 1 : 2 * m);
            for (int k = first; k <= l; ++k) sp.block_basis.push_back(k);
            if (g.family == Family::SOodd) sp.block_basis.push_back(0);
            for (int k = l; k >= first; --k) sp.block_basis.push_back(-k);
            break;
        }
    }
    return sp;
}

std::vector<KOrbitEdge> korbit_weak_order(const GroupDatum& g) {
    std::vector<KOrbitEdge> out;
    for (const auto& q : enumerate_korbits(g))
        for (int k = 1; k <= g.num_simple(); ++k) {
            KOrbitTag t = korbit_monoid(g, q, k);
            if (t != q) out.push_back({q, t, k});
        }
    return out;
}

}  // namespace orbit_atlas
