#include "orbit_atlas/rootdata.hpp"

#include <algorithm>
#include <cstdlib>
#include <map>
#include <mutex>
#include <numeric>
#include <set>

namespace orbit_atlas {

int GroupDatum::num_simple() const {
    return root_system(*this).num_simple();
}

GroupDatum GroupDatum::theta_fixed() const {
    if (family == Family::GL) {
        if (n < 2) throw AtlasError("GL1 has no smaller partner in the family");
        return gl(n - 1);
    }
    if (n < 3) throw AtlasError("SO2 has no smaller partner in the family");
    return so(n - 1);
}

std::string GroupDatum::name() const {
    return (family == Family::GL ? "GL" : "SO") + std::to_string(n);
}

GroupDatum make_group(Family f, int n) {
    if (f == Family::GL && n < 1) throw AtlasError("GL needs n >= 1");
    if (f != Family::GL) {
        if (n < 2) throw AtlasError("SO needs n >= 2");
        if ((f == Family::SOodd) != (n % 2 == 1)) throw AtlasError("SO family does not match parity of n");
    }
    return GroupDatum{f, n};
}

GroupDatum parse_group(const std::string& s) {
    if (s.size() < 3) throw AtlasError("bad group spec: " + s);
    std::string head = s.substr(0, 2);
    std::string tail = s.substr(2);
    if (tail.empty() || !std::all_of(tail.begin(), tail.end(), ::isdigit) || tail.size() > 3)
        throw AtlasError("bad group spec: " + s);
    int n = std::stoi(tail);
    if (head == "GL") return gl(n);
    if (head == "SO") {
        if (n < 2) throw AtlasError("SO needs n >= 2");
        return so(n);
    }
    throw AtlasError("bad group spec: " + s);
}

int RootSystem::num_simple() const {
    switch (kind) {
        case RootKind::A: return std::max(dim - 1, 0);
        case RootKind::B: return dim;
        case RootKind::D: return dim >= 2 ? dim : 0;
    }
    return 0;
}

RootSystem root_system(const GroupDatum& g) {
    switch (g.family) {
        case Family::GL: return {RootKind::A, g.n};
        case Family::SOodd: return {RootKind::B, g.l()};
        case Family::SOeven: return {RootKind::D, g.l()};
    }
    return {};
}

RootSystem kside_root_system(const GroupDatum& g) {
    switch (g.family) {
        case Family::GL: return {RootKind::A, g.n - 1};
        case Family::SOodd: return {RootKind::D, g.l()};
        case Family::SOeven: return {RootKind::B, g.l() - 1};
    }
    return {};
}

std::vector<Root> simple_roots(const RootSystem& rs) {
    std::vector<Root> out;
    int m = rs.num_simple();
    for (int k = 1; k <= m; ++k) {
        Root r(rs.dim, 0);
        if (rs.kind == RootKind::A || k < rs.dim) {
            r[k - 1] = 1;
            r[k] = -1;
        } else if (rs.kind == RootKind::B) {
            r[k - 1] = 1;
        } else {
            r[k - 2] = 1;
            r[k - 1] = 1;
        }
        out.push_back(r);
    }
    return out;
}

std::vector<Root> simple_roots(const GroupDatum& g) { return simple_roots(root_system(g)); }

bool is_positive(const Root& r) {
    for (int x : r)
        if (x != 0) return x > 0;
    return false;
}

namespace {

std::vector<Root> build_positive(const RootSystem& rs) {
    std::vector<Root> out;
    int d = rs.dim;
    for (int a = 0; a < d; ++a)
        for (int b = a + 1; b < d; ++b) {
            Root r(d, 0);
            r[a] = 1;
            r[b] = -1;
            out.push_back(r);
            if (rs.kind != RootKind::A) {
                r[b] = 1;
                out.push_back(r);
            }
        }
    if (rs.kind == RootKind::B)
        for (int a = 0; a < d; ++a) {
            Root r(d, 0);
            r[a] = 1;
            out.push_back(r);
        }
    return out;
}

}  // namespace

const std::vector<Root>& positive_roots(const RootSystem& rs) {
    static std::mutex mu;
    static std::map<RootSystem, std::vector<Root>> cache;
    std::lock_guard lock(mu);
    auto it = cache.find(rs);
    if (it == cache.end()) it = cache.emplace(rs, build_positive(rs)).first;
    return it->second;
}

bool is_root(const RootSystem& rs, const Root& r) {
    if (static_cast<int>(r.size()) != rs.dim) return false;
    Root p = r;
    if (!is_positive(p)) {
        for (int& x : p) x = -x;
        if (!is_positive(p)) return false;
    }
    const auto& pos = positive_roots(rs);
    return std::find(pos.begin(), pos.end(), p) != pos.end();
}

int simple_index(const RootSystem& rs, const Root& r) {
    auto s = simple_roots(rs);
    for (size_t k = 0; k < s.size(); ++k)
        if (s[k] == r) return static_cast<int>(k) + 1;
    return 0;
}

std::string root_to_string(const Root& r) {
    std::string out;
    for (size_t i = 0; i < r.size(); ++i) {
        if (r[i] == 0) continue;
        if (r[i] > 0 && !out.empty()) out += "+";
        if (r[i] == -1) out += "-";
        else if (r[i] != 1) out += std::to_string(r[i]);
        out += "e" + std::to_string(i + 1);
    }
    return out.empty() ? "0" : out;
}

bool WeylElement::operator<(const WeylElement& o) const {
    int a = length(), b = o.length();
    if (a != b) return a < b;
    return img < o.img;
}

int WeylElement::length() const {
    int len = 0;
    for (const auto& r : positive_roots(rs))
        if (!is_positive(act(*this, r))) ++len;
    return len;
}

std::string WeylElement::to_string() const {
    std::string s = "[";
    for (size_t i = 0; i < img.size(); ++i) {
        if (i) s += ",";
        s += std::to_string(img[i]);
    }
    return s + "]";
}

WeylElement identity(const RootSystem& rs) {
    WeylElement w{rs, std::vector<int>(rs.dim)};
    std::iota(w.img.begin(), w.img.end(), 1);
    return w;
}

bool is_valid(const WeylElement& w) {
    int d = w.rs.dim;
    if (static_cast<int>(w.img.size()) != d) return false;
    std::vector<bool> seen(d + 1, false);
    int neg = 0;
    for (int x : w.img) {
        int a = std::abs(x);
        if (a < 1 || a > d || seen[a]) return false;
        seen[a] = true;
        if (x < 0) ++neg;
    }
    if (w.rs.kind == RootKind::A && neg) return false;
    if (w.rs.kind == RootKind::D && neg % 2) return false;
    return true;
}

WeylElement make_weyl(const RootSystem& rs, std::vector<int> img) {
    WeylElement w{rs, std::move(img)};
    if (!is_valid(w)) throw AtlasError("not a Weyl group element: " + w.to_string());
    return w;
}

// Reflection in a root, read off on the epsilon basis.
WeylElement simple_reflection(const RootSystem& rs, int k) {
    if (k < 1 || k > rs.num_simple()) throw AtlasError("simple root index out of range: " + std::to_string(k));
    Root a = simple_roots(rs)[k - 1];
    int aa = 0;
    for (int x : a) aa += x * x;
    WeylElement w = identity(rs);
    for (int i = 0; i < rs.dim; ++i) {
        // s(e_i) = e_i - 2 a_i / (a,a) a
        std::vector<int> v(rs.dim, 0);
        v[i] = aa;
        for (int j = 0; j < rs.dim; ++j) v[j] -= 2 * a[i] * a[j];
        for (int j = 0; j < rs.dim; ++j)
            if (v[j] != 0) w.img[i] = (v[j] > 0 ? 1 : -1) * (j + 1);
    }
    return w;
}

WeylElement compose(const WeylElement& a, const WeylElement& b) {
    if (a.rs != b.rs) throw AtlasError("Weyl elements from different groups");
    WeylElement w{a.rs, std::vector<int>(a.rs.dim)};
    for (int i = 0; i < a.rs.dim; ++i) {
        int x = b.img[i];
        int y = a.img[std::abs(x) - 1];
        w.img[i] = x > 0 ? y : -y;
    }
    return w;
}

WeylElement inverse(const WeylElement& w) {
    WeylElement v{w.rs, std::vector<int>(w.rs.dim)};
    for (int i = 0; i < w.rs.dim; ++i) {
        int x = w.img[i];
        v.img[std::abs(x) - 1] = x > 0 ? i + 1 : -(i + 1);
    }
    return v;
}

Root act(const WeylElement& w, const Root& r) {
    if (static_cast<int>(r.size()) != w.rs.dim) throw AtlasError("root and Weyl element from different groups");
    Root out(r.size(), 0);
    for (size_t i = 0; i < r.size(); ++i) {
        int x = w.img[i];
        out[std::abs(x) - 1] += x > 0 ? r[i] : -r[i];
    }
    return out;
}

bool right_descent(const WeylElement& w, int k) {
    return !is_positive(act(w, simple_roots(w.rs).at(k - 1)));
}

WeylElement min_coset_rep(WeylElement w, const ParabolicSubset& S) {
    for (int k : S)
        if (k < 1 || k > w.rs.num_simple()) throw AtlasError("parabolic subset index out of range");
    bool changed = true;
    while (changed) {
        changed = false;
        for (int k : S)
            if (right_descent(w, k)) {
                w = compose(w, simple_reflection(w.rs, k));
                changed = true;
            }
    }
    return w;
}

// Breadth-first growth by left multiplication: every nontrivial minimal
// representative has a left descent whose removal stays minimal.
std::vector<WeylElement> coset_reps(const RootSystem& rs, const ParabolicSubset& S) {
    int m = rs.num_simple();
    std::vector<WeylElement> gens;
    for (int k = 1; k <= m; ++k) gens.push_back(simple_reflection(rs, k));
    auto minimal = [&](const WeylElement& w) {
        for (int k : S)
            if (right_descent(w, k)) return false;
        return true;
    };
    std::vector<WeylElement> out{identity(rs)};
    std::set<std::vector<int>> seen{out[0].img};
    std::vector<WeylElement> layer = out;
    int len = 0;
    while (!layer.empty()) {
        std::vector<WeylElement> next;
        for (const auto& w : layer)
            for (const auto& s : gens) {
                WeylElement v = compose(s, w);
                if (seen.count(v.img)) continue;
                if (v.length() != len + 1 || !minimal(v)) continue;
                seen.insert(v.img);
                next.push_back(v);
            }
        ++len;
        out.insert(out.end(), next.begin(), next.end());
        layer = std::move(next);
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<Root> subsystem_roots(const RootSystem& rs, const ParabolicSubset& S) {
    auto simple = simple_roots(rs);
    std::set<Root> found;
    std::vector<Root> frontier;
    for (int k : S) {
        found.insert(simple.at(k - 1));
        frontier.push_back(simple.at(k - 1));
    }
    while (!frontier.empty()) {
        Root r = frontier.back();
        frontier.pop_back();
        for (int k : S) {
            Root t = act(simple_reflection(rs, k), r);
            if (!is_positive(t)) continue;
            if (found.insert(t).second) frontier.push_back(t);
        }
    }
    return {found.begin(), found.end()};
}

bool strongly_orthogonal(const RootSystem& rs, const Root& a, const Root& b) {
    Root s(a.size()), d(a.size());
    int dot = 0;
    for (size_t i = 0; i < a.size(); ++i) {
        s[i] = a[i] + b[i];
        d[i] = a[i] - b[i];
        dot += a[i] * b[i];
    }
    return dot == 0 && !is_root(rs, s) && !is_root(rs, d);
}

WeylElement left_monoid_coset(const WeylElement& w, int k, const ParabolicSubset& S) {
    WeylElement u = min_coset_rep(w, S);
    WeylElement v = min_coset_rep(compose(simple_reflection(w.rs, k), u), S);
    return v.length() > u.length() ? v : u;
}

WeylElement right_monoid_coset_strong(const WeylElement& w, int k, const ParabolicSubset& S) {
    Root a = simple_roots(w.rs).at(k - 1);
    for (const auto& r : subsystem_roots(w.rs, S))
        if (!strongly_orthogonal(w.rs, a, r))
            throw AtlasError("root not strongly orthogonal to the parabolic subset");
    WeylElement u = min_coset_rep(w, S);
    WeylElement v = min_coset_rep(compose(w, simple_reflection(w.rs, k)), S);
    return v.length() > u.length() ? v : u;
}

}  // namespace orbit_atlas
