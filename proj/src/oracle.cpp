#include "orbit_atlas/oracle.hpp"

#include "orbit_atlas/flags.hpp"

#include <algorithm>
#include <cstdlib>
#include <deque>
#include <map>
#include <memory>
#include <mutex>
#include <numeric>
#include <unordered_set>

namespace orbit_atlas {

namespace {

constexpr long long kDefaultBudget = 60'000'000;

void require_prime(int q) {
    if (q < 2 || q > 251) throw AtlasError("q must be a prime below 256");
    for (int d = 2; d * d <= q; ++d)
        if (q % d == 0) throw AtlasError(std::to_string(q) + " is not prime");
}

void require_field(const GroupDatum& g, int q) {
    require_prime(q);
    if (g.family != Family::GL && q == 2) throw AtlasError("orthogonal groups need odd q");
}

int inv_mod(int a, int q) {
    int r = 1;
    for (int e = q - 2, b = a; e > 0; e >>= 1, b = b * b % q)
        if (e & 1) r = r * b % q;
    return r;
}

int primitive_root(int q) {
    for (int g = 1; g < q; ++g) {
        int x = 1, ord = 0;
        do {
            x = x * g % q;
            ++ord;
        } while (x != 1);
        if (ord == q - 1) return g;
    }
    return 1;
}

long long ipow(long long b, int e) {
    long long r = 1;
    while (e-- > 0) r *= b;
    return r;
}

int reduce_scalar(const ExactScalar& x, int q) {
    if (!x.is_rational()) throw AtlasError("entry " + x.to_string() + " does not reduce to F_q");
    const mpq_class& v = x.coeff(0);
    mpz_class num = v.get_num() % q, den = v.get_den() % q;
    if (den == 0) throw AtlasError("denominator divisible by q");
    long long a = (num.get_si() + q) % q, b = (den.get_si() + q) % q;
    return static_cast<int>(a * inv_mod(static_cast<int>(b), q) % q);
}

// n x f column-major flag matrix put into canonical column-echelon form.
FqFlag canonicalize(std::vector<int> cols, int n, int f, int q) {
    std::vector<int> pivot(f, -1);
    for (int k = 0; k < f; ++k) {
        int* col = &cols[static_cast<size_t>(k) * n];
        for (int j = 0; j < k; ++j) {
            int c = col[pivot[j]];
            if (!c) continue;
            const int* pj = &cols[static_cast<size_t>(j) * n];
            for (int r = 0; r < n; ++r) col[r] = ((col[r] - c * pj[r]) % q + q) % q;
        }
        int p = 0;
        while (p < n && col[p] == 0) ++p;
        if (p == n) throw AtlasError("degenerate flag");
        pivot[k] = p;
        int s = inv_mod(col[p], q);
        for (int r = 0; r < n; ++r) col[r] = col[r] * s % q;
    }
    return FqFlag(cols.begin(), cols.end());
}

FqFlag act(const FqMatrix& m, const FqFlag& flag, int f) {
    int n = m.n, q = m.q;
    std::vector<int> cols(static_cast<size_t>(n) * f, 0);
    for (int k = 0; k < f; ++k)
        for (int r = 0; r < n; ++r) {
            int s = 0;
            for (int c = 0; c < n; ++c) s += m(r, c) * static_cast<unsigned char>(flag[static_cast<size_t>(k) * n + c]);
            cols[static_cast<size_t>(k) * n + r] = s % q;
        }
    return canonicalize(std::move(cols), n, f, q);
}

struct UnionFind {
    std::vector<int> parent;
    explicit UnionFind(int n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
    int find(int x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    }
    void unite(int a, int b) {
        a = find(a);
        b = find(b);
        if (a != b) parent[std::max(a, b)] = std::min(a, b);
    }
};

void check_budget(long long work, const char* what) {
    if (work > oracle_budget())
        throw AtlasError(std::string("oracle budget exceeded while building ") + what + " (" + std::to_string(work) +
                         " operations; raise ORBIT_ATLAS_BUDGET)");
}

}  // namespace

FqMatrix FqMatrix::identity(int n, int q) {
    FqMatrix m{n, q, std::vector<int>(static_cast<size_t>(n) * n, 0)};
    for (int i = 0; i < n; ++i) m(i, i) = 1;
    return m;
}

FqMatrix FqMatrix::operator*(const FqMatrix& o) const {
    FqMatrix m{n, q, std::vector<int>(a.size(), 0)};
    for (int i = 0; i < n; ++i)
        for (int k = 0; k < n; ++k) {
            int x = (*this)(i, k);
            if (!x) continue;
            for (int j = 0; j < n; ++j) m(i, j) = (m(i, j) + x * o(k, j)) % q;
        }
    return m;
}

long long oracle_budget() {
    if (const char* env = std::getenv("ORBIT_ATLAS_BUDGET")) {
        char* end = nullptr;
        long long v = std::strtoll(env, &end, 10);
        if (end && *end == '\0' && v > 0) return v;
    }
    return kDefaultBudget;
}

long long expected_flag_count(const GroupDatum& g, int q) {
    long long c = 1;
    int l = g.l();
    switch (g.family) {
        case Family::GL:
            for (int k = 1; k <= g.n; ++k) c *= (ipow(q, k) - 1) / (q - 1);
            break;
        case Family::SOodd:
            for (int k = 1; k <= l; ++k) c *= (ipow(q, 2 * k) - 1) / (q - 1);
            break;
        case Family::SOeven:
            for (int k = 1; k < l; ++k) c *= (ipow(q, 2 * k) - 1) / (q - 1);
            c *= (ipow(q, l) - 1) / (q - 1);
            break;
    }
    return c;
}

long long expected_borel_order(const GroupDatum& g, int q) {
    RootSystem k = kside_root_system(g);
    int torus = g.family == Family::GL ? g.n - 1 : k.dim;
    int pos = k.num_simple() ? static_cast<int>(positive_roots(k).size()) : 0;
    return ipow(q - 1, torus) * ipow(q, pos);
}

FqMatrix reduce_mod(const ExactMatrix& m, int q) {
    if (m.rows() != m.cols()) throw AtlasError("only square matrices reduce to FqMatrix");
    FqMatrix out{m.rows(), q, std::vector<int>(static_cast<size_t>(m.rows()) * m.rows())};
    for (int i = 0; i < m.rows(); ++i)
        for (int j = 0; j < m.cols(); ++j) out(i, j) = reduce_scalar(m(i, j), q);
    return out;
}

FqFlag canonical_flag(const GroupDatum& g, const FqMatrix& element) {
    int n = g.n, f = flag_length(g);
    std::vector<int> cols(static_cast<size_t>(n) * f);
    for (int k = 0; k < f; ++k)
        for (int r = 0; r < n; ++r) cols[static_cast<size_t>(k) * n + r] = element(r, k);
    return canonicalize(std::move(cols), n, f, element.q);
}

std::string flag_text(const GroupDatum& g, int, const FqFlag& flag) {
    int n = g.n, f = flag_length(g);
    std::string s;
    for (int k = 0; k < f; ++k) {
        s += k ? " ⊂ (" : "(";
        for (int r = 0; r < n; ++r)
            s += (r ? " " : "") + std::to_string(static_cast<unsigned char>(flag[static_cast<size_t>(k) * n + r]));
        s += ")";
    }
    return s;
}

bool flag_is_isotropic(const GroupDatum& g, int q, const FqFlag& flag) {
    int n = g.n, f = flag_length(g);
    auto at = [&](int k, int r) { return static_cast<unsigned char>(flag[static_cast<size_t>(k) * n + r]); };
    for (int a = 0; a < f; ++a)
        for (int b = a; b < f; ++b) {
            int s = 0;
            for (int r = 0; r < n; ++r) s += at(a, r) * at(b, n - 1 - r);
            if (s % q) return false;
        }
    return true;
}

std::vector<FqMatrix> group_generators(const GroupDatum& g, int q) {
    require_field(g, q);
    std::vector<FqMatrix> out;
    for (const auto& r : positive_roots(root_system(g))) {
        Root neg = r;
        for (int& x : neg) x = -x;
        out.push_back(reduce_mod(root_element(g, r), q));
        out.push_back(reduce_mod(root_element(g, neg), q));
    }
    return out;
}

std::vector<FqMatrix> borel_generators(const GroupDatum& g, int q) {
    require_field(g, q);
    std::vector<FqMatrix> out;
    if ((g.family == Family::GL && g.n == 1) || (g.family == Family::SOeven && g.n == 2)) return out;
    GroupDatum k = g.theta_fixed();
    int t = primitive_root(q);
    int torus = k.family == Family::GL ? k.n : k.l();
    if (t != 1)
        for (int i = 1; i <= torus; ++i) out.push_back(reduce_mod(embed_kside(g, torus_element(k, i, t)), q));
    RootSystem krs = root_system(k);
    if (krs.num_simple())
        for (const auto& r : positive_roots(krs)) out.push_back(reduce_mod(embed_kside(g, root_element(k, r)), q));
    return out;
}

std::vector<FqFlag> enumerate_flags(const GroupDatum& g, int q) {
    auto gens = group_generators(g, q);
    check_budget(expected_flag_count(g, q) * static_cast<long long>(std::max<size_t>(gens.size(), 1)), "the flag list");
    int f = flag_length(g);
    FqFlag start = canonical_flag(g, FqMatrix::identity(g.n, q));
    std::vector<FqFlag> out{start};
    std::unordered_set<FqFlag> seen{start};
    for (size_t head = 0; head < out.size(); ++head)
        for (const auto& m : gens) {
            FqFlag next = act(m, out[head], f);
            if (seen.insert(next).second) out.push_back(next);
        }
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<FqMatrix> borel_subgroup(const GroupDatum& g, int q) {
    auto gens = borel_generators(g, q);
    check_budget(expected_borel_order(g, q) * static_cast<long long>(std::max<size_t>(gens.size(), 1)), "the Borel subgroup");
    FqMatrix id = FqMatrix::identity(g.n, q);
    std::vector<FqMatrix> out{id};
    std::unordered_set<std::string> seen{std::string(id.a.begin(), id.a.end())};
    for (size_t head = 0; head < out.size(); ++head)
        for (const auto& m : gens) {
            FqMatrix next = out[head] * m;
            if (seen.insert(std::string(next.a.begin(), next.a.end())).second) out.push_back(next);
        }
    return out;
}

int OrbitPartition::class_of_flag(const FqFlag& f) const {
    auto it = index.find(f);
    if (it == index.end()) throw AtlasError("flag is not on the enumerated flag variety");
    return class_of[it->second];
}

namespace {

OrbitPartition build_partition(const GroupDatum& g, int q) {
    OrbitPartition p;
    p.group = g;
    p.q = q;
    p.flags = enumerate_flags(g, q);
    auto gens = borel_generators(g, q);
    check_budget(static_cast<long long>(p.flags.size()) * static_cast<long long>(gens.size()), "the orbit partition");
    int nf = static_cast<int>(p.flags.size()), f = flag_length(g);
    for (int i = 0; i < nf; ++i) p.index.emplace(p.flags[i], i);
    UnionFind uf(nf);
    for (int i = 0; i < nf; ++i)
        for (const auto& m : gens) uf.unite(i, p.index.at(act(m, p.flags[i], f)));
    std::map<int, int> root_class;
    p.class_of.resize(nf);
    for (int i = 0; i < nf; ++i) {
        int r = uf.find(i);
        auto [it, fresh] = root_class.emplace(r, static_cast<int>(p.class_size.size()));
        if (fresh) {
            p.class_size.push_back(0);
            p.class_rep.push_back(i);
        }
        p.class_of[i] = it->second;
        ++p.class_size[it->second];
    }
    return p;
}

}  // namespace

const OrbitPartition& orbit_partition(const GroupDatum& g, int q) {
    static std::mutex mu;
    static std::map<std::pair<GroupDatum, int>, std::unique_ptr<const OrbitPartition>> cache;
    std::lock_guard lock(mu);
    auto key = std::make_pair(g, q);
    auto it = cache.find(key);
    if (it == cache.end()) it = cache.emplace(key, std::make_unique<const OrbitPartition>(build_partition(g, q))).first;
    return *it->second;
}

int class_of_element(const OrbitPartition& p, const ExactMatrix& element) {
    return p.class_of_flag(canonical_flag(p.group, reduce_mod(element, p.q)));
}

std::optional<std::pair<int, int>> q_factorization(long long size, int q) {
    int a = 0, b = 0;
    while (size % q == 0) {
        size /= q;
        ++b;
    }
    if (q == 2) return size == 1 ? std::optional(std::make_pair(0, b)) : std::nullopt;
    while (size % (q - 1) == 0 && size > 1) {
        size /= q - 1;
        ++a;
    }
    if (size != 1) return std::nullopt;
    return std::make_pair(a, b);
}

std::string FibrePattern::signature() const {
    std::vector<int> c;
    for (auto [cls, k] : counts) c.push_back(k);
    std::sort(c.rbegin(), c.rend());
    std::string s;
    for (int x : c) s += (s.empty() ? "" : ",") + std::to_string(x);
    return s;
}

FibrePattern fibre_pattern(const OrbitPartition& p, const ExactMatrix& element, Side side, int k) {
    const GroupDatum& g = p.group;
    int q = p.q;
    GroupDatum h = g;
    if (side == Side::Left) {
        if ((g.family == Family::GL && g.n == 1) || (g.family == Family::SOeven && g.n == 2))
            throw AtlasError("the smaller group has no simple roots");
        h = g.theta_fixed();
    }
    if (k < 1 || k > h.num_simple()) throw AtlasError("simple root index out of range");
    Root neg = simple_roots(h).at(k - 1);
    for (int& x : neg) x = -x;
    std::vector<ExactMatrix> reps;
    for (int t = 0; t < q; ++t) reps.push_back(root_element(h, neg, t));
    reps.push_back(weyl_matrix(h, simple_reflection(root_system(h), k)));

    std::map<int, int> counts;
    for (const auto& r : reps) {
        ExactMatrix m = side == Side::Right ? element * r : embed_kside(g, r) * element;
        ++counts[class_of_element(p, m)];
    }
    FibrePattern out;
    out.counts.assign(counts.begin(), counts.end());
    out.own_class = class_of_element(p, element);
    out.open_class = out.counts.front().first;
    for (auto [cls, c] : out.counts)
        if (p.class_size[cls] > p.class_size[out.open_class]) out.open_class = cls;
    int own = counts[out.own_class], open = counts[out.open_class];
    size_t n = out.counts.size();
    if (n == 1) {
        if (own == q + 1) out.type = RootType::Compact;
    } else if (out.own_class == out.open_class) {
        if (n == 2 && own == q) out.type = RootType::ComplexUnstable;
        else if (own == q - 1) out.type = RootType::Real;
    } else {
        if (n == 2 && own == 1 && open == q) out.type = RootType::ComplexStable;
        else if (open == q - 1) out.type = RootType::Noncompact;
    }
    return out;
}

}  // namespace orbit_atlas
