#include <doctest.h>

#include "orbit_atlas/korbits.hpp"

#include <algorithm>
#include <map>
#include <queue>
#include <set>

using namespace orbit_atlas;

namespace {

// Every signed permutation of the right kind, built without the library.
std::vector<std::vector<int>> brute_group(const RootSystem& rs) {
    std::vector<int> p(rs.dim);
    for (int i = 0; i < rs.dim; ++i) p[i] = i + 1;
    std::vector<std::vector<int>> out;
    do {
        int masks = rs.kind == RootKind::A ? 1 : 1 << rs.dim;
        for (int m = 0; m < masks; ++m) {
            if (rs.kind == RootKind::D && __builtin_popcount(m) % 2) continue;
            auto v = p;
            for (int i = 0; i < rs.dim; ++i)
                if (m >> i & 1) v[i] = -v[i];
            out.push_back(v);
        }
    } while (std::next_permutation(p.begin(), p.end()));
    return out;
}

// Word length by breadth-first search over right multiplication by simple reflections.
std::map<std::vector<int>, int> bfs_lengths(const RootSystem& rs) {
    std::map<std::vector<int>, int> dist;
    std::queue<WeylElement> todo;
    todo.push(identity(rs));
    dist[identity(rs).img] = 0;
    while (!todo.empty()) {
        WeylElement w = todo.front();
        todo.pop();
        for (int k = 1; k <= rs.num_simple(); ++k) {
            WeylElement v = compose(w, simple_reflection(rs, k));
            if (dist.emplace(v.img, dist[w.img] + 1).second) todo.push(v);
        }
    }
    return dist;
}

std::vector<RootSystem> small_systems() {
    return {{RootKind::A, 2}, {RootKind::A, 3}, {RootKind::A, 4}, {RootKind::B, 1}, {RootKind::B, 2},
            {RootKind::B, 3}, {RootKind::D, 2}, {RootKind::D, 3}, {RootKind::D, 4}};
}

std::vector<ParabolicSubset> all_subsets(int r) {
    std::vector<ParabolicSubset> out;
    for (int m = 0; m < 1 << r; ++m) {
        ParabolicSubset s;
        for (int k = 1; k <= r; ++k)
            if (m >> (k - 1) & 1) s.push_back(k);
        out.push_back(s);
    }
    return out;
}

// Subgroup generated by the reflections in S, by closure.
std::set<std::vector<int>> parabolic_subgroup(const RootSystem& rs, const ParabolicSubset& S) {
    std::set<std::vector<int>> seen{identity(rs).img};
    std::queue<WeylElement> todo;
    todo.push(identity(rs));
    while (!todo.empty()) {
        WeylElement w = todo.front();
        todo.pop();
        for (int k : S) {
            WeylElement v = compose(w, simple_reflection(rs, k));
            if (seen.insert(v.img).second) todo.push(v);
        }
    }
    return seen;
}

}  // namespace

TEST_CASE("simple roots and groups") {
    CHECK(simple_roots(gl(3)) == std::vector<Root>{{1, -1, 0}, {0, 1, -1}});
    CHECK(simple_roots(so(5)) == std::vector<Root>{{1, -1}, {0, 1}});
    CHECK(simple_roots(so(6)) == std::vector<Root>{{1, -1, 0}, {0, 1, -1}, {0, 1, 1}});
    CHECK(simple_roots(so(4)) == std::vector<Root>{{1, -1}, {1, 1}});
    CHECK(gl(4).theta_fixed() == gl(3));
    CHECK(so(7).theta_fixed() == so(6));
    CHECK(parse_group("SO8") == so(8));
    CHECK(parse_group("GL4").name() == "GL4");
    CHECK_THROWS_AS(parse_group("SP4"), AtlasError);
    CHECK_THROWS_AS(parse_group("GL0"), AtlasError);
    CHECK(kside_root_system(gl(4)).kind == RootKind::A);
    CHECK(kside_root_system(so(7)).kind == RootKind::D);
    CHECK(kside_root_system(so(8)).kind == RootKind::B);
    CHECK(kside_root_system(so(8)).dim == 3);
}

TEST_CASE("positive root counts") {
    CHECK(positive_roots({RootKind::A, 4}).size() == 6);
    CHECK(positive_roots({RootKind::B, 3}).size() == 9);
    CHECK(positive_roots({RootKind::D, 4}).size() == 12);
    CHECK(positive_roots({RootKind::D, 1}).empty());
    CHECK(positive_roots({RootKind::B, 0}).empty());
}

TEST_CASE("actions on roots") {
    RootSystem a{RootKind::A, 3};
    WeylElement w1 = make_weyl(a, {3, 1, 2});  // 1 -> 3, k -> k-1
    CHECK(act(w1, {1, -1, 0}) == Root{-1, 0, 1});
    CHECK(cycle_w(3, 1) == w1);
    RootSystem d{RootKind::D, 2};
    CHECK(act(simple_reflection(d, 2), {1, 1}) == Root{-1, -1});
    CHECK(root_to_string({1, -1, 0}) == "e1-e2");
}

TEST_CASE("brute-force groups agree: order, length, validity") {
    for (const auto& rs : small_systems()) {
        auto all = brute_group(rs);
        auto bfs = bfs_lengths(rs);
        CHECK(bfs.size() == all.size());
        for (const auto& img : all) {
            WeylElement w = make_weyl(rs, img);
            REQUIRE(bfs.count(img));
            CHECK(w.length() == bfs[img]);
            CHECK(compose(w, inverse(w)) == identity(rs));
        }
    }
    RootSystem d{RootKind::D, 3};
    CHECK_FALSE(is_valid(WeylElement{d, {-1, 2, 3}}));
    CHECK_THROWS_AS(make_weyl(d, {-1, 2, 3}), AtlasError);
}

TEST_CASE("minimal coset representatives") {
    RootSystem a{RootKind::A, 3};
    WeylElement s1s2 = compose(simple_reflection(a, 1), simple_reflection(a, 2));
    CHECK(s1s2.to_string() == "[2,3,1]");
    CHECK(min_coset_rep(s1s2, {1}).to_string() == "[2,3,1]");
    CHECK(min_coset_rep(s1s2, {2}).to_string() == "[2,1,3]");

    CHECK(coset_reps(a, {}).size() == 6);
    CHECK(coset_reps({RootKind::A, 4}, {2}).size() == 12);
    CHECK(coset_reps({RootKind::D, 2}, {}).size() == 4);

    for (const auto& rs : small_systems()) {
        auto all = brute_group(rs);
        for (const auto& S : all_subsets(rs.num_simple())) {
            auto sub = parabolic_subgroup(rs, S);
            auto reps = coset_reps(rs, S);
            CHECK(reps.size() * sub.size() == all.size());
            CHECK(std::is_sorted(reps.begin(), reps.end()));
            for (const auto& w : reps) {
                // minimal in its coset w W_S
                for (const auto& u : sub) CHECK(compose(w, make_weyl(rs, u)).length() >= w.length());
                for (int k : S) CHECK_FALSE(right_descent(w, k));
            }
        }
    }
}

TEST_CASE("subsystems and strong orthogonality") {
    RootSystem b{RootKind::B, 2};
    CHECK(subsystem_roots(b, {1, 2}).size() == 4);
    CHECK(subsystem_roots(b, {2}) == std::vector<Root>{{0, 1}});
    CHECK(strongly_orthogonal(b, {1, -1}, {1, 1}));
    CHECK_FALSE(strongly_orthogonal(b, {1, 0}, {0, 1}));  // their sum is a root
    RootSystem a{RootKind::A, 4};
    CHECK(strongly_orthogonal(a, {1, -1, 0, 0}, {0, 0, 1, -1}));
    CHECK_FALSE(strongly_orthogonal(a, {1, -1, 0, 0}, {0, 1, -1, 0}));
}

TEST_CASE("monoid action on cosets") {
    RootSystem a{RootKind::A, 3};
    WeylElement e = identity(a), s1 = simple_reflection(a, 1), s2 = simple_reflection(a, 2);
    CHECK(left_monoid_coset(e, 1, {}) == s1);
    CHECK(left_monoid_coset(s1, 1, {}) == s1);
    CHECK(left_monoid_coset(s2, 1, {2}) == s1);
    RootSystem a4{RootKind::A, 4};
    CHECK(right_monoid_coset_strong(identity(a4), 1, {3}) == simple_reflection(a4, 1));
    CHECK(right_monoid_coset_strong(identity(a4), 1, {}) == simple_reflection(a4, 1));
    CHECK_THROWS_AS(right_monoid_coset_strong(identity(a4), 1, {2}), AtlasError);
}

TEST_CASE("left monoid coset: idempotent, length steps by 0 or 1") {
    for (const auto& rs : small_systems())
        for (const auto& S : all_subsets(rs.num_simple()))
            for (const auto& w : coset_reps(rs, S))
                for (int k = 1; k <= rs.num_simple(); ++k) {
                    WeylElement v = left_monoid_coset(w, k, S);
                    CHECK(v == min_coset_rep(v, S));
                    CHECK(left_monoid_coset(v, k, S) == v);
                    int d = v.length() - w.length();
                    CHECK((d == 0 || d == 1));
                }
}
