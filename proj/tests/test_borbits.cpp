#include <doctest.h>

#include "orbit_atlas/borbits.hpp"
#include "orbit_atlas/oracle.hpp"

#include <map>
#include <set>

using namespace orbit_atlas;

namespace {

KOrbitTag closed(int i) { return {KOrbitTag::Closed, i, 0}; }
KOrbitTag pair(int i, int j) { return {KOrbitTag::Pair, i, j}; }

std::vector<GroupDatum> groups() {
    std::vector<GroupDatum> gs{gl(1), gl(2), gl(3), gl(4)};
    for (int n = 2; n <= 7; ++n) gs.push_back(so(n));
    return gs;
}

}  // namespace

TEST_CASE("orbit counts") {
    std::map<std::string, size_t> want{{"GL1", 1},  {"GL2", 3},  {"GL3", 13}, {"GL4", 73},  {"GL5", 501},
                                       {"SO2", 1},  {"SO3", 3},  {"SO4", 5},  {"SO5", 17},  {"SO6", 37},
                                       {"SO7", 139}, {"SO8", 361}};
    for (const auto& [name, n] : want) CHECK(enumerate_borbits(parse_group(name)).size() == n);
}

TEST_CASE("parabolic subsets on the smaller group") {
    CHECK(kside_parabolic_subset(gl(5), pair(2, 4)) == ParabolicSubset{2});
    CHECK(kside_parabolic_subset(gl(5), closed(3)).empty());
    CHECK(kside_parabolic_subset(so(10), {KOrbitTag::NonClosed, 2, 0}) == ParabolicSubset{2, 3, 4});
    // one B-orbit per coset rep and fibre orbit
    for (const auto& g : groups())
        for (const auto& t : enumerate_korbits(g)) {
            size_t n = 0;
            for (const auto& b : enumerate_borbits(g)) n += b.korbit == t;
            size_t reps = coset_reps(kside_root_system(g), kside_parabolic_subset(g, t)).size();
            size_t fibres = t.is_closed() ? 1 : enumerate_borbits(fibre_group(g, t)).size();
            CHECK(n == reps * fibres);
        }
}

TEST_CASE("dimensions") {
    CHECK(borbit_dim(enumerate_borbits(gl(2)).back()) == 1);
    for (const auto& g : groups()) {
        int top = 0, at_top = 0, at_zero = 0;
        for (const auto& b : enumerate_borbits(g)) top = std::max(top, borbit_dim(b));
        for (const auto& b : enumerate_borbits(g)) {
            at_top += borbit_dim(b) == top;
            at_zero += borbit_dim(b) == 0;
            if (b.korbit.is_closed() && b.w == identity(b.w.rs)) CHECK(borbit_dim(b) == 0);
        }
        CHECK(top == dim_flag_variety(g));
        CHECK(at_top == 1);
        CHECK(at_zero == (g.family == Family::GL ? g.n : g.family == Family::SOodd ? 2 : 1));
    }
}

TEST_CASE("op correspondence") {
    // GL(3): the three orbits in the open K-orbit come from GL(2) with dims {0,0,1} -> {2,2,3}
    std::multiset<int> dims;
    for (const auto& b : enumerate_borbits(gl(3)))
        if (b.korbit == pair(1, 3)) {
            BOrbit op = to_op(b);
            CHECK(op.group == gl(2));
            CHECK(borbit_dim(b) == borbit_dim(op) + 2);
            CHECK(from_op(gl(3), op) == b);
            dims.insert(borbit_dim(b));
        }
    CHECK(dims == std::multiset<int>{2, 2, 3});
    size_t open_so5 = 0;
    for (const auto& b : enumerate_borbits(so(5))) open_so5 += b.korbit == open_korbit(so(5));
    CHECK(open_so5 == enumerate_borbits(so(4)).size());
    CHECK_THROWS_AS(to_op(enumerate_borbits(gl(3)).front()), AtlasError);
}

TEST_CASE("keys") {
    BOrbit q1 = enumerate_borbits(gl(2)).front();
    CHECK(q1.korbit == closed(1));
    CHECK(q1.key() == "GL2|Q_1|w=[1]|.");
    const auto& gl3 = enumerate_borbits(gl(3));
    const BOrbit* open = nullptr;
    for (const auto& b : gl3)
        if (borbit_dim(b) == 3) open = &b;
    REQUIRE(open);
    CHECK(open->key() == "GL3|Q_{1,3}|w=[1,2]|GL2|Q_{1,2}|w=[1]|GL1|Q_1|w=[]|.");
    for (const auto& g : groups())
        for (const auto& b : enumerate_borbits(g)) {
            CHECK(parse_key(b.key()) == b);
            CHECK(canonical_key(b) == b.key());
        }
    CHECK_THROWS_AS(parse_key("GL2|Q_1|w=[2]|."), AtlasError);
    CHECK_THROWS_AS(parse_key("GL2|Q_{1,2}|w=[1]|."), AtlasError);
    CHECK_THROWS_AS(parse_key("GL3|Q_1|w=[1,2]"), AtlasError);
}

TEST_CASE("representatives") {
    for (const auto& b : enumerate_borbits(gl(4)))
        if (b.korbit == closed(1) && b.w.length() == 0)
            CHECK(borbit_rep(b).to_string() == "(e4 ⊂ e1 ⊂ e2 ⊂ e3)");
    for (const auto& b : enumerate_borbits(gl(3)))
        if (borbit_dim(b) == 3) CHECK(borbit_rep(b).to_string() == "(e2+e3 ⊂ e1-e2 ⊂ e3)");
    for (const auto& g : groups())
        for (const auto& b : enumerate_borbits(g)) {
            CHECK_FALSE(borbit_rep(b).defect());
            if (g.family != Family::GL) CHECK(is_group_element(g, borbit_element(b)));
        }
}

TEST_CASE("representatives against the F_q oracle") {
    std::vector<GroupDatum> gs{gl(2), gl(3), gl(4)};
    for (int n = 3; n <= 7; ++n) gs.push_back(so(n));
    for (const auto& g : gs) {
        const int q = 3;
        const auto& p = orbit_partition(g, q);
        const auto& all = enumerate_borbits(g);
        REQUIRE(p.count() == static_cast<int>(all.size()));
        std::set<int> hit;
        for (const auto& b : all) {
            int cls = class_of_element(p, borbit_element(b));
            hit.insert(cls);
            auto f = q_factorization(p.class_size[cls], q);
            REQUIRE(f);
            CHECK(f->first + f->second == borbit_dim(b));
        }
        CHECK(hit.size() == all.size());
    }
}
