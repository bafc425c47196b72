#include <doctest.h>

#include "orbit_atlas/korbits.hpp"

#include <set>

using namespace orbit_atlas;

namespace {

KOrbitTag closed(int i) { return {KOrbitTag::Closed, i, 0}; }
KOrbitTag pair(int i, int j) { return {KOrbitTag::Pair, i, j}; }
KOrbitTag nonclosed(int i) { return {KOrbitTag::NonClosed, i, 0}; }
const KOrbitTag plus{KOrbitTag::Plus, 0, 0};
const KOrbitTag minus{KOrbitTag::Minus, 0, 0};

std::vector<GroupDatum> catalog_groups() {
    std::vector<GroupDatum> gs;
    for (int n = 1; n <= 8; ++n) gs.push_back(gl(n));
    for (int n = 2; n <= 14; ++n) gs.push_back(so(n));
    return gs;
}

}  // namespace

TEST_CASE("K-orbit counts") {
    CHECK(enumerate_korbits(gl(4)).size() == 10);
    CHECK(enumerate_korbits(so(9)).size() == 6);
    CHECK(enumerate_korbits(so(8)).size() == 4);
    for (int n = 1; n <= 8; ++n) CHECK(enumerate_korbits(gl(n)).size() == size_t(n * (n + 1) / 2));
    for (int l = 1; l <= 6; ++l) {
        CHECK(enumerate_korbits(so(2 * l + 1)).size() == size_t(l + 2));
        CHECK(enumerate_korbits(so(2 * l)).size() == size_t(l));
    }
}

TEST_CASE("tags print and parse") {
    CHECK(pair(1, 4).to_string() == "Q_{1,4}");
    CHECK(closed(3).to_string() == "Q_3");
    CHECK(plus.to_string() == "Q_+");
    CHECK(minus.to_string() == "Q_-");
    CHECK(nonclosed(2).to_string() == "Q_2");
    for (const auto& g : catalog_groups())
        for (const auto& t : enumerate_korbits(g)) CHECK(parse_korbit(g, t.to_string()) == t);
    CHECK_THROWS_AS(parse_korbit(gl(4), "Q_{3,2}"), AtlasError);
    CHECK_THROWS_AS(parse_korbit(gl(4), "Q_5"), AtlasError);
    CHECK_THROWS_AS(parse_korbit(so(8), "Q_-"), AtlasError);
    CHECK_THROWS_AS(parse_korbit(so(8), "Q_4"), AtlasError);
}

TEST_CASE("codimensions") {
    CHECK(korbit_codim(gl(4), pair(1, 4)) == 0);
    CHECK(korbit_codim(so(11), nonclosed(3)) == 3);
    CHECK(korbit_codim(so(10), nonclosed(1)) == 0);
    for (const auto& g : catalog_groups()) {
        int open = 0, closed_count = 0;
        for (const auto& t : enumerate_korbits(g)) {
            int c = korbit_codim(g, t);
            open += c == 0;
            bool smallest = (g.family == Family::GL && g.n == 1) || (g.family == Family::SOeven && g.n == 2);
            if (t.is_closed()) {
                ++closed_count;
                // closed orbits are K/B_K
                if (!smallest) CHECK(c == dim_flag_variety(g) - dim_flag_variety(g.theta_fixed()));
            }
            if (g.family == Family::GL && t.kind == KOrbitTag::Pair) CHECK(c == g.n - 1 - (t.j - t.i));
            if (g.family == Family::SOodd && t.kind == KOrbitTag::NonClosed) CHECK(c == t.i);
            if (g.family == Family::SOeven && t.kind == KOrbitTag::NonClosed) CHECK(c == t.i - 1);
        }
        CHECK(open == 1);
        CHECK(korbit_codim(g, open_korbit(g)) == 0);
        int want_closed = g.family == Family::GL ? g.n : g.family == Family::SOodd ? 2 : 1;
        CHECK(closed_count == want_closed);
    }
}

TEST_CASE("root types") {
    CHECK(korbit_root_type(gl(5), pair(2, 3), 2) == RootType::Real);
    CHECK(korbit_root_type(gl(5), pair(2, 3), 4) == RootType::Compact);
    CHECK(korbit_root_type(so(9), plus, 4) == RootType::Noncompact);
    CHECK(to_string(RootType::ComplexStable) == "complex-stable");
}

TEST_CASE("monoid on K-orbits") {
    CHECK(korbit_monoid(gl(4), closed(2), 2) == pair(2, 3));
    CHECK(korbit_monoid(so(9), plus, 4) == nonclosed(3));
    for (int k = 1; k <= 3; ++k) CHECK(korbit_monoid(gl(4), pair(1, 4), k) == pair(1, 4));
    for (const auto& g : catalog_groups())
        for (const auto& t : enumerate_korbits(g))
            for (int k = 1; k <= g.num_simple(); ++k) {
                RootType rt = korbit_root_type(g, t, k);
                KOrbitTag u = korbit_monoid(g, t, k);
                bool moves = u != t;
                CHECK(moves == (rt == RootType::ComplexStable || rt == RootType::Noncompact));
                if (moves) {
                    CHECK(korbit_codim(g, u) == korbit_codim(g, t) - 1);
                    CHECK(korbit_monoid(g, u, k) == u);
                }
            }
}

TEST_CASE("special parabolics") {
    auto sp = special_parabolic(gl(6), pair(2, 4));
    CHECK(sp.S == ParabolicSubset{2, 3});
    CHECK(sp.twist == cycle_w(6, 2));
    REQUIRE(sp.levi);
    CHECK(*sp.levi == gl(3));

    sp = special_parabolic(so(11), nonclosed(2));
    CHECK(sp.S == ParabolicSubset{3, 4, 5});
    CHECK(sp.twist == identity(root_system(so(11))));
    REQUIRE(sp.levi);
    CHECK(*sp.levi == so(7));

    sp = special_parabolic(gl(4), closed(3));
    CHECK(sp.S.empty());
    CHECK(sp.twist == cycle_w(4, 3));
    CHECK_FALSE(sp.levi);

    // S is exactly the set of non-compact/real roots plus compact roots inside the block
    for (const auto& g : catalog_groups())
        for (const auto& t : enumerate_korbits(g)) {
            auto s = special_parabolic(g, t);
            CHECK(s.levi.has_value() == !t.is_closed());
            if (s.levi) CHECK(s.block_basis.size() == size_t(s.levi->n));
        }
}

TEST_CASE("weak order on K-orbits") {
    std::set<std::pair<std::string, std::string>> got;
    for (const auto& e : korbit_weak_order(gl(4))) got.insert({e.from.to_string(), e.to.to_string()});
    std::set<std::pair<std::string, std::string>> want{
        {"Q_1", "Q_{1,2}"},     {"Q_2", "Q_{1,2}"},     {"Q_2", "Q_{2,3}"},     {"Q_3", "Q_{2,3}"},
        {"Q_3", "Q_{3,4}"},     {"Q_4", "Q_{3,4}"},     {"Q_{1,2}", "Q_{1,3}"}, {"Q_{2,3}", "Q_{1,3}"},
        {"Q_{2,3}", "Q_{2,4}"}, {"Q_{3,4}", "Q_{2,4}"}, {"Q_{1,3}", "Q_{1,4}"}, {"Q_{2,4}", "Q_{1,4}"}};
    CHECK(got == want);

    got.clear();
    for (const auto& e : korbit_weak_order(gl(2))) got.insert({e.from.to_string(), e.to.to_string()});
    CHECK(got == std::set<std::pair<std::string, std::string>>{{"Q_1", "Q_{1,2}"}, {"Q_2", "Q_{1,2}"}});

    got.clear();
    for (const auto& e : korbit_weak_order(so(5))) got.insert({e.from.to_string(), e.to.to_string()});
    CHECK(got == std::set<std::pair<std::string, std::string>>{{"Q_+", "Q_1"}, {"Q_-", "Q_1"}, {"Q_1", "Q_0"}});
}
