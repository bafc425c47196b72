#include <doctest.h>

#include "orbit_atlas/borbits.hpp"
#include "orbit_atlas/oracle.hpp"

#include <algorithm>
#include <cstdlib>

using namespace orbit_atlas;

TEST_CASE("flag counts") {
    CHECK(enumerate_flags(gl(2), 3).size() == 4);
    CHECK(enumerate_flags(gl(3), 2).size() == 21);
    CHECK(enumerate_flags(gl(4), 2).size() == 315);
    for (int n = 3; n <= 7; ++n) CHECK(enumerate_flags(so(n), 3).size() == size_t(expected_flag_count(so(n), 3)));
    // isotropic flags of SO(5) over F_3: (q^4-1)/(q-1) lines times q+1 completions
    CHECK(expected_flag_count(so(5), 3) == 40 * 4);
    for (const auto& f : enumerate_flags(so(5), 3)) CHECK(flag_is_isotropic(so(5), 3, f));
}

TEST_CASE("Borel subgroups") {
    CHECK(borel_subgroup(gl(3), 2).size() == 2);  // trivial torus, one root group
    CHECK(borel_subgroup(gl(3), 3).size() == 2 * 2 * 3);
    CHECK(borel_subgroup(gl(4), 2).size() == 8);
    CHECK(borel_subgroup(so(5), 3).size() == size_t(expected_borel_order(so(5), 3)));
    for (const auto& m : borel_subgroup(so(5), 3)) {
        // preserves the form
        FqMatrix j(FqMatrix::identity(5, 3));
        for (int r = 0; r < 5; ++r)
            for (int c = 0; c < 5; ++c) j(r, c) = (r + c == 4);
        FqMatrix t = m;
        for (int r = 0; r < 5; ++r)
            for (int c = 0; c < 5; ++c) t(r, c) = m(c, r);
        CHECK(t * j * m == j);
    }
}

TEST_CASE("orbit partitions") {
    const auto& p = orbit_partition(gl(2), 3);
    CHECK(p.count() == 3);
    std::vector<long long> sizes = p.class_size;
    std::sort(sizes.begin(), sizes.end());
    CHECK(sizes == std::vector<long long>{1, 1, 2});
    for (int q : {2, 3, 5}) CHECK(orbit_partition(gl(3), q).count() == 13);
    CHECK(orbit_partition(gl(4), 2).count() == 73);
    CHECK(orbit_partition(so(4), 3).count() == 5);
    CHECK(orbit_partition(so(5), 3).count() == 17);
    for (int q : {2, 3}) {
        const auto& pp = orbit_partition(gl(3), q);
        long long total = 0;
        for (long long s : pp.class_size) total += s;
        CHECK(total == expected_flag_count(gl(3), q));
    }
}

TEST_CASE("reduction and factorization") {
    ExactMatrix m = ExactMatrix::identity(2);
    m(0, 1) = ExactScalar::rational(1, 2);
    FqMatrix r = reduce_mod(m, 3);
    CHECK(r(0, 1) == 2);
    m(0, 1) = ExactScalar::i();
    CHECK_THROWS_AS(reduce_mod(m, 3), AtlasError);
    CHECK(q_factorization(1, 3) == std::pair<int, int>{0, 0});
    CHECK(q_factorization(2 * 9, 3) == std::pair<int, int>{1, 2});
    CHECK_FALSE(q_factorization(5, 3));
}

TEST_CASE("fibre patterns") {
    const auto& p3 = orbit_partition(gl(3), 3);
    for (const auto& b : enumerate_borbits(gl(3))) {
        if (b.korbit != KOrbitTag{KOrbitTag::Closed, 1, 0} || b.w.length() != 0) continue;
        FibrePattern f = fibre_pattern(p3, borbit_element(b), Side::Left, 1);
        CHECK(f.signature() == "3,1");  // point plus affine line
        CHECK(f.type == RootType::ComplexStable);
    }
    const auto& p5 = orbit_partition(gl(3), 5);
    for (const auto& b : enumerate_borbits(gl(3))) {
        if (b.korbit != KOrbitTag{KOrbitTag::Pair, 1, 2} || b.w.length() != 0) continue;
        FibrePattern f = fibre_pattern(p5, borbit_element(b), Side::Right, 1);
        CHECK(f.signature() == "4,1,1");
        CHECK(f.type == RootType::Real);
    }
}

TEST_CASE("bad inputs") {
    CHECK_THROWS_AS(orbit_partition(gl(2), 4), AtlasError);
    CHECK_THROWS_AS(orbit_partition(so(5), 2), AtlasError);
    setenv("ORBIT_ATLAS_BUDGET", "100", 1);
    CHECK(oracle_budget() == 100);
    CHECK_THROWS_AS(orbit_partition(gl(4), 3), AtlasError);
    unsetenv("ORBIT_ATLAS_BUDGET");
    CHECK(oracle_budget() == 60000000);
}
