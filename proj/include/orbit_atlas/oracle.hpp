#pragma once

#include "orbit_atlas/exact.hpp"
#include "orbit_atlas/korbits.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

namespace orbit_atlas {

// Square matrix over F_q, row-major.
struct FqMatrix {
    int n = 0;
    int q = 2;
    std::vector<int> a;

    static FqMatrix identity(int n, int q);
    int& operator()(int i, int j) { return a[static_cast<size_t>(i) * n + j]; }
    int operator()(int i, int j) const { return a[static_cast<size_t>(i) * n + j]; }
    FqMatrix operator*(const FqMatrix& o) const;
    bool operator==(const FqMatrix& o) const { return n == o.n && a == o.a; }
};

// Canonical column-echelon bytes of a flag: equal strings iff equal flags.
using FqFlag = std::string;

long long oracle_budget();
long long expected_flag_count(const GroupDatum& g, int q);
long long expected_borel_order(const GroupDatum& g, int q);

FqMatrix reduce_mod(const ExactMatrix& m, int q);
FqFlag canonical_flag(const GroupDatum& g, const FqMatrix& element);
std::string flag_text(const GroupDatum& g, int q, const FqFlag& f);
bool flag_is_isotropic(const GroupDatum& g, int q, const FqFlag& f);

std::vector<FqMatrix> group_generators(const GroupDatum& g, int q);
std::vector<FqMatrix> borel_generators(const GroupDatum& g, int q);

std::vector<FqFlag> enumerate_flags(const GroupDatum& g, int q);
std::vector<FqMatrix> borel_subgroup(const GroupDatum& g, int q);

struct OrbitPartition {
    GroupDatum group;
    int q = 2;
    std::vector<FqFlag> flags;
    std::unordered_map<FqFlag, int> index;
    std::vector<int> class_of;          // per flag
    std::vector<long long> class_size;  // per class
    std::vector<int> class_rep;         // flag index of the first member

    int count() const { return static_cast<int>(class_size.size()); }
    int class_of_flag(const FqFlag& f) const;
};

const OrbitPartition& orbit_partition(const GroupDatum& g, int q);

// Class reached by element * standard flag.
int class_of_element(const OrbitPartition& p, const ExactMatrix& element);

// (a, b) with size = (q-1)^a q^b, if it factors that way.
std::optional<std::pair<int, int>> q_factorization(long long size, int q);

struct FibrePattern {
    std::vector<std::pair<int, int>> counts;  // (class, points of the fibre), sorted by class
    int own_class = -1;
    int open_class = -1;  // the class of largest size meeting the fibre
    std::optional<RootType> type;
    std::string signature() const;  // e.g. "1,q" relative to q
};

// Minimal-parabolic fibre through element * standard flag.
FibrePattern fibre_pattern(const OrbitPartition& p, const ExactMatrix& element, Side side, int k);

}  // namespace orbit_atlas
