#pragma once

#include "orbit_atlas/rootdata.hpp"

#include <optional>
#include <string>
#include <vector>

namespace orbit_atlas {

struct KOrbitTag {
    enum Kind { Closed, Pair, Plus, Minus, NonClosed };
    Kind kind = Closed;
    int i = 0;
    int j = 0;

    auto operator<=>(const KOrbitTag&) const = default;
    bool is_closed() const { return kind == Closed || kind == Plus || kind == Minus; }
    std::string to_string() const;
};

KOrbitTag parse_korbit(const GroupDatum& g, const std::string& s);
void check_korbit(const GroupDatum& g, const KOrbitTag& q);

enum class RootType { Compact, Real, Noncompact, ComplexStable, ComplexUnstable };
std::string to_string(RootType t);

// Left roots are simple roots of the smaller group, right roots those of G.
enum class Side { Left, Right };

struct SpecialParabolic {
    ParabolicSubset S;
    WeylElement twist;
    std::optional<GroupDatum> levi;  // block group; absent for closed orbits
    std::vector<int> block_basis;    // signed labels of the block coordinates, block order
};

std::vector<KOrbitTag> enumerate_korbits(const GroupDatum& g);
KOrbitTag open_korbit(const GroupDatum& g);
int dim_flag_variety(const GroupDatum& g);
int korbit_codim(const GroupDatum& g, const KOrbitTag& q);
RootType korbit_root_type(const GroupDatum& g, const KOrbitTag& q, int k);
KOrbitTag korbit_monoid(const GroupDatum& g, const KOrbitTag& q, int k);
SpecialParabolic special_parabolic(const GroupDatum& g, const KOrbitTag& q);

struct KOrbitEdge {
    KOrbitTag from, to;
    int root;
};
std::vector<KOrbitEdge> korbit_weak_order(const GroupDatum& g);

// w_i: i -> n, k -> k-1 for k > i, fixed below i.
WeylElement cycle_w(int n, int i);

}  // namespace orbit_atlas
