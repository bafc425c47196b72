#pragma once

#include "orbit_atlas/flags.hpp"
#include "orbit_atlas/korbits.hpp"

#include <memory>
#include <string>
#include <vector>

namespace orbit_atlas {

// B_{n-1}-orbit on the flag variety of G_n: a K-orbit, a minimal coset
// representative w in W_K, and (for non-closed K-orbits) the fibre orbit
// stored in op-form as an orbit of the next smaller pair.
struct BOrbit {
    GroupDatum group;
    KOrbitTag korbit;
    WeylElement w;
    std::shared_ptr<const BOrbit> fibre;

    bool operator==(const BOrbit& o) const;
    std::string key() const;
};

ParabolicSubset kside_parabolic_subset(const GroupDatum& g, const KOrbitTag& q);
GroupDatum fibre_group(const GroupDatum& g, const KOrbitTag& q);
int kside_rank(const GroupDatum& g);

// Maps a root of K lying in the block onto the fibre group's coordinates and
// returns its simple-root index there (0 if it is not simple).
int fibre_root_index(const GroupDatum& g, const KOrbitTag& q, const Root& kroot);
// Position of right simple root k inside the block group's simple roots.
int block_root_index(const GroupDatum& g, const KOrbitTag& q, int k);

const std::vector<BOrbit>& enumerate_borbits(const GroupDatum& g);
void check_borbit(const BOrbit& q);
int borbit_dim(const BOrbit& q);

BOrbit to_op(const BOrbit& q);
BOrbit from_op(const GroupDatum& g, const BOrbit& op);

// Group element g with borbit_rep(Q) = g * standard flag.
ExactMatrix borbit_element(const BOrbit& q);
SymbolicFlag borbit_rep(const BOrbit& q);

std::string canonical_key(const BOrbit& q);
BOrbit parse_key(const std::string& key);

}  // namespace orbit_atlas
