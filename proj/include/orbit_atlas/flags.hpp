#pragma once

#include "orbit_atlas/exact.hpp"
#include "orbit_atlas/korbits.hpp"

#include <optional>
#include <string>
#include <vector>

namespace orbit_atlas {

// Signed labels: GL uses 1..n; SO uses 1..l, 0 (odd n only), -l..-1.
// Positions are 0-based rows, e_{-k} sitting at n+1-k.
int label_position(const GroupDatum& g, int label);
int position_label(const GroupDatum& g, int pos);
std::string label_name(int label);  // "e3", "e0", "e-2"

int flag_length(const GroupDatum& g);  // n for GL, l for SO

struct SymbolicFlag {
    GroupDatum group;
    ExactMatrix basis;  // column k spans V_{k+1} / V_k

    std::string to_string() const;
    // nullopt when the flag is valid, otherwise what is wrong with it
    std::optional<std::string> defect() const;
};

ExactMatrix form_J(int n);
ExactScalar beta(const ExactMatrix& x, const ExactMatrix& y);  // column vectors
bool is_group_element(const GroupDatum& g, const ExactMatrix& m);

SymbolicFlag standard_flag(const GroupDatum& g);
SymbolicFlag flag_of(const GroupDatum& g, const ExactMatrix& element);  // element * standard flag
SymbolicFlag apply(const ExactMatrix& m, const SymbolicFlag& f);
bool same_flag(const SymbolicFlag& a, const SymbolicFlag& b);
// The first `dims` spans of `f` agree with the spans of the given partial-flag bases.
bool refines(const SymbolicFlag& f, const std::vector<ExactMatrix>& partial);

// Matrix of a Weyl element of g itself (signed permutation, e_0 sign chosen for det 1).
ExactMatrix weyl_matrix(const GroupDatum& g, const WeylElement& w);
// Vector fixed by the smaller group: e_n for GL, e_0 for odd SO, e_l - 1/2 e_{-l} for even SO.
ExactMatrix kside_fixed_vector(const GroupDatum& g);
ExactMatrix embed_kside(const GroupDatum& g, const ExactMatrix& h);
ExactMatrix embed_block(const GroupDatum& g, const std::vector<int>& block_labels, const ExactMatrix& h);
ExactMatrix sigma(const GroupDatum& g);
// Element carrying the standard flag to the flag whose stabilizer in the
// smaller group is exactly the embedded Borel of G_{n-2}.
ExactMatrix open_fibre_element(const GroupDatum& g);

// Root element exp(X_alpha) for a root of g, t scaling the root vector.
ExactMatrix root_element(const GroupDatum& g, const Root& r, long t = 1);
ExactMatrix torus_element(const GroupDatum& g, int k, long t);
ExactMatrix cayley(const GroupDatum& g, int k);

SymbolicFlag korbit_flag(const GroupDatum& g, const KOrbitTag& q);

}  // namespace orbit_atlas
