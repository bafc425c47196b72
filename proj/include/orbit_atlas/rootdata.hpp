#pragma once

#include <compare>
#include <stdexcept>
#include <string>
#include <vector>

namespace orbit_atlas {

struct AtlasError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

enum class Family { GL, SOodd, SOeven };

// One member of the pair (G_n, G_{n-1}); n is the matrix size.
struct GroupDatum {
    Family family = Family::GL;
    int n = 1;

    int l() const { return n / 2; }
    // floor(n/2) for SO, n for GL
    int rank() const { return family == Family::GL ? n : n / 2; }
    int num_simple() const;
    GroupDatum theta_fixed() const;  // G_{n-1}
    std::string name() const;

    auto operator<=>(const GroupDatum&) const = default;
};

GroupDatum make_group(Family f, int n);
GroupDatum parse_group(const std::string& s);
inline GroupDatum gl(int n) { return make_group(Family::GL, n); }
inline GroupDatum so(int n) { return make_group(n % 2 ? Family::SOodd : Family::SOeven, n); }

// Vector of epsilon-coordinates.
using Root = std::vector<int>;

enum class RootKind { A, B, D };

// Root system on `dim` epsilon coordinates. A on dim coords has dim-1 simple
// roots; D_1 and B_0 carry no roots at all.
struct RootSystem {
    RootKind kind = RootKind::A;
    int dim = 0;

    int num_simple() const;
    auto operator<=>(const RootSystem&) const = default;
};

RootSystem root_system(const GroupDatum& g);
RootSystem kside_root_system(const GroupDatum& g);

std::vector<Root> simple_roots(const RootSystem& rs);
std::vector<Root> simple_roots(const GroupDatum& g);
const std::vector<Root>& positive_roots(const RootSystem& rs);
bool is_root(const RootSystem& rs, const Root& r);
bool is_positive(const Root& r);
int simple_index(const RootSystem& rs, const Root& r);  // 1-based, 0 if not simple
std::string root_to_string(const Root& r);

using ParabolicSubset = std::vector<int>;

// Images of 1..dim; signed for B/D.
struct WeylElement {
    RootSystem rs;
    std::vector<int> img;

    int length() const;
    bool operator==(const WeylElement& o) const { return rs == o.rs && img == o.img; }
    bool operator<(const WeylElement& o) const;  // length, then lex on images
    std::string to_string() const;               // "[1,-2,3]"
};

WeylElement identity(const RootSystem& rs);
WeylElement simple_reflection(const RootSystem& rs, int k);
WeylElement make_weyl(const RootSystem& rs, std::vector<int> img);
WeylElement compose(const WeylElement& a, const WeylElement& b);  // a after b
WeylElement inverse(const WeylElement& w);
Root act(const WeylElement& w, const Root& r);
bool is_valid(const WeylElement& w);

bool right_descent(const WeylElement& w, int k);
WeylElement min_coset_rep(WeylElement w, const ParabolicSubset& S);
std::vector<WeylElement> coset_reps(const RootSystem& rs, const ParabolicSubset& S);
std::vector<Root> subsystem_roots(const RootSystem& rs, const ParabolicSubset& S);  // positive
bool strongly_orthogonal(const RootSystem& rs, const Root& a, const Root& b);
WeylElement left_monoid_coset(const WeylElement& w, int k, const ParabolicSubset& S);
WeylElement right_monoid_coset_strong(const WeylElement& w, int k, const ParabolicSubset& S);

}  // namespace orbit_atlas
