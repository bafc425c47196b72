#pragma once

#include "orbit_atlas/borbits.hpp"

#include <optional>
#include <string>
#include <vector>

namespace orbit_atlas {

struct SimpleRootRef {
    Side side = Side::Left;
    int index = 1;

    std::string to_string() const;  // "L:2"
};

SimpleRootRef parse_root_ref(const std::string& s);

struct MonoidOutcome {
    enum Kind { Raised, Fixed, Deferred };
    Kind kind = Fixed;
    std::optional<BOrbit> result;   // Raised only
    std::optional<RootType> type;   // known type of the root for the input orbit
    std::string reason;

    std::string to_string() const;  // "raised: KEY", "fixed: real", "deferred: ..."
};

MonoidOutcome act(const BOrbit& q, const SimpleRootRef& a);
std::optional<RootType> classify_root(const BOrbit& q, const SimpleRootRef& a);

struct WeakOrderEdge {
    std::string from;
    std::string to;  // for deferred edges, the target K-orbit tag when known
    SimpleRootRef root;
    bool deferred = false;
};

struct WeakOrderGraph {
    GroupDatum group;
    std::vector<std::string> nodes;
    std::vector<int> dims;
    std::vector<WeakOrderEdge> edges;

    std::string to_dot() const;
};

WeakOrderGraph weak_order_graph(const GroupDatum& g);

}  // namespace orbit_atlas
