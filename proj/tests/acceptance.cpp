#include "orbit_atlas/acceptance.hpp"

#include <cstdio>

int main() {
    bool ok = true;
    for (const auto& r : orbit_atlas::run_acceptance()) {
        std::printf("%s criterion %d (%s): %s [%.2fs]\n", r.pass ? "PASS" : "FAIL", r.id, r.name.c_str(),
                    r.detail.c_str(), r.seconds);
        ok = ok && r.pass;
    }
    return ok ? 0 : 1;
}
