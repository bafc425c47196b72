#include "orbit_atlas/acceptance.hpp"

#include "orbit_atlas/borbits.hpp"
#include "orbit_atlas/monoid.hpp"
#include "orbit_atlas/oracle.hpp"

#include <chrono>
#include <functional>
#include <sstream>

namespace orbit_atlas {

namespace {

// Collects the first few mismatches; pass iff none were recorded.
struct Check {
    int failures = 0;
    std::ostringstream first;
    long long checked = 0;

    void fail(const std::string& what) {
        if (failures++ < 3) first << (failures > 1 ? "; " : "") << what;
    }
    void expect(bool ok, const std::function<std::string()>& what) {
        ++checked;
        if (!ok) fail(what());
    }
    std::string detail() const {
        if (failures == 0) return std::to_string(checked) + " checks";
        return std::to_string(failures) + " of " + std::to_string(checked) + " failed: " + first.str();
    }
};

std::vector<GroupDatum> groups_up_to(int max_orbits) {
    std::vector<GroupDatum> out;
    for (int n = 1; n <= 8; ++n)
        if (enumerate_borbits(gl(n)).size() <= static_cast<size_t>(max_orbits)) out.push_back(gl(n));
        else break;
    for (int n = 2; n <= 12; ++n)
        if (enumerate_borbits(so(n)).size() <= static_cast<size_t>(max_orbits)) out.push_back(so(n));
        else break;
    return out;
}

Check korbit_counts() {
    Check c;
    for (int n = 2; n <= 8; ++n) {
        int got = static_cast<int>(enumerate_korbits(gl(n)).size());
        c.expect(got == n * (n + 1) / 2, [&] { return gl(n).name() + " has " + std::to_string(got); });
    }
    for (int l = 1; l <= 6; ++l) {
        int odd = static_cast<int>(enumerate_korbits(so(2 * l + 1)).size());
        c.expect(odd == l + 2, [&] { return so(2 * l + 1).name() + " has " + std::to_string(odd); });
        int even = static_cast<int>(enumerate_korbits(so(2 * l)).size());
        c.expect(even == l, [&] { return so(2 * l).name() + " has " + std::to_string(even); });
    }
    return c;
}

Check gl4_weak_order() {
    Check c;
    std::set<std::string> want_nodes{"Q_1", "Q_2", "Q_3", "Q_4", "Q_{1,2}", "Q_{2,3}", "Q_{3,4}",
                                     "Q_{1,3}", "Q_{2,4}", "Q_{1,4}"};
    std::set<std::pair<std::string, std::string>> want_edges{
        {"Q_1", "Q_{1,2}"},     {"Q_2", "Q_{1,2}"},     {"Q_2", "Q_{2,3}"},     {"Q_3", "Q_{2,3}"},
        {"Q_3", "Q_{3,4}"},     {"Q_4", "Q_{3,4}"},     {"Q_{1,2}", "Q_{1,3}"}, {"Q_{2,3}", "Q_{1,3}"},
        {"Q_{2,3}", "Q_{2,4}"}, {"Q_{3,4}", "Q_{2,4}"}, {"Q_{1,3}", "Q_{1,4}"}, {"Q_{2,4}", "Q_{1,4}"}};
    std::set<std::string> nodes;
    for (const auto& t : enumerate_korbits(gl(4))) nodes.insert(t.to_string());
    c.expect(nodes == want_nodes, [] { return std::string("node set differs"); });
    std::set<std::pair<std::string, std::string>> edges;
    for (const auto& e : korbit_weak_order(gl(4))) edges.insert({e.from.to_string(), e.to.to_string()});
    c.expect(edges == want_edges, [&] { return "edge set differs (" + std::to_string(edges.size()) + " edges)"; });
    return c;
}

Check codims() {
    Check c;
    for (int n = 1; n <= 8; ++n)
        for (const auto& t : enumerate_korbits(gl(n))) {
            int want = t.kind == KOrbitTag::Pair ? n - 1 - (t.j - t.i) : n - 1;
            int got = korbit_codim(gl(n), t);
            c.expect(got == want, [&] { return gl(n).name() + " " + t.to_string(); });
        }
    for (int n = 2; n <= 17; ++n) {
        GroupDatum g = so(n);
        for (const auto& t : enumerate_korbits(g)) {
            if (t.kind != KOrbitTag::NonClosed) continue;
            int want = g.family == Family::SOodd ? t.i : t.i - 1;
            int got = korbit_codim(g, t);
            c.expect(got == want, [&] { return g.name() + " " + t.to_string(); });
        }
    }
    return c;
}

Check oracle_counts() {
    Check c;
    std::vector<std::tuple<GroupDatum, int, int>> cases{
        {gl(2), 2, 3}, {gl(2), 3, 3}, {gl(2), 5, 3}, {gl(3), 2, 13}, {gl(3), 3, 13},
        {gl(3), 5, 13}, {gl(4), 2, 73}, {so(4), 3, 5},  {so(5), 3, 17}};
    for (const auto& [g, q, want] : cases) {
        int ours = static_cast<int>(enumerate_borbits(g).size());
        int oracle = orbit_partition(g, q).count();
        c.expect(ours == want && oracle == want, [&] {
            return g.name() + " q=" + std::to_string(q) + ": recursion " + std::to_string(ours) + ", oracle " +
                   std::to_string(oracle);
        });
    }
    return c;
}

Check dimension_laws() {
    Check c;
    for (const auto& g : groups_up_to(200)) {
        const auto& all = enumerate_borbits(g);
        int top = dim_flag_variety(g), at_top = 0, at_zero = 0;
        for (const auto& q : all) {
            int d = borbit_dim(q);
            at_top += d == top;
            at_zero += d == 0;
            if (q.korbit == open_korbit(g) && q.fibre) {
                // rank of the smaller group
                int rank_k = g.family == Family::GL ? g.n - 1 : (g.n - 1) / 2;
                int shift = d - borbit_dim(to_op(q));
                c.expect(shift == rank_k, [&] { return "to_op shift " + std::to_string(shift) + " at " + q.key(); });
            }
            int left = kside_root_system(g).num_simple();
            for (int s = 0; s < 2; ++s)
                for (int k = 1; k <= (s ? g.num_simple() : left); ++k) {
                    MonoidOutcome o = act(q, {s ? Side::Right : Side::Left, k});
                    if (o.kind != MonoidOutcome::Raised) continue;
                    c.expect(borbit_dim(*o.result) == d + 1, [&] { return "raise is not +1 at " + q.key(); });
                }
        }
        c.expect(at_top == 1, [&] { return g.name() + ": " + std::to_string(at_top) + " orbits of top dimension"; });
        int want_zero = g.family == Family::GL ? g.n : g.family == Family::SOodd ? 2 : 1;
        c.expect(at_zero == want_zero, [&] { return g.name() + ": " + std::to_string(at_zero) + " points"; });
    }
    return c;
}

Check monoid_consistency() {
    Check c;
    std::vector<GroupDatum> gs{gl(1), gl(2), gl(3), gl(4)};
    for (int n = 2; n <= 7; ++n) gs.push_back(so(n));
    for (const auto& g : gs) {
        int left = kside_root_system(g).num_simple();
        for (const auto& q : enumerate_borbits(g))
            for (int s = 0; s < 2; ++s)
                for (int k = 1; k <= (s ? g.num_simple() : left); ++k) {
                    SimpleRootRef r{s ? Side::Right : Side::Left, k};
                    MonoidOutcome o = act(q, r);
                    auto where = [&] { return q.key() + " " + r.to_string(); };
                    if (r.side == Side::Right) {
                        bool moves = korbit_monoid(g, q.korbit, k) != q.korbit;
                        c.expect(!moves || o.kind == MonoidOutcome::Deferred,
                                 [&] { return "containment at " + where(); });
                    }
                    if (o.kind != MonoidOutcome::Raised) continue;
                    c.expect(o.result->korbit == q.korbit, [&] { return "K-orbit changed at " + where(); });
                    MonoidOutcome again = act(*o.result, r);
                    c.expect(again.kind == MonoidOutcome::Fixed, [&] { return "not idempotent at " + where(); });
                    if (r.side == Side::Left) {
                        // the base point in K/P moves to the monoid image of the coset or stays
                        auto S = kside_parabolic_subset(g, q.korbit);
                        WeylElement base = left_monoid_coset(q.w, k, S);
                        c.expect(o.result->w == q.w || o.result->w == base,
                                 [&] { return "base projection at " + where(); });
                    }
                }
    }
    return c;
}

Check root_types() {
    Check c;
    for (const auto& g : {gl(3), so(5)})
        for (int q : {3, 5}) {
            const auto& p = orbit_partition(g, q);
            int left = kside_root_system(g).num_simple();
            for (const auto& b : enumerate_borbits(g)) {
                ExactMatrix el = borbit_element(b);
                for (int s = 0; s < 2; ++s)
                    for (int k = 1; k <= (s ? g.num_simple() : left); ++k) {
                        Side side = s ? Side::Right : Side::Left;
                        auto ours = classify_root(b, {side, k});
                        if (!ours) continue;
                        FibrePattern fp = fibre_pattern(p, el, side, k);
                        c.expect(fp.type == ours, [&] {
                            return g.name() + " q=" + std::to_string(q) + " " + b.key() + " " +
                                   SimpleRootRef{side, k}.to_string() + ": " + to_string(*ours) + " vs " +
                                   (fp.type ? to_string(*fp.type) : "?");
                        });
                    }
            }
        }
    return c;
}

Check representatives() {
    Check c;
    std::vector<GroupDatum> gs{gl(1), gl(2), gl(3), gl(4)};
    for (int n = 2; n <= 7; ++n) gs.push_back(so(n));
    for (const auto& g : gs)
        for (const auto& b : enumerate_borbits(g)) {
            auto d = borbit_rep(b).defect();
            c.expect(!d, [&] { return b.key() + ": " + *d; });
        }
    const int q = 5;
    for (int n = 2; n <= 4; ++n) {
        const auto& p = orbit_partition(gl(n), q);
        for (const auto& b : enumerate_borbits(gl(n))) {
            int cls = class_of_element(p, borbit_element(b));
            auto f = q_factorization(p.class_size[cls], q);
            c.expect(f && f->first + f->second == borbit_dim(b), [&] {
                return b.key() + ": class size " + std::to_string(p.class_size[cls]);
            });
        }
    }
    return c;
}

struct Criterion {
    const char* name;
    Check (*run)();
};

const std::vector<Criterion>& criteria() {
    static const std::vector<Criterion> all{
        {"K-orbit counts", korbit_counts},
        {"GL(4) K-orbit weak order", gl4_weak_order},
        {"codimension formulas", codims},
        {"B-orbit counts vs F_q oracle", oracle_counts},
        {"dimension laws", dimension_laws},
        {"monoid consistency", monoid_consistency},
        {"root types vs oracle fibres", root_types},
        {"representative validity", representatives},
    };
    return all;
}

}  // namespace

int acceptance_criterion_count() { return static_cast<int>(criteria().size()); }

std::vector<CriterionResult> run_acceptance(const std::set<int>& ids) {
    for (int id : ids)
        if (id < 1 || id > acceptance_criterion_count()) throw AtlasError("no criterion " + std::to_string(id));
    std::vector<CriterionResult> out;
    for (int id = 1; id <= acceptance_criterion_count(); ++id) {
        if (!ids.empty() && !ids.count(id)) continue;
        const Criterion& cr = criteria()[id - 1];
        auto t0 = std::chrono::steady_clock::now();
        CriterionResult r{id, cr.name, false, "", 0};
        try {
            Check c = cr.run();
            r.pass = c.failures == 0;
            r.detail = c.detail();
        } catch (const std::exception& e) {
            r.detail = std::string("error: ") + e.what();
        }
        r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        out.push_back(std::move(r));
    }
    return out;
}

}  // namespace orbit_atlas
