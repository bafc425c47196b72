#include "orbit_atlas/cli.hpp"

#include "orbit_atlas/acceptance.hpp"
#include "orbit_atlas/borbits.hpp"
#include "orbit_atlas/monoid.hpp"
#include "orbit_atlas/oracle.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <iomanip>
#include <ostream>
#include <sstream>

namespace orbit_atlas {

namespace {

using nlohmann::json;

// Thrown for anything wrong with the arguments themselves.
struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct Options {
    std::string group, format, orbit, root, suite = "all";
    int q = 3;
};

GroupDatum group_of(const Options& o) {
    if (o.group.empty()) throw UsageError("--group is required");
    try {
        return parse_group(o.group);
    } catch (const AtlasError& e) {
        throw UsageError(e.what());
    }
}

BOrbit orbit_of(const Options& o, const GroupDatum& g) {
    if (o.orbit.empty()) throw UsageError("--orbit is required");
    BOrbit b;
    try {
        b = parse_key(o.orbit);
    } catch (const AtlasError& e) {
        throw UsageError(e.what());
    }
    if (b.group != g) throw UsageError("orbit key belongs to " + b.group.name() + ", not " + g.name());
    return b;
}

std::string format_of(const Options& o, const std::string& fallback, std::initializer_list<const char*> allowed) {
    std::string f = o.format.empty() ? fallback : o.format;
    for (const char* a : allowed)
        if (f == a) return f;
    throw UsageError("format " + f + " is not available here");
}

json outcome_json(const MonoidOutcome& m) {
    json j;
    j["kind"] = m.kind == MonoidOutcome::Raised ? "raised" : m.kind == MonoidOutcome::Fixed ? "fixed" : "deferred";
    j["result"] = m.result ? json(m.result->key()) : json(nullptr);
    j["type"] = m.type ? json(to_string(*m.type)) : json(nullptr);
    j["reason"] = m.reason;
    return j;
}

int cmd_korbits(const Options& o, std::ostream& out) {
    GroupDatum g = group_of(o);
    std::string f = format_of(o, "json", {"json", "text"});
    json arr = json::array();
    for (const auto& t : enumerate_korbits(g)) {
        int c = korbit_codim(g, t);
        if (f == "text") out << t.to_string() << " codim " << c << "\n";
        arr.push_back({{"tag", t.to_string()}, {"codim", c}, {"closed", t.is_closed()}});
    }
    if (f == "json") out << arr.dump(2) << "\n";
    return 0;
}

int cmd_borbits(const Options& o, std::ostream& out) {
    GroupDatum g = group_of(o);
    std::string f = format_of(o, "json", {"json", "text"});
    json arr = json::array();
    for (const auto& b : enumerate_borbits(g)) {
        int d = borbit_dim(b);
        if (f == "text") out << b.key() << " dim " << d << "\n";
        arr.push_back({{"key", b.key()}, {"korbit", b.korbit.to_string()}, {"w", b.w.to_string()}, {"dim", d}});
    }
    if (f == "json") out << arr.dump(2) << "\n";
    return 0;
}

int cmd_act(const Options& o, std::ostream& out) {
    GroupDatum g = group_of(o);
    BOrbit b = orbit_of(o, g);
    if (o.root.empty()) throw UsageError("--root is required");
    SimpleRootRef r;
    try {
        r = parse_root_ref(o.root);
    } catch (const AtlasError& e) {
        throw UsageError(e.what());
    }
    int top = r.side == Side::Left ? kside_root_system(g).num_simple() : g.num_simple();
    if (r.index < 1 || r.index > top) throw UsageError("root " + o.root + " is out of range for " + g.name());
    std::string f = format_of(o, "text", {"json", "text"});
    MonoidOutcome m = act(b, r);
    if (f == "text") out << m.to_string() << "\n";
    else out << outcome_json(m).dump(2) << "\n";
    return 0;
}

int cmd_rep(const Options& o, std::ostream& out) {
    GroupDatum g = group_of(o);
    BOrbit b = orbit_of(o, g);
    std::string f = format_of(o, "text", {"json", "text"});
    SymbolicFlag flag = borbit_rep(b);
    if (f == "text") out << flag.to_string() << "\n";
    else out << json{{"key", b.key()}, {"flag", flag.to_string()}, {"dim", borbit_dim(b)}}.dump(2) << "\n";
    return 0;
}

int cmd_weak_order(const Options& o, std::ostream& out) {
    GroupDatum g = group_of(o);
    std::string f = format_of(o, "dot", {"dot", "json"});
    WeakOrderGraph w = weak_order_graph(g);
    if (f == "dot") {
        out << w.to_dot();
        return 0;
    }
    json nodes = json::array(), edges = json::array();
    for (size_t i = 0; i < w.nodes.size(); ++i) nodes.push_back({{"key", w.nodes[i]}, {"dim", w.dims[i]}});
    for (const auto& e : w.edges)
        edges.push_back({{"from", e.from},
                         {"to", e.to.empty() ? json(nullptr) : json(e.to)},
                         {"root", e.root.to_string()},
                         {"deferred", e.deferred}});
    out << json{{"group", g.name()}, {"nodes", nodes}, {"edges", edges}}.dump(2) << "\n";
    return 0;
}

int cmd_count(const Options& o, std::ostream& out) {
    GroupDatum g = group_of(o);
    std::string f = format_of(o, "json", {"json", "text"});
    size_t k = enumerate_korbits(g).size(), b = enumerate_borbits(g).size();
    if (f == "text") out << "korbits " << k << "\nborbits " << b << "\n";
    else out << json{{"korbits", k}, {"borbits", b}}.dump() << "\n";
    return 0;
}

int cmd_oracle(const Options& o, std::ostream& out) {
    GroupDatum g = group_of(o);
    std::string f = format_of(o, "json", {"json", "text"});
    const OrbitPartition& p = orbit_partition(g, o.q);
    if (f == "text") {
        out << "group,q,class_id,size,representative\n";
        for (int c = 0; c < p.count(); ++c)
            out << g.name() << "," << o.q << "," << c << "," << p.class_size[c] << ",\""
                << flag_text(g, o.q, p.flags[p.class_rep[c]]) << "\"\n";
        return 0;
    }
    json sizes = json::array();
    for (long long s : p.class_size) sizes.push_back(s);
    out << json{{"group", g.name()}, {"q", o.q}, {"count", p.count()}, {"flags", p.flags.size()}, {"sizes", sizes}}
               .dump()
        << "\n";
    return 0;
}

std::set<int> parse_suite(const std::string& s) {
    if (s == "all") return {};
    std::set<int> ids;
    std::stringstream ss(s);
    std::string part;
    while (std::getline(ss, part, ',')) {
        try {
            size_t used = 0;
            int id = std::stoi(part, &used);
            if (used != part.size() || id < 1 || id > acceptance_criterion_count()) throw std::invalid_argument(part);
            ids.insert(id);
        } catch (const std::logic_error&) {
            throw UsageError("bad suite entry: " + part);
        }
    }
    if (ids.empty()) throw UsageError("empty suite");
    return ids;
}

int cmd_verify(const Options& o, std::ostream& out) {
    std::set<int> ids = parse_suite(o.suite);
    std::string f = format_of(o, "text", {"json", "text"});
    bool ok = true;
    json arr = json::array();
    for (const auto& r : run_acceptance(ids)) {
        ok = ok && r.pass;
        if (f == "text")
            out << (r.pass ? "PASS" : "FAIL") << " " << r.id << " " << r.name << ": " << r.detail << " ("
                << std::fixed << std::setprecision(2) << r.seconds << "s)\n";
        arr.push_back({{"id", r.id}, {"name", r.name}, {"pass", r.pass}, {"detail", r.detail}, {"seconds", r.seconds}});
    }
    if (f == "json") out << arr.dump(2) << "\n";
    return ok ? 0 : 1;
}

void error_json(std::ostream& err, const std::string& msg) { err << json{{"error", msg}}.dump() << "\n"; }

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Borel orbits on flag varieties of (GL(n), GL(n-1)) and (SO(n), SO(n-1))", "orbit-atlas"};
    app.require_subcommand(1);
    Options o;

    struct Sub {
        const char* name;
        const char* help;
        int (*run)(const Options&, std::ostream&);
        bool orbit, root, q, suite;
    };
    const std::vector<Sub> subs{
        {"korbits", "list K-orbits with codimensions", cmd_korbits, false, false, false, false},
        {"borbits", "list B-orbits with dimensions", cmd_borbits, false, false, false, false},
        {"act", "apply a simple-root monoid move to an orbit", cmd_act, true, true, false, false},
        {"rep", "print a representative flag", cmd_rep, true, false, false, false},
        {"weak-order", "emit the weak-order graph", cmd_weak_order, false, false, false, false},
        {"count", "count K-orbits and B-orbits", cmd_count, false, false, false, false},
        {"oracle", "partition the F_q flag variety by brute force", cmd_oracle, false, false, true, false},
        {"verify", "run the acceptance criteria", cmd_verify, false, false, false, true},
    };
    std::vector<CLI::App*> apps;
    for (const auto& s : subs) {
        CLI::App* a = app.add_subcommand(s.name, s.help);
        if (std::string(s.name) != "verify") a->add_option("--group", o.group, "GLn or SOn")->required();
        a->add_option("--format", o.format, "json, dot or text");
        if (s.orbit) a->add_option("--orbit", o.orbit, "orbit key")->required();
        if (s.root) a->add_option("--root", o.root, "L:k or R:k")->required();
        if (s.q) a->add_option("--q", o.q, "prime field size");
        if (s.suite) a->add_option("--suite", o.suite, "all or comma-separated criterion ids");
        apps.push_back(a);
    }

    std::vector<std::string> rev(args.rbegin(), args.rend());
    try {
        app.parse(rev);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return 0;
    } catch (const CLI::ParseError& e) {
        error_json(err, e.what());
        return 2;
    }
    try {
        for (size_t i = 0; i < subs.size(); ++i)
            if (apps[i]->parsed()) return subs[i].run(o, out);
    } catch (const UsageError& e) {
        error_json(err, e.what());
        return 2;
    } catch (const std::exception& e) {
        error_json(err, e.what());
        return 1;
    }
    return 2;
}

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    std::vector<std::string> args(argv + 1, argv + argc);
    return run_cli(args, out, err);
}

}  // namespace orbit_atlas
