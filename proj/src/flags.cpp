#include "orbit_atlas/flags.hpp"

#include <cstdlib>

namespace orbit_atlas {

namespace {

const ExactScalar kHalf = ExactScalar::rational(1, 2);
const ExactScalar kInvSqrt2 = ExactScalar(0, 0, mpq_class(1, 2), 0);
const ExactScalar kIOverSqrt2 = ExactScalar(0, 0, 0, mpq_class(1, 2));

bool is_so(const GroupDatum& g) { return g.family != Family::GL; }

ExactMatrix unit_vector(int n, int pos) {
    ExactMatrix v(n, 1);
    v(pos, 0) = 1;
    return v;
}

ExactMatrix elementary(int n, int a, int b) {
    ExactMatrix m(n, n);
    m(a, b) = 1;
    return m;
}

// Labels (x, y) with weight(x) - weight(y) = r; y = 0 for short roots.
std::pair<int, int> root_labels(const GroupDatum& g, const Root& r) {
    std::vector<int> support;
    for (size_t a = 0; a < r.size(); ++a)
        if (r[a] != 0) support.push_back(static_cast<int>(a));
    if (!is_root(root_system(g), r)) throw AtlasError("not a root of " + g.name() + ": " + root_to_string(r));
    if (g.family == Family::GL) {
        int x = r[support[0]] > 0 ? support[0] : support[1];
        int y = r[support[0]] > 0 ? support[1] : support[0];
        return {x + 1, y + 1};
    }
    int a = support[0];
    int x = r[a] * (a + 1);
    if (support.size() == 1) return {x, 0};
    int b = support[1];
    return {x, -r[b] * (b + 1)};
}

// Root vector of g for r in the standard realization.
ExactMatrix root_vector(const GroupDatum& g, const Root& r) {
    auto [x, y] = root_labels(g, r);
    int n = g.n;
    ExactMatrix m = elementary(n, label_position(g, x), label_position(g, y));
    if (is_so(g)) m = m - elementary(n, label_position(g, -y), label_position(g, -x));
    return m;
}

}  // namespace

int label_position(const GroupDatum& g, int label) {
    int n = g.n;
    if (!is_so(g)) {
        if (label < 1 || label > n) throw AtlasError("bad basis label");
        return label - 1;
    }
    int l = g.l();
    if (label == 0) {
        if (n % 2 == 0) throw AtlasError("e0 does not exist in " + g.name());
        return l;
    }
    if (std::abs(label) > l) throw AtlasError("bad basis label");
    return label > 0 ? label - 1 : n + label;
}

int position_label(const GroupDatum& g, int pos) {
    if (!is_so(g)) return pos + 1;
    int n = g.n, l = g.l();
    if (pos < l) return pos + 1;
    if (n % 2 == 1 && pos == l) return 0;
    return pos - n;
}

std::string label_name(int label) { return "e" + std::to_string(label); }

int flag_length(const GroupDatum& g) { return is_so(g) ? g.l() : g.n; }

ExactMatrix form_J(int n) {
    ExactMatrix j(n, n);
    for (int a = 0; a < n; ++a) j(a, n - 1 - a) = 1;
    return j;
}

ExactScalar beta(const ExactMatrix& x, const ExactMatrix& y) {
    int n = x.rows();
    ExactScalar s;
    for (int a = 0; a < n; ++a) s += x(a, 0) * y(n - 1 - a, 0);
    return s;
}

bool is_group_element(const GroupDatum& g, const ExactMatrix& m) {
    if (m.rows() != g.n || m.cols() != g.n) return false;
    if (!is_so(g)) return !m.determinant().is_zero();
    ExactMatrix j = form_J(g.n);
    return m.transpose() * j * m == j && m.determinant() == ExactScalar(1);
}

std::string SymbolicFlag::to_string() const {
    std::string out = "(";
    for (int c = 0; c < basis.cols(); ++c) {
        if (c) out += " ⊂ ";
        ExactScalar lead;
        for (int r = 0; r < basis.rows() && lead.is_zero(); ++r) lead = basis(r, c);
        if (lead.is_zero()) {
            out += "0";
            continue;
        }
        ExactScalar inv = lead.inverse();
        std::string vec;
        for (int r = 0; r < basis.rows(); ++r) {
            ExactScalar x = basis(r, c) * inv;
            if (x.is_zero()) continue;
            std::string s = x.to_string();
            bool single = s.find_first_of("+-", 1) == std::string::npos;
            std::string term;
            if (s == "1") term = "";
            else if (s == "-1") term = "-";
            else if (single) term = s;
            else term = "(" + s + ")";
            if (!vec.empty() && term.rfind("-", 0) != 0) vec += "+";
            vec += term + label_name(position_label(group, r));
        }
        out += vec;
    }
    return out + ")";
}

std::optional<std::string> SymbolicFlag::defect() const {
    int n = group.n, f = flag_length(group);
    if (basis.rows() != n || basis.cols() != f) return "wrong shape";
    if (basis.rank() != f) return "vectors are linearly dependent";
    if (!is_so(group)) return std::nullopt;
    for (int a = 0; a < f; ++a)
        for (int b = a; b < f; ++b)
            if (!beta(basis.columns(a, 1), basis.columns(b, 1)).is_zero()) return "flag is not isotropic";
    if (group.family == Family::SOeven) {
        ExactMatrix u(n, group.l());
        for (int k = 0; k < group.l(); ++k) u(k, k) = 1;
        int meet = 2 * group.l() - basis.hcat(u).rank();
        if ((meet - group.l()) % 2 != 0) return "flag lies in the other component";
    }
    return std::nullopt;
}

SymbolicFlag standard_flag(const GroupDatum& g) {
    return {g, ExactMatrix::identity(g.n).columns(0, flag_length(g))};
}

SymbolicFlag flag_of(const GroupDatum& g, const ExactMatrix& element) {
    return {g, element.columns(0, flag_length(g))};
}

SymbolicFlag apply(const ExactMatrix& m, const SymbolicFlag& f) {
    SymbolicFlag out{f.group, m * f.basis};
    if (auto d = out.defect()) throw AtlasError("invalid flag after applying matrix: " + *d);
    return out;
}

bool same_flag(const SymbolicFlag& a, const SymbolicFlag& b) {
    if (a.group != b.group || a.basis.cols() != b.basis.cols()) return false;
    for (int k = 1; k <= a.basis.cols(); ++k) {
        ExactMatrix x = a.basis.columns(0, k), y = b.basis.columns(0, k);
        if (x.rank() != k || x.hcat(y).rank() != k) return false;
    }
    return true;
}

bool refines(const SymbolicFlag& f, const std::vector<ExactMatrix>& partial) {
    for (const auto& p : partial) {
        int d = p.cols();
        ExactMatrix x = f.basis.columns(0, d);
        if (x.rank() != d || p.rank() != d || x.hcat(p).rank() != d) return false;
    }
    return true;
}

ExactMatrix weyl_matrix(const GroupDatum& g, const WeylElement& w) {
    if (w.rs != root_system(g)) throw AtlasError("Weyl element does not belong to " + g.name());
    int n = g.n;
    ExactMatrix m(n, n);
    if (!is_so(g)) {
        for (int k = 1; k <= n; ++k) m(label_position(g, w.img[k - 1]), k - 1) = 1;
        return m;
    }
    int neg = 0;
    for (int k = 1; k <= g.l(); ++k) {
        int t = w.img[k - 1];
        if (t < 0) ++neg;
        m(label_position(g, t), label_position(g, k)) = 1;
        m(label_position(g, -t), label_position(g, -k)) = 1;
    }
    if (n % 2 == 1) m(label_position(g, 0), label_position(g, 0)) = neg % 2 ? -1 : 1;
    return m;
}

ExactMatrix kside_fixed_vector(const GroupDatum& g) {
    int n = g.n;
    switch (g.family) {
        case Family::GL: return unit_vector(n, n - 1);
        case Family::SOodd: return unit_vector(n, label_position(g, 0));
        case Family::SOeven: {
            ExactMatrix u = unit_vector(n, label_position(g, g.l()));
            u(label_position(g, -g.l()), 0) = ExactScalar::rational(-1, 2);
            return u;
        }
    }
    return {};
}

ExactMatrix embed_kside(const GroupDatum& g, const ExactMatrix& h) {
    int n = g.n;
    if (h.rows() != n - 1 || h.cols() != n - 1) throw AtlasError("element has the wrong size for the smaller group");
    ExactMatrix m = ExactMatrix::identity(n);
    if (g.family == Family::SOeven && n == 2) return m;
    if (g.family == Family::GL) {
        for (int a = 0; a < n - 1; ++a)
            for (int b = 0; b < n - 1; ++b) m(a, b) = h(a, b);
        return m;
    }
    GroupDatum k = g.theta_fixed();
    if (g.family == Family::SOodd) {
        for (int a = 0; a < n - 1; ++a)
            for (int b = 0; b < n - 1; ++b)
                m(label_position(g, position_label(k, a)), label_position(g, position_label(k, b))) = h(a, b);
        return m;
    }
    // even: the smaller group's e0 sits at e_l + 1/2 e_{-l}, the fixed vector completes the basis
    int l = g.l();
    ExactMatrix c(n, n);
    for (int p = 0; p < n - 1; ++p) {
        int lab = position_label(k, p);
        if (lab == 0) {
            c(label_position(g, l), p) = 1;
            c(label_position(g, -l), p) = kHalf;
        } else {
            c(label_position(g, lab), p) = 1;
        }
    }
    ExactMatrix u = kside_fixed_vector(g);
    for (int a = 0; a < n; ++a) c(a, n - 1) = u(a, 0);
    ExactMatrix hh = ExactMatrix::identity(n);
    for (int a = 0; a < n - 1; ++a)
        for (int b = 0; b < n - 1; ++b) hh(a, b) = h(a, b);
    return c * hh * c.inverse();
}

ExactMatrix embed_block(const GroupDatum& g, const std::vector<int>& block_labels, const ExactMatrix& h) {
    int m = static_cast<int>(block_labels.size());
    if (h.rows() != m || h.cols() != m) throw AtlasError("block element has the wrong size");
    ExactMatrix out = ExactMatrix::identity(g.n);
    std::vector<int> pos;
    for (int lab : block_labels) pos.push_back(label_position(g, lab));
    for (int a = 0; a < m; ++a)
        for (int b = 0; b < m; ++b) out(pos[a], pos[b]) = h(a, b);
    return out;
}

ExactMatrix sigma(const GroupDatum& g) {
    int n = g.n;
    ExactMatrix v = kside_fixed_vector(g);
    if (g.family == Family::GL) {
        ExactMatrix m = ExactMatrix::identity(n);
        m(n - 1, n - 1) = -1;
        return m;
    }
    // reflection in the fixed vector
    ExactMatrix j = form_J(n);
    ExactScalar c = ExactScalar(2) / beta(v, v);
    return ExactMatrix::identity(n) - (v * v.transpose() * j).scaled(c);
}

ExactMatrix open_fibre_element(const GroupDatum& g) {
    int n = g.n, l = g.l();
    ExactMatrix y(n, n);
    auto col = [&](int lab) { return label_position(g, lab); };
    auto row = [&](int lab) { return label_position(g, lab); };
    switch (g.family) {
        case Family::GL:
            if (n == 1) return ExactMatrix::identity(1);
            y(n - 2, 0) = 1;
            y(n - 1, 0) = 1;
            for (int k = 1; k <= n - 2; ++k) y(k - 1, k) = 1;
            y(n - 1, n - 1) = 1;
            return y;
        case Family::SOeven:
            for (int k = 1; k <= l; ++k) {
                int t = k == 1 ? l : k - 1;
                y(row(t), col(k)) = 1;
                y(row(-t), col(-k)) = 1;
            }
            return y;
        case Family::SOodd: {
            // first column e_l + e_0 - 1/2 e_{-l}
            y(row(l), col(1)) = 1;
            y(row(0), col(1)) = 1;
            y(row(-l), col(1)) = ExactScalar::rational(-1, 2);
            for (int k = 2; k <= l; ++k) {
                y(row(k - 1), col(k)) = 1;
                y(row(-(k - 1)), col(-k)) = 1;
            }
            y(row(-l), col(-1)) = 1;
            y(row(0), col(0)) = 1;
            y(row(-l), col(0)) = -1;
            if (y.determinant() != ExactScalar(1)) {
                y(row(0), col(0)) = -1;
                y(row(-l), col(0)) = 1;
            }
            return y;
        }
    }
    return y;
}

ExactMatrix root_element(const GroupDatum& g, const Root& r, long t) {
    ExactMatrix x = root_vector(g, r).scaled(ExactScalar(t));
    return ExactMatrix::identity(g.n) + x + (x * x).scaled(kHalf);
}

ExactMatrix torus_element(const GroupDatum& g, int k, long t) {
    if (t == 0) throw AtlasError("torus parameter must be nonzero");
    ExactMatrix m = ExactMatrix::identity(g.n);
    m(label_position(g, k), label_position(g, k)) = ExactScalar(t);
    if (is_so(g)) m(label_position(g, -k), label_position(g, -k)) = ExactScalar::rational(1, t);
    return m;
}

// exp(i pi/4 (e + f)) for the sl2 attached to a simple root; for the short
// root of odd SO, e and f are both scaled by sqrt2 so that the image of
// e_l is e_l + i sqrt2 e_0 + e_{-l} up to a scalar.
ExactMatrix cayley(const GroupDatum& g, int k) {
    ExactMatrix e = root_vector(g, simple_roots(g).at(k - 1));
    ExactMatrix x = e + e.transpose();
    ExactMatrix id = ExactMatrix::identity(g.n);
    bool short_root = g.family == Family::SOodd && k == g.l();
    if (short_root) {
        x = x.scaled(ExactScalar::sqrt2());
        return id + x.scaled(ExactScalar(0, mpq_class(1, 2), 0, 0)) - (x * x).scaled(ExactScalar::rational(1, 4));
    }
    return id + x.scaled(kIOverSqrt2) + (x * x).scaled(kInvSqrt2 - ExactScalar(1));
}

SymbolicFlag korbit_flag(const GroupDatum& g, const KOrbitTag& q) {
    check_korbit(g, q);
    int n = g.n, l = g.l();
    int f = flag_length(g);
    ExactMatrix b(n, f);
    auto put = [&](int c, int lab) { b(label_position(g, lab), c) = 1; };
    switch (q.kind) {
        case KOrbitTag::Closed:
            return apply(weyl_matrix(g, cycle_w(n, q.i)), standard_flag(g));
        case KOrbitTag::Pair: {
            int c = 0;
            for (int k = 1; k < q.i; ++k) put(c++, k);
            put(c, q.i);
            put(c++, n);
            for (int k = q.i + 1; k < q.j; ++k) put(c++, k);
            put(c++, n);
            for (int k = q.j; k < n; ++k) put(c++, k);
            break;
        }
        case KOrbitTag::Plus:
            return standard_flag(g);
        case KOrbitTag::Minus:
            for (int k = 1; k < l; ++k) put(k - 1, k);
            put(l - 1, -l);
            break;
        case KOrbitTag::NonClosed: {
            int c = 0;
            if (g.family == Family::SOodd) {
                for (int k = 1; k <= q.i; ++k) put(c++, k);
                ExactMatrix v = cayley(g, l) * unit_vector(n, label_position(g, l));
                for (int r = 0; r < n; ++r) b(r, c) = v(r, 0);
                ++c;
                for (int k = q.i + 1; k < l; ++k) put(c++, k);
            } else {
                for (int k = 1; k < q.i; ++k) put(c++, k);
                put(c++, l);
                for (int k = q.i; k < l; ++k) put(c++, k);
            }
            break;
        }
    }
    SymbolicFlag out{g, b};
    if (auto d = out.defect()) throw AtlasError("catalog flag is invalid: " + *d);
    return out;
}

}  // namespace orbit_atlas
