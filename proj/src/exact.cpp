#include "orbit_atlas/exact.hpp"

#include "orbit_atlas/rootdata.hpp"

#include <utility>

namespace orbit_atlas {

bool ExactScalar::is_zero() const {
    return c_[0] == 0 && c_[1] == 0 && c_[2] == 0 && c_[3] == 0;
}

ExactScalar ExactScalar::operator+(const ExactScalar& o) const {
    return {c_[0] + o.c_[0], c_[1] + o.c_[1], c_[2] + o.c_[2], c_[3] + o.c_[3]};
}

ExactScalar ExactScalar::operator-(const ExactScalar& o) const {
    return {c_[0] - o.c_[0], c_[1] - o.c_[1], c_[2] - o.c_[2], c_[3] - o.c_[3]};
}

ExactScalar ExactScalar::operator-() const { return {-c_[0], -c_[1], -c_[2], -c_[3]}; }

ExactScalar ExactScalar::operator*(const ExactScalar& o) const {
    const auto& a = c_;
    const auto& b = o.c_;
    return {a[0] * b[0] - a[1] * b[1] + 2 * a[2] * b[2] - 2 * a[3] * b[3],
            a[0] * b[1] + a[1] * b[0] + 2 * a[2] * b[3] + 2 * a[3] * b[2],
            a[0] * b[2] + a[2] * b[0] - a[1] * b[3] - a[3] * b[1],
            a[0] * b[3] + a[3] * b[0] + a[1] * b[2] + a[2] * b[1]};
}

ExactScalar ExactScalar::galois(int sigma) const {
    mpq_class s1 = (sigma & 1) ? -1 : 1;
    mpq_class s2 = (sigma & 2) ? -1 : 1;
    return {c_[0], s1 * c_[1], s2 * c_[2], s1 * s2 * c_[3]};
}

// The product of the other three conjugates over the (rational) norm.
ExactScalar ExactScalar::inverse() const {
    if (is_zero()) throw AtlasError("division by zero");
    ExactScalar rest = galois(1) * galois(2) * galois(3);
    ExactScalar norm = *this * rest;
    mpq_class inv = 1 / norm.c_[0];
    return rest * ExactScalar(inv, 0, 0, 0);
}

std::string ExactScalar::to_string() const {
    static const char* unit[] = {"", "i", "√2", "i√2"};
    std::string out;
    for (int k = 0; k < 4; ++k) {
        if (c_[k] == 0) continue;
        std::string num = c_[k].get_str();
        bool neg = num[0] == '-';
        if (neg) num = num.substr(1);
        if (!out.empty() || neg) out += neg ? "-" : "+";
        if (k == 0 || num != "1") out += num;
        out += unit[k];
    }
    return out.empty() ? "0" : out;
}

ExactMatrix ExactMatrix::identity(int n) {
    ExactMatrix m(n, n);
    for (int i = 0; i < n; ++i) m(i, i) = 1;
    return m;
}

ExactMatrix ExactMatrix::operator*(const ExactMatrix& o) const {
    if (c_ != o.r_) throw AtlasError("matrix shape mismatch");
    ExactMatrix m(r_, o.c_);
    for (int i = 0; i < r_; ++i)
        for (int k = 0; k < c_; ++k) {
            const auto& x = (*this)(i, k);
            if (x.is_zero()) continue;
            for (int j = 0; j < o.c_; ++j)
                if (!o(k, j).is_zero()) m(i, j) += x * o(k, j);
        }
    return m;
}

ExactMatrix ExactMatrix::operator+(const ExactMatrix& o) const {
    if (r_ != o.r_ || c_ != o.c_) throw AtlasError("matrix shape mismatch");
    ExactMatrix m = *this;
    for (size_t k = 0; k < a_.size(); ++k) m.a_[k] += o.a_[k];
    return m;
}

ExactMatrix ExactMatrix::operator-(const ExactMatrix& o) const { return *this + o.scaled(-1); }

ExactMatrix ExactMatrix::scaled(const ExactScalar& s) const {
    ExactMatrix m = *this;
    for (auto& x : m.a_) x *= s;
    return m;
}

ExactMatrix ExactMatrix::transpose() const {
    ExactMatrix m(c_, r_);
    for (int i = 0; i < r_; ++i)
        for (int j = 0; j < c_; ++j) m(j, i) = (*this)(i, j);
    return m;
}

ExactMatrix ExactMatrix::columns(int first, int count) const {
    ExactMatrix m(r_, count);
    for (int i = 0; i < r_; ++i)
        for (int j = 0; j < count; ++j) m(i, j) = (*this)(i, first + j);
    return m;
}

ExactMatrix ExactMatrix::hcat(const ExactMatrix& o) const {
    if (r_ != o.r_) throw AtlasError("matrix shape mismatch");
    ExactMatrix m(r_, c_ + o.c_);
    for (int i = 0; i < r_; ++i) {
        for (int j = 0; j < c_; ++j) m(i, j) = (*this)(i, j);
        for (int j = 0; j < o.c_; ++j) m(i, c_ + j) = o(i, j);
    }
    return m;
}

namespace {

// Row-reduces in place; returns rank and the determinant factor of the swaps/pivots.
int eliminate(ExactMatrix& m, ExactScalar* det, ExactMatrix* aug) {
    int rank = 0;
    ExactScalar d = 1;
    for (int col = 0; col < m.cols() && rank < m.rows(); ++col) {
        int piv = -1;
        for (int i = rank; i < m.rows(); ++i)
            if (!m(i, col).is_zero()) {
                piv = i;
                break;
            }
        if (piv < 0) {
            d = 0;
            continue;
        }
        if (piv != rank) {
            for (int j = 0; j < m.cols(); ++j) std::swap(m(piv, j), m(rank, j));
            if (aug)
                for (int j = 0; j < aug->cols(); ++j) std::swap((*aug)(piv, j), (*aug)(rank, j));
            d = -d;
        }
        ExactScalar p = m(rank, col);
        d *= p;
        ExactScalar pinv = p.inverse();
        for (int j = 0; j < m.cols(); ++j) m(rank, j) *= pinv;
        if (aug)
            for (int j = 0; j < aug->cols(); ++j) (*aug)(rank, j) *= pinv;
        for (int i = 0; i < m.rows(); ++i) {
            if (i == rank || m(i, col).is_zero()) continue;
            ExactScalar f = m(i, col);
            for (int j = 0; j < m.cols(); ++j) m(i, j) -= f * m(rank, j);
            if (aug)
                for (int j = 0; j < aug->cols(); ++j) (*aug)(i, j) -= f * (*aug)(rank, j);
        }
        ++rank;
    }
    if (rank < m.rows() || m.rows() != m.cols()) d = 0;
    if (det) *det = d;
    return rank;
}

}  // namespace

int ExactMatrix::rank() const {
    ExactMatrix m = *this;
    return eliminate(m, nullptr, nullptr);
}

ExactScalar ExactMatrix::determinant() const {
    if (r_ != c_) throw AtlasError("determinant of a non-square matrix");
    ExactMatrix m = *this;
    ExactScalar d;
    eliminate(m, &d, nullptr);
    return d;
}

ExactMatrix ExactMatrix::inverse() const {
    if (r_ != c_) throw AtlasError("inverse of a non-square matrix");
    ExactMatrix m = *this;
    ExactMatrix aug = identity(r_);
    if (eliminate(m, nullptr, &aug) != r_) throw AtlasError("singular matrix");
    return aug;
}

std::string ExactMatrix::to_string() const {
    std::string s;
    for (int i = 0; i < r_; ++i) {
        s += "[";
        for (int j = 0; j < c_; ++j) s += (j ? ", " : "") + (*this)(i, j).to_string();
        s += "]\n";
    }
    return s;
}

}  // namespace orbit_atlas
