#pragma once

#include <gmpxx.h>

#include <array>
#include <string>
#include <vector>

namespace orbit_atlas {

// a + b i + c sqrt2 + d i sqrt2 with rational a, b, c, d.
class ExactScalar {
public:
    ExactScalar() = default;
    ExactScalar(long v) : c_{mpq_class(v), 0, 0, 0} {}
    ExactScalar(mpq_class a, mpq_class b, mpq_class c, mpq_class d) : c_{a, b, c, d} {
        for (auto& x : c_) x.canonicalize();
    }
    static ExactScalar rational(long num, long den) { return {mpq_class(num, den), 0, 0, 0}; }
    static ExactScalar i() { return {0, 1, 0, 0}; }
    static ExactScalar sqrt2() { return {0, 0, 1, 0}; }

    const mpq_class& coeff(int k) const { return c_[k]; }
    bool is_zero() const;
    bool is_rational() const { return c_[1] == 0 && c_[2] == 0 && c_[3] == 0; }

    ExactScalar operator+(const ExactScalar& o) const;
    ExactScalar operator-(const ExactScalar& o) const;
    ExactScalar operator-() const;
    ExactScalar operator*(const ExactScalar& o) const;
    ExactScalar operator/(const ExactScalar& o) const { return *this * o.inverse(); }
    ExactScalar& operator+=(const ExactScalar& o) { return *this = *this + o; }
    ExactScalar& operator-=(const ExactScalar& o) { return *this = *this - o; }
    ExactScalar& operator*=(const ExactScalar& o) { return *this = *this * o; }
    bool operator==(const ExactScalar& o) const { return c_ == o.c_; }

    // sigma flips the sign of i (bit 1) and/or sqrt2 (bit 2)
    ExactScalar galois(int sigma) const;
    ExactScalar inverse() const;
    std::string to_string() const;

private:
    std::array<mpq_class, 4> c_{};
};

class ExactMatrix {
public:
    ExactMatrix() = default;
    ExactMatrix(int rows, int cols) : r_(rows), c_(cols), a_(static_cast<size_t>(rows) * cols) {}
    static ExactMatrix identity(int n);

    int rows() const { return r_; }
    int cols() const { return c_; }
    ExactScalar& operator()(int i, int j) { return a_[static_cast<size_t>(i) * c_ + j]; }
    const ExactScalar& operator()(int i, int j) const { return a_[static_cast<size_t>(i) * c_ + j]; }

    ExactMatrix operator*(const ExactMatrix& o) const;
    ExactMatrix operator+(const ExactMatrix& o) const;
    ExactMatrix operator-(const ExactMatrix& o) const;
    ExactMatrix scaled(const ExactScalar& s) const;
    bool operator==(const ExactMatrix& o) const { return r_ == o.r_ && c_ == o.c_ && a_ == o.a_; }

    ExactMatrix transpose() const;
    ExactMatrix columns(int first, int count) const;
    ExactMatrix hcat(const ExactMatrix& o) const;
    int rank() const;
    ExactScalar determinant() const;
    ExactMatrix inverse() const;  // throws AtlasError if singular
    std::string to_string() const;

private:
    int r_ = 0, c_ = 0;
    std::vector<ExactScalar> a_;
};

}  // namespace orbit_atlas
