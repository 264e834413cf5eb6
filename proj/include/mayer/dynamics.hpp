#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "mayer/types.hpp"

namespace mayer {

using BigInt = boost::multiprecision::cpp_int;

// Positive partial quotients (i_1, ..., i_n).
class CFWord {
public:
    CFWord() = default;
    explicit CFWord(std::vector<std::int64_t> digits);
    CFWord(std::initializer_list<std::int64_t> digits) : CFWord(std::vector<std::int64_t>(digits)) {}

    const std::vector<std::int64_t>& digits() const { return digits_; }
    std::size_t size() const { return digits_.size(); }
    std::int64_t operator[](std::size_t i) const { return digits_[i]; }

    // (i_n, i_1, ..., i_{n-1}) applied k times
    CFWord rotated(std::size_t k) const;
    std::string str(char sep = '-') const;

    auto operator<=>(const CFWord&) const = default;

private:
    std::vector<std::int64_t> digits_;
};

// (p + q sqrt(d)) / r in lowest terms, r > 0, d > 1 squarefree.
class QuadraticSurd {
public:
    QuadraticSurd(BigInt p, BigInt q, BigInt d, BigInt r);

    const BigInt& p() const { return p_; }
    const BigInt& q() const { return q_; }
    const BigInt& d() const { return d_; }
    const BigInt& r() const { return r_; }

    double to_double() const;
    long double to_long_double() const;
    BigInt floor() const;

    QuadraticSurd operator*(const QuadraticSurd& o) const;
    QuadraticSurd operator-(const BigInt& k) const;
    QuadraticSurd reciprocal() const;

    // T(x) = 1/x mod 1, exactly
    QuadraticSurd gauss_shift() const;

    bool operator==(const QuadraticSurd& o) const {
        return p_ == o.p_ && q_ == o.q_ && d_ == o.d_ && r_ == o.r_;
    }
    std::string str() const;

private:
    BigInt p_, q_, d_, r_;
    void normalize();
};

struct IntMatrix2 {
    BigInt a, b, c, d;
    BigInt trace() const { return a + d; }
};

struct HyperbolicClass {
    CFWord word;
    IntMatrix2 matrix;
    BigInt matrix_trace;
    double norm = 0.0;
    int length_l = 0;
    int primitivity_k = 1;
    double geodesic_length = 0.0;
};

double gauss_map(double x);

QuadraticSurd periodic_point(const CFWord& word);
double orbit_product(const CFWord& word);
QuadraticSurd orbit_product_exact(const CFWord& word);

std::vector<CFWord> enumerate_fix_words(int n, std::int64_t max_digit);
CFWord canonical_rotation(const CFWord& word);
// least rotation by an even offset; keys PSL(2,Z) classes of even words
CFWord canonical_even_rotation(const CFWord& word);
int primitive_period(const CFWord& word);
int primitive_even_period(const CFWord& word);

// Left-to-right product of (0 1; 1 n_k).
IntMatrix2 word_matrix(const CFWord& word);
HyperbolicClass reduced_matrix(const CFWord& word);
std::vector<HyperbolicClass> enumerate_classes(double norm_cap, int length_cap);

std::string census_csv(const std::vector<HyperbolicClass>& classes);

// Larger eigenvalue of a 2x2 matrix with trace t and determinant det = ±1.
long double expanding_eigenvalue(long double t, int det);

struct EnumerationLimits {
    double max_words = 5e7;
};
EnumerationLimits& enumeration_limits();

}  // namespace mayer
