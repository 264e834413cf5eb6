#include <cstdint>
#include <sstream>

#include "mayer/dynamics.hpp"

namespace mayer {

namespace {

using boost::multiprecision::gcd;

// d = f^2 * core with core squarefree. Complete for d < 2^64 (trial division to
// the cube root, then a perfect-square test on the cofactor); for larger d only
// prime factors below 10^6 are removed.
void squarefree_split(const BigInt& d, BigInt& f, BigInt& core) {
    f = 1;
    core = 1;
    BigInt rem = d;
    auto take = [&](std::uint64_t p) {
        int e = 0;
        while (rem % p == 0) {
            rem /= p;
            ++e;
        }
        for (int i = 0; i < e / 2; ++i) f *= p;
        if (e % 2) core *= p;
    };
    if (rem <= BigInt(std::numeric_limits<std::uint64_t>::max())) {
        std::uint64_t r = static_cast<std::uint64_t>(rem);
        std::uint64_t ff = 1, cc = 1;
        auto take64 = [&](std::uint64_t p) {
            int e = 0;
            while (r % p == 0) {
                r /= p;
                ++e;
            }
            for (int i = 0; i < e / 2; ++i) ff *= p;
            if (e % 2) cc *= p;
        };
        take64(2);
        for (std::uint64_t p = 3; p * p * p <= r; p += 2) take64(p);
        std::uint64_t s = static_cast<std::uint64_t>(std::sqrt(static_cast<long double>(r)));
        while (s * s > r) --s;
        while ((s + 1) * (s + 1) <= r) ++s;
        if (s * s == r && r > 1) {
            ff *= s;
            r = 1;
        }
        f = BigInt(ff);
        core = BigInt(cc) * BigInt(r);
        return;
    }
    take(2);
    for (std::uint64_t p = 3; p < 1000000 && BigInt(p) * p <= rem; p += 2) take(p);
    BigInt s = boost::multiprecision::sqrt(rem);
    if (s * s == rem && rem > 1) {
        f *= s;
        rem = 1;
    }
    core *= rem;
}

long double to_ld(const BigInt& x) { return x.convert_to<long double>(); }

}  // namespace

QuadraticSurd::QuadraticSurd(BigInt p, BigInt q, BigInt d, BigInt r)
    : p_(std::move(p)), q_(std::move(q)), d_(std::move(d)), r_(std::move(r)) {
    if (r_ == 0) throw DomainError("QuadraticSurd: zero denominator");
    if (d_ <= 1) throw DomainError("QuadraticSurd: radicand must exceed 1");
    BigInt f, core;
    squarefree_split(d_, f, core);
    if (core == 1) throw DomainError("QuadraticSurd: radicand is a perfect square");
    q_ *= f;
    d_ = core;
    normalize();
}

void QuadraticSurd::normalize() {
    if (r_ < 0) {
        p_ = -p_;
        q_ = -q_;
        r_ = -r_;
    }
    BigInt g = gcd(gcd(abs(p_), abs(q_)), r_);
    if (g > 1) {
        p_ /= g;
        q_ /= g;
        r_ /= g;
    }
}

long double QuadraticSurd::to_long_double() const {
    const long double root = std::sqrt(to_ld(d_));
    const bool cancel = (p_ > 0 && q_ < 0) || (p_ < 0 && q_ > 0);
    if (!cancel) return (to_ld(p_) + to_ld(q_) * root) / to_ld(r_);
    // (p + q√d) = (p² - q²d) / (p - q√d)
    BigInt num = p_ * p_ - q_ * q_ * d_;
    return to_ld(num) / (to_ld(r_) * (to_ld(p_) - to_ld(q_) * root));
}

double QuadraticSurd::to_double() const { return static_cast<double>(to_long_double()); }

BigInt QuadraticSurd::floor() const {
    // floor(q√d) exactly, then floor((p + floor(q√d)) / r)
    BigInt qq = q_ * q_ * d_;
    BigInt s = boost::multiprecision::sqrt(qq);
    BigInt fl = (q_ >= 0) ? s : BigInt(-s - 1);
    BigInt num = p_ + fl;
    BigInt quo = num / r_;
    if (num % r_ != 0 && num < 0) quo -= 1;
    return quo;
}

QuadraticSurd QuadraticSurd::operator*(const QuadraticSurd& o) const {
    if (d_ != o.d_) throw DomainError("QuadraticSurd: product of surds from different fields");
    QuadraticSurd out = *this;
    out.p_ = p_ * o.p_ + q_ * o.q_ * d_;
    out.q_ = p_ * o.q_ + q_ * o.p_;
    out.r_ = r_ * o.r_;
    out.normalize();
    return out;
}

QuadraticSurd QuadraticSurd::operator-(const BigInt& k) const {
    QuadraticSurd out = *this;
    out.p_ = p_ - k * r_;
    out.normalize();
    return out;
}

QuadraticSurd QuadraticSurd::reciprocal() const {
    QuadraticSurd out = *this;
    out.p_ = r_ * p_;
    out.q_ = -r_ * q_;
    out.r_ = p_ * p_ - q_ * q_ * d_;
    if (out.r_ == 0) throw DomainError("QuadraticSurd: reciprocal of zero");
    out.normalize();
    return out;
}

QuadraticSurd QuadraticSurd::gauss_shift() const {
    QuadraticSurd y = reciprocal();
    return y - y.floor();
}

std::string QuadraticSurd::str() const {
    std::ostringstream os;
    os << "(" << p_ << (q_ < 0 ? " - " : " + ") << abs(q_) << "*sqrt(" << d_ << "))/" << r_;
    return os.str();
}

}  // namespace mayer
