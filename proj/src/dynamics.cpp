#include "mayer/dynamics.hpp"

#include <algorithm>
#include <cstdio>
#include <functional>
#include <map>
#include <set>
#include <sstream>

namespace mayer {

EnumerationLimits& enumeration_limits() {
    static EnumerationLimits lim;
    return lim;
}

CFWord::CFWord(std::vector<std::int64_t> digits) : digits_(std::move(digits)) {
    if (digits_.empty()) throw DomainError("CFWord: empty word");
    for (auto d : digits_)
        if (d < 1) throw DomainError("CFWord: digits must be positive");
}

CFWord CFWord::rotated(std::size_t k) const {
    const std::size_t n = digits_.size();
    std::vector<std::int64_t> out(n);
    for (std::size_t i = 0; i < n; ++i) out[(i + k) % n] = digits_[i];
    return CFWord(std::move(out));
}

std::string CFWord::str(char sep) const {
    std::string s;
    for (std::size_t i = 0; i < digits_.size(); ++i) {
        if (i) s += sep;
        s += std::to_string(digits_[i]);
    }
    return s;
}

double gauss_map(double x) {
    if (!(x >= 0.0 && x <= 1.0)) throw DomainError("gauss_map: x outside [0,1]");
    if (x == 0.0) return 0.0;
    const double y = 1.0 / x;
    return y - std::floor(y);
}

IntMatrix2 word_matrix(const CFWord& word) {
    IntMatrix2 m{1, 0, 0, 1};
    for (auto n : word.digits()) {
        // (a b; c d)(0 1; 1 n) = (b, a + b n; d, c + d n)
        IntMatrix2 next{m.b, m.a + m.b * n, m.d, m.c + m.d * n};
        m = std::move(next);
    }
    return m;
}

QuadraticSurd periodic_point(const CFWord& word) {
    // ψ_{i_n}∘…∘ψ_{i_1} has matrix M_{i_n}…M_{i_1}: the left-to-right product of the reversed word
    std::vector<std::int64_t> rev(word.digits().rbegin(), word.digits().rend());
    IntMatrix2 g = word_matrix(CFWord(rev));
    const int det = (word.size() % 2) ? -1 : 1;
    BigInt t = g.trace();
    BigInt disc = t * t - 4 * det;
    // c z^2 + (d - a) z - b = 0, positive root
    return QuadraticSurd(g.a - g.d, 1, disc, 2 * g.c);
}

QuadraticSurd orbit_product_exact(const CFWord& word) {
    QuadraticSurd prod = periodic_point(word);
    for (std::size_t k = 1; k < word.size(); ++k) prod = prod * periodic_point(word.rotated(k));
    return prod;
}

double orbit_product(const CFWord& word) { return orbit_product_exact(word).to_double(); }

std::vector<CFWord> enumerate_fix_words(int n, std::int64_t max_digit) {
    if (n < 1 || max_digit < 1) throw DomainError("enumerate_fix_words: n and max_digit must be positive");
    const double count = std::pow(double(max_digit), n);
    if (count > enumeration_limits().max_words)
        throw ResourceError("enumerate_fix_words: max_digit^n exceeds the enumeration cap");
    std::vector<CFWord> out;
    out.reserve(std::size_t(count));
    std::vector<std::int64_t> w(n, 1);
    while (true) {
        out.emplace_back(w);
        int pos = n - 1;
        while (pos >= 0 && w[pos] == max_digit) w[pos--] = 1;
        if (pos < 0) break;
        ++w[pos];
    }
    return out;
}

namespace {

CFWord least_rotation(const CFWord& word, std::size_t stride) {
    CFWord best = word;
    for (std::size_t k = stride; k < word.size(); k += stride) {
        CFWord r = word.rotated(k);
        if (r < best) best = std::move(r);
    }
    return best;
}

bool has_period(const CFWord& w, std::size_t p) {
    for (std::size_t i = p; i < w.size(); ++i)
        if (w[i] != w[i - p]) return false;
    return true;
}

}  // namespace

CFWord canonical_rotation(const CFWord& word) { return least_rotation(word, 1); }

CFWord canonical_even_rotation(const CFWord& word) { return least_rotation(word, 2); }

int primitive_period(const CFWord& word) {
    const std::size_t n = word.size();
    for (std::size_t p = 1; p <= n; ++p)
        if (n % p == 0 && has_period(word, p)) return int(p);
    return int(n);
}

int primitive_even_period(const CFWord& word) {
    const std::size_t n = word.size();
    if (n % 2) throw ParityError("primitive_even_period: odd word length");
    for (std::size_t p = 2; p <= n; p += 2)
        if (n % p == 0 && has_period(word, p)) return int(p);
    return int(n);
}

long double expanding_eigenvalue(long double t, int det) {
    return 0.5L * (t + std::sqrt(t * t - 4.0L * det));
}

HyperbolicClass reduced_matrix(const CFWord& word) {
    if (word.size() % 2) throw ParityError("reduced_matrix: word length must be even");
    HyperbolicClass h;
    h.word = word;
    h.matrix = word_matrix(word);
    h.matrix_trace = h.matrix.trace();
    if (h.matrix_trace < 3) throw DomainError("reduced_matrix: trace below 3");
    const long double t = h.matrix_trace.convert_to<long double>();
    const long double lam = expanding_eigenvalue(t, 1);
    h.norm = double(lam * lam);
    h.geodesic_length = double(2.0L * std::log(lam));
    h.length_l = int(word.size() / 2);
    h.primitivity_k = int(word.size()) / primitive_even_period(word);
    if (!std::isfinite(h.norm)) throw OverflowError("reduced_matrix: norm overflows double");
    return h;
}

std::vector<HyperbolicClass> enumerate_classes(double norm_cap, int length_cap) {
    if (!(norm_cap > 1.0) || length_cap < 1) throw DomainError("enumerate_classes: need norm_cap > 1, length_cap >= 1");
    // N <= cap  <=>  t <= sqrt(cap) + 1/sqrt(cap)
    const long double root = std::sqrt((long double)norm_cap);
    const BigInt t_cap = BigInt(static_cast<long long>(std::floor(root + 1.0L / root + 1e-9L)));
    const std::size_t max_len = 2 * std::size_t(length_cap);

    std::set<CFWord> keys;
    std::vector<std::int64_t> digits;
    double visited = 0;

    // depth-first over words; the trace of any completion is at least the trace of
    // the prefix followed by all ones, which only grows with the prefix
    std::vector<IntMatrix2> stack{IntMatrix2{1, 0, 0, 1}};
    auto lower_bound_trace = [](const IntMatrix2& m, std::size_t remaining) {
        IntMatrix2 x = m;
        for (std::size_t i = 0; i < remaining; ++i) x = IntMatrix2{x.b, x.a + x.b, x.d, x.c + x.d};
        return x.trace();
    };

    std::function<void()> dfs = [&]() {
        const std::size_t len = digits.size();
        if (len >= 2 && len % 2 == 0) {
            const IntMatrix2& m = stack.back();
            BigInt t = m.trace();
            if (t <= t_cap && t >= 3) keys.insert(canonical_even_rotation(CFWord(digits)));
        }
        if (len == max_len) return;
        for (std::int64_t i = 1;; ++i) {
            const IntMatrix2& m = stack.back();
            IntMatrix2 next{m.b, m.a + m.b * i, m.d, m.c + m.d * i};
            const std::size_t rem_to_even = (len + 1) % 2;
            if (lower_bound_trace(next, rem_to_even) > t_cap) break;
            if (++visited > enumeration_limits().max_words)
                throw ResourceError("enumerate_classes: enumeration cap exceeded");
            digits.push_back(i);
            stack.push_back(next);
            dfs();
            stack.pop_back();
            digits.pop_back();
        }
    };
    dfs();

    std::vector<HyperbolicClass> out;
    out.reserve(keys.size());
    for (const auto& w : keys) out.push_back(reduced_matrix(w));
    std::stable_sort(out.begin(), out.end(), [](const HyperbolicClass& x, const HyperbolicClass& y) {
        if (x.matrix_trace != y.matrix_trace) return x.matrix_trace < y.matrix_trace;
        return x.word < y.word;
    });
    return out;
}

std::string census_csv(const std::vector<HyperbolicClass>& classes) {
    std::ostringstream os;
    os << "word,trace,norm,length_l,primitivity_k,geodesic_length\n";
    char buf[64];
    for (const auto& h : classes) {
        os << h.word.str('-') << ',' << h.matrix_trace << ',';
        std::snprintf(buf, sizeof buf, "%.17g", h.norm);
        os << buf << ',' << h.length_l << ',' << h.primitivity_k << ',';
        std::snprintf(buf, sizeof buf, "%.17g", h.geodesic_length);
        os << buf << '\n';
    }
    return os.str();
}

}  // namespace mayer
