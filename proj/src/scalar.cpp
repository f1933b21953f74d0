#include "lk/scalar.hpp"

#include <cctype>
#include <cmath>
#include <cstdlib>
#include <cstring>
#include <numeric>

namespace lk {

namespace {

// Splits n = s^2 * d with d square-free; returns (s, d).  Trial division is
// fine at the magnitudes the tags take.
std::pair<long, long> extract_square(long n) {
    long s = 1, d = 1;
    for (long p = 2; p * p <= n; ++p) {
        int e = 0;
        while (n % p == 0) { n /= p; ++e; }
        for (int i = 0; i < e / 2; ++i) s *= p;
        if (e % 2) d *= p;
    }
    d *= n;
    return {s, d};
}

long smallest_prime_factor(long n) {
    for (long p = 2; p * p <= n; ++p)
        if (n % p == 0) return p;
    return n;
}

// sqrt(d) enclosed in [lo, hi] with hi - lo <= 2^-bits, by Newton iteration
// on the upper bound (x -> (x + d/x)/2 decreases monotonically to sqrt(d)).
std::pair<mpq_class, mpq_class> sqrt_interval(long d, unsigned bits) {
    mpq_class hi = d >= 1 ? mpq_class(d) : mpq_class(1);
    mpq_class dd(d);
    mpq_class eps(1);
    eps >>= bits;
    while (true) {
        mpq_class lo = dd / hi;
        if (hi - lo <= eps) return {lo, hi};
        hi = (hi + lo) / 2;
        hi.canonicalize();
    }
}

}  // namespace

Scalar::Scalar(long num, long den) {
    if (den == 0) throw std::domain_error("Scalar: zero denominator");
    mpq_class q(num, den);
    q.canonicalize();
    if (q != 0) parts_[1] = q;
}

void Scalar::prune() {
    for (auto it = parts_.begin(); it != parts_.end();)
        it = (it->second == 0) ? parts_.erase(it) : std::next(it);
}

Scalar Scalar::sqrt_of(long n) {
    if (n < 0) throw std::domain_error("Scalar: sqrt of negative");
    if (n == 0) return Scalar();
    auto [s, d] = extract_square(n);
    Scalar r;
    r.parts_[d] = mpq_class(s);
    return r;
}

bool Scalar::is_rational() const {
    return parts_.empty() || (parts_.size() == 1 && parts_.begin()->first == 1);
}

mpq_class Scalar::rational_value() const {
    if (!is_rational()) throw std::domain_error("Scalar: not rational: " + str());
    return parts_.empty() ? mpq_class(0) : parts_.begin()->second;
}

Scalar Scalar::operator-() const {
    Scalar r(*this);
    for (auto& [d, c] : r.parts_) c = -c;
    return r;
}

Scalar& Scalar::operator+=(const Scalar& o) {
    for (const auto& [d, c] : o.parts_) parts_[d] += c;
    prune();
    return *this;
}

Scalar& Scalar::operator-=(const Scalar& o) {
    for (const auto& [d, c] : o.parts_) parts_[d] -= c;
    prune();
    return *this;
}

Scalar operator*(const Scalar& a, const Scalar& b) {
    Scalar r;
    for (const auto& [d1, c1] : a.parts_)
        for (const auto& [d2, c2] : b.parts_) {
            // sqrt(d1)*sqrt(d2) = g*sqrt(d1/g * d2/g)  with g = gcd(d1,d2);
            // both factors of the new radicand are coprime and square-free.
            long g = std::gcd(d1, d2);
            long d = (d1 / g) * (d2 / g);
            r.parts_[d] += c1 * c2 * g;
        }
    r.prune();
    return r;
}

Scalar Scalar::inverse() const {
    if (is_zero()) throw std::domain_error("Scalar: division by zero");
    if (is_rational()) {
        Scalar r;
        r.parts_[1] = 1 / parts_.begin()->second;
        return r;
    }
    // Rationalize one prime at a time: write x = A + sqrt(p)*B with A, B free
    // of p, then 1/x = (A - sqrt(p)B) / (A^2 - p B^2) and recurse on the
    // denominator, which involves strictly fewer primes.
    long p = 0;
    for (const auto& [d, c] : parts_)
        if (d != 1) { p = smallest_prime_factor(d); break; }
    Scalar a, b;
    for (const auto& [d, c] : parts_) {
        if (d % p == 0)
            b.parts_[d / p] += c;
        else
            a.parts_[d] += c;
    }
    a.prune();
    b.prune();
    Scalar conj = a - Scalar::sqrt_of(p) * b;
    Scalar denom = *this * conj;
    return conj * denom.inverse();
}

int Scalar::sign() const {
    if (parts_.empty()) return 0;
    if (is_rational()) return sgn(parts_.begin()->second);
    for (unsigned bits = 32; bits <= 4096; bits *= 2) {
        mpq_class lo(0), hi(0);
        for (const auto& [d, c] : parts_) {
            if (d == 1) { lo += c; hi += c; continue; }
            auto [slo, shi] = sqrt_interval(d, bits);
            if (c >= 0) { lo += c * slo; hi += c * shi; }
            else        { lo += c * shi; hi += c * slo; }
        }
        if (lo > 0) return 1;
        if (hi < 0) return -1;
    }
    // A nonzero element of the field cannot straddle zero forever.
    throw std::logic_error("Scalar::sign: interval refinement failed");
}

double Scalar::to_double() const {
    double v = 0;
    for (const auto& [d, c] : parts_) v += c.get_d() * std::sqrt((double)d);
    return v;
}

std::set<long> Scalar::tags() const {
    std::set<long> t;
    for (const auto& [d, c] : parts_)
        if (d != 1) t.insert(d);
    return t;
}

std::string Scalar::str() const {
    if (parts_.empty()) return "0";
    // sqrt terms first (descending tag), rational part last
    std::string out;
    bool first = true;
    auto emit = [&](long d, const mpq_class& c) {
        mpq_class a = ::abs(c);
        bool neg = c < 0;
        std::string body;
        if (d == 1)
            body = a.get_str();
        else if (a == 1)
            body = "sqrt" + std::to_string(d);
        else
            body = a.get_str() + "*sqrt" + std::to_string(d);
        if (first) {
            out += (neg ? "-" : "") + body;
            first = false;
        } else {
            out += (neg ? " - " : " + ") + body;
        }
    };
    for (auto it = parts_.rbegin(); it != parts_.rend(); ++it)
        if (it->first != 1) emit(it->first, it->second);
    auto rat = parts_.find(1);
    if (rat != parts_.end()) emit(1, rat->second);
    return out;
}

namespace {

struct Parser {
    const std::string& s;
    size_t i = 0;
    explicit Parser(const std::string& str) : s(str) {}

    void skip() { while (i < s.size() && std::isspace((unsigned char)s[i])) ++i; }
    bool eat(char c) {
        skip();
        if (i < s.size() && s[i] == c) { ++i; return true; }
        return false;
    }
    bool peek_digit() {
        skip();
        return i < s.size() && std::isdigit((unsigned char)s[i]);
    }
    bool peek_word(const char* w) {
        skip();
        return s.compare(i, std::strlen(w), w) == 0;
    }

    mpz_class integer() {
        skip();
        size_t start = i;
        while (i < s.size() && std::isdigit((unsigned char)s[i])) ++i;
        if (start == i) throw std::invalid_argument("Scalar::parse: digit expected in '" + s + "'");
        return mpz_class(s.substr(start, i - start));
    }

    // term := [coef] ['*'] [sqrtN] ['/' int]   (at least one of coef, sqrtN)
    Scalar term() {
        mpq_class coef(1);
        bool have_coef = false;
        if (peek_digit()) {
            mpz_class num = integer();
            coef = num;
            if (eat('/')) coef /= integer();
            coef.canonicalize();
            have_coef = true;
        }
        eat('*');
        Scalar val(coef);
        if (peek_word("sqrt")) {
            i += 4;
            long d = (long)integer().get_si();
            val = Scalar(coef) * Scalar::sqrt_of(d);
            if (eat('/')) {
                mpq_class den(integer());
                val = val * Scalar(mpq_class(1) / den);
            }
        } else if (!have_coef) {
            throw std::invalid_argument("Scalar::parse: malformed term in '" + s + "'");
        }
        return val;
    }

    Scalar expr() {
        Scalar acc;
        bool neg = eat('-');
        if (!neg) eat('+');
        acc += neg ? -term() : term();
        while (true) {
            skip();
            if (i >= s.size()) break;
            if (eat('+'))
                acc += term();
            else if (eat('-'))
                acc -= term();
            else
                throw std::invalid_argument("Scalar::parse: unexpected '" +
                                            s.substr(i) + "'");
        }
        return acc;
    }
};

}  // namespace

Scalar Scalar::parse(const std::string& s) {
    Parser p(s);
    return p.expr();
}

bool ScalarField::contains(const Scalar& s) const {
    for (long t : s.tags())
        if (!tags.count(t)) return false;
    return true;
}

ScalarField ScalarField::parse(const std::string& name) {
    ScalarField f;
    if (name == "Q") return f;
    if (name.rfind("Q(", 0) != 0 || name.back() != ')')
        throw std::invalid_argument("ScalarField: expected Q or Q(...): " + name);
    std::string inner = name.substr(2, name.size() - 3);
    size_t pos = 0;
    while (pos < inner.size()) {
        size_t comma = inner.find(',', pos);
        std::string tok = inner.substr(pos, comma == std::string::npos ? std::string::npos : comma - pos);
        if (tok.rfind("sqrt", 0) != 0)
            throw std::invalid_argument("ScalarField: bad tag: " + tok);
        long n = std::stol(tok.substr(4));
        auto sq = Scalar::sqrt_of(n);
        for (long t : sq.tags()) f.tags.insert(t);
        pos = comma == std::string::npos ? inner.size() : comma + 1;
    }
    // close under products: sqrt(d)*sqrt(e) lands on the square-free part of d*e
    bool grew = true;
    while (grew) {
        grew = false;
        std::vector<long> cur(f.tags.begin(), f.tags.end());
        for (long d : cur)
            for (long e : cur) {
                long g = std::gcd(d, e);
                long de = (d / g) * (e / g);
                if (de != 1 && !f.tags.count(de)) {
                    f.tags.insert(de);
                    grew = true;
                }
            }
    }
    return f;
}

std::string ScalarField::str() const {
    if (tags.empty()) return "Q";
    std::string out = "Q(";
    bool first = true;
    for (long t : tags) {
        if (!first) out += ",";
        out += "sqrt" + std::to_string(t);
        first = false;
    }
    return out + ")";
}

}  // namespace lk
