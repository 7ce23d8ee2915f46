#include "chainlls/scalar.hpp"

namespace chainlls {

namespace {

bool is_prime_int(std::int64_t n) {
    if (n < 2) return false;
    for (std::int64_t q = 2; q * q <= n; ++q) {
        if (n % q == 0) return false;
    }
    return true;
}

}  // namespace

Field Field::prime(std::int64_t p) {
    if (!is_prime_int(p)) {
        throw Error("field characteristic must be prime, got " + std::to_string(p));
    }
    return Field{p};
}

std::string Field::str() const {
    return is_prime_field() ? "prime:" + std::to_string(p) : "rational";
}

void Scalar::normalize() {
    if (!f_.is_prime_field()) return;
    const BigInt p(f_.p);
    BigInt num = boost::multiprecision::numerator(v_);
    BigInt den = boost::multiprecision::denominator(v_);
    BigInt dmod = den % p;
    if (dmod < 0) dmod += p;
    if (dmod == 0) {
        throw Error("denominator divisible by " + std::to_string(f_.p) +
                    " in prime field");
    }
    BigInt nmod = num % p;
    if (nmod < 0) nmod += p;
    // Invert dmod by Fermat: d^(p-2) mod p.
    BigInt inv = 1, base = dmod, e = p - 2;
    while (e > 0) {
        if ((e & 1) != 0) inv = inv * base % p;
        base = base * base % p;
        e >>= 1;
    }
    v_ = BigRat(nmod * inv % p);
}

void Scalar::check_same_field(const Scalar& o) const {
    if (f_ != o.f_) {
        throw InternalError("mixed-field scalar arithmetic (" + f_.str() + " vs " +
                            o.f_.str() + ")");
    }
}

Scalar Scalar::parse(const Field& f, const std::string& text) {
    if (text.empty()) throw Error("empty scalar literal");
    for (char c : text) {
        if ((c < '0' || c > '9') && c != '-' && c != '/') {
            throw Error("bad scalar literal '" + text + "'");
        }
    }
    try {
        return Scalar(f, BigRat(text));
    } catch (const std::exception&) {
        throw Error("bad scalar literal '" + text + "'");
    }
}

Scalar Scalar::operator-() const { return Scalar(f_, -v_); }

Scalar Scalar::operator+(const Scalar& o) const {
    check_same_field(o);
    return Scalar(f_, v_ + o.v_);
}

Scalar Scalar::operator-(const Scalar& o) const {
    check_same_field(o);
    return Scalar(f_, v_ - o.v_);
}

Scalar Scalar::operator*(const Scalar& o) const {
    check_same_field(o);
    return Scalar(f_, v_ * o.v_);
}

Scalar Scalar::operator/(const Scalar& o) const {
    check_same_field(o);
    return *this * o.inverse();
}

Scalar Scalar::inverse() const {
    if (is_zero()) throw InternalError("inverse of zero");
    return Scalar(f_, BigRat(1) / v_);
}

std::string Scalar::str() const {
    return v_.str();
}

}  // namespace chainlls
