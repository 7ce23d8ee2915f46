// Exact scalar arithmetic over Q or a prime field F_p, selected at runtime.
#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace chainlls {

using BigInt = boost::multiprecision::cpp_int;
using BigRat = boost::multiprecision::cpp_rational;

// Raised on invalid user input (bad files, bad flags, malformed data).
struct Error : std::runtime_error {
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

// Raised when an internal invariant fails; indicates a bug, not bad input.
struct InternalError : Error {
    explicit InternalError(const std::string& msg) : Error("internal: " + msg) {}
};

// Coefficient field: p == 0 means Q, otherwise the prime field F_p.
struct Field {
    std::int64_t p = 0;

    static Field rationals() { return Field{0}; }
    static Field prime(std::int64_t p);

    bool is_prime_field() const { return p != 0; }
    bool operator==(const Field& other) const { return p == other.p; }
    bool operator!=(const Field& other) const { return p != other.p; }
    std::string str() const;
};

// One field element. In prime mode the value is kept as the canonical
// residue in [0, p), stored in the numerator with denominator 1.
class Scalar {
  public:
    Scalar() : v_(0), f_(Field::rationals()) {}
    Scalar(const Field& f, long long n) : v_(n), f_(f) { normalize(); }
    Scalar(const Field& f, const BigRat& v) : v_(v), f_(f) { normalize(); }

    static Scalar zero(const Field& f) { return Scalar(f, 0); }
    static Scalar one(const Field& f) { return Scalar(f, 1); }
    // Accepts "n" or "n/d"; in prime mode also reduces the quotient mod p.
    static Scalar parse(const Field& f, const std::string& text);

    const Field& field() const { return f_; }
    const BigRat& value() const { return v_; }
    bool is_zero() const { return v_ == 0; }
    bool is_one() const { return v_ == 1; }

    Scalar operator-() const;
    Scalar operator+(const Scalar& o) const;
    Scalar operator-(const Scalar& o) const;
    Scalar operator*(const Scalar& o) const;
    Scalar operator/(const Scalar& o) const;
    Scalar& operator+=(const Scalar& o) { return *this = *this + o; }
    Scalar& operator-=(const Scalar& o) { return *this = *this - o; }
    Scalar& operator*=(const Scalar& o) { return *this = *this * o; }
    Scalar inverse() const;

    bool operator==(const Scalar& o) const { return v_ == o.v_; }
    bool operator!=(const Scalar& o) const { return v_ != o.v_; }

    // Canonical text form: "n" for integers, "n/d" otherwise, no '+' sign.
    std::string str() const;

  private:
    void normalize();
    void check_same_field(const Scalar& o) const;

    BigRat v_;
    Field f_;
};

}  // namespace chainlls
