#pragma once

#include <gmpxx.h>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace cobarlab {

enum class Field : uint8_t { F2, Q };

Field parse_field(const std::string& s);
std::string field_name(Field f);

/// An element of an exact coefficient field: a bit over F2 or a reduced
/// fraction of arbitrary-precision integers over Q. There is no rounding
/// anywhere in the system; Q values are kept in lowest terms with positive
/// denominator (GMP canonical form).
class Scalar {
public:
    Scalar() : field_(Field::Q), bit_(0), q_(0) {}
    explicit Scalar(Field f) : field_(f), bit_(0), q_(0) {}

    static Scalar zero(Field f) { return Scalar(f); }
    static Scalar one(Field f) { return from_int(f, 1); }
    static Scalar from_int(Field f, long n);
    static Scalar from_fraction(long num, long den);  // Q only

    /// (-1)^k in the field; the identity over F2.
    static Scalar sign(Field f, long k) { return from_int(f, (k % 2 == 0) ? 1 : -1); }

    Field field() const { return field_; }
    bool is_zero() const;
    bool is_one() const;

    Scalar operator-() const;
    Scalar& operator+=(const Scalar& o);
    Scalar& operator-=(const Scalar& o);
    Scalar& operator*=(const Scalar& o);
    Scalar& operator/=(const Scalar& o);
    friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
    friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
    friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
    friend Scalar operator/(Scalar a, const Scalar& b) { return a /= b; }

    Scalar inverse() const;

    bool operator==(const Scalar& o) const;
    bool operator!=(const Scalar& o) const { return !(*this == o); }
    /// Total order within one field; used only to keep containers canonical.
    bool operator<(const Scalar& o) const;

    std::string str() const;

private:
    void check_same(const Scalar& o) const {
        if (field_ != o.field_) throw std::logic_error("scalar field mismatch");
    }
    Field field_;
    uint8_t bit_;    // F2 payload
    mpq_class q_;    // Q payload
};

}  // namespace cobarlab
