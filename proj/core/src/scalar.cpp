#include "cobarlab/scalar.hpp"

namespace cobarlab {

Field parse_field(const std::string& s) {
    if (s == "F2" || s == "f2") return Field::F2;
    if (s == "Q" || s == "q") return Field::Q;
    throw std::runtime_error("unknown field '" + s + "' (expected F2 or Q)");
}

std::string field_name(Field f) { return f == Field::F2 ? "F2" : "Q"; }

Scalar Scalar::from_int(Field f, long n) {
    Scalar s(f);
    if (f == Field::F2) {
        s.bit_ = static_cast<uint8_t>(((n % 2) + 2) % 2);
    } else {
        s.q_ = n;
    }
    return s;
}

Scalar Scalar::from_fraction(long num, long den) {
    if (den == 0) throw std::domain_error("zero denominator");
    Scalar s(Field::Q);
    s.q_ = mpq_class(num, den);
    s.q_.canonicalize();
    return s;
}

bool Scalar::is_zero() const { return field_ == Field::F2 ? bit_ == 0 : q_ == 0; }
bool Scalar::is_one() const { return field_ == Field::F2 ? bit_ == 1 : q_ == 1; }

Scalar Scalar::operator-() const {
    Scalar r = *this;
    if (field_ == Field::Q) r.q_ = -r.q_;
    return r;
}

Scalar& Scalar::operator+=(const Scalar& o) {
    check_same(o);
    if (field_ == Field::F2) bit_ ^= o.bit_;
    else q_ += o.q_;
    return *this;
}

Scalar& Scalar::operator-=(const Scalar& o) {
    check_same(o);
    if (field_ == Field::F2) bit_ ^= o.bit_;
    else q_ -= o.q_;
    return *this;
}

Scalar& Scalar::operator*=(const Scalar& o) {
    check_same(o);
    if (field_ == Field::F2) bit_ &= o.bit_;
    else q_ *= o.q_;
    return *this;
}

Scalar& Scalar::operator/=(const Scalar& o) {
    check_same(o);
    if (o.is_zero()) throw std::domain_error("division by zero");
    if (field_ == Field::Q) q_ /= o.q_;
    return *this;
}

Scalar Scalar::inverse() const {
    if (is_zero()) throw std::domain_error("inverse of zero");
    if (field_ == Field::F2) return *this;
    Scalar r(Field::Q);
    r.q_ = 1 / q_;
    return r;
}

bool Scalar::operator==(const Scalar& o) const {
    if (field_ != o.field_) return false;
    return field_ == Field::F2 ? bit_ == o.bit_ : q_ == o.q_;
}

bool Scalar::operator<(const Scalar& o) const {
    check_same(o);
    return field_ == Field::F2 ? bit_ < o.bit_ : q_ < o.q_;
}

std::string Scalar::str() const {
    if (field_ == Field::F2) return bit_ ? "1" : "0";
    return q_.get_str();
}

}  // namespace cobarlab
