#pragma once

#include <map>
#include <string>

#include "motivic/mu_class.hpp"

namespace motivic {

// A rational point of the affine line.
class BasePoint {
public:
    BasePoint() = default;
    explicit BasePoint(const Rational& value) : value_(value) { value_.canonicalize(); }
    explicit BasePoint(long value) : value_(value) {}

    // Accepts "p/q" or an integer literal.
    static BasePoint parse(const std::string& text);

    const Rational& value() const { return value_; }
    std::string to_string() const;

    friend BasePoint operator+(const BasePoint& a, const BasePoint& b) { return BasePoint(Rational(a.value_ + b.value_)); }
    friend bool operator==(const BasePoint& a, const BasePoint& b) { return a.value_ == b.value_; }
    friend bool operator<(const BasePoint& a, const BasePoint& b) { return a.value_ < b.value_; }

private:
    Rational value_ = 0;
};

// Class over the affine line supported on finitely many rational points:
// the sum over a of i_{a!}(c_a).
class A1Class {
public:
    using Support = std::map<BasePoint, MuClass>;

    A1Class() = default;

    static A1Class at(const BasePoint& point, const MuClass& c);

    const Support& support() const { return support_; }
    bool is_zero() const { return support_.empty(); }
    // Fibre class at `point`, zero outside the support.
    MuClass fiber(const BasePoint& point) const;

    A1Class& operator+=(const A1Class& other);
    A1Class& operator-=(const A1Class& other);
    A1Class& operator*=(const Laurent& scalar);

    friend A1Class operator+(A1Class a, const A1Class& b) { return a += b; }
    friend A1Class operator-(A1Class a, const A1Class& b) { return a -= b; }
    friend A1Class operator*(A1Class a, const Laurent& s) { return a *= s; }
    friend A1Class operator*(const Laurent& s, A1Class a) { return a *= s; }

    friend bool operator==(const A1Class& a, const A1Class& b) { return a.support_ == b.support_; }

private:
    void add_at(const BasePoint& point, const MuClass& c);

    Support support_;
};

// (f * g)(c) = sum over a + b = c of psi_pair(f(a) (x) g(b)).
A1Class a1_star(const A1Class& f, const A1Class& g);

// The point 0 with class 1; unit for a1_star.
A1Class a1_unit();

// The localizing element: L placed at 0.
A1Class a1_lefschetz();

// Pushforward to the point: sum of the fiber classes.
MuClass epsilon_push(const A1Class& f);

} // namespace motivic
