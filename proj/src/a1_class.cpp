#include "motivic/a1_class.hpp"

#include "motivic/convolution.hpp"
#include "motivic/errors.hpp"

namespace motivic {

BasePoint BasePoint::parse(const std::string& text)
{
    Rational value;
    const auto slash = text.find('/');
    try {
        if (slash == std::string::npos) {
            value = Rational(Integer(text));
        } else {
            const Integer num(text.substr(0, slash));
            const Integer den(text.substr(slash + 1));
            if (den == 0)
                throw ParseError("base point has zero denominator: '" + text + "'");
            value = Rational(num, den);
        }
    } catch (const std::invalid_argument&) {
        throw ParseError("base point must be an integer or p/q, got '" + text + "'");
    }
    return BasePoint(value);
}

std::string BasePoint::to_string() const
{
    return value_.get_str();
}

A1Class A1Class::at(const BasePoint& point, const MuClass& c)
{
    A1Class f;
    f.add_at(point, c);
    return f;
}

MuClass A1Class::fiber(const BasePoint& point) const
{
    auto it = support_.find(point);
    return it == support_.end() ? MuClass() : it->second;
}

void A1Class::add_at(const BasePoint& point, const MuClass& c)
{
    if (c.is_zero())
        return;
    auto [it, inserted] = support_.try_emplace(point, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero())
            support_.erase(it);
    }
}

A1Class& A1Class::operator+=(const A1Class& other)
{
    for (const auto& [point, c] : other.support_)
        add_at(point, c);
    return *this;
}

A1Class& A1Class::operator-=(const A1Class& other)
{
    for (const auto& [point, c] : other.support_)
        add_at(point, -c);
    return *this;
}

A1Class& A1Class::operator*=(const Laurent& scalar)
{
    Support scaled;
    for (auto& [point, c] : support_) {
        MuClass s = c * scalar;
        if (!s.is_zero())
            scaled.emplace(point, std::move(s));
    }
    support_ = std::move(scaled);
    return *this;
}

A1Class a1_star(const A1Class& f, const A1Class& g)
{
    A1Class result;
    for (const auto& [a, fa] : f.support())
        for (const auto& [b, gb] : g.support())
            result += A1Class::at(a + b, star(fa, gb));
    return result;
}

A1Class a1_unit()
{
    return A1Class::at(BasePoint(0), MuClass::one());
}

A1Class a1_lefschetz()
{
    return A1Class::at(BasePoint(0), MuClass::lefschetz());
}

MuClass epsilon_push(const A1Class& f)
{
    MuClass total;
    for (const auto& [point, c] : f.support())
        total += c;
    return total;
}

} // namespace motivic
