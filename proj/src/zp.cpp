#include "zsramsey/zp.hpp"

#include "zsramsey/error.hpp"

#include <string>

namespace zsramsey {

auto is_prime(std::uint64_t value) -> bool
{
    if (value < 2)
        return false;
    for (std::uint64_t q = 2; q * q <= value; ++q)
        if (value % q == 0)
            return false;
    return true;
}

Modulus::Modulus(std::uint32_t p) :
    _p(p)
{
    if (! is_prime(p))
        throw Error(ErrorKind::NotPrime, "modulus " + std::to_string(p) + " is not prime");
}

namespace
{
    auto check_same(const ZpElement & a, const ZpElement & b) -> void
    {
        if (a.modulus() != b.modulus())
            throw Error(ErrorKind::ModulusMismatch, "Z_" + std::to_string(a.modulus().value()) + " vs Z_" + std::to_string(b.modulus().value()));
    }
}

auto ZpElement::operator+(const ZpElement & other) const -> ZpElement
{
    check_same(*this, other);
    return ZpElement(_modulus.add(_value, other._value), _modulus);
}

auto ZpElement::operator-(const ZpElement & other) const -> ZpElement
{
    check_same(*this, other);
    return ZpElement(_modulus.sub(_value, other._value), _modulus);
}

auto operator<<(std::ostream & s, const ZpElement & x) -> std::ostream &
{
    return s << x.value();
}

}
