#pragma once

#include <cstdint>
#include <ostream>

namespace zsramsey {

using Residue = std::uint32_t;

auto is_prime(std::uint64_t value) -> bool;

/// A prime modulus. Primality is checked once, on construction (trial
/// division; moduli here are small).
class Modulus
{
public:
    explicit Modulus(std::uint32_t p);

    auto value() const noexcept -> std::uint32_t { return _p; }

    auto reduce(std::int64_t x) const noexcept -> Residue
    {
        auto r = x % static_cast<std::int64_t>(_p);
        return static_cast<Residue>(r < 0 ? r + _p : r);
    }

    auto add(Residue a, Residue b) const noexcept -> Residue
    {
        auto s = a + b;
        return s >= _p ? s - _p : s;
    }

    auto sub(Residue a, Residue b) const noexcept -> Residue { return a >= b ? a - b : a + _p - b; }
    auto neg(Residue a) const noexcept -> Residue { return a == 0 ? 0 : _p - a; }

    friend auto operator==(const Modulus &, const Modulus &) -> bool = default;

private:
    std::uint32_t _p;
};

class ZpElement
{
public:
    ZpElement(std::int64_t value, Modulus modulus) :
        _modulus(modulus), _value(modulus.reduce(value))
    {
    }

    auto value() const noexcept -> Residue { return _value; }
    auto modulus() const noexcept -> Modulus { return _modulus; }

    auto operator+(const ZpElement & other) const -> ZpElement;
    auto operator-(const ZpElement & other) const -> ZpElement;
    auto operator-() const -> ZpElement { return ZpElement(_modulus.neg(_value), _modulus); }

    friend auto operator==(const ZpElement &, const ZpElement &) -> bool = default;

private:
    Modulus _modulus;
    Residue _value;
};

auto operator<<(std::ostream & s, const ZpElement & x) -> std::ostream &;

}
