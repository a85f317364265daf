#include "support.hpp"

#include "zsramsey/rng.hpp"
#include "zsramsey/sumset.hpp"
#include "zsramsey/zp.hpp"

#include <doctest.h>

using namespace zsramsey;
using namespace zsramsey::test;

namespace
{
    auto pairs_of(std::uint32_t p, std::initializer_list<std::pair<int, int>> values) -> std::vector<ChoicePair>
    {
        std::vector<ChoicePair> result;
        for (auto [a, b] : values)
            result.emplace_back(ZpElement(a, Modulus(p)), ZpElement(b, Modulus(p)));
        return result;
    }
}

TEST_CASE("Z_p arithmetic")
{
    Modulus p(7);
    CHECK((ZpElement(5, p) + ZpElement(4, p)).value() == 2);
    CHECK((ZpElement(2, p) - ZpElement(5, p)).value() == 4);
    CHECK((-ZpElement(3, p)).value() == 4);
    CHECK(ZpElement(-1, p).value() == 6);
    CHECK(kind_of([] { Modulus(9); }) == ErrorKind::NotPrime);
    CHECK(kind_of([] { Modulus(1); }) == ErrorKind::NotPrime);
    CHECK(kind_of([] { (void) (ZpElement(1, Modulus(3)) + ZpElement(1, Modulus(5))); }) == ErrorKind::ModulusMismatch);
}

TEST_CASE("reachable sums")
{
    CHECK(reachable_sums(pairs_of(3, { { 0, 1 }, { 0, 1 } })).final_set() == std::vector<Residue> { 0, 1, 2 });
    CHECK(reachable_sums(pairs_of(5, { { 0, 2 } })).final_set() == std::vector<Residue> { 0, 2 });
    CHECK(reachable_sums(pairs_of(3, { { 1, 2 }, { 0, 2 } })).final_set() == std::vector<Residue> { 0, 1, 2 });
    CHECK(kind_of([] { reachable_sums({}); }) == ErrorKind::PreconditionViolation);
}

TEST_CASE("select_sequence")
{
    auto choose = [] (std::uint32_t p, std::initializer_list<std::pair<int, int>> values, int target) {
        auto pairs = pairs_of(p, values);
        auto choices = select_sequence(pairs, ZpElement(target, Modulus(p)));
        CHECK(sequence_sum(pairs, choices).value() == static_cast<Residue>(target));
        return choices;
    };
    using C = Choice;
    CHECK(choose(3, { { 0, 1 }, { 0, 1 } }, 2) == std::vector { C::Second, C::Second });
    CHECK(choose(5, { { 0, 2 }, { 0, 3 }, { 0, 4 }, { 0, 1 } }, 0) == std::vector { C::First, C::First, C::First, C::First });
    // Of the four sequences only first+second reaches 0 (1+2).
    CHECK(choose(3, { { 1, 2 }, { 0, 2 } }, 0) == std::vector { C::First, C::Second });

    auto pairs = pairs_of(5, { { 0, 2 } });
    CHECK(kind_of([&] { select_sequence(pairs, ZpElement(1, Modulus(5))); }) == ErrorKind::Unreachable);
}

TEST_CASE("reachable sets match enumeration and the lower bound")
{
    Rng rng(2024);
    const std::uint32_t primes[] = { 2, 3, 5, 7, 11, 13 };
    for (int trial = 0; trial < 2000; ++trial) {
        auto p = primes[uniform_below(rng, 6)];
        std::size_t s = 1 + uniform_below(rng, 12);
        std::vector<std::pair<Residue, Residue>> raw;
        std::vector<ChoicePair> pairs;
        std::size_t total = 0;
        for (std::size_t i = 0; i < s; ++i) {
            Residue a = static_cast<Residue>(uniform_below(rng, p)), b = static_cast<Residue>(uniform_below(rng, p));
            raw.emplace_back(a, b);
            pairs.emplace_back(ZpElement(a, Modulus(p)), ZpElement(b, Modulus(p)));
            total += a == b ? 1 : 2;
        }
        auto expected = brute_force_sums(raw, p);
        auto table = reachable_sums(pairs);
        auto got = table.final_set();
        REQUIRE(std::vector<Residue>(expected.begin(), expected.end()) == got);
        REQUIRE(got.size() >= std::min<std::size_t>(p, total - s + 1));
        REQUIRE(cauchy_davenport_bound(pairs) == std::min<std::size_t>(p, total - s + 1));
        for (auto target : got)
            REQUIRE(sequence_sum(pairs, select_sequence(pairs, ZpElement(target, Modulus(p)))).value() == target);
    }
}
