#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "test_support.hpp"

using namespace nmds;
using testing::gf16;
using testing::gf256;

namespace {

ErrorKind kind_of(auto&& fn) {
    try {
        fn();
    } catch (const Error& e) {
        return e.kind();
    }
    FAIL("expected an nmds::Error");
    return ErrorKind::InvalidArgument;
}

std::vector<Field> small_fields() {
    return {Field::parse("GF(2^1;0x3)"),   Field::parse("GF(2^2;0x7)"),  gf16(), gf256(),
            Field::parse("GF(3^1;0,1)"),   Field::parse("GF(3^2;2,2,1)"), Field::parse("GF(3^3;1,2,0,1)"),
            Field::parse("GF(5^2;2,1,1)"), Field::parse("GF(7^1;0,1)")};
}

}  // namespace

TEST_CASE("construction and canonical text") {
    const Field f = Field::create(2, 4, {1, 1, 0, 0, 1});
    CHECK(f.order() == 16);
    CHECK(f.characteristic() == 2);
    CHECK(f.degree() == 4);
    CHECK(f.to_string() == "GF(2^4;0x13)");
    CHECK(f == gf16());
    CHECK(Field::parse(f.to_string()) == f);
    CHECK(gf256().to_string() == "GF(2^8;0x1c3)");
    const Field g = Field::parse("GF(3^2;2,2,1)");
    CHECK(g.order() == 9);
    CHECK(Field::parse(g.to_string()) == g);
}

TEST_CASE("construction errors") {
    CHECK(kind_of([] { Field::create(4, 2, {1, 1, 1}); }) == ErrorKind::NotPrime);
    CHECK(kind_of([] { Field::create(2, 4, {1, 0, 0, 0, 1}); }) == ErrorKind::NotIrreducible);
    CHECK(kind_of([] { Field::create(2, 4, {1, 1, 0, 0, 0}); }) == ErrorKind::InvalidArgument);
    CHECK(kind_of([] { Field::create(2, 4, {1, 1, 0, 1}); }) == ErrorKind::InvalidArgument);
    CHECK(kind_of([] { Field::create(3, 2, {2, 3, 1}); }) == ErrorKind::InvalidArgument);
    CHECK(kind_of([] { Field::create(2, 33, std::vector<std::uint32_t>(34, 1)); }) == ErrorKind::TooLarge);
    CHECK(kind_of([] { Field::parse("GF(2^4)"); }) == ErrorKind::ParseError);
    CHECK(kind_of([] { Field::parse("GF(3^2;0x13)"); }) == ErrorKind::ParseError);
}

TEST_CASE("primitive element and alpha notation") {
    const Field f = gf16();
    CHECK(f.primitive() == 2);
    CHECK(f.multiplicative_order(f.primitive()) == 15);
    CHECK(f.exp(4) == 3);  // alpha^4 = alpha + 1
    CHECK(f.log(3) == 4);
    CHECK(f.format_rep(1) == "1");
    CHECK(f.format_rep(0) == "0");
    CHECK(f.format_rep(3) == "a^4");
    CHECK(f.format_rep(3, Notation::Hex) == "0x3");
    CHECK(f.parse_rep("a^0") == 1);
    CHECK(f.parse_rep("a^4") == 3);
    CHECK(f.parse_rep("0x3") == 3);
    // 1 + a + a^3 + a^7 = 0 in GF(16) with x^4 + x + 1
    CHECK(f.add(f.add(1, f.exp(1)), f.add(f.exp(3), f.exp(7))) == 0);
    const Field big = gf256();
    CHECK(big.multiplicative_order(big.primitive()) == 255);
    CHECK(big.format_rep(big.exp(234)) == "a^234");
}

TEST_CASE("element grammar rejects malformed text") {
    const Field f = gf16();
    for (const char* bad : {"a^15", "a^-1", "0x10", "b", "", "a^", "a^1x", "2", "0x"})
        CHECK_MESSAGE(kind_of([&] { f.parse_rep(bad); }) == ErrorKind::ParseError, bad);
    const Field g = Field::parse("GF(3^2;2,2,1)");
    CHECK(kind_of([&] { g.parse_rep("0x1"); }) == ErrorKind::ParseError);
    CHECK(kind_of([&] { g.format_rep(1, Notation::Hex); }) == ErrorKind::InvalidArgument);
}

TEST_CASE("division by zero") {
    const Field f = gf16();
    CHECK(kind_of([&] { f.inv(0); }) == ErrorKind::DivisionByZero);
    CHECK(kind_of([&] { f.div(3, 0); }) == ErrorKind::DivisionByZero);
    CHECK(kind_of([&] { f.log(0); }) == ErrorKind::DivisionByZero);
    CHECK(kind_of([&] { f.pow(0, -1); }) == ErrorKind::DivisionByZero);
    CHECK(f.pow(0, 0) == 1);
}

TEST_CASE("field axioms on small fields") {
    std::mt19937_64 rng(7);
    for (const Field& f : small_fields()) {
        CAPTURE(f.to_string());
        const auto q = f.order();
        for (Rep a = 1; a < q; ++a) {
            REQUIRE(f.pow(a, static_cast<std::int64_t>(q - 1)) == 1);  // Lagrange
            REQUIRE(f.mul(a, f.inv(a)) == 1);
            REQUIRE(f.exp(static_cast<std::int64_t>(f.log(a))) == a);
            REQUIRE((q - 1) % f.multiplicative_order(a) == 0);
        }
        for (int t = 0; t < 300; ++t) {
            const Rep a = testing::random_rep(f, rng), b = testing::random_rep(f, rng), c = testing::random_rep(f, rng);
            REQUIRE(f.mul(f.mul(a, b), c) == f.mul(a, f.mul(b, c)));
            REQUIRE(f.add(f.add(a, b), c) == f.add(a, f.add(b, c)));
            REQUIRE(f.mul(a, f.add(b, c)) == f.add(f.mul(a, b), f.mul(a, c)));
            REQUIRE(f.add(a, f.neg(a)) == 0);
            REQUIRE(f.sub(a, b) == f.add(a, f.neg(b)));
        }
        CHECK(f.from_integer(static_cast<std::int64_t>(f.characteristic())) == 0);
        CHECK(f.from_integer(-1) == f.neg(1));
    }
}

TEST_CASE("parse and format round-trip in both notations") {
    for (const Field& f : small_fields()) {
        CAPTURE(f.to_string());
        for (Rep a = 0; a < f.order(); ++a) {
            REQUIRE(f.parse_rep(f.format_rep(a)) == a);
            if (f.characteristic() == 2) REQUIRE(f.parse_rep(f.format_rep(a, Notation::Hex)) == a);
        }
    }
}

TEST_CASE("field elements") {
    const Field f = gf16();
    const FieldElement a = f.alpha_power(3), b = f.alpha_power(7);
    CHECK((a * b).format() == "a^10");
    CHECK((a / a).format() == "1");
    CHECK((a + a).is_zero());
    CHECK(a.pow(-1) == a.inv());
    CHECK(parse_element(f, "a^5").value() == f.exp(5));
    CHECK(format_element(b) == "a^7");
    const FieldElement other(gf256(), 3);
    CHECK(kind_of([&] { (void)(a + other); }) == ErrorKind::FieldMismatch);
    CHECK(parse_rep_list(f, "[1,a^1, a^2]") == std::vector<Rep>{1, f.exp(1), f.exp(2)});
}

TEST_CASE("large field uses baby-step giant-step logarithms") {
    const Field f = Field::parse("GF(2^20;0x100009)");
    CHECK(f.order() == (1u << 20));
    for (std::int64_t k : {0, 1, 12345, 1048574}) CHECK(f.log(f.exp(k)) == static_cast<std::uint64_t>(k));
    const Rep a = 0xabcde;
    CHECK(f.exp(static_cast<std::int64_t>(f.log(a))) == a);
    CHECK(f.mul(a, f.inv(a)) == 1);
}

TEST_CASE("polynomial helpers") {
    using namespace gfpoly;
    CHECK(is_irreducible({1, 1, 0, 0, 1}, 2));
    CHECK_FALSE(is_irreducible({1, 0, 0, 0, 1}, 2));
    CHECK(is_irreducible({2, 2, 1}, 3));
    CHECK_FALSE(is_irreducible({2, 0, 1}, 3));  // x^2 - 1
    CHECK(is_prime(65537));
    CHECK_FALSE(is_prime(65535));
}
