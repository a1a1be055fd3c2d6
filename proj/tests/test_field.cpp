#include "doctest.h"
#include "oracles.hpp"
#include "support.hpp"

using namespace testing;

namespace {

std::vector<Elem> elems(const Field& f, std::initializer_list<const char*> texts)
{
    std::vector<Elem> out;
    for (const char* t : texts)
        out.push_back(E(t, f));
    std::sort(out.begin(), out.end());
    return out;
}

ErrorCode field_error(const char* desc)
{
    try {
        make_field(desc);
    } catch (const Error& e) {
        return e.code();
    }
    return ErrorCode::Internal;
}

} // namespace

TEST_CASE("make_field descriptors")
{
    Field q = F("Q");
    CHECK(q.kind() == FieldKind::Rationals);
    CHECK(q.characteristic() == 0);
    CHECK_FALSE(q.size().has_value());

    Field f4 = F("GF(2)[a]/(a^2+a+1)");
    CHECK(f4.characteristic() == 2);
    CHECK(*f4.size() == 4);
    CHECK(f4.gen() * f4.gen() == f4.gen() + f4.one());

    CHECK(F("GF(7)").characteristic() == 7);
    CHECK(F("Q[i]/(i^2+1)").characteristic() == 0);
    CHECK(F(" GF( 13 ) ").descriptor() == "GF(13)");
    CHECK(F("Q[w]/(w^2+w+1)").descriptor() == F("Q[w]/(w^2+w+1)").descriptor());
}

TEST_CASE("make_field errors")
{
    CHECK(field_error("GF(4)") == ErrorCode::MissingModulus);
    CHECK(field_error("GF(6)") == ErrorCode::NonPrimeModulus);
    CHECK(field_error("GF(9)[t]/(t^2+1)") == ErrorCode::NonPrimeModulus);
    CHECK(field_error("Q[i]/(i^2-1)") == ErrorCode::ReducibleExtensionModulus);
    CHECK(field_error("GF(2)[a]/(a^2+1)") == ErrorCode::ReducibleExtensionModulus);
    CHECK(field_error("GF(5)[t]/(t^2+1)") == ErrorCode::ReducibleExtensionModulus);
    CHECK(field_error("Q[i]/(i^2+1)[j]/(j^2+1)") == ErrorCode::UnsupportedTower);
    CHECK(field_error("Q[i]/(2*i^2+1)") == ErrorCode::BadFieldDescriptor);
    CHECK(field_error("Q[i]/(i^3+1)") == ErrorCode::BadFieldDescriptor);
    CHECK(field_error("R") == ErrorCode::BadFieldDescriptor);
    CHECK(field_error("Q[x]/(x^2+1)") == ErrorCode::BadFieldDescriptor);
}

TEST_CASE("field arithmetic examples")
{
    Field q = F("Q");
    CHECK(q.from_rational(mpq_class(2, 3)) + q.from_rational(mpq_class(1, 6)) == q.from_rational(mpq_class(5, 6)));
    CHECK(q.from_rational(mpq_class(5, 6)).to_string() == "5/6");
    CHECK(q.from_rational(mpq_class(-4, 6)).to_string() == "-2/3");

    Field f4 = F("GF(2)[a]/(a^2+a+1)");
    Elem a = f4.gen();
    CHECK(a * a == a + f4.one());
    CHECK(a.inv() == a * a);
    CHECK((a * a).to_string() == "1 + a");

    Field qi = F("Q[i]/(i^2+1)");
    Elem i = qi.gen();
    CHECK((qi.one() + i) * (qi.one() - i) == qi.from_int(2));
    CHECK((qi.one() - i).to_string() == "1 - i");
    CHECK(i.conj() == -i);

    CHECK_THROWS_AS(q.zero().inv(), Error);
    CHECK_THROWS_AS(qi.one() / qi.zero(), Error);
    try {
        (void)(q.one() + F("GF(7)").one());
        FAIL("mixed fields accepted");
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::MixedFields);
    }
    CHECK(F("GF(7)").from_int(-1).to_string() == "6");
}

TEST_CASE("field axioms on random triples")
{
    for (const Field& f : property_fields()) {
        std::mt19937_64 rng(12345);
        for (int t = 0; t < 1000; ++t) {
            Elem a = random_elem(f, rng), b = random_elem(f, rng), c = random_elem(f, rng);
            REQUIRE((a + b) + c == a + (b + c));
            REQUIRE((a * b) * c == a * (b * c));
            REQUIRE(a + b == b + a);
            REQUIRE(a * b == b * a);
            REQUIRE(a * (b + c) == a * b + a * c);
            REQUIRE(a - a == f.zero());
            if (!a.is_zero())
                REQUIRE(a * a.inv() == f.one());
            if (f.characteristic() != 0) {
                const auto p = f.characteristic();
                REQUIRE((a + b).pow(p) == a.pow(p) + b.pow(p));
            }
        }
    }
}

TEST_CASE("roots_in_field examples")
{
    Field q = F("Q");
    CHECK(roots_in_field(P("x^2+1", q)).empty());
    Field qi = F("Q[i]/(i^2+1)");
    CHECK(roots_in_field(P("x^2+1", qi)) == elems(qi, {"i", "-i"}));
    Field g7 = F("GF(7)");
    CHECK(roots_in_field(P("x^3-1", g7)) == elems(g7, {"1", "2", "4"}));
    CHECK(roots_in_field(P("(x-1/2)*(x+3)^2*(x^2-2)", q)) == elems(q, {"1/2", "-3"}));
    CHECK(roots_in_field(P("x^3", q)) == elems(q, {"0"}));
    CHECK_THROWS_AS(roots_in_field(Poly(q)), Error);
    CHECK_THROWS_AS(roots_in_field(P("x^2+1", F("GF(65537)"))), Error);
}

TEST_CASE("nth_roots_of_unity examples")
{
    Field q = F("Q");
    CHECK(nth_roots_of_unity(q, 4) == elems(q, {"1", "-1"}));
    Field qi = F("Q[i]/(i^2+1)");
    CHECK(nth_roots_of_unity(qi, 4) == elems(qi, {"1", "-1", "i", "-i"}));
    Field g7 = F("GF(7)");
    CHECK(nth_roots_of_unity(g7, 3) == elems(g7, {"1", "2", "4"}));
    Field qw = F("Q[w]/(w^2+w+1)");
    CHECK(nth_roots_of_unity(qw, 6).size() == 6);
    CHECK(nth_roots_of_unity(qw, 3).size() == 3);
}

TEST_CASE("roots agree with the exhaustive scan on finite fields")
{
    for (const char* desc : {"GF(7)", "GF(13)", "GF(2)[a]/(a^2+a+1)", "GF(3)[t]/(t^2+1)", "GF(5)[s]/(s^2+2)"}) {
        Field f = F(desc);
        std::mt19937_64 rng(7);
        for (int t = 0; t < 100; ++t) {
            Poly p = random_poly(f, 1 + static_cast<int>(rng() % 8), rng);
            REQUIRE(roots_in_field(p) == oracle::roots_by_scan(p));
        }
    }
}

TEST_CASE("roots over Q agree with divisor enumeration")
{
    Field q = F("Q");
    std::mt19937_64 rng(99);
    for (int t = 0; t < 200; ++t) {
        Poly p = Poly::constant(random_elem(q, rng) + q.from_int(20));
        const int k = 1 + static_cast<int>(rng() % 4);
        for (int j = 0; j < k; ++j) {
            Elem r = random_elem(q, rng);
            p = p * Poly(q, {-r, q.one()});
        }
        p = p * random_poly(q, static_cast<int>(rng() % 3), rng);
        if (p.is_zero())
            continue;
        auto fast = roots_in_field(p);
        REQUIRE(fast == oracle::rational_roots_by_divisors(p));
        for (const auto& r : fast)
            REQUIRE(p.eval(r).is_zero());
    }
}

TEST_CASE("roots over quadratic extensions agree with the resultant route")
{
    for (const char* desc : {"Q[i]/(i^2+1)", "Q[w]/(w^2+w+1)", "Q[s]/(s^2-2)"}) {
        Field f = F(desc);
        std::mt19937_64 rng(5);
        for (int t = 0; t < 25; ++t) {
            Poly p = Poly::constant(f.one());
            const int k = 1 + static_cast<int>(rng() % 3);
            for (int j = 0; j < k; ++j)
                p = p * Poly(f, {-random_elem(f, rng, 4), f.one()});
            if (rng() % 2)
                p = p * P("x^2-3", f);
            INFO(desc << " " << p.to_string());
            REQUIRE(roots_in_field(p) == oracle::quadext_roots_by_resultant(p));
        }
    }
}

TEST_CASE("roots of unity form a subgroup whose order divides n")
{
    for (const Field& f : property_fields())
        for (int n = 1; n <= 12; ++n) {
            if (!tame(f, n))
                continue;
            auto rs = nth_roots_of_unity(f, n);
            REQUIRE(n % static_cast<int>(rs.size()) == 0);
            REQUIRE(std::binary_search(rs.begin(), rs.end(), f.one()));
            for (const auto& a : rs)
                for (const auto& b : rs)
                    REQUIRE(std::binary_search(rs.begin(), rs.end(), a * b));
        }
}

TEST_CASE("element enumeration covers finite fields")
{
    Field f = F("GF(3)[t]/(t^2+1)");
    auto es = f.elements();
    CHECK(es.size() == 9);
    std::set<Elem> distinct(es.begin(), es.end());
    CHECK(distinct.size() == 9);
    CHECK_THROWS_AS(F("Q").elements(), Error);
}
