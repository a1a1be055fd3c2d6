#include "doctest.h"
#include "oracles.hpp"
#include "support.hpp"

using namespace testing;

namespace {

ErrorCode parse_error(const char* text, const Field& f, std::size_t* pos = nullptr)
{
    try {
        parse_expression(text, f);
    } catch (const ParseError& e) {
        if (pos)
            *pos = e.position();
        return e.code();
    } catch (const Error& e) {
        return e.code();
    }
    return ErrorCode::Internal;
}

} // namespace

TEST_CASE("polynomial arithmetic examples")
{
    Field q = F("Q");
    CHECK(gcd(P("x^2-1", q), P("x^2-2*x+1", q)) == P("x-1", q));
    Field g2 = F("GF(2)");
    auto [quot, rem] = divmod(P("x^4+x^2+x", g2), P("x^2", g2));
    CHECK(quot == P("x^2+1", g2));
    CHECK(rem == P("x", g2));
    auto oracle_qr = oracle::long_division(P("x^4+x^2+x", g2), P("x^2", g2));
    CHECK(oracle_qr.first == quot);
    CHECK(oracle_qr.second == rem);
    CHECK(P("x+1", q) * P("x-1", q) == P("x^2-1", q));
    CHECK_THROWS_AS(divmod(P("x", q), Poly(q)), Error);
    CHECK(Poly(q).degree() == Poly::kZeroDegree);
    CHECK(gcd(P("2*x+4", q), P("3*x+6", q)) == P("x+2", q));
}

TEST_CASE("evaluation examples")
{
    Field q = F("Q");
    CHECK(P("x^2*(x-1)^2", q).eval(q.one()).is_zero());
    Field f4 = F("GF(2)[a]/(a^2+a+1)");
    // a^4 = a because a^3 = 1, so the value is a + (a + 1) + a = a + 1.
    CHECK(P("x^4+x^2+x", f4).eval(f4.gen()) == f4.gen() + f4.one());
    CHECK(P("x^3+5*x+7", q).eval(q.zero()) == q.from_int(7));
}

TEST_CASE("compose_poly examples")
{
    Field q = F("Q");
    CHECK(compose_poly(P("x^2+2*x", q), P("x^2", q)) == P("x^4+2*x^2", q));
    Field f4 = F("GF(2)[a]/(a^2+a+1)");
    Poly g = Poly(f4, {f4.zero(), f4.gen().inv(), f4.one()});
    CHECK(compose_poly(g, P("x^2+a*x", f4)) == P("x^4+x", f4));
    Poly r = P("3*x^3-x+2", q);
    CHECK(compose_poly(r, Poly::x(q)) == r);
}

TEST_CASE("resultant examples")
{
    Field q = F("Q");
    auto grid = [&](std::vector<std::vector<int>> g) {
        std::vector<std::vector<Elem>> e;
        for (auto& row : g) {
            e.emplace_back();
            for (int v : row)
                e.back().push_back(q.from_int(v));
        }
        return BiPoly::from_grid(q, e);
    };
    // u^2 + v^2 - 1 and v.
    Poly r1 = resultant_eliminate(grid({{-1, 0, 1}, {0}, {1}}), grid({{0, 1}}), Var::Second);
    CHECK(r1.monic() == P("x^2-1", q));
    // u - v and v - 3.
    Poly r2 = resultant_eliminate(grid({{0, -1}, {1}}), grid({{-3, 1}}), Var::Second);
    CHECK(r2.monic() == P("x-3", q));
    // u + v and u - v.
    Poly r3 = resultant_eliminate(grid({{0, 1}, {1}}), grid({{0, -1}, {1}}), Var::Second);
    CHECK((r3 == P("2*x", q) || r3 == P("-2*x", q)));
    CHECK_THROWS_AS(resultant_eliminate(BiPoly(q), grid({{0, 1}}), Var::Second), Error);
    // Eliminating the first variable: u - 2 and u + v gives v + 2 up to scale.
    Poly r4 = resultant_eliminate(grid({{-2}, {1}}), grid({{0, 1}, {1}}), Var::First);
    CHECK(r4.monic() == P("x+2", q));
}

TEST_CASE("parser")
{
    Field q = F("Q");
    CHECK(R("x^2*(x-1)^2", q) == RatFunc(P("x^4-2*x^3+x^2", q)));
    CHECK(R("(x^4+1)/x^2", q).degree() == 4);
    CHECK(R("(1/2)*x^3 - 3*x", q).num() == P("1/2*x^3-3*x", q));
    CHECK(R("x^-2", q) == R("1/x^2", q));
    Field qi = F("Q[i]/(i^2+1)");
    CHECK(R("(1/2)*x^3 - i*x", qi).num().coeff(1) == -qi.gen());
    CHECK(parse_error("x^2 + y", q) == ErrorCode::UnknownSymbol);
    CHECK(parse_error("x^2 + i", q) == ErrorCode::UnknownSymbol);
    std::size_t pos = 0;
    CHECK(parse_error("2x", q, &pos) == ErrorCode::SyntaxError);
    CHECK(pos == 1);
    CHECK(parse_error("x^2^3", q) == ErrorCode::SyntaxError);
    CHECK(parse_error("(x+1", q) == ErrorCode::SyntaxError);
    CHECK(parse_error("", q) == ErrorCode::SyntaxError);
    CHECK(parse_error("x/0", q) == ErrorCode::DivisionByZero);
    CHECK(parse_error("x/(x-x)", q) == ErrorCode::DivisionByZero);
    CHECK_THROWS_AS(parse_polynomial("1/x", q), Error);
}

TEST_CASE("printing round-trips through the parser")
{
    for (const Field& f : property_fields()) {
        std::mt19937_64 rng(21);
        for (int t = 0; t < 100; ++t) {
            RatFunc r = random_ratfunc(f, 1 + static_cast<int>(rng() % 5), rng);
            REQUIRE(parse_expression(r.to_string(), f) == r);
            Poly p = random_poly(f, static_cast<int>(rng() % 6), rng);
            REQUIRE(parse_polynomial(p.to_string(), f) == p);
        }
    }
    Field q = F("Q");
    CHECK(P("x^4+2*x^2+1", q).to_string() == "x^4 + 2*x^2 + 1");
    CHECK(P("-x^3+1/2", q).to_string() == "-x^3 + 1/2");
}

TEST_CASE("divmod round-trip against long division")
{
    for (const Field& f : property_fields()) {
        std::mt19937_64 rng(1);
        for (int t = 0; t < 500; ++t) {
            Poly a = random_poly(f, static_cast<int>(rng() % 9), rng);
            Poly b = random_poly(f, static_cast<int>(rng() % 5), rng);
            auto [qq, rr] = divmod(a, b);
            REQUIRE(qq * b + rr == a);
            REQUIRE(rr.degree() < b.degree());
            auto ref = oracle::long_division(a, b);
            REQUIRE(ref.first == qq);
            REQUIRE(ref.second == rr);
        }
    }
}

TEST_CASE("gcd divides both arguments and is monic")
{
    for (const Field& f : property_fields()) {
        std::mt19937_64 rng(3);
        for (int t = 0; t < 100; ++t) {
            Poly c = random_poly(f, static_cast<int>(rng() % 3), rng);
            Poly a = c * random_poly(f, static_cast<int>(rng() % 4), rng);
            Poly b = c * random_poly(f, static_cast<int>(rng() % 4), rng);
            Poly g = gcd(a, b);
            REQUIRE(g.is_monic());
            REQUIRE(divmod(a, g).second.is_zero());
            REQUIRE(divmod(b, g).second.is_zero());
            REQUIRE(divmod(g, c.monic()).second.is_zero());
        }
    }
}

TEST_CASE("composition degree multiplicativity and associativity")
{
    for (const Field& f : property_fields()) {
        std::mt19937_64 rng(4);
        for (int t = 0; t < 100; ++t) {
            Poly a = random_poly(f, 1 + static_cast<int>(rng() % 4), rng);
            Poly b = random_poly(f, 1 + static_cast<int>(rng() % 3), rng);
            Poly c = random_poly(f, 1 + static_cast<int>(rng() % 3), rng);
            REQUIRE(compose_poly(a, b).degree() == a.degree() * b.degree());
            REQUIRE(compose_poly(compose_poly(a, b), c) == compose_poly(a, compose_poly(b, c)));
        }
    }
}

TEST_CASE("resultant vanishes at projections of common roots")
{
    Field q = F("Q");
    std::mt19937_64 rng(8);
    for (int t = 0; t < 40; ++t) {
        Elem u0 = random_elem(q, rng), v0 = random_elem(q, rng);
        // a*(u - u0) + b*(v - v0)
        auto lin = [&](const Elem& a, const Elem& b) {
            std::vector<std::vector<Elem>> g{{-(a * u0) - b * v0, b}, {a}};
            return BiPoly::from_grid(q, g);
        };
        Elem a1 = random_elem(q, rng), b1 = random_elem(q, rng) + q.from_int(20);
        Elem a2 = random_elem(q, rng), b2 = random_elem(q, rng) - q.from_int(20);
        BiPoly extra = BiPoly::from_grid(q, {{random_elem(q, rng), q.one()}, {q.one()}});
        BiPoly A = lin(a1, b1) * extra;
        BiPoly B = lin(a2, b2);
        Poly res = resultant_eliminate(A, B, Var::Second);
        REQUIRE(res.eval(u0).is_zero());
    }
}
