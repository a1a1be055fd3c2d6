#include "doctest.h"
#include "oracles.hpp"
#include "support.hpp"

using namespace testing;

namespace {

std::vector<Mobius> units(const Field& f, std::initializer_list<const char*> texts)
{
    std::vector<Mobius> out;
    for (const char* t : texts)
        out.push_back(M(t, f));
    std::sort(out.begin(), out.end());
    return out;
}

void check_group_axioms(const FixGroup& g)
{
    REQUIRE(g.contains(Mobius::identity(g.subject().field())));
    REQUIRE(g.subject().degree() % g.order() == 0);
    for (const auto& u : g.elements()) {
        REQUIRE(apply_mobius(g.subject(), u) == g.subject());
        REQUIRE(g.contains(u.inverse()));
        for (const auto& v : g.elements())
            REQUIRE(g.contains(u.compose(v)));
    }
}

} // namespace

TEST_CASE("fixing_group_poly_tame examples")
{
    Field q = F("Q");
    FixGroup g = fixing_group_poly_tame(P("x^2*(x-1)^2", q));
    CHECK(g.elements() == units(q, {"x", "1-x"}));
    REQUIRE(g.generator());
    CHECK(*g.generator() == M("1-x", q));

    Field qi = F("Q[i]/(i^2+1)");
    CHECK(fixing_group_poly_tame(P("x^4", qi)).elements() == units(qi, {"x", "-x", "i*x", "-i*x"}));
    CHECK(fixing_group_poly_tame(P("x^4", q)).elements() == units(q, {"x", "-x"}));
    CHECK(fixing_group_poly_tame(P("(x+3)^4+1", q)).elements() == units(q, {"x", "-x-6"}));
    try {
        fixing_group_poly_tame(P("x^7+x", F("GF(7)")));
        FAIL("wild input accepted");
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::WildInput);
    }
}

TEST_CASE("fixing_group_rational examples")
{
    Field qi = F("Q[i]/(i^2+1)");
    FixGroup g = fixing_group_rational(R("(-1+33*x^4+33*x^8-x^12)/(x^2-2*x^6+x^10)", qi));
    CHECK(g.order() == 12);
    CHECK(g.elements() == units(qi, {"x", "-x", "1/x", "-1/x", "i*(x+1)/(x-1)", "-i*(x+1)/(x-1)", "i*(x-1)/(x+1)",
                                     "-i*(x-1)/(x+1)", "(x+i)/(x-i)", "-(x+i)/(x-i)", "(x-i)/(x+i)",
                                     "-(x-i)/(x+i)"}));
    CHECK_FALSE(g.generator());

    Field q = F("Q");
    FixGroup h = fixing_group_rational(R("(x^4+1)/x^2", q));
    CHECK(h.elements() == units(q, {"x", "-x", "1/x", "-1/x"}));
    CHECK(fixing_group_rational(R("x^2", q)).elements() == units(q, {"x", "-x"}));
    CHECK(fixing_group_rational(R("x^2*(x-1)^2", q)).elements() == units(q, {"x", "1-x"}));
}

TEST_CASE("fixing_group_bruteforce examples")
{
    Field g5 = F("GF(5)");
    CHECK(fixing_group_bruteforce(R("x^2*(x-1)^2", g5)).elements() == units(g5, {"x", "1-x"}));
    Field g7 = F("GF(7)");
    CHECK(fixing_group_bruteforce(R("x^3", g7)).elements() == units(g7, {"x", "2*x", "4*x"}));
    Field g3 = F("GF(3)");
    CHECK(fixing_group_bruteforce(R("x^2", g3)).elements() == units(g3, {"x", "-x"}));
    CHECK_THROWS_AS(fixing_group_bruteforce(R("x^2", F("Q"))), Error);
    CHECK_THROWS_AS(fixing_group_bruteforce(R("x^2", F("GF(37)"))), Error);
}

TEST_CASE("fixing groups match full enumeration with composition")
{
    for (const char* desc : {"GF(5)", "GF(7)", "GF(2)[a]/(a^2+a+1)"}) {
        Field f = F(desc);
        std::mt19937_64 rng(51);
        std::vector<RatFunc> cases{R("x^2*(x-1)^2", f), R("x+1/x", f), R("x^3", f)};
        for (int t = 0; t < 6; ++t)
            cases.push_back(random_ratfunc(f, 1 + static_cast<int>(rng() % 4), rng));
        for (const auto& r : cases) {
            INFO(desc << ": " << r.to_string());
            auto ref = oracle::fixing_group_enumerate(r);
            std::vector<Mobius> expected(ref.begin(), ref.end());
            REQUIRE(fixing_group_bruteforce(r).elements() == expected);
            REQUIRE(fixing_group(r).elements() == expected);
        }
    }
}

TEST_CASE("rational method agrees with brute force")
{
    for (const char* desc : {"GF(7)", "GF(13)", "GF(3)[t]/(t^2+1)", "GF(11)"}) {
        Field f = F(desc);
        std::mt19937_64 rng(52);
        for (int t = 0; t < 20; ++t) {
            RatFunc r = random_ratfunc(f, 1 + static_cast<int>(rng() % 6), rng);
            if (rng() % 3 == 0)
                r = compose(r, R("x+1/x", f));
            FixGroup a = fixing_group_rational(r);
            FixGroup b = fixing_group_bruteforce(r);
            REQUIRE(a.elements() == b.elements());
            check_group_axioms(a);
        }
    }
}

TEST_CASE("tame fixing groups are cyclic and match brute force")
{
    for (const char* desc : {"GF(7)", "GF(13)", "GF(3)[t]/(t^2+1)"}) {
        Field f = F(desc);
        std::mt19937_64 rng(53);
        for (int t = 0; t < 20; ++t) {
            int d = 2 + static_cast<int>(rng() % 7);
            if (!tame(f, d))
                continue;
            Poly p = rng() % 2 ? random_poly(f, d, rng) : compose_poly(random_poly(f, 1, rng), Poly::x(f).pow(d));
            FixGroup g = fixing_group_poly_tame(p);
            REQUIRE(g.generator());
            REQUIRE(mobius_order(*g.generator(), g.order()) == g.order());
            REQUIRE(g.elements() == fixing_group_bruteforce(RatFunc(p)).elements());
            check_group_axioms(g);
        }
    }
}

TEST_CASE("group_structure")
{
    Field q = F("Q");
    GroupStructure s = group_structure(fixing_group(R("x^2*(x-1)^2", q)));
    CHECK(s.cyclic);
    CHECK(*s.generator == M("1-x", q));
    REQUIRE(s.cyclic_subgroups.size() == 2);
    CHECK(s.cyclic_subgroups[0].order() == 1);
    CHECK(s.cyclic_subgroups[1].order() == 2);

    Field qi = F("Q[i]/(i^2+1)");
    FixGroup big = fixing_group(R("(-1+33*x^4+33*x^8-x^12)/(x^2-2*x^6+x^10)", qi));
    GroupStructure b = group_structure(big);
    CHECK_FALSE(b.cyclic);
    Subgroup three = cyclic_subgroup(big, M("i*(x+1)/(x-1)", qi));
    CHECK(three.order() == 3);
    bool listed = false;
    for (const auto& sg : b.cyclic_subgroups)
        listed = listed || sg.elements == three.elements;
    CHECK(listed);

    GroupStructure t = group_structure(fixing_group(R("x^3+x", q)));
    CHECK(t.cyclic);
    CHECK(t.element_orders.size() == 1);
}

TEST_CASE("invariant_function examples")
{
    Field q = F("Q");
    RatFunc h1 = invariant_function(cyclic_subgroup(M("1/x", q)));
    CHECK(h1 == R("(x^2+1)/x", q));
    RatFunc h2 = invariant_function(cyclic_subgroup(M("-x", q)));
    CHECK(h2 == R("x^2", q));
    Field qi = F("Q[i]/(i^2+1)");
    Mobius u = M("i*(x+1)/(x-1)", qi);
    RatFunc h3 = invariant_function(cyclic_subgroup(u));
    CHECK(h3.degree() == 3);
    CHECK(fixes(h3, u));
    CHECK_FALSE(fixes(R("(x^3+(x-1)*x+1-i)/((x-1)*(x-i))", qi), u));
    CHECK_THROWS_AS(invariant_function(cyclic_subgroup(M("x", q))), Error);
}

TEST_CASE("invariant functions on random cyclic subgroups")
{
    for (const char* desc : {"GF(7)", "GF(11)", "Q[i]/(i^2+1)", "GF(3)[t]/(t^2+1)"}) {
        Field f = F(desc);
        std::mt19937_64 rng(54);
        int done = 0;
        for (int t = 0; t < 400 && done < 15; ++t) {
            Mobius u = random_mobius(f, rng);
            if (f.characteristic() == 0) {
                Mobius w = random_mobius(f, rng);
                Mobius base = M(t % 3 == 0 ? "-x" : t % 3 == 1 ? "i*x" : "i*(x+1)/(x-1)", f);
                u = w.inverse().compose(base).compose(w);
            }
            auto k = mobius_order(u, 24);
            if (!k || *k < 2)
                continue;
            Subgroup h = cyclic_subgroup(u);
            RatFunc inv = invariant_function(h);
            REQUIRE(inv.degree() == h.order());
            for (const auto& v : h.elements)
                REQUIRE(fixes(inv, v));
            ++done;
        }
        CHECK(done > 0);
    }
}

TEST_CASE("decompose_via_subgroup")
{
    Field q = F("Q");
    RatFunc f = R("(x^4+1)/x^2", q);
    auto a = decompose_via_subgroup(f, cyclic_subgroup(M("1/x", q)));
    auto b = decompose_via_subgroup(f, cyclic_subgroup(M("-x", q)));
    REQUIRE(a);
    REQUIRE(b);
    CHECK(a->h == R("(x^2+1)/x", q));
    CHECK(a->g == R("x^2-2", q));
    CHECK(b->h == R("x^2", q));
    CHECK(b->g == R("(x^2+1)/x", q));
    CHECK_FALSE(equivalent_decompositions(*a, *b));
    CHECK_THROWS_AS(decompose_via_subgroup(f, cyclic_subgroup(M("1-x", q))), Error);

    Field qi = F("Q[i]/(i^2+1)");
    RatFunc big = R("(-1+33*x^4+33*x^8-x^12)/(x^2-2*x^6+x^10)", qi);
    auto c = decompose_via_subgroup(big, cyclic_subgroup(M("i*(x+1)/(x-1)", qi)));
    REQUIRE(c);
    CHECK(c->h.degree() == 3);
    CHECK(c->g.degree() == 4);
    CHECK(compose(c->g, c->h) == big);
    CHECK_FALSE(is_member(compose(c->h, R("-x", qi)), c->h));
}

TEST_CASE("group invariant violations are rejected")
{
    Field q = F("Q");
    try {
        FixGroup(R("x^2", q), {Mobius::identity(q), M("x+1", q)});
        FAIL("non-fixing element accepted");
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::GroupInvariantViolated);
    }
    CHECK_THROWS_AS(FixGroup(R("x^2", q), {M("-x", q)}), Error);
}
