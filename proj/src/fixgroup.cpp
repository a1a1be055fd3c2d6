#include "ratdecomp/fixgroup.hpp"

#include <algorithm>
#include <set>

#include "ratdecomp/roots.hpp"

namespace ratdecomp {

FixGroup::FixGroup(RatFunc subject, std::vector<Mobius> elements) : subject_(std::move(subject)), elements_(std::move(elements))
{
    auto violated = [](const std::string& what) { throw Error(ErrorCode::GroupInvariantViolated, what); };
    if (subject_.is_constant())
        violated("fixing group of a constant function");
    std::sort(elements_.begin(), elements_.end());
    elements_.erase(std::unique(elements_.begin(), elements_.end()), elements_.end());
    const Field field = subject_.field();
    if (!contains(Mobius::identity(field)))
        violated("group does not contain the identity");
    for (const auto& u : elements_) {
        if (!fixes(subject_, u))
            violated(u.to_string() + " does not fix " + subject_.to_string());
        if (!contains(u.inverse()))
            violated("inverse of " + u.to_string() + " missing");
        for (const auto& v : elements_)
            if (!contains(u.compose(v)))
                violated("not closed under composition");
    }
    if (subject_.degree() % order() != 0)
        violated("group order " + std::to_string(order()) + " does not divide deg f = " + std::to_string(subject_.degree()));
    for (const auto& u : elements_) {
        auto k = mobius_order(u, order());
        if (k && *k == order()) {
            generator_ = u;
            break;
        }
    }
}

bool FixGroup::contains(const Mobius& u) const { return std::binary_search(elements_.begin(), elements_.end(), u); }

Subgroup cyclic_subgroup(const Mobius& u, int bound)
{
    auto k = mobius_order(u, bound);
    if (!k)
        throw Error(ErrorCode::GroupInvariantViolated, u.to_string() + " has no finite order up to " + std::to_string(bound));
    Subgroup out{u, {}};
    Mobius acc = Mobius::identity(u.field());
    for (int i = 0; i < *k; ++i) {
        out.elements.push_back(acc);
        acc = acc.compose(u);
    }
    std::sort(out.elements.begin(), out.elements.end());
    return out;
}

Subgroup cyclic_subgroup(const FixGroup& parent, const Mobius& u)
{
    if (!parent.contains(u))
        throw Error(ErrorCode::BadArgument, u.to_string() + " is not in the group");
    Subgroup s = cyclic_subgroup(u, parent.order());
    if (parent.order() % s.order() != 0)
        throw Error(ErrorCode::GroupInvariantViolated, "subgroup order does not divide the group order");
    return s;
}

FixGroup fixing_group_poly_tame(const Poly& f)
{
    const int n = f.degree();
    if (n < 1)
        throw Error(ErrorCode::BadDegree, "fixing group of a constant polynomial");
    const Field& field = f.field();
    if (field.characteristic() != 0 && n % field.characteristic() == 0)
        throw Error(ErrorCode::WildInput, "deg f = " + std::to_string(n) + " is divisible by the characteristic");
    std::vector<Mobius> elems;
    const Elem fn = f.lc();
    const Elem fn1 = f.coeff(n - 1);
    const Elem n_elem = field.from_int(n);
    for (const auto& a : nth_roots_of_unity(field, n)) {
        // Matching x^(n-1) in f(ax + b) = f(x), using a^n = 1:
        // fn*n*a^(n-1)*b + f(n-1)*a^(n-1) = f(n-1).
        Elem an1 = a.pow(n - 1);
        Elem b = fn1 * (field.one() - an1) / (n_elem * fn * an1);
        if (compose_poly(f, Poly(field, {b, a})) == f)
            elems.emplace_back(a, b, field.zero(), field.one());
    }
    return FixGroup(RatFunc(f), std::move(elems));
}

FixGroup fixing_group_bruteforce(const RatFunc& f)
{
    const Field& field = f.field();
    auto q = field.size();
    if (!field.is_finite())
        throw Error(ErrorCode::InfiniteField, "brute-force fixing group needs a finite field");
    if (!q || *q > kBruteforceGroupFieldCap)
        throw Error(ErrorCode::FieldTooLarge, "brute-force fixing group is limited to q <= 32");
    auto elems = field.elements();
    const Elem zero = field.zero(), one = field.one();
    std::vector<Mobius> found;
    for (const auto& b : elems)
        for (const auto& d : elems) {
            if (d.is_zero())
                continue;
            Mobius u(one, b, zero, d);
            if (fixes(f, u))
                found.push_back(u);
        }
    for (const auto& a : elems)
        for (const auto& b : elems)
            for (const auto& d : elems) {
                if ((a * d - b).is_zero())
                    continue;
                Mobius u(a, b, one, d);
                if (fixes(f, u))
                    found.push_back(u);
            }
    return FixGroup(f, std::move(found));
}

namespace {

// ∞, 0, 1, -1, 2, -2, ... as distinct points of the projective line.
std::vector<ProjPoint> sample_points(const Field& field, std::size_t count)
{
    std::vector<ProjPoint> out{ProjPoint::infinity()};
    std::set<Elem> seen;
    for (std::int64_t k = 0; out.size() < count && k < 1000; ++k) {
        for (std::int64_t v : {k, -k}) {
            Elem e = field.from_int(v);
            if (seen.insert(e).second && out.size() < count)
                out.push_back(ProjPoint::finite(e));
        }
    }
    return out;
}

} // namespace

FixGroup fixing_group_rational(const RatFunc& f)
{
    if (f.is_constant())
        throw Error(ErrorCode::BadDegree, "fixing group of a constant function");
    const Field& field = f.field();
    if (field.is_finite() && *field.size() < 7)
        return fixing_group_bruteforce(f);

    // Prefer sample points with small fibers: fewer candidate triples.
    auto points = sample_points(field, 6);
    if (points.size() < 3)
        throw Error(ErrorCode::NotEnoughSamplePoints, "fewer than three sample points available");
    std::vector<std::pair<ProjPoint, std::vector<ProjPoint>>> fibers;
    for (const auto& p : points)
        fibers.emplace_back(p, fiber(f, eval_proj(f, p)));
    std::stable_sort(fibers.begin(), fibers.end(),
                     [](const auto& a, const auto& b) { return a.second.size() < b.second.size(); });

    const auto& [x0, f0] = fibers[0];
    const auto& [x1, f1] = fibers[1];
    const auto& [x2, f2] = fibers[2];
    std::set<Mobius> tried;
    std::vector<Mobius> found;
    for (const auto& y0 : f0)
        for (const auto& y1 : f1) {
            if (y1 == y0)
                continue;
            for (const auto& y2 : f2) {
                if (y2 == y0 || y2 == y1)
                    continue;
                Mobius u = mobius_from_three_points({std::pair{x0, y0}, std::pair{x1, y1}, std::pair{x2, y2}});
                if (tried.insert(u).second && fixes(f, u))
                    found.push_back(u);
            }
        }
    return FixGroup(f, std::move(found));
}

FixGroup fixing_group(const RatFunc& f)
{
    const std::int64_t p = f.field().characteristic();
    if (f.is_polynomial() && f.degree() >= 1 && (p == 0 || f.degree() % p != 0))
        return fixing_group_poly_tame(f.as_poly());
    return fixing_group_rational(f);
}

GroupStructure group_structure(const FixGroup& group)
{
    GroupStructure out;
    std::set<std::vector<Mobius>> seen;
    for (const auto& u : group.elements()) {
        auto k = mobius_order(u, group.order());
        if (!k)
            throw Error(ErrorCode::GroupInvariantViolated, "element of a finite group without finite order");
        out.element_orders.emplace_back(u, *k);
        Subgroup s = cyclic_subgroup(u, group.order());
        if (seen.insert(s.elements).second)
            out.cyclic_subgroups.push_back(std::move(s));
    }
    out.generator = group.generator();
    out.cyclic = group.generator().has_value();
    std::stable_sort(out.cyclic_subgroups.begin(), out.cyclic_subgroups.end(),
                     [](const Subgroup& a, const Subgroup& b) { return a.order() < b.order(); });
    return out;
}

RatFunc invariant_function(const Subgroup& subgroup)
{
    const int m = subgroup.order();
    if (m < 2)
        throw Error(ErrorCode::BadArgument, "invariant function needs a subgroup of order at least 2");
    const Field field = subgroup.generator.field();
    const RatFunc x = RatFunc::x(field);
    std::vector<RatFunc> seeds{x, x.pow(2), x.pow(3)};
    std::set<Elem> used;
    for (std::int64_t k = 0; k <= 6; ++k)
        for (std::int64_t v : {k, -k}) {
            Elem c = field.from_int(v);
            if (used.insert(c).second)
                seeds.push_back(RatFunc::constant(field.one()) / (x - RatFunc::constant(c)));
        }
    if (field.is_extension())
        seeds.push_back(RatFunc::constant(field.one()) / (x - RatFunc::constant(field.gen())));

    for (const auto& seed : seeds) {
        RatFunc h = RatFunc::constant(field.zero());
        for (const auto& u : subgroup.elements)
            h = h + compose(seed, u.as_ratfunc());
        if (h.degree() != m)
            continue;
        if (!std::all_of(subgroup.elements.begin(), subgroup.elements.end(), [&](const Mobius& u) { return fixes(h, u); }))
            continue;
        return RatFunc(h.num().monic(), h.den());
    }
    throw Error(ErrorCode::SeedExhaustion, "no seed produced an invariant of degree " + std::to_string(m));
}

std::optional<RatPair> decompose_via_subgroup(const RatFunc& f, const Subgroup& subgroup)
{
    for (const auto& u : subgroup.elements)
        if (!fixes(f, u))
            throw Error(ErrorCode::BadArgument, u.to_string() + " does not fix " + f.to_string());
    RatFunc h = invariant_function(subgroup);
    auto g = left_divide(f, h);
    if (!g)
        return std::nullopt;
    return RatPair{*g, h};
}

} // namespace ratdecomp
