#include "ratdecomp/decomp.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <set>

#include "ratdecomp/linalg.hpp"
#include "ratdecomp/roots.hpp"

namespace ratdecomp {

namespace {

bool char_divides(const Field& f, std::int64_t n)
{
    std::int64_t p = f.characteristic();
    return p != 0 && n % p == 0;
}

Poly compose_chain(const std::vector<Poly>& parts)
{
    Poly acc = parts.back();
    for (auto it = parts.rbegin() + 1; it != parts.rend(); ++it)
        acc = compose_poly(*it, acc);
    return acc;
}

} // namespace

Decomposition::Decomposition(std::vector<Poly> components, Poly original)
    : components_(std::move(components)), original_(std::move(original))
{
    if (components_.empty())
        throw Error(ErrorCode::BadArgument, "a decomposition needs at least one component");
    if (!(compose_chain(components_) == original_))
        throw Error(ErrorCode::Internal, "decomposition does not recompose to " + original_.to_string());
}

Poly Decomposition::recompose() const { return compose_chain(components_); }

Poly HAdicExpansion::reconstruct() const
{
    Poly acc(base.field());
    for (auto it = digits.rbegin(); it != digits.rend(); ++it)
        acc = acc * base + *it;
    return acc;
}

bool HAdicExpansion::all_digits_constant() const
{
    return std::all_of(digits.begin(), digits.end(), [](const Poly& d) { return d.is_constant(); });
}

Poly approximate_root(const Poly& f, int r)
{
    if (!f.is_monic())
        throw Error(ErrorCode::NotMonic, f.to_string() + " is not monic");
    const int n = f.degree();
    if (r < 1 || n % r != 0)
        throw Error(ErrorCode::DegreeNotDivisible, std::to_string(r) + " does not divide deg f = " + std::to_string(n));
    const Field& field = f.field();
    if (char_divides(field, r))
        throw Error(ErrorCode::WildRoot, std::to_string(r) + " is not invertible in " + field.descriptor());
    const int s = n / r;
    std::vector<Elem> h(static_cast<std::size_t>(s) + 1, field.zero());
    h.back() = field.one();
    Elem r_inv = field.from_int(r).inv();
    // The coefficient of x^(n-k) in h^r is r*h[s-k] plus terms in the
    // already fixed h[s-k+1..s].
    for (int k = 1; k <= s; ++k) {
        Poly current(field, h);
        Elem partial = current.pow(r).coeff(n - k);
        h[static_cast<std::size_t>(s - k)] = (f.coeff(n - k) - partial) * r_inv;
    }
    return Poly(field, std::move(h));
}

HAdicExpansion expand_in_h(const Poly& f, const Poly& h)
{
    if (h.degree() < 1)
        throw Error(ErrorCode::ConstantBase, "expansion base " + h.to_string() + " is constant");
    HAdicExpansion out{h, {}};
    Poly rest = f;
    while (!rest.is_zero()) {
        auto [q, r] = divmod(rest, h);
        out.digits.push_back(std::move(r));
        rest = std::move(q);
    }
    return out;
}

std::optional<PolyPair> decompose_poly(const Poly& f, int s)
{
    const int n = f.degree();
    if (n < 1)
        throw Error(ErrorCode::BadDegree, "cannot decompose a constant polynomial");
    if (char_divides(f.field(), n))
        throw Error(ErrorCode::WildInput, "deg f = " + std::to_string(n) + " is divisible by the characteristic");
    if (s <= 1 || s >= n || n % s != 0)
        throw Error(ErrorCode::BadDegree, "right degree " + std::to_string(s) + " must be a proper divisor of " + std::to_string(n));
    const Field& field = f.field();
    Elem lead = f.lc();
    Poly monic = f.monic();
    Poly h = approximate_root(monic, n / s);
    h = h - Poly::constant(h.coeff(0));
    HAdicExpansion e = expand_in_h(monic, h);
    if (!e.all_digits_constant())
        return std::nullopt;
    std::vector<Elem> gc;
    for (const auto& d : e.digits)
        gc.push_back(d.coeff(0) * lead);
    Poly g(field, std::move(gc));
    if (!(compose_poly(g, h) == f))
        throw Error(ErrorCode::Internal, "tame decomposition failed verification");
    return PolyPair{std::move(g), std::move(h)};
}

namespace {

bool indecomposable(const Poly& f)
{
    const int n = f.degree();
    for (int s = 2; s < n; ++s)
        if (n % s == 0 && decompose_poly(f, s))
            return false;
    return true;
}

std::vector<std::vector<Poly>> chains(const Poly& f, std::map<std::string, std::vector<std::vector<Poly>>>& memo)
{
    const std::string key = f.to_string();
    if (auto it = memo.find(key); it != memo.end())
        return it->second;
    std::vector<std::vector<Poly>> out;
    std::set<std::string> seen;
    const int n = f.degree();
    for (int s = 2; s < n; ++s) {
        if (n % s != 0)
            continue;
        auto pair = decompose_poly(f, s);
        if (!pair || !indecomposable(pair->h))
            continue;
        for (auto chain : chains(pair->g, memo)) {
            chain.push_back(pair->h);
            std::string k;
            for (const auto& c : chain)
                k += c.to_string() + "|";
            if (seen.insert(k).second)
                out.push_back(std::move(chain));
        }
    }
    if (out.empty())
        out.push_back({f});
    memo.emplace(key, out);
    return out;
}

} // namespace

std::vector<Decomposition> complete_decompositions(const Poly& f)
{
    const int n = f.degree();
    if (n < 2)
        throw Error(ErrorCode::BadDegree, "complete decompositions need degree at least 2");
    if (char_divides(f.field(), n))
        throw Error(ErrorCode::WildInput, "deg f = " + std::to_string(n) + " is divisible by the characteristic");
    std::map<std::string, std::vector<std::vector<Poly>>> memo;
    std::vector<Decomposition> out;
    for (auto& c : chains(f, memo))
        out.emplace_back(std::move(c), f);
    return out;
}

std::vector<PolyPair> decompose_poly_bruteforce(const Poly& f, int s)
{
    const Field& field = f.field();
    if (!field.is_finite())
        throw Error(ErrorCode::InfiniteField, "brute-force decomposition needs a finite field");
    const int n = f.degree();
    if (n < 2 || s <= 1 || s >= n || n % s != 0)
        throw Error(ErrorCode::BadDegree, "right degree " + std::to_string(s) + " must be a proper divisor of " + std::to_string(n));
    auto q = field.size();
    const int r = n / s;
    if (!q || std::pow(static_cast<double>(*q), s + r) > kBruteforceSearchCap)
        throw Error(ErrorCode::SearchSpaceTooLarge, "search space exceeds the brute-force cap");
    const std::uint64_t size = *q;
    auto elems = field.elements();

    // Odometer over h_1..h_{s-1} and g_0..g_{r-1}; h is monic with zero
    // constant term, so g's leading coefficient must equal lc(f).
    const std::size_t hn = static_cast<std::size_t>(s - 1);
    const std::size_t gn = static_cast<std::size_t>(r);
    std::vector<std::uint64_t> idx(hn + gn, 0);
    std::vector<PolyPair> out;
    while (true) {
        std::vector<Elem> hc(static_cast<std::size_t>(s) + 1, field.zero());
        hc.back() = field.one();
        for (std::size_t i = 0; i < hn; ++i)
            hc[i + 1] = elems[idx[i]];
        std::vector<Elem> gc(gn + 1, field.zero());
        for (std::size_t i = 0; i < gn; ++i)
            gc[i] = elems[idx[hn + i]];
        gc.back() = f.lc();
        Poly h(field, hc), g(field, gc);
        if (compose_poly(g, h) == f)
            out.push_back({g, h});
        std::size_t pos = 0;
        while (pos < idx.size() && ++idx[pos] == size)
            idx[pos++] = 0;
        if (pos == idx.size())
            break;
    }
    return out;
}

std::optional<RatFunc> left_divide(const RatFunc& f, const RatFunc& h)
{
    if (h.is_constant())
        throw Error(ErrorCode::ConstantRightComponent, "right component " + h.to_string() + " is constant");
    if (!(f.field() == h.field()))
        throw Error(ErrorCode::MixedFields, "functions over different fields");
    const int n = f.degree(), m = h.degree();
    if (n % m != 0)
        return std::nullopt;
    const int r = n / m;
    const Field& field = f.field();

    // Unknowns: g_N coefficients 0..r, then g_D coefficients 0..r.
    // f_N * sum gD_i P_i - f_D * sum gN_i P_i = 0 with P_i = hN^i hD^(r-i).
    std::vector<Poly> np(static_cast<std::size_t>(r) + 1), dp(static_cast<std::size_t>(r) + 1);
    np[0] = dp[0] = Poly::constant(field.one());
    for (int i = 1; i <= r; ++i) {
        np[static_cast<std::size_t>(i)] = np[static_cast<std::size_t>(i - 1)] * h.num();
        dp[static_cast<std::size_t>(i)] = dp[static_cast<std::size_t>(i - 1)] * h.den();
    }
    const std::size_t unknowns = 2 * static_cast<std::size_t>(r) + 2;
    std::vector<Poly> columns(unknowns);
    int rows = 0;
    for (int i = 0; i <= r; ++i) {
        Poly basis = np[static_cast<std::size_t>(i)] * dp[static_cast<std::size_t>(r - i)];
        columns[static_cast<std::size_t>(i)] = -(f.den() * basis);
        columns[static_cast<std::size_t>(r + 1 + i)] = f.num() * basis;
        rows = std::max({rows, columns[static_cast<std::size_t>(i)].degree() + 1,
                         columns[static_cast<std::size_t>(r + 1 + i)].degree() + 1});
    }
    Matrix mat(static_cast<std::size_t>(rows), std::vector<Elem>(unknowns, field.zero()));
    for (std::size_t c = 0; c < unknowns; ++c)
        for (int k = 0; k <= columns[c].degree(); ++k)
            mat[static_cast<std::size_t>(k)][c] = columns[c].coeff(k);

    for (const auto& v : nullspace(std::move(mat), unknowns, field)) {
        Poly gn(field, std::vector<Elem>(v.begin(), v.begin() + r + 1));
        Poly gd(field, std::vector<Elem>(v.begin() + r + 1, v.end()));
        if (gd.is_zero())
            continue;
        RatFunc g(gn, gd);
        if (compose(g, h) == f)
            return g;
    }
    return std::nullopt;
}

bool is_member(const RatFunc& g, const RatFunc& h)
{
    if (g.is_constant())
        return true;
    return left_divide(g, h).has_value();
}

std::optional<Mobius> equivalent_decompositions(const RatPair& d1, const RatPair& d2)
{
    if (!(compose(d1.g, d1.h) == compose(d2.g, d2.h)))
        throw Error(ErrorCode::DifferentComposites, "the two decompositions compose to different functions");
    auto u = left_divide(d1.h, d2.h);
    if (!u || u->degree() != 1)
        return std::nullopt;
    Mobius unit = Mobius::from_ratfunc(*u);
    if (!(compose(unit.as_ratfunc(), d2.h) == d1.h) || !(compose(d2.g, unit.inverse().as_ratfunc()) == d1.g))
        return std::nullopt;
    return unit;
}

std::optional<PolyPair> polynomialize(const RatFunc& g, const RatFunc& h)
{
    RatFunc f = compose(g, h);
    if (!f.is_polynomial())
        throw Error(ErrorCode::NotPolynomialComposite, f.to_string() + " is not a polynomial");
    const Field& field = f.field();
    RatFunc gp = g, hp = h;
    if (!h.is_polynomial()) {
        // h must have its poles at one K-rational point rho, hD = (x - rho)^s.
        auto poles = roots_in_field(h.den());
        if (poles.size() != 1)
            return std::nullopt;
        Poly linear(field, {-poles[0], field.one()});
        if (!(linear.pow(h.den().degree()) == h.den()))
            return std::nullopt;
        ProjPoint at_inf = eval_proj(h, ProjPoint::infinity());
        if (at_inf.is_infinity())
            return std::nullopt;
        // v = 1/(x - h(∞)) sends h's value at infinity to infinity.
        Mobius v(field.zero(), field.one(), field.one(), -at_inf.value());
        hp = compose(v.as_ratfunc(), h);
        gp = compose(g, v.inverse().as_ratfunc());
    }
    if (!hp.is_polynomial() || !gp.is_polynomial())
        return std::nullopt;
    // Normalize the right component to be monic with zero constant term.
    Poly hpoly = hp.as_poly();
    Mobius w(hpoly.lc().inv(), -(hpoly.coeff(0) / hpoly.lc()), field.zero(), field.one());
    Poly hn = compose(w.as_ratfunc(), hp).as_poly();
    Poly gn = compose(gp, w.inverse().as_ratfunc()).as_poly();
    if (!(RatFunc(compose_poly(gn, hn)) == f))
        throw Error(ErrorCode::Internal, "polynomialized decomposition failed verification");
    return PolyPair{gn, hn};
}

} // namespace ratdecomp
