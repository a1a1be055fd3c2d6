#include "oracles.hpp"

#include <algorithm>
#include <stdexcept>

namespace oracle {

namespace {

std::vector<mpz_class> divisors(mpz_class n)
{
    n = abs(n);
    std::vector<mpz_class> out;
    for (mpz_class d = 1; d * d <= n; ++d)
        if (n % d == 0) {
            out.push_back(d);
            if (d * d != n)
                out.push_back(n / d);
        }
    return out;
}

// Integer coefficients with the same roots as p (p over Q).
std::vector<mpz_class> integer_coeffs(const Poly& p)
{
    mpz_class den = 1;
    for (int i = 0; i <= p.degree(); ++i)
        den = lcm(den, p.coeff(i).rat(0).get_den());
    std::vector<mpz_class> out;
    for (int i = 0; i <= p.degree(); ++i) {
        mpq_class c = p.coeff(i).rat(0) * den;
        out.push_back(c.get_num());
    }
    return out;
}

std::vector<Elem> sorted_unique(std::vector<Elem> v)
{
    std::sort(v.begin(), v.end());
    v.erase(std::unique(v.begin(), v.end()), v.end());
    return v;
}

} // namespace

std::vector<Elem> rational_roots_by_divisors(const Poly& p)
{
    const Field& field = p.field();
    if (field.kind() != FieldKind::Rationals)
        throw std::invalid_argument("oracle expects a polynomial over Q");
    if (p.is_zero())
        throw std::invalid_argument("zero polynomial");
    std::vector<mpz_class> c = integer_coeffs(p);
    std::vector<Elem> out;
    std::size_t low = 0;
    while (low < c.size() && c[low] == 0)
        ++low;
    if (low > 0)
        out.push_back(field.zero());
    if (low + 1 >= c.size())
        return out;
    for (const auto& d : divisors(c[low]))
        for (const auto& e : divisors(c.back()))
            for (int sign : {1, -1}) {
                Elem r = field.from_rational(mpq_class(sign * d, e));
                if (p.eval(r).is_zero())
                    out.push_back(r);
            }
    return sorted_unique(out);
}

std::vector<Elem> quadext_roots_by_resultant(const Poly& p)
{
    const Field& field = p.field();
    if (field.kind() != FieldKind::QuadExt || field.characteristic() != 0)
        throw std::invalid_argument("oracle expects a polynomial over an extension of Q");
    const Field base = field.base();
    const int n = p.degree();
    // grid[i][j] is the coefficient of u^i v^j in p(u + vα).
    std::vector<std::vector<Elem>> grid(static_cast<std::size_t>(n) + 1,
                                        std::vector<Elem>(static_cast<std::size_t>(n) + 1, field.zero()));
    std::vector<std::vector<mpz_class>> binom(static_cast<std::size_t>(n) + 1);
    for (int k = 0; k <= n; ++k) {
        binom[k].assign(static_cast<std::size_t>(k) + 1, 1);
        for (int j = 1; j < k; ++j)
            binom[k][j] = binom[k - 1][j - 1] + binom[k - 1][j];
    }
    for (int k = 0; k <= n; ++k)
        for (int j = 0; j <= k; ++j)
            grid[k - j][j] = grid[k - j][j] + p.coeff(k) * field.gen().pow(j) * field.from_mpz(binom[k][j]);
    std::vector<std::vector<Elem>> ga(grid.size()), gb(grid.size());
    for (std::size_t i = 0; i < grid.size(); ++i)
        for (const auto& e : grid[i]) {
            ga[i].push_back(e.coord(0));
            gb[i].push_back(e.coord(1));
        }
    BiPoly A = BiPoly::from_grid(base, ga);
    BiPoly B = BiPoly::from_grid(base, gb);

    std::vector<Elem> out;
    auto verify = [&](const Elem& u, const Elem& v) {
        Elem r = field.make(u, v);
        if (p.eval(r).is_zero())
            out.push_back(r);
    };
    // v = 0: rational roots.
    Poly a0 = A.eval_second(base.zero()), b0 = B.eval_second(base.zero());
    Poly g0 = b0.is_zero() ? a0 : (a0.is_zero() ? b0 : gcd(a0, b0));
    if (!g0.is_zero() && g0.degree() > 0)
        for (const auto& u : rational_roots_by_divisors(g0))
            verify(u, base.zero());
    if (A.is_zero() || B.is_zero())
        throw std::runtime_error("coordinate polynomial vanishes identically");
    // A v-free coordinate constrains u directly.
    Poly R = A.degree_second() < 1   ? A.rows().front()
             : B.degree_second() < 1 ? B.rows().front()
                                     : resultant_eliminate(A, B, Var::Second);
    if (R.is_zero())
        throw std::runtime_error("resultant vanishes identically");
    for (const auto& u : rational_roots_by_divisors(R)) {
        Poly au = A.eval_first(u), bu = B.eval_first(u);
        Poly g = au.is_zero() ? bu : (bu.is_zero() ? au : gcd(au, bu));
        if (g.is_zero() || g.degree() < 1)
            continue;
        for (const auto& v : rational_roots_by_divisors(g))
            if (!v.is_zero())
                verify(u, v);
    }
    return sorted_unique(out);
}

std::vector<Elem> roots_by_scan(const Poly& p)
{
    std::vector<Elem> out;
    for (const auto& e : p.field().elements())
        if (p.eval(e).is_zero())
            out.push_back(e);
    return sorted_unique(out);
}

std::pair<Poly, Poly> long_division(const Poly& a, const Poly& b)
{
    const Field& field = a.field();
    std::vector<Elem> rem;
    for (int i = 0; i <= a.degree(); ++i)
        rem.push_back(a.coeff(i));
    const int db = b.degree();
    const int dq = a.degree() - db;
    std::vector<Elem> quot(dq >= 0 ? static_cast<std::size_t>(dq) + 1 : 0, field.zero());
    for (int k = dq; k >= 0; --k) {
        Elem q = rem[static_cast<std::size_t>(k + db)] / b.lc();
        quot[static_cast<std::size_t>(k)] = q;
        for (int j = 0; j <= db; ++j)
            rem[static_cast<std::size_t>(k + j)] = rem[static_cast<std::size_t>(k + j)] - q * b.coeff(j);
    }
    if (rem.size() > static_cast<std::size_t>(std::max(db, 0)))
        rem.resize(static_cast<std::size_t>(std::max(db, 0)));
    return {Poly(field, quot), Poly(field, rem)};
}

std::vector<Poly> h_adic_digits(Poly f, const Poly& h)
{
    std::vector<Poly> digits;
    while (!f.is_zero()) {
        auto [q, r] = long_division(f, h);
        digits.push_back(r);
        f = q;
    }
    return digits;
}

std::set<Mobius> fixing_group_enumerate(const RatFunc& f)
{
    const Field& field = f.field();
    auto elems = field.elements();
    std::set<Mobius> out;
    for (const auto& a : elems)
        for (const auto& b : elems)
            for (const auto& c : elems)
                for (const auto& d : elems) {
                    if ((a * d - b * c).is_zero())
                        continue;
                    RatFunc u(Poly(field, {b, a}), Poly(field, {d, c}));
                    if (compose(f, u) == f)
                        out.insert(Mobius(a, b, c, d));
                }
    return out;
}

} // namespace oracle
