#include "ratdecomp/roots.hpp"

#include <algorithm>
#include <optional>

namespace ratdecomp {

namespace {

// Polynomials modulo a word-sized prime, ascending coefficients.
using ModPoly = std::vector<std::int64_t>;

std::int64_t md(std::int64_t a, std::int64_t l)
{
    a %= l;
    return a < 0 ? a + l : a;
}

std::int64_t mpow(std::int64_t a, std::int64_t e, std::int64_t l)
{
    std::int64_t r = 1;
    a = md(a, l);
    while (e > 0) {
        if (e & 1)
            r = r * a % l;
        a = a * a % l;
        e >>= 1;
    }
    return r;
}

std::int64_t minv(std::int64_t a, std::int64_t l) { return mpow(a, l - 2, l); }

void mtrim(ModPoly& p)
{
    while (!p.empty() && p.back() == 0)
        p.pop_back();
}

ModPoly mrem(ModPoly a, const ModPoly& b, std::int64_t l)
{
    mtrim(a);
    std::int64_t inv = minv(b.back(), l);
    while (a.size() >= b.size()) {
        std::int64_t t = a.back() * inv % l;
        std::size_t off = a.size() - b.size();
        for (std::size_t j = 0; j < b.size(); ++j)
            a[off + j] = md(a[off + j] - t * b[j], l);
        mtrim(a);
    }
    return a;
}

bool squarefree_mod(ModPoly p, std::int64_t l)
{
    mtrim(p);
    ModPoly d;
    for (std::size_t i = 1; i < p.size(); ++i)
        d.push_back(p[i] * static_cast<std::int64_t>(i % static_cast<std::size_t>(l)) % l);
    mtrim(d);
    if (d.empty())
        return p.size() <= 1;
    ModPoly a = p, b = d;
    while (!b.empty()) {
        ModPoly r = mrem(a, b, l);
        a = std::move(b);
        b = std::move(r);
    }
    return a.size() == 1;
}

std::vector<std::int64_t> roots_mod(const ModPoly& p, std::int64_t l)
{
    std::vector<std::int64_t> out;
    for (std::int64_t x = 0; x < l; ++x) {
        std::int64_t acc = 0;
        for (auto it = p.rbegin(); it != p.rend(); ++it)
            acc = (acc * x + *it) % l;
        if (acc == 0)
            out.push_back(x);
    }
    return out;
}

std::int64_t next_prime(std::int64_t n)
{
    while (!is_prime(n))
        ++n;
    return n;
}

mpz_class mz(const mpz_class& a, const mpz_class& m)
{
    mpz_class r = a % m;
    if (r < 0)
        r += m;
    return r;
}

mpz_class inv_mod(const mpz_class& a, const mpz_class& m)
{
    mpz_class r;
    if (mpz_invert(r.get_mpz_t(), a.get_mpz_t(), m.get_mpz_t()) == 0)
        throw Error(ErrorCode::Internal, "non-invertible element during lifting");
    return r;
}

// Rational number reduced mod m (its denominator is a unit mod m).
mpz_class rat_mod(const mpq_class& q, const mpz_class& m) { return mz(q.get_num() * inv_mod(q.get_den(), m), m); }

std::int64_t rat_mod_small(const mpq_class& q, std::int64_t l)
{
    mpz_class r = rat_mod(q, mpz_class(static_cast<long>(l)));
    return r.get_si();
}

bool den_coprime(const mpq_class& q, std::int64_t l) { return mpz_divisible_ui_p(q.get_den_mpz_t(), static_cast<unsigned long>(l)) == 0; }

mpz_class eval_mod(const std::vector<mpz_class>& p, const mpz_class& x, const mpz_class& m)
{
    mpz_class acc = 0;
    for (auto it = p.rbegin(); it != p.rend(); ++it)
        acc = mz(acc * x + *it, m);
    return acc;
}

// Newton lift of a simple root of p from mod l to mod m = l^k.
mpz_class hensel_lift(const std::vector<mpz_class>& p, mpz_class root, const mpz_class& m)
{
    std::vector<mpz_class> d;
    for (std::size_t i = 1; i < p.size(); ++i)
        d.push_back(mz(p[i] * static_cast<unsigned long>(i), m));
    for (int iter = 0; iter < 200; ++iter) {
        mpz_class v = eval_mod(p, root, m);
        if (v == 0)
            return root;
        root = mz(root - v * inv_mod(eval_mod(d, root, m), m), m);
    }
    throw Error(ErrorCode::Internal, "Hensel lifting failed to converge");
}

mpz_class modulus_above(std::int64_t l, const mpz_class& bound)
{
    mpz_class m = l;
    while (m <= bound)
        m *= l;
    return m;
}

bool is_rational_square(const mpq_class& q, mpq_class& root)
{
    if (sgn(q) < 0)
        return false;
    if (mpz_perfect_square_p(q.get_num_mpz_t()) == 0 || mpz_perfect_square_p(q.get_den_mpz_t()) == 0)
        return false;
    mpz_class n, d;
    mpz_sqrt(n.get_mpz_t(), q.get_num_mpz_t());
    mpz_sqrt(d.get_mpz_t(), q.get_den_mpz_t());
    root = mpq_class(n, d);
    root.canonicalize();
    return true;
}

Poly squarefree_part(const Poly& p)
{
    // Characteristic zero: p / gcd(p, p') removes repeated factors.
    Poly g = gcd(p, p.derivative());
    return divmod(p, g).first.monic();
}

std::vector<Elem> scan_finite(const Poly& p)
{
    const Field& f = p.field();
    auto q = f.size();
    if (!q || *q > kMaxScanFieldSize)
        throw Error(ErrorCode::FieldTooLarge,
                    "root scan over " + f.descriptor() + " exceeds the " + std::to_string(kMaxScanFieldSize) + "-element cap");
    std::vector<Elem> out;
    if (!f.is_extension()) {
        std::int64_t l = f.characteristic();
        ModPoly mp;
        for (const auto& c : p.coeffs())
            mp.push_back(c.residue(0));
        for (auto r : roots_mod(mp, l))
            out.push_back(f.from_int(r));
    } else {
        for (std::uint64_t i = 0; i < *q; ++i) {
            Elem x = f.element_at(i);
            if (p.eval(x).is_zero())
                out.push_back(x);
        }
    }
    return out;
}

std::vector<Elem> roots_rational_field(const Poly& p)
{
    std::vector<Elem> out;
    for (const auto& r : detail::rational_roots_padic(p))
        out.push_back(p.field().from_rational(r));
    return out;
}

// Roots of p (squarefree, monic, p(0) != 0) over Q[g]/(m) outside Q.
std::vector<Elem> irrational_roots_quadext(const Poly& sq)
{
    const Field& f = sq.field();
    const Field base = f.base();
    const mpq_class mb = f.modulus_b().rat(0);
    const mpq_class mc = f.modulus_c().rat(0);

    // Norm polynomial sq * conj(sq) has rational coefficients.
    Poly norm = sq * sq.conj();
    std::vector<Elem> nc;
    for (const auto& c : norm.coeffs())
        nc.push_back(c.coord(0));
    std::vector<mpz_class> ni = detail::primitive_integer_form(Poly(base, nc));
    mpz_class sumsq = 0;
    for (const auto& c : ni)
        sumsq += c * c;
    mpz_class l2;
    mpz_sqrt(l2.get_mpz_t(), sumsq.get_mpz_t());
    // Coefficients of a primitive integer quadratic factor are bounded by
    // twice the 2-norm of the polynomial it divides.
    mpz_class bound = 2 * (l2 + 1);
    mpz_class need = 2 * bound * bound;

    for (std::int64_t l = 101;; l = next_prime(l + 1)) {
        if (l > 1000000)
            throw Error(ErrorCode::Internal, "no suitable prime for l-adic root finding");
        if (!den_coprime(mb, l) || !den_coprime(mc, l))
            continue;
        bool ok = true;
        for (const auto& c : sq.coeffs())
            ok = ok && den_coprime(c.rat(0), l) && den_coprime(c.rat(1), l);
        if (!ok)
            continue;
        std::int64_t bl = rat_mod_small(mb, l), cl = rat_mod_small(mc, l);
        std::int64_t disc = md(bl * bl - 4 * cl, l);
        if (disc == 0 || mpow(disc, (l - 1) / 2, l) != 1)
            continue;
        auto sroots = roots_mod({cl, bl, 1}, l);
        if (sroots.size() != 2)
            continue;
        std::int64_t s_small[2] = {sroots[0], sroots[1]};
        ModPoly images[2];
        for (int e = 0; e < 2; ++e) {
            for (const auto& c : sq.coeffs())
                images[e].push_back(md(rat_mod_small(c.rat(0), l) + rat_mod_small(c.rat(1), l) * s_small[e], l));
            ok = ok && images[e].back() != 0 && squarefree_mod(images[e], l);
        }
        if (!ok)
            continue;

        mpz_class m = modulus_above(l, need);
        std::vector<mpz_class> minpoly = {rat_mod(mc, m), rat_mod(mb, m), 1};
        mpz_class s1 = hensel_lift(minpoly, s_small[0], m);
        mpz_class s2 = mz(-rat_mod(mb, m) - s1, m);
        mpz_class s[2] = {s1, s2};

        std::vector<mpz_class> lifted[2];
        for (int e = 0; e < 2; ++e) {
            std::vector<mpz_class> pm;
            for (const auto& c : sq.coeffs())
                pm.push_back(mz(rat_mod(c.rat(0), m) + rat_mod(c.rat(1), m) * s[e], m));
            for (auto r : roots_mod(images[e], l))
                lifted[e].push_back(hensel_lift(pm, r, m));
        }

        mpq_class disc_m = mb * mb - 4 * mc;
        std::vector<Elem> out;
        Elem sqrt_disc = f.gen() * f.from_int(2) + f.from_rational(mb); // (2g + b)^2 = b^2 - 4c
        for (const auto& r1 : lifted[0]) {
            for (const auto& r2 : lifted[1]) {
                mpq_class t, n;
                if (!detail::rational_reconstruct(mz(r1 + r2, m), m, bound, bound, t))
                    continue;
                if (!detail::rational_reconstruct(mz(r1 * r2, m), m, bound, bound, n))
                    continue;
                mpq_class delta = t * t - 4 * n;
                mpq_class w;
                if (sgn(delta) == 0 || !is_rational_square(delta / disc_m, w))
                    continue;
                for (int sign : {1, -1}) {
                    Elem cand = (f.from_rational(t) + f.from_rational(sign * w) * sqrt_disc) / f.from_int(2);
                    if (sq.eval(cand).is_zero())
                        out.push_back(cand);
                }
            }
        }
        return out;
    }
}

std::vector<Elem> roots_char0(const Poly& p)
{
    const Field& f = p.field();
    std::vector<Elem> out;
    // Strip the factor x^k.
    int k = 0;
    while (p.coeff(k).is_zero())
        ++k;
    if (k > 0)
        out.push_back(f.zero());
    std::vector<Elem> rest(p.coeffs().begin() + k, p.coeffs().end());
    Poly q(f, std::move(rest));
    if (q.degree() < 1)
        return out;
    Poly sq = squarefree_part(q);

    if (!f.is_extension()) {
        auto r = roots_rational_field(sq);
        out.insert(out.end(), r.begin(), r.end());
        return out;
    }

    if (sq.degree() == 1) {
        out.push_back(-sq.coeff(0) / sq.coeff(1));
        return out;
    }

    // Rational roots: both coordinate polynomials vanish.
    const Field base = f.base();
    std::vector<Elem> a, b;
    for (const auto& c : sq.coeffs()) {
        a.push_back(c.coord(0));
        b.push_back(c.coord(1));
    }
    Poly common = gcd(Poly(base, a), Poly(base, b));
    if (common.degree() >= 1)
        for (const auto& r : detail::rational_roots_padic(common))
            out.push_back(f.from_rational(r));

    auto irr = irrational_roots_quadext(sq);
    out.insert(out.end(), irr.begin(), irr.end());
    return out;
}

} // namespace

namespace detail {

std::vector<mpz_class> primitive_integer_form(const Poly& p)
{
    mpz_class lcm_den = 1;
    for (const auto& c : p.coeffs())
        mpz_lcm(lcm_den.get_mpz_t(), lcm_den.get_mpz_t(), c.rat(0).get_den_mpz_t());
    std::vector<mpz_class> out;
    mpz_class content = 0;
    for (const auto& c : p.coeffs()) {
        mpq_class scaled = c.rat(0) * lcm_den;
        out.push_back(scaled.get_num());
        mpz_gcd(content.get_mpz_t(), content.get_mpz_t(), out.back().get_mpz_t());
    }
    if (content != 0) {
        if (!out.empty() && out.back() < 0)
            content = -content;
        for (auto& c : out)
            c /= content;
    }
    return out;
}

bool rational_reconstruct(const mpz_class& a, const mpz_class& m, const mpz_class& num_bound,
                          const mpz_class& den_bound, mpq_class& out)
{
    mpz_class r0 = m, r1 = mz(a, m);
    mpz_class t0 = 0, t1 = 1;
    while (abs(r1) > num_bound) {
        mpz_class q = r0 / r1;
        mpz_class tmp = r0 - q * r1;
        r0 = r1;
        r1 = tmp;
        tmp = t0 - q * t1;
        t0 = t1;
        t1 = tmp;
    }
    if (t1 == 0 || abs(t1) > den_bound)
        return false;
    mpz_class g;
    mpz_gcd(g.get_mpz_t(), r1.get_mpz_t(), t1.get_mpz_t());
    if (g != 1)
        return false;
    out = mpq_class(r1, t1);
    out.canonicalize();
    return true;
}

std::vector<mpq_class> rational_roots_padic(const Poly& p)
{
    if (p.is_zero())
        throw Error(ErrorCode::ZeroInput, "roots of the zero polynomial");
    std::vector<mpq_class> out;
    int k = 0;
    while (p.coeff(k).is_zero())
        ++k;
    if (k > 0)
        out.push_back(0);
    std::vector<Elem> rest(p.coeffs().begin() + k, p.coeffs().end());
    Poly q(p.field(), std::move(rest));
    if (q.degree() < 1)
        return out;
    std::vector<mpz_class> ip = primitive_integer_form(squarefree_part(q));

    // A root n/d in lowest terms has n | ip[0] and d | lc.
    mpz_class num_bound = abs(ip.front());
    mpz_class den_bound = abs(ip.back());
    mpz_class need = 2 * num_bound * den_bound;

    for (std::int64_t l = 101;; l = next_prime(l + 1)) {
        if (l > 1000000)
            throw Error(ErrorCode::Internal, "no suitable prime for l-adic root finding");
        if (mpz_divisible_ui_p(ip.back().get_mpz_t(), static_cast<unsigned long>(l)) != 0)
            continue;
        ModPoly image;
        mpz_class lz = l;
        for (const auto& c : ip)
            image.push_back(mz(c, lz).get_si());
        if (!squarefree_mod(image, l))
            continue;
        mpz_class m = modulus_above(l, need);
        std::vector<mpz_class> pm;
        for (const auto& c : ip)
            pm.push_back(mz(c, m));
        for (auto r : roots_mod(image, l)) {
            mpq_class cand;
            if (!rational_reconstruct(hensel_lift(pm, r, m), m, num_bound, den_bound, cand))
                continue;
            mpz_class acc_num = 0;
            // Exact check: sum ip[i] * n^i * d^(deg - i) == 0.
            const mpz_class& n = cand.get_num();
            const mpz_class& d = cand.get_den();
            mpz_class npow = 1;
            std::vector<mpz_class> dpows(ip.size(), 1);
            for (std::size_t i = 1; i < ip.size(); ++i)
                dpows[i] = dpows[i - 1] * d;
            for (std::size_t i = 0; i < ip.size(); ++i) {
                acc_num += ip[i] * npow * dpows[ip.size() - 1 - i];
                npow *= n;
            }
            if (acc_num == 0)
                out.push_back(cand);
        }
        return out;
    }
}

} // namespace detail

std::vector<Elem> roots_in_field(const Poly& p)
{
    if (p.is_zero())
        throw Error(ErrorCode::ZeroInput, "roots of the zero polynomial");
    std::vector<Elem> out = p.field().is_finite() ? scan_finite(p) : roots_char0(p);
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    for (const auto& r : out)
        if (!p.eval(r).is_zero())
            throw Error(ErrorCode::Internal, "root verification failed for " + r.to_string());
    return out;
}

std::vector<Elem> nth_roots_of_unity(const Field& field, int n)
{
    if (n < 1)
        throw Error(ErrorCode::BadArgument, "n must be positive");
    Poly p = Poly::monomial(field.one(), n) - Poly::constant(field.one());
    return roots_in_field(p);
}

} // namespace ratdecomp
