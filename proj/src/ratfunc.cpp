#include "ratdecomp/ratfunc.hpp"

#include <algorithm>

#include "ratdecomp/roots.hpp"

namespace ratdecomp {

RatFunc::RatFunc(const Poly& num, const Poly& den)
{
    if (den.is_zero())
        throw Error(ErrorCode::ZeroDenominator, "rational function with zero denominator");
    if (!(num.field() == den.field()))
        throw Error(ErrorCode::MixedFields, "numerator and denominator over different fields");
    if (num.is_zero()) {
        num_ = Poly(num.field());
        den_ = Poly::constant(num.field().one());
        return;
    }
    Poly g = gcd(num, den);
    Poly n = g.degree() > 0 ? divmod(num, g).first : num;
    Poly d = g.degree() > 0 ? divmod(den, g).first : den;
    Elem lc_inv = d.lc().inv();
    num_ = n.scale(lc_inv);
    den_ = d.scale(lc_inv);
}

RatFunc::RatFunc(const Poly& p) : num_(p), den_(Poly::constant(p.field().one())) {}

RatFunc make_ratfunc(const Poly& num, const Poly& den) { return RatFunc(num, den); }

int RatFunc::degree() const { return std::max({num_.degree(), den_.degree(), 0}); }

Poly RatFunc::as_poly() const
{
    if (!is_polynomial())
        throw Error(ErrorCode::BadArgument, to_string() + " is not a polynomial");
    return num_.scale(den_.lc().inv());
}

RatFunc RatFunc::operator+(const RatFunc& o) const { return RatFunc(num_ * o.den_ + o.num_ * den_, den_ * o.den_); }

RatFunc RatFunc::operator-(const RatFunc& o) const { return RatFunc(num_ * o.den_ - o.num_ * den_, den_ * o.den_); }

RatFunc RatFunc::operator*(const RatFunc& o) const { return RatFunc(num_ * o.num_, den_ * o.den_); }

RatFunc RatFunc::operator/(const RatFunc& o) const
{
    if (o.num_.is_zero())
        throw Error(ErrorCode::DivisionByZero, "division by the zero function");
    return RatFunc(num_ * o.den_, den_ * o.num_);
}

RatFunc RatFunc::operator-() const { return RatFunc(-num_, den_); }

RatFunc RatFunc::pow(int e) const
{
    if (e < 0)
        return (RatFunc::constant(field().one()) / *this).pow(-e);
    return RatFunc(num_.pow(e), den_.pow(e));
}

std::string RatFunc::to_string(const std::string& var) const
{
    if (den_.degree() == 0)
        return num_.to_string(var);
    std::string n = num_.to_string(var);
    std::string d = den_.to_string(var);
    return (num_.is_compound() ? "(" + n + ")" : n) + "/" + (den_.is_compound() ? "(" + d + ")" : d);
}

RatFunc compose(const RatFunc& g, const RatFunc& h)
{
    if (!(g.field() == h.field()))
        throw Error(ErrorCode::MixedFields, "composition of functions over different fields");
    if (g.is_constant())
        return g;
    if (h.is_constant())
        throw Error(ErrorCode::ConstantInner, "inner component " + h.to_string() + " is constant");
    const int r = g.degree();
    const Field& f = g.field();
    std::vector<Poly> np(static_cast<std::size_t>(r) + 1), dp(static_cast<std::size_t>(r) + 1);
    np[0] = dp[0] = Poly::constant(f.one());
    for (int i = 1; i <= r; ++i) {
        np[static_cast<std::size_t>(i)] = np[static_cast<std::size_t>(i - 1)] * h.num();
        dp[static_cast<std::size_t>(i)] = dp[static_cast<std::size_t>(i - 1)] * h.den();
    }
    Poly num(f), den(f);
    for (int i = 0; i <= r; ++i) {
        Poly basis = np[static_cast<std::size_t>(i)] * dp[static_cast<std::size_t>(r - i)];
        num += basis.scale(g.num().coeff(i));
        den += basis.scale(g.den().coeff(i));
    }
    return RatFunc(num, den);
}

const Elem& ProjPoint::value() const
{
    if (!value_)
        throw Error(ErrorCode::BadArgument, "point at infinity has no finite value");
    return *value_;
}

bool ProjPoint::operator==(const ProjPoint& o) const
{
    if (is_infinity() || o.is_infinity())
        return is_infinity() == o.is_infinity();
    return *value_ == *o.value_;
}

std::strong_ordering ProjPoint::operator<=>(const ProjPoint& o) const
{
    if (is_infinity() || o.is_infinity())
        return static_cast<int>(is_infinity()) <=> static_cast<int>(o.is_infinity());
    return *value_ <=> *o.value_;
}

std::string ProjPoint::to_string() const { return is_infinity() ? "inf" : value_->to_string(); }

Mobius::Mobius(const Elem& a, const Elem& b, const Elem& c, const Elem& d) : m_{a, b, c, d}
{
    if ((a * d - b * c).is_zero())
        throw Error(ErrorCode::DegeneratePoints, "Mobius transformation with zero determinant");
    Elem s = c.is_zero() ? a.inv() : c.inv();
    if (!s.is_one())
        for (auto& e : m_)
            e = e * s;
}

Mobius Mobius::identity(const Field& field) { return Mobius(field.one(), field.zero(), field.zero(), field.one()); }

Mobius Mobius::from_ratfunc(const RatFunc& f)
{
    if (f.degree() != 1)
        throw Error(ErrorCode::BadDegree, f.to_string() + " is not of degree 1");
    return Mobius(f.num().coeff(1), f.num().coeff(0), f.den().coeff(1), f.den().coeff(0));
}

bool Mobius::is_identity() const { return m_[0].is_one() && m_[1].is_zero() && m_[2].is_zero() && m_[3].is_one(); }

Mobius Mobius::compose(const Mobius& o) const
{
    // Matrix product [a b; c d] * [a' b'; c' d'].
    return Mobius(m_[0] * o.m_[0] + m_[1] * o.m_[2], m_[0] * o.m_[1] + m_[1] * o.m_[3], m_[2] * o.m_[0] + m_[3] * o.m_[2],
                  m_[2] * o.m_[1] + m_[3] * o.m_[3]);
}

Mobius Mobius::inverse() const { return Mobius(m_[3], -m_[1], -m_[2], m_[0]); }

Mobius Mobius::pow(std::int64_t k) const
{
    if (k < 0)
        return inverse().pow(-k);
    Mobius result = identity(field());
    Mobius base = *this;
    while (k > 0) {
        if (k & 1)
            result = result.compose(base);
        k >>= 1;
        if (k > 0)
            base = base.compose(base);
    }
    return result;
}

ProjPoint Mobius::apply(const ProjPoint& p) const
{
    if (p.is_infinity()) {
        if (m_[2].is_zero())
            return ProjPoint::infinity();
        return ProjPoint::finite(m_[0] / m_[2]);
    }
    const Elem& z = p.value();
    Elem den = m_[2] * z + m_[3];
    if (den.is_zero())
        return ProjPoint::infinity();
    return ProjPoint::finite((m_[0] * z + m_[1]) / den);
}

RatFunc Mobius::as_ratfunc() const
{
    const Field f = field();
    return RatFunc(Poly(f, {m_[1], m_[0]}), Poly(f, {m_[3], m_[2]}));
}

std::strong_ordering Mobius::operator<=>(const Mobius& o) const
{
    for (std::size_t i = 0; i < 4; ++i)
        if (auto c = m_[i] <=> o.m_[i]; c != 0)
            return c;
    return std::strong_ordering::equal;
}

namespace {

std::string factor_text(const Elem& e)
{
    std::string t = e.to_string();
    return e.is_compound() ? "(" + t + ")" : t;
}

std::string linear_text(const Elem& s, const Elem& t)
{
    std::string lead = factor_text(s) + "*x";
    std::string tail = factor_text(t);
    if (!tail.empty() && tail[0] == '-')
        return lead + "-" + tail.substr(1);
    return lead + "+" + tail;
}

} // namespace

std::string Mobius::to_string() const { return "(" + linear_text(m_[0], m_[1]) + ")/(" + linear_text(m_[2], m_[3]) + ")"; }

std::string Mobius::pretty() const { return as_ratfunc().to_string(); }

std::optional<int> mobius_order(const Mobius& u, int bound)
{
    if (bound < 1)
        throw Error(ErrorCode::BadArgument, "order bound must be positive");
    Mobius acc = u;
    for (int k = 1; k <= bound; ++k) {
        if (acc.is_identity())
            return k;
        acc = acc.compose(u);
    }
    return std::nullopt;
}

RatFunc apply_mobius(const RatFunc& f, const Mobius& u) { return compose(f, u.as_ratfunc()); }

namespace {

// F(a*x + b, c*x + d) for the degree-n homogenization F of p.
Poly homogeneous_substitute(const Poly& p, int n, const std::vector<Poly>& lin_pows, const std::vector<Poly>& den_pows)
{
    Poly out(p.field());
    for (int i = 0; i <= p.degree(); ++i) {
        const Elem& c = p.coeffs()[static_cast<std::size_t>(i)];
        if (c.is_zero())
            continue;
        out += (lin_pows[static_cast<std::size_t>(i)] * den_pows[static_cast<std::size_t>(n - i)]).scale(c);
    }
    return out;
}

} // namespace

bool fixes(const RatFunc& f, const Mobius& u)
{
    if (!(f.field() == u.field()))
        throw Error(ErrorCode::MixedFields, "function and transformation over different fields");
    if (f.is_constant())
        return true;
    const Field field = f.field();
    // Cheap rejection at a few sample points before the exact identity.
    for (std::int64_t s = 2; s < 5; ++s) {
        ProjPoint z = ProjPoint::finite(field.from_int(s));
        if (!(eval_proj(f, u.apply(z)) == eval_proj(f, z)))
            return false;
    }
    const int n = f.degree();
    std::vector<Poly> lin(static_cast<std::size_t>(n) + 1), den(static_cast<std::size_t>(n) + 1);
    Poly l(field, {u.b(), u.a()}), d(field, {u.d(), u.c()});
    lin[0] = den[0] = Poly::constant(field.one());
    for (int i = 1; i <= n; ++i) {
        lin[static_cast<std::size_t>(i)] = lin[static_cast<std::size_t>(i - 1)] * l;
        den[static_cast<std::size_t>(i)] = den[static_cast<std::size_t>(i - 1)] * d;
    }
    Poly num_u = homogeneous_substitute(f.num(), n, lin, den);
    Poly den_u = homogeneous_substitute(f.den(), n, lin, den);
    return num_u * f.den() == den_u * f.num();
}

ProjPoint eval_proj(const RatFunc& f, const ProjPoint& p)
{
    if (p.is_infinity()) {
        int dn = f.num().degree(), dd = f.den().degree();
        if (dn > dd)
            return ProjPoint::infinity();
        if (dn < dd)
            return ProjPoint::finite(f.field().zero());
        return ProjPoint::finite(f.num().lc() / f.den().lc());
    }
    Elem dv = f.den().eval(p.value());
    if (dv.is_zero())
        return ProjPoint::infinity();
    return ProjPoint::finite(f.num().eval(p.value()) / dv);
}

namespace {

// Sends (p, q, r) to (0, 1, ∞).
Mobius to_standard(const ProjPoint& p, const ProjPoint& q, const ProjPoint& r, const Field& f)
{
    if (p.is_infinity())
        return Mobius(f.zero(), q.value() - r.value(), f.one(), -r.value());
    if (q.is_infinity())
        return Mobius(f.one(), -p.value(), f.one(), -r.value());
    if (r.is_infinity())
        return Mobius(f.one(), -p.value(), f.zero(), q.value() - p.value());
    Elem qr = q.value() - r.value();
    Elem qp = q.value() - p.value();
    return Mobius(qr, -(p.value() * qr), qp, -(r.value() * qp));
}

} // namespace

Mobius mobius_from_three_points(const std::array<std::pair<ProjPoint, ProjPoint>, 3>& pairs)
{
    for (int i = 0; i < 3; ++i)
        for (int j = i + 1; j < 3; ++j)
            if (pairs[static_cast<std::size_t>(i)].first == pairs[static_cast<std::size_t>(j)].first
                || pairs[static_cast<std::size_t>(i)].second == pairs[static_cast<std::size_t>(j)].second)
                throw Error(ErrorCode::DegeneratePoints, "three-point interpolation needs distinct points");
    Field f;
    bool found = false;
    for (const auto& [s, t] : pairs) {
        for (const ProjPoint* pt : {&s, &t})
            if (!pt->is_infinity() && !found) {
                f = pt->value().field();
                found = true;
            }
    }
    Mobius src = to_standard(pairs[0].first, pairs[1].first, pairs[2].first, f);
    Mobius dst = to_standard(pairs[0].second, pairs[1].second, pairs[2].second, f);
    Mobius u = dst.inverse().compose(src);
    for (const auto& [s, t] : pairs)
        if (!(u.apply(s) == t))
            throw Error(ErrorCode::Internal, "three-point interpolation failed verification");
    return u;
}

std::vector<ProjPoint> fiber(const RatFunc& f, const ProjPoint& c)
{
    if (f.is_constant())
        throw Error(ErrorCode::BadArgument, "fiber of a constant function");
    std::vector<ProjPoint> out;
    Poly target = c.is_infinity() ? f.den() : f.num() - f.den().scale(c.value());
    if (target.degree() >= 1)
        for (auto& r : roots_in_field(target))
            out.push_back(ProjPoint::finite(std::move(r)));
    if (eval_proj(f, ProjPoint::infinity()) == c)
        out.push_back(ProjPoint::infinity());
    std::sort(out.begin(), out.end());
    return out;
}

} // namespace ratdecomp
