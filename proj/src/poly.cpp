#include "ratdecomp/poly.hpp"

#include <algorithm>

namespace ratdecomp {

Poly::Poly(Field field, std::vector<Elem> coeffs) : field_(std::move(field)), c_(std::move(coeffs))
{
    for (const auto& c : c_)
        if (!(c.field() == field_))
            throw Error(ErrorCode::MixedFields, "coefficient does not belong to " + field_.descriptor());
    trim();
}

Poly Poly::x(const Field& field) { return Poly(field, {field.zero(), field.one()}); }

Poly Poly::constant(const Elem& c) { return Poly(c.field(), {c}); }

Poly Poly::monomial(const Elem& c, int degree)
{
    Field f = c.field();
    std::vector<Elem> v(static_cast<std::size_t>(degree) + 1, f.zero());
    v.back() = c;
    return Poly(f, std::move(v));
}

Poly Poly::from_ints(const Field& field, const std::vector<std::int64_t>& coeffs)
{
    std::vector<Elem> v;
    v.reserve(coeffs.size());
    for (auto c : coeffs)
        v.push_back(field.from_int(c));
    return Poly(field, std::move(v));
}

void Poly::trim()
{
    while (!c_.empty() && c_.back().is_zero())
        c_.pop_back();
}

void Poly::check_same(const Poly& o) const
{
    if (!(field_ == o.field_))
        throw Error(ErrorCode::MixedFields, "polynomials over different fields");
}

Elem Poly::coeff(int i) const
{
    if (i < 0 || i >= static_cast<int>(c_.size()))
        return field_.zero();
    return c_[static_cast<std::size_t>(i)];
}

Elem Poly::lc() const { return c_.empty() ? field_.zero() : c_.back(); }

Elem Poly::eval(const Elem& a) const
{
    if (!(a.field() == field_))
        throw Error(ErrorCode::MixedFields, "evaluation point does not belong to " + field_.descriptor());
    Elem acc = field_.zero();
    for (auto it = c_.rbegin(); it != c_.rend(); ++it)
        acc = acc * a + *it;
    return acc;
}

Poly Poly::derivative() const
{
    if (c_.size() <= 1)
        return Poly(field_);
    std::vector<Elem> d;
    d.reserve(c_.size() - 1);
    for (std::size_t i = 1; i < c_.size(); ++i)
        d.push_back(c_[i] * field_.from_int(static_cast<std::int64_t>(i)));
    return Poly(field_, std::move(d));
}

Poly Poly::monic() const
{
    if (c_.empty() || c_.back().is_one())
        return *this;
    return scale(c_.back().inv());
}

Poly Poly::scale(const Elem& c) const
{
    std::vector<Elem> v;
    v.reserve(c_.size());
    for (const auto& e : c_)
        v.push_back(e * c);
    return Poly(field_, std::move(v));
}

Poly Poly::pow(int e) const
{
    Poly result = Poly::constant(field_.one());
    Poly base = *this;
    while (e > 0) {
        if (e & 1)
            result = result * base;
        e >>= 1;
        if (e > 0)
            base = base * base;
    }
    return result;
}

Poly Poly::shift(const Elem& c) const { return compose_poly(*this, Poly(field_, {c, field_.one()})); }

Poly Poly::conj() const
{
    std::vector<Elem> v;
    v.reserve(c_.size());
    for (const auto& e : c_)
        v.push_back(e.conj());
    return Poly(field_, std::move(v));
}

Poly Poly::operator+(const Poly& o) const
{
    check_same(o);
    std::vector<Elem> v(std::max(c_.size(), o.c_.size()), field_.zero());
    for (std::size_t i = 0; i < c_.size(); ++i)
        v[i] = c_[i];
    for (std::size_t i = 0; i < o.c_.size(); ++i)
        v[i] = v[i] + o.c_[i];
    return Poly(field_, std::move(v));
}

Poly Poly::operator-(const Poly& o) const { return *this + (-o); }

Poly Poly::operator-() const
{
    std::vector<Elem> v;
    v.reserve(c_.size());
    for (const auto& e : c_)
        v.push_back(-e);
    return Poly(field_, std::move(v));
}

Poly Poly::operator*(const Poly& o) const
{
    check_same(o);
    if (c_.empty() || o.c_.empty())
        return Poly(field_);
    std::vector<Elem> v(c_.size() + o.c_.size() - 1, field_.zero());
    for (std::size_t i = 0; i < c_.size(); ++i) {
        if (c_[i].is_zero())
            continue;
        for (std::size_t j = 0; j < o.c_.size(); ++j)
            v[i + j] += c_[i] * o.c_[j];
    }
    return Poly(field_, std::move(v));
}

bool Poly::operator==(const Poly& o) const { return field_ == o.field_ && c_ == o.c_; }

bool Poly::is_compound() const
{
    std::size_t terms = 0;
    for (const auto& c : c_)
        terms += c.is_zero() ? 0 : (c.is_compound() ? 2 : 1);
    return terms > 1;
}

std::string Poly::to_string(const std::string& var) const
{
    if (c_.empty())
        return "0";
    std::string out;
    for (int i = degree(); i >= 0; --i) {
        const Elem& c = c_[static_cast<std::size_t>(i)];
        if (c.is_zero())
            continue;
        std::string ct = c.to_string();
        bool negative = false;
        if (!c.is_compound() && !ct.empty() && ct[0] == '-') {
            negative = true;
            ct = ct.substr(1);
        }
        std::string mono = i == 0 ? "" : (i == 1 ? var : var + "^" + std::to_string(i));
        std::string term;
        if (i == 0)
            term = c.is_compound() && !out.empty() ? "(" + ct + ")" : ct;
        else if (ct == "1")
            term = mono;
        else
            term = (c.is_compound() ? "(" + ct + ")" : ct) + "*" + mono;
        if (out.empty())
            out = (negative ? "-" : "") + term;
        else
            out += (negative ? " - " : " + ") + term;
    }
    return out;
}

std::pair<Poly, Poly> divmod(const Poly& a, const Poly& b)
{
    if (b.is_zero())
        throw Error(ErrorCode::DivisionByZero, "polynomial division by zero");
    if (!(a.field() == b.field()))
        throw Error(ErrorCode::MixedFields, "polynomials over different fields");
    const Field& f = a.field();
    if (a.degree() < b.degree())
        return {Poly(f), a};
    std::vector<Elem> r = a.coeffs();
    std::vector<Elem> q(static_cast<std::size_t>(a.degree() - b.degree() + 1), f.zero());
    Elem lead_inv = b.lc().inv();
    const auto& bc = b.coeffs();
    for (int i = a.degree(); i >= b.degree(); --i) {
        Elem t = r[static_cast<std::size_t>(i)] * lead_inv;
        q[static_cast<std::size_t>(i - b.degree())] = t;
        if (t.is_zero())
            continue;
        for (int j = 0; j <= b.degree(); ++j)
            r[static_cast<std::size_t>(i - b.degree() + j)] -= t * bc[static_cast<std::size_t>(j)];
    }
    r.resize(static_cast<std::size_t>(std::max(b.degree(), 0)));
    return {Poly(f, std::move(q)), Poly(f, std::move(r))};
}

Poly gcd(const Poly& a, const Poly& b)
{
    Poly x = a, y = b;
    while (!y.is_zero()) {
        Poly r = divmod(x, y).second;
        x = std::move(y);
        y = std::move(r);
    }
    return x.monic();
}

Poly compose_poly(const Poly& g, const Poly& h)
{
    if (!(g.field() == h.field()))
        throw Error(ErrorCode::MixedFields, "polynomials over different fields");
    Poly acc(g.field());
    const auto& gc = g.coeffs();
    for (auto it = gc.rbegin(); it != gc.rend(); ++it)
        acc = acc * h + Poly::constant(*it);
    return acc;
}

BiPoly::BiPoly(Field field, std::vector<Poly> rows) : field_(std::move(field)), rows_(std::move(rows))
{
    for (const auto& r : rows_)
        if (!(r.field() == field_))
            throw Error(ErrorCode::MixedFields, "bivariate coefficient over a different field");
    trim();
}

BiPoly BiPoly::from_grid(const Field& field, const std::vector<std::vector<Elem>>& grid)
{
    std::size_t cols = 0;
    for (const auto& row : grid)
        cols = std::max(cols, row.size());
    std::vector<Poly> rows;
    for (std::size_t j = 0; j < cols; ++j) {
        std::vector<Elem> col;
        for (const auto& row : grid)
            col.push_back(j < row.size() ? row[j] : field.zero());
        rows.emplace_back(field, std::move(col));
    }
    return BiPoly(field, std::move(rows));
}

void BiPoly::trim()
{
    while (!rows_.empty() && rows_.back().is_zero())
        rows_.pop_back();
}

int BiPoly::degree_first() const
{
    int d = Poly::kZeroDegree;
    for (const auto& r : rows_)
        d = std::max(d, r.degree());
    return d;
}

Elem BiPoly::coeff(int i, int j) const
{
    if (j < 0 || j >= static_cast<int>(rows_.size()))
        return field_.zero();
    return rows_[static_cast<std::size_t>(j)].coeff(i);
}

BiPoly BiPoly::transpose() const
{
    int du = degree_first();
    std::vector<Poly> rows;
    for (int i = 0; i <= du; ++i) {
        std::vector<Elem> col;
        for (const auto& r : rows_)
            col.push_back(r.coeff(i));
        rows.emplace_back(field_, std::move(col));
    }
    return BiPoly(field_, std::move(rows));
}

Poly BiPoly::eval_first(const Elem& u) const
{
    std::vector<Elem> v;
    v.reserve(rows_.size());
    for (const auto& r : rows_)
        v.push_back(r.eval(u));
    return Poly(field_, std::move(v));
}

Poly BiPoly::eval_second(const Elem& v) const
{
    Poly acc(field_);
    for (auto it = rows_.rbegin(); it != rows_.rend(); ++it)
        acc = acc.scale(v) + *it;
    return acc;
}

BiPoly BiPoly::operator+(const BiPoly& o) const
{
    std::vector<Poly> rows(std::max(rows_.size(), o.rows_.size()), Poly(field_));
    for (std::size_t j = 0; j < rows_.size(); ++j)
        rows[j] = rows_[j];
    for (std::size_t j = 0; j < o.rows_.size(); ++j)
        rows[j] = rows[j] + o.rows_[j];
    return BiPoly(field_, std::move(rows));
}

BiPoly BiPoly::operator*(const BiPoly& o) const
{
    if (rows_.empty() || o.rows_.empty())
        return BiPoly(field_);
    std::vector<Poly> rows(rows_.size() + o.rows_.size() - 1, Poly(field_));
    for (std::size_t i = 0; i < rows_.size(); ++i)
        for (std::size_t j = 0; j < o.rows_.size(); ++j)
            rows[i + j] += rows_[i] * o.rows_[j];
    return BiPoly(field_, std::move(rows));
}

Poly resultant_eliminate(const BiPoly& a, const BiPoly& b, Var var)
{
    if (a.is_zero() || b.is_zero())
        throw Error(ErrorCode::ZeroInput, "resultant of a zero polynomial");
    if (!(a.field() == b.field()))
        throw Error(ErrorCode::MixedFields, "bivariate polynomials over different fields");
    // Rows of the stored form are the powers of the eliminated variable.
    const BiPoly A = var == Var::Second ? a : a.transpose();
    const BiPoly B = var == Var::Second ? b : b.transpose();
    const Field& f = a.field();
    const int m = A.degree_second();
    const int n = B.degree_second();
    const int size = m + n;
    if (size == 0)
        return Poly::constant(f.one());

    // Sylvester matrix: n shifted copies of A, then m shifted copies of B,
    // coefficients listed from the leading power down.
    std::vector<std::vector<Poly>> mat(static_cast<std::size_t>(size), std::vector<Poly>(static_cast<std::size_t>(size), Poly(f)));
    for (int r = 0; r < n; ++r)
        for (int k = 0; k <= m; ++k)
            mat[static_cast<std::size_t>(r)][static_cast<std::size_t>(r + k)] = A.rows()[static_cast<std::size_t>(m - k)];
    for (int r = 0; r < m; ++r)
        for (int k = 0; k <= n; ++k)
            mat[static_cast<std::size_t>(n + r)][static_cast<std::size_t>(r + k)] = B.rows()[static_cast<std::size_t>(n - k)];

    // Bareiss fraction-free elimination; every division is exact.
    bool negate = false;
    Poly prev = Poly::constant(f.one());
    for (int k = 0; k < size - 1; ++k) {
        auto ku = static_cast<std::size_t>(k);
        if (mat[ku][ku].is_zero()) {
            int pivot = -1;
            for (int i = k + 1; i < size; ++i)
                if (!mat[static_cast<std::size_t>(i)][ku].is_zero()) {
                    pivot = i;
                    break;
                }
            if (pivot < 0)
                return Poly(f);
            std::swap(mat[ku], mat[static_cast<std::size_t>(pivot)]);
            negate = !negate;
        }
        for (int i = k + 1; i < size; ++i) {
            auto iu = static_cast<std::size_t>(i);
            for (int j = k + 1; j < size; ++j) {
                auto ju = static_cast<std::size_t>(j);
                Poly num = mat[ku][ku] * mat[iu][ju] - mat[iu][ku] * mat[ku][ju];
                auto [q, r] = divmod(num, prev);
                if (!r.is_zero())
                    throw Error(ErrorCode::Internal, "inexact Bareiss step");
                mat[iu][ju] = std::move(q);
            }
            mat[iu][ku] = Poly(f);
        }
        prev = mat[ku][ku];
    }
    Poly det = mat.back().back();
    return negate ? -det : det;
}

} // namespace ratdecomp
