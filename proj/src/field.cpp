#include "ratdecomp/field.hpp"

#include <sstream>

namespace ratdecomp {

std::string_view code_name(ErrorCode code)
{
    switch (code) {
    case ErrorCode::NonPrimeModulus: return "NonPrimeModulus";
    case ErrorCode::ReducibleExtensionModulus: return "ReducibleExtensionModulus";
    case ErrorCode::UnsupportedTower: return "UnsupportedTower";
    case ErrorCode::MissingModulus: return "MissingModulus";
    case ErrorCode::BadFieldDescriptor: return "BadFieldDescriptor";
    case ErrorCode::DivisionByZero: return "DivisionByZero";
    case ErrorCode::MixedFields: return "MixedFields";
    case ErrorCode::FieldTooLarge: return "FieldTooLarge";
    case ErrorCode::ZeroInput: return "ZeroInput";
    case ErrorCode::ZeroDenominator: return "ZeroDenominator";
    case ErrorCode::ConstantInner: return "ConstantInner";
    case ErrorCode::DegeneratePoints: return "DegeneratePoints";
    case ErrorCode::NotMonic: return "NotMonic";
    case ErrorCode::DegreeNotDivisible: return "DegreeNotDivisible";
    case ErrorCode::WildRoot: return "WildRoot";
    case ErrorCode::ConstantBase: return "ConstantBase";
    case ErrorCode::WildInput: return "WildInput";
    case ErrorCode::BadDegree: return "BadDegree";
    case ErrorCode::SearchSpaceTooLarge: return "SearchSpaceTooLarge";
    case ErrorCode::InfiniteField: return "InfiniteField";
    case ErrorCode::ConstantRightComponent: return "ConstantRightComponent";
    case ErrorCode::DifferentComposites: return "DifferentComposites";
    case ErrorCode::NotPolynomialComposite: return "NotPolynomialComposite";
    case ErrorCode::NotEnoughSamplePoints: return "NotEnoughSamplePoints";
    case ErrorCode::GroupInvariantViolated: return "GroupInvariantViolated";
    case ErrorCode::SeedExhaustion: return "SeedExhaustion";
    case ErrorCode::LeftDivisionFailed: return "LeftDivisionFailed";
    case ErrorCode::WildComponent: return "WildComponent";
    case ErrorCode::WildDegree: return "WildDegree";
    case ErrorCode::BadArgument: return "BadArgument";
    case ErrorCode::SyntaxError: return "SyntaxError";
    case ErrorCode::UnknownSymbol: return "UnknownSymbol";
    case ErrorCode::Internal: return "Internal";
    }
    return "Unknown";
}

namespace {

using detail::Coords;
using detail::FieldData;
using detail::ModCoords;
using detail::RatCoords;

std::int64_t mod_norm(std::int64_t a, std::int64_t p)
{
    a %= p;
    return a < 0 ? a + p : a;
}

std::int64_t mod_mul(std::int64_t a, std::int64_t b, std::int64_t p)
{
    return static_cast<std::int64_t>(static_cast<__int128>(a) * b % p);
}

std::int64_t mod_pow(std::int64_t a, std::int64_t e, std::int64_t p)
{
    std::int64_t r = 1 % p;
    a = mod_norm(a, p);
    while (e > 0) {
        if (e & 1)
            r = mod_mul(r, a, p);
        a = mod_mul(a, a, p);
        e >>= 1;
    }
    return r;
}

std::int64_t mod_inv(std::int64_t a, std::int64_t p)
{
    // Extended Euclid; a is nonzero mod p.
    std::int64_t t = 0, new_t = 1, r = p, new_r = mod_norm(a, p);
    while (new_r != 0) {
        std::int64_t q = r / new_r;
        std::int64_t tmp = t - q * new_t;
        t = new_t;
        new_t = tmp;
        tmp = r - q * new_r;
        r = new_r;
        new_r = tmp;
    }
    return mod_norm(t, p);
}

const std::shared_ptr<const FieldData>& rationals_data()
{
    static const std::shared_ptr<const FieldData> q = [] {
        auto d = std::make_shared<FieldData>();
        d->kind = FieldKind::Rationals;
        d->mod_b = RatCoords{};
        d->mod_c = RatCoords{};
        return std::shared_ptr<const FieldData>(d);
    }();
    return q;
}

bool structurally_equal(const FieldData& a, const FieldData& b)
{
    if (&a == &b)
        return true;
    if (a.kind != b.kind || a.p != b.p)
        return false;
    if (a.kind != FieldKind::QuadExt)
        return true;
    return a.gen == b.gen && a.mod_b == b.mod_b && a.mod_c == b.mod_c;
}

bool is_ext(const FieldData& d) { return d.kind == FieldKind::QuadExt; }

// Arithmetic on coordinate pairs; `d` supplies the modulus for extensions.
struct ModArith {
    const FieldData& d;
    std::int64_t p() const { return d.p; }
    std::int64_t b() const { return std::get<ModCoords>(d.mod_b).c0; }
    std::int64_t c() const { return std::get<ModCoords>(d.mod_c).c0; }

    ModCoords add(const ModCoords& x, const ModCoords& y) const
    {
        return {mod_norm(x.c0 + y.c0, p()), mod_norm(x.c1 + y.c1, p())};
    }
    ModCoords sub(const ModCoords& x, const ModCoords& y) const
    {
        return {mod_norm(x.c0 - y.c0, p()), mod_norm(x.c1 - y.c1, p())};
    }
    ModCoords neg(const ModCoords& x) const { return {mod_norm(-x.c0, p()), mod_norm(-x.c1, p())}; }
    ModCoords mul(const ModCoords& x, const ModCoords& y) const
    {
        if (!is_ext(d))
            return {mod_mul(x.c0, y.c0, p()), 0};
        std::int64_t hi = mod_mul(x.c1, y.c1, p());
        std::int64_t r0 = mod_norm(mod_mul(x.c0, y.c0, p()) - mod_mul(c(), hi, p()), p());
        std::int64_t r1 = mod_norm(mod_mul(x.c0, y.c1, p()) + mod_mul(x.c1, y.c0, p()) - mod_mul(b(), hi, p()), p());
        return {r0, r1};
    }
    bool is_zero(const ModCoords& x) const { return x.c0 == 0 && x.c1 == 0; }
    ModCoords inv(const ModCoords& x) const
    {
        if (!is_ext(d))
            return {mod_inv(x.c0, p()), 0};
        // (c0 + c1 g)(c0 - b c1 - c1 g) = c0^2 - b c0 c1 + c c1^2
        std::int64_t norm = mod_norm(mod_mul(x.c0, x.c0, p()) - mod_mul(b(), mod_mul(x.c0, x.c1, p()), p())
                                         + mod_mul(c(), mod_mul(x.c1, x.c1, p()), p()),
                                     p());
        std::int64_t ni = mod_inv(norm, p());
        return {mod_mul(mod_norm(x.c0 - mod_mul(b(), x.c1, p()), p()), ni, p()), mod_mul(mod_norm(-x.c1, p()), ni, p())};
    }
    ModCoords conj(const ModCoords& x) const
    {
        if (!is_ext(d))
            return x;
        // g -> -b - g
        return {mod_norm(x.c0 - mod_mul(b(), x.c1, p()), p()), mod_norm(-x.c1, p())};
    }
};

struct RatArith {
    const FieldData& d;
    const mpq_class& b() const { return std::get<RatCoords>(d.mod_b).c0; }
    const mpq_class& c() const { return std::get<RatCoords>(d.mod_c).c0; }

    RatCoords add(const RatCoords& x, const RatCoords& y) const { return {x.c0 + y.c0, x.c1 + y.c1}; }
    RatCoords sub(const RatCoords& x, const RatCoords& y) const { return {x.c0 - y.c0, x.c1 - y.c1}; }
    RatCoords neg(const RatCoords& x) const { return {-x.c0, -x.c1}; }
    RatCoords mul(const RatCoords& x, const RatCoords& y) const
    {
        if (!is_ext(d))
            return {x.c0 * y.c0, mpq_class(0)};
        mpq_class hi = x.c1 * y.c1;
        return {x.c0 * y.c0 - c() * hi, x.c0 * y.c1 + x.c1 * y.c0 - b() * hi};
    }
    bool is_zero(const RatCoords& x) const { return sgn(x.c0) == 0 && sgn(x.c1) == 0; }
    RatCoords inv(const RatCoords& x) const
    {
        if (!is_ext(d))
            return {1 / x.c0, mpq_class(0)};
        mpq_class norm = x.c0 * x.c0 - b() * x.c0 * x.c1 + c() * x.c1 * x.c1;
        return {(x.c0 - b() * x.c1) / norm, -x.c1 / norm};
    }
    RatCoords conj(const RatCoords& x) const
    {
        if (!is_ext(d))
            return x;
        return {x.c0 - b() * x.c1, -x.c1};
    }
};

template <class F>
decltype(auto) dispatch(const FieldData& d, const Coords& x, const Coords& y, F&& f)
{
    if (d.p != 0)
        return f(ModArith{d}, std::get<ModCoords>(x), std::get<ModCoords>(y));
    return f(RatArith{d}, std::get<RatCoords>(x), std::get<RatCoords>(y));
}

std::string rational_text(const mpq_class& q) { return q.get_str(); }

} // namespace

bool is_prime(std::int64_t n)
{
    if (n < 2)
        return false;
    mpz_class z(static_cast<long>(n));
    return mpz_probab_prime_p(z.get_mpz_t(), 30) > 0;
}

Field::Field() : d_(rationals_data()) {}

Field Field::rationals() { return Field(rationals_data()); }

Field Field::prime_field(std::int64_t p)
{
    if (!is_prime(p))
        throw Error(ErrorCode::NonPrimeModulus, "GF(" + std::to_string(p) + "): modulus is not prime");
    if (p > (std::int64_t(1) << 62))
        throw Error(ErrorCode::FieldTooLarge, "prime modulus exceeds 2^62");
    auto d = std::make_shared<FieldData>();
    d->kind = FieldKind::PrimeField;
    d->p = p;
    d->mod_b = ModCoords{};
    d->mod_c = ModCoords{};
    return Field(std::shared_ptr<const FieldData>(d));
}

Field Field::extension(const Field& base, const Elem& b, const Elem& c, std::string generator)
{
    if (base.is_extension())
        throw Error(ErrorCode::UnsupportedTower, "nested quadratic extensions are not supported");
    if (!(b.field() == base) || !(c.field() == base))
        throw Error(ErrorCode::MixedFields, "modulus coefficients must lie in the base field");
    if (generator.empty() || generator == "x")
        throw Error(ErrorCode::BadFieldDescriptor, "invalid generator name '" + generator + "'");

    // g^2 + b g + c is irreducible iff it has no root in the base field.
    bool reducible = false;
    if (base.is_finite()) {
        std::int64_t p = base.characteristic();
        std::int64_t bb = b.residue(0), cc = c.residue(0);
        if (p == 2) {
            reducible = cc == 0 || mod_norm(1 + bb + cc, 2) == 0;
        } else {
            std::int64_t disc = mod_norm(mod_mul(bb, bb, p) - mod_mul(4, cc, p), p);
            reducible = disc == 0 || mod_pow(disc, (p - 1) / 2, p) == 1;
        }
    } else {
        mpq_class disc = b.rat(0) * b.rat(0) - 4 * c.rat(0);
        reducible = sgn(disc) >= 0 && mpz_perfect_square_p(disc.get_num_mpz_t()) != 0
                    && mpz_perfect_square_p(disc.get_den_mpz_t()) != 0;
    }
    if (reducible)
        throw Error(ErrorCode::ReducibleExtensionModulus, "extension modulus is reducible over the base field");

    auto d = std::make_shared<FieldData>();
    d->kind = FieldKind::QuadExt;
    d->p = base.characteristic();
    d->mod_b = b.coords();
    d->mod_c = c.coords();
    d->gen = std::move(generator);
    d->base = base.handle();
    return Field(std::shared_ptr<const FieldData>(d));
}

std::optional<std::uint64_t> Field::size() const
{
    if (!is_finite())
        return std::nullopt;
    auto p = static_cast<std::uint64_t>(d_->p);
    if (!is_extension())
        return p;
    if (p > (std::uint64_t(1) << 31))
        return std::nullopt;
    return p * p;
}

Field Field::base() const { return is_extension() ? Field(d_->base) : *this; }

Elem Field::zero() const { return from_int(0); }
Elem Field::one() const { return from_int(1); }

Elem Field::from_int(std::int64_t v) const
{
    if (is_finite())
        return Elem(*this, ModCoords{mod_norm(v, d_->p), 0});
    return Elem(*this, RatCoords{mpq_class(static_cast<long>(v)), mpq_class(0)});
}

Elem Field::from_mpz(const mpz_class& v) const
{
    if (is_finite()) {
        mpz_class r = v % d_->p;
        if (r < 0)
            r += d_->p;
        return Elem(*this, ModCoords{static_cast<std::int64_t>(r.get_si()), 0});
    }
    return Elem(*this, RatCoords{mpq_class(v), mpq_class(0)});
}

Elem Field::from_rational(const mpq_class& value) const
{
    if (value.get_den() == 0)
        throw Error(ErrorCode::DivisionByZero, "rational with zero denominator");
    mpq_class v = value;
    v.canonicalize();
    if (!is_finite())
        return Elem(*this, RatCoords{v, mpq_class(0)});
    Elem den = from_mpz(v.get_den());
    if (den.is_zero())
        throw Error(ErrorCode::DivisionByZero,
                    "denominator " + v.get_den().get_str() + " vanishes in characteristic " + std::to_string(d_->p));
    return from_mpz(v.get_num()) / den;
}

Elem Field::gen() const
{
    if (!is_extension())
        throw Error(ErrorCode::BadArgument, "field " + descriptor() + " has no generator");
    if (is_finite())
        return Elem(*this, ModCoords{0, 1});
    return Elem(*this, RatCoords{mpq_class(0), mpq_class(1)});
}

Elem Field::make(const Elem& c0, const Elem& c1) const
{
    Field b = base();
    if (!(c0.field() == b) || !(c1.field() == b))
        throw Error(ErrorCode::MixedFields, "coordinates must lie in the base field");
    if (!is_extension()) {
        if (!c1.is_zero())
            throw Error(ErrorCode::BadArgument, "field has no generator coordinate");
        return c0;
    }
    if (is_finite())
        return Elem(*this, ModCoords{c0.residue(0), c1.residue(0)});
    return Elem(*this, RatCoords{c0.rat(0), c1.rat(0)});
}

Elem Field::modulus_b() const { return Elem(base(), d_->mod_b); }
Elem Field::modulus_c() const { return Elem(base(), d_->mod_c); }

Elem Field::element_at(std::uint64_t index) const
{
    auto q = size();
    if (!q)
        throw Error(ErrorCode::InfiniteField, "cannot enumerate " + descriptor());
    if (index >= *q)
        throw Error(ErrorCode::BadArgument, "element index out of range");
    auto p = static_cast<std::uint64_t>(d_->p);
    return Elem(*this, ModCoords{static_cast<std::int64_t>(index % p), static_cast<std::int64_t>(index / p)});
}

std::vector<Elem> Field::elements() const
{
    auto q = size();
    if (!q)
        throw Error(ErrorCode::InfiniteField, "cannot enumerate " + descriptor());
    std::vector<Elem> out;
    out.reserve(*q);
    for (std::uint64_t i = 0; i < *q; ++i)
        out.push_back(element_at(i));
    return out;
}

std::string Field::descriptor() const
{
    std::string base_text = is_finite() ? "GF(" + std::to_string(d_->p) + ")" : "Q";
    if (!is_extension())
        return base_text;
    const std::string& g = d_->gen;
    std::string mod = g + "^2";
    Elem b = modulus_b(), c = modulus_c();
    auto term = [&](const Elem& e, const std::string& suffix) {
        if (e.is_zero())
            return;
        std::string t = e.to_string();
        bool negative = !t.empty() && t[0] == '-';
        if (negative)
            t = t.substr(1);
        if (!suffix.empty() && t == "1")
            t.clear();
        else if (!suffix.empty())
            t += "*";
        mod += (negative ? "-" : "+") + t + suffix;
    };
    term(b, g);
    term(c, "");
    return base_text + "[" + g + "]/(" + mod + ")";
}

bool Field::operator==(const Field& o) const { return structurally_equal(*d_, *o.d_); }

std::int64_t characteristic(const Field& field) { return field.characteristic(); }

Elem::Elem() : field_(rationals_data()), v_(RatCoords{}) {}

Elem::Elem(const Field& field, detail::Coords coords) : field_(field.d_), v_(std::move(coords)) {}

bool Elem::same_field(const Elem& o) const { return structurally_equal(*field_, *o.field_); }

void Elem::check_same(const Elem& o) const
{
    if (field_ != o.field_ && !structurally_equal(*field_, *o.field_))
        throw Error(ErrorCode::MixedFields, "operands belong to different fields");
}

bool Elem::is_zero() const
{
    return std::visit([](const auto& x) { return x.c0 == 0 && x.c1 == 0; }, v_);
}

bool Elem::is_one() const
{
    return std::visit([](const auto& x) { return x.c0 == 1 && x.c1 == 0; }, v_);
}

bool Elem::in_base() const
{
    return std::visit([](const auto& x) { return x.c1 == 0; }, v_);
}

Elem Elem::operator+(const Elem& o) const
{
    check_same(o);
    return Elem(Field(field_), dispatch(*field_, v_, o.v_, [](const auto& a, const auto& x, const auto& y) {
                    return Coords(a.add(x, y));
                }));
}

Elem Elem::operator-(const Elem& o) const
{
    check_same(o);
    return Elem(Field(field_), dispatch(*field_, v_, o.v_, [](const auto& a, const auto& x, const auto& y) {
                    return Coords(a.sub(x, y));
                }));
}

Elem Elem::operator*(const Elem& o) const
{
    check_same(o);
    return Elem(Field(field_), dispatch(*field_, v_, o.v_, [](const auto& a, const auto& x, const auto& y) {
                    return Coords(a.mul(x, y));
                }));
}

Elem Elem::operator/(const Elem& o) const { return *this * o.inv(); }

Elem Elem::operator-() const
{
    return Elem(Field(field_), dispatch(*field_, v_, v_, [](const auto& a, const auto& x, const auto&) {
                    return Coords(a.neg(x));
                }));
}

Elem Elem::inv() const
{
    if (is_zero())
        throw Error(ErrorCode::DivisionByZero, "inverse of zero");
    return Elem(Field(field_), dispatch(*field_, v_, v_, [](const auto& a, const auto& x, const auto&) {
                    return Coords(a.inv(x));
                }));
}

Elem Elem::pow(std::int64_t e) const
{
    if (e < 0)
        return inv().pow(-e);
    Elem result = Field(field_).one();
    Elem base = *this;
    while (e > 0) {
        if (e & 1)
            result = result * base;
        e >>= 1;
        if (e > 0)
            base = base * base;
    }
    return result;
}

Elem Elem::conj() const
{
    return Elem(Field(field_), dispatch(*field_, v_, v_, [](const auto& a, const auto& x, const auto&) {
                    return Coords(a.conj(x));
                }));
}

bool Elem::operator==(const Elem& o) const { return same_field(o) && v_ == o.v_; }

std::strong_ordering Elem::operator<=>(const Elem& o) const
{
    if (v_.index() != o.v_.index())
        return v_.index() <=> o.v_.index();
    if (const auto* m = std::get_if<ModCoords>(&v_)) {
        const auto& n = std::get<ModCoords>(o.v_);
        if (auto c = m->c0 <=> n.c0; c != 0)
            return c;
        return m->c1 <=> n.c1;
    }
    const auto& r = std::get<RatCoords>(v_);
    const auto& s = std::get<RatCoords>(o.v_);
    int c0 = cmp(r.c0, s.c0);
    if (c0 != 0)
        return c0 < 0 ? std::strong_ordering::less : std::strong_ordering::greater;
    int c1 = cmp(r.c1, s.c1);
    if (c1 != 0)
        return c1 < 0 ? std::strong_ordering::less : std::strong_ordering::greater;
    return std::strong_ordering::equal;
}

Elem Elem::coord(int i) const
{
    Field b = field().base();
    if (const auto* m = std::get_if<ModCoords>(&v_))
        return Elem(b, ModCoords{i == 0 ? m->c0 : m->c1, 0});
    const auto& r = std::get<RatCoords>(v_);
    return Elem(b, RatCoords{i == 0 ? r.c0 : r.c1, mpq_class(0)});
}

const mpq_class& Elem::rat(int i) const
{
    const auto& r = std::get<RatCoords>(v_);
    return i == 0 ? r.c0 : r.c1;
}

std::int64_t Elem::residue(int i) const
{
    const auto& m = std::get<ModCoords>(v_);
    return i == 0 ? m.c0 : m.c1;
}

std::string Elem::to_string() const
{
    std::string c0, c1;
    bool c1_negative = false;
    if (const auto* m = std::get_if<ModCoords>(&v_)) {
        c0 = std::to_string(m->c0);
        c1 = std::to_string(m->c1);
    } else {
        const auto& r = std::get<RatCoords>(v_);
        c0 = rational_text(r.c0);
        c1_negative = sgn(r.c1) < 0;
        c1 = rational_text(c1_negative ? mpq_class(-r.c1) : r.c1);
    }
    if (in_base())
        return c0;
    std::string g = field_->gen;
    std::string gen_term = (c1 == "1" ? g : c1 + "*" + g);
    if (std::visit([](const auto& x) { return x.c0 == 0; }, v_))
        return (c1_negative ? "-" : "") + gen_term;
    return c0 + (c1_negative ? " - " : " + ") + gen_term;
}

bool Elem::is_compound() const
{
    if (in_base())
        return false;
    return !std::visit([](const auto& x) { return x.c0 == 0; }, v_);
}

} // namespace ratdecomp
