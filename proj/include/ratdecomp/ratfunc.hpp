#ifndef RATDECOMP_RATFUNC_HPP
#define RATDECOMP_RATFUNC_HPP

#include <array>
#include <optional>
#include <string>
#include <utility>

#include "ratdecomp/poly.hpp"

namespace ratdecomp {

// Reduced rational function num/den: gcd(num, den) = 1 and den monic.
class RatFunc {
public:
    RatFunc() = default;
    // Normalizes; throws ZeroDenominator when den is zero.
    RatFunc(const Poly& num, const Poly& den);
    explicit RatFunc(const Poly& p);

    static RatFunc x(const Field& field) { return RatFunc(Poly::x(field)); }
    static RatFunc constant(const Elem& c) { return RatFunc(Poly::constant(c)); }

    const Poly& num() const { return num_; }
    const Poly& den() const { return den_; }
    const Field& field() const { return num_.field(); }
    // max(deg num, deg den); 0 for constants.
    int degree() const;
    bool is_constant() const { return num_.degree() <= 0 && den_.degree() == 0; }
    bool is_polynomial() const { return den_.degree() == 0; }
    // Numerator as a polynomial; requires is_polynomial().
    Poly as_poly() const;

    RatFunc operator+(const RatFunc& o) const;
    RatFunc operator-(const RatFunc& o) const;
    RatFunc operator*(const RatFunc& o) const;
    RatFunc operator/(const RatFunc& o) const;
    RatFunc operator-() const;
    RatFunc pow(int e) const;

    bool operator==(const RatFunc& o) const { return num_ == o.num_ && den_ == o.den_; }

    // "num" or "(num)/(den)".
    std::string to_string(const std::string& var = "x") const;

private:
    Poly num_;
    Poly den_;
};

RatFunc make_ratfunc(const Poly& num, const Poly& den);

// g(h(x)). A constant g gives a constant; a constant h throws ConstantInner.
RatFunc compose(const RatFunc& g, const RatFunc& h);

// A point of the projective line over a field.
class ProjPoint {
public:
    static ProjPoint finite(Elem value) { return ProjPoint(std::move(value)); }
    static ProjPoint infinity() { return ProjPoint(); }

    bool is_infinity() const { return !value_.has_value(); }
    const Elem& value() const;

    bool operator==(const ProjPoint& o) const;
    // Finite points in element order, then infinity.
    std::strong_ordering operator<=>(const ProjPoint& o) const;
    std::string to_string() const;

private:
    ProjPoint() = default;
    explicit ProjPoint(Elem v) : value_(std::move(v)) {}
    std::optional<Elem> value_;
};

// Element (a*x + b)/(c*x + d) of PGL(2, K), scaled so that c = 1 when c != 0
// and a = 1 otherwise. Structural equality is equality in PGL(2, K).
class Mobius {
public:
    // The identity over Q.
    Mobius() : Mobius(identity(Field::rationals())) {}
    // Throws DegeneratePoints if ad - bc = 0.
    Mobius(const Elem& a, const Elem& b, const Elem& c, const Elem& d);

    static Mobius identity(const Field& field);
    // Throws BadDegree unless f has degree 1.
    static Mobius from_ratfunc(const RatFunc& f);

    const Elem& a() const { return m_[0]; }
    const Elem& b() const { return m_[1]; }
    const Elem& c() const { return m_[2]; }
    const Elem& d() const { return m_[3]; }
    Field field() const { return m_[0].field(); }

    bool is_identity() const;
    bool is_affine() const { return m_[2].is_zero(); }
    // this ∘ o
    Mobius compose(const Mobius& o) const;
    Mobius inverse() const;
    Mobius pow(std::int64_t k) const;
    ProjPoint apply(const ProjPoint& p) const;
    RatFunc as_ratfunc() const;

    bool operator==(const Mobius& o) const { return m_ == o.m_; }
    std::strong_ordering operator<=>(const Mobius& o) const;

    // "(a*x+b)/(c*x+d)".
    std::string to_string() const;
    // Reduced rational-function text such as "-x + 1".
    std::string pretty() const;

private:
    std::array<Elem, 4> m_;
};

// Least k <= bound with u^k = identity.
std::optional<int> mobius_order(const Mobius& u, int bound);

// f ∘ u, reduced.
RatFunc apply_mobius(const RatFunc& f, const Mobius& u);
// Whether f ∘ u = f, decided by an exact cross-multiplied identity.
bool fixes(const RatFunc& f, const Mobius& u);

ProjPoint eval_proj(const RatFunc& f, const ProjPoint& p);

// The unique u with u(src[j]) = dst[j].
Mobius mobius_from_three_points(const std::array<std::pair<ProjPoint, ProjPoint>, 3>& pairs);

// Points of f^{-1}(c) in K ∪ {∞}, sorted.
std::vector<ProjPoint> fiber(const RatFunc& f, const ProjPoint& c);

} // namespace ratdecomp

#endif
