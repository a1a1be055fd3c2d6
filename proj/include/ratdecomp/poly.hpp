#ifndef RATDECOMP_POLY_HPP
#define RATDECOMP_POLY_HPP

#include <string>
#include <utility>
#include <vector>

#include "ratdecomp/field.hpp"

namespace ratdecomp {

// Dense univariate polynomial, coefficients in ascending degree.
// The coefficient vector never ends in a zero; the zero polynomial has no
// coefficients and degree kZeroDegree.
class Poly {
public:
    static constexpr int kZeroDegree = -1;

    Poly() = default;
    explicit Poly(Field field) : field_(std::move(field)) {}
    Poly(Field field, std::vector<Elem> coeffs);

    static Poly x(const Field& field);
    static Poly constant(const Elem& c);
    static Poly monomial(const Elem& c, int degree);
    // Small-integer coefficients, ascending.
    static Poly from_ints(const Field& field, const std::vector<std::int64_t>& coeffs);

    const Field& field() const { return field_; }
    const std::vector<Elem>& coeffs() const { return c_; }
    int degree() const { return static_cast<int>(c_.size()) - 1; }
    bool is_zero() const { return c_.empty(); }
    bool is_constant() const { return c_.size() <= 1; }
    bool is_monic() const { return !c_.empty() && c_.back().is_one(); }
    // Coefficient of x^i (zero beyond the degree).
    Elem coeff(int i) const;
    Elem lc() const;

    Elem eval(const Elem& a) const;
    Poly derivative() const;
    Poly monic() const;
    Poly scale(const Elem& c) const;
    Poly pow(int e) const;
    // p(x + c)
    Poly shift(const Elem& c) const;
    // Conjugates every coefficient (extension fields).
    Poly conj() const;

    Poly operator+(const Poly& o) const;
    Poly operator-(const Poly& o) const;
    Poly operator*(const Poly& o) const;
    Poly operator-() const;
    Poly& operator+=(const Poly& o) { return *this = *this + o; }
    Poly& operator-=(const Poly& o) { return *this = *this - o; }
    Poly& operator*=(const Poly& o) { return *this = *this * o; }

    bool operator==(const Poly& o) const;

    // Descending-degree text in the variable `var`, e.g. "x^4 + 2*x^2 + 1".
    std::string to_string(const std::string& var = "x") const;
    // Whether to_string() has more than one term.
    bool is_compound() const;

private:
    void trim();
    void check_same(const Poly& o) const;
    Field field_;
    std::vector<Elem> c_;
};

// a = q*b + r with deg r < deg b.
std::pair<Poly, Poly> divmod(const Poly& a, const Poly& b);
// Monic gcd; gcd(0, 0) = 0.
Poly gcd(const Poly& a, const Poly& b);
// g(h(x)).
Poly compose_poly(const Poly& g, const Poly& h);

// Polynomial in two variables stored as a polynomial in the second
// variable whose coefficients are polynomials in the first.
class BiPoly {
public:
    BiPoly() = default;
    explicit BiPoly(Field field) : field_(std::move(field)) {}
    BiPoly(Field field, std::vector<Poly> rows);
    // Coefficient grid c[i][j] for u^i v^j.
    static BiPoly from_grid(const Field& field, const std::vector<std::vector<Elem>>& grid);

    const Field& field() const { return field_; }
    const std::vector<Poly>& rows() const { return rows_; }
    bool is_zero() const { return rows_.empty(); }
    int degree_first() const;
    int degree_second() const { return static_cast<int>(rows_.size()) - 1; }
    Elem coeff(int i, int j) const;
    // Swaps the roles of the two variables.
    BiPoly transpose() const;
    // Substitutes a value for the first variable, giving a polynomial in the second.
    Poly eval_first(const Elem& u) const;
    Poly eval_second(const Elem& v) const;

    BiPoly operator+(const BiPoly& o) const;
    BiPoly operator*(const BiPoly& o) const;
    bool operator==(const BiPoly& o) const = default;

private:
    void trim();
    Field field_;
    std::vector<Poly> rows_;
};

enum class Var { First, Second };

// Sylvester resultant of A and B with respect to `var`, as a polynomial in
// the other variable.
Poly resultant_eliminate(const BiPoly& a, const BiPoly& b, Var var);

} // namespace ratdecomp

#endif
