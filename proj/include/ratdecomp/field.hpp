#ifndef RATDECOMP_FIELD_HPP
#define RATDECOMP_FIELD_HPP

#include <compare>
#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include <gmpxx.h>

#include "ratdecomp/error.hpp"

namespace ratdecomp {

enum class FieldKind { Rationals, PrimeField, QuadExt };

class Elem;

namespace detail {

// Coordinates of c0 + c1*g. For fields without a generator c1 stays zero.
struct ModCoords {
    std::int64_t c0 = 0;
    std::int64_t c1 = 0;
    bool operator==(const ModCoords&) const = default;
};

struct RatCoords {
    mpq_class c0;
    mpq_class c1;
    bool operator==(const RatCoords& o) const { return c0 == o.c0 && c1 == o.c1; }
};

using Coords = std::variant<ModCoords, RatCoords>;

struct FieldData {
    FieldKind kind = FieldKind::Rationals;
    std::int64_t p = 0; // 0 for characteristic zero
    // Extension modulus g^2 + b*g + c, stored in base coordinates (c1 unused).
    Coords mod_b;
    Coords mod_c;
    std::string gen;
    std::shared_ptr<const FieldData> base;
};

} // namespace detail

// A coefficient field: Q, GF(p), or a quadratic extension of either.
// Cheap to copy; all copies share one immutable description.
class Field {
public:
    Field();

    static Field rationals();
    static Field prime_field(std::int64_t p);
    // Extension base[g]/(g^2 + b*g + c); b and c must be elements of `base`.
    static Field extension(const Field& base, const Elem& b, const Elem& c, std::string generator);

    FieldKind kind() const { return d_->kind; }
    bool is_extension() const { return d_->kind == FieldKind::QuadExt; }
    bool is_finite() const { return d_->p != 0; }
    std::int64_t characteristic() const { return d_->p; }
    // Number of elements for finite fields.
    std::optional<std::uint64_t> size() const;
    Field base() const;
    const std::string& generator_name() const { return d_->gen; }

    Elem zero() const;
    Elem one() const;
    Elem from_int(std::int64_t v) const;
    Elem from_mpz(const mpz_class& v) const;
    // Throws DivisionByZero when the denominator vanishes in a finite field.
    Elem from_rational(const mpq_class& v) const;
    // Generator of an extension field.
    Elem gen() const;
    // c0 + c1*g from two base-field elements.
    Elem make(const Elem& c0, const Elem& c1) const;
    // Modulus coefficients (g^2 + b*g + c) as base-field elements.
    Elem modulus_b() const;
    Elem modulus_c() const;

    // Enumeration of a finite field in canonical order; index < size().
    Elem element_at(std::uint64_t index) const;
    std::vector<Elem> elements() const;

    std::string descriptor() const;

    bool operator==(const Field& o) const;

    const detail::FieldData& data() const { return *d_; }
    const std::shared_ptr<const detail::FieldData>& handle() const { return d_; }

private:
    explicit Field(std::shared_ptr<const detail::FieldData> d) : d_(std::move(d)) {}
    friend class Elem;
    std::shared_ptr<const detail::FieldData> d_;
};

// Parses `Q`, `GF(p)`, `Q[g]/(g^2+...)` or `GF(p)[g]/(g^2+...)`.
Field make_field(std::string_view descriptor);

// An element of a Field in canonical form; equality is structural.
class Elem {
public:
    // An element of Q equal to zero; used as a placeholder.
    Elem();
    Elem(const Field& field, detail::Coords coords);

    Field field() const { return Field(field_); }
    bool same_field(const Elem& o) const;

    bool is_zero() const;
    bool is_one() const;
    // True when the generator coordinate is zero.
    bool in_base() const;

    Elem operator+(const Elem& o) const;
    Elem operator-(const Elem& o) const;
    Elem operator*(const Elem& o) const;
    Elem operator/(const Elem& o) const;
    Elem operator-() const;
    Elem& operator+=(const Elem& o) { return *this = *this + o; }
    Elem& operator-=(const Elem& o) { return *this = *this - o; }
    Elem& operator*=(const Elem& o) { return *this = *this * o; }
    Elem inv() const;
    Elem pow(std::int64_t e) const;
    // Image under g -> conjugate root of the modulus; identity outside extensions.
    Elem conj() const;

    bool operator==(const Elem& o) const;
    // Deterministic total order used to sort result sets.
    std::strong_ordering operator<=>(const Elem& o) const;

    // Base-field coordinates c0, c1.
    Elem coord(int i) const;
    const detail::Coords& coords() const { return v_; }
    // Q-based fields only.
    const mpq_class& rat(int i) const;
    // Prime-field-based fields only.
    std::int64_t residue(int i) const;

    // Canonical text: "a/b" for rationals, "c0 + c1*g" for extension elements
    // (zero parts dropped).
    std::string to_string() const;
    // True when to_string() is a sum or difference and needs parentheses
    // as a factor.
    bool is_compound() const;

private:
    void check_same(const Elem& o) const;
    std::shared_ptr<const detail::FieldData> field_;
    detail::Coords v_;
};

std::int64_t characteristic(const Field& field);
bool is_prime(std::int64_t n);

} // namespace ratdecomp

#endif
