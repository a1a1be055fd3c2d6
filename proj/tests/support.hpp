#ifndef RATDECOMP_TESTS_SUPPORT_HPP
#define RATDECOMP_TESTS_SUPPORT_HPP

#include <random>
#include <string>
#include <vector>

#include "ratdecomp/decomp.hpp"
#include "ratdecomp/field.hpp"
#include "ratdecomp/fixgroup.hpp"
#include "ratdecomp/parse.hpp"
#include "ratdecomp/ratfunc.hpp"
#include "ratdecomp/roots.hpp"

namespace testing {

using namespace ratdecomp;

inline Field F(const char* desc) { return make_field(desc); }
inline Poly P(const char* text, const Field& f) { return parse_polynomial(text, f); }
inline RatFunc R(const char* text, const Field& f) { return parse_expression(text, f); }
inline Mobius M(const char* text, const Field& f) { return Mobius::from_ratfunc(parse_expression(text, f)); }
inline Elem E(const char* text, const Field& f) { return parse_polynomial(text, f).coeff(0); }

inline std::vector<Field> property_fields()
{
    return {F("Q"), F("GF(7)"), F("GF(2)[a]/(a^2+a+1)"), F("Q[i]/(i^2+1)"), F("GF(3)[t]/(t^2+1)"), F("Q[w]/(w^2+w+1)")};
}

inline Elem random_elem(const Field& f, std::mt19937_64& rng, int range = 9)
{
    auto small = [&] { return static_cast<std::int64_t>(rng() % (2 * range + 1)) - range; };
    Elem c0 = f.from_int(small());
    if (f.kind() == FieldKind::Rationals && rng() % 2)
        c0 = c0 / f.from_int(1 + static_cast<std::int64_t>(rng() % 5));
    if (!f.is_extension())
        return c0;
    return c0 + f.gen() * f.from_int(small());
}

inline Poly random_poly(const Field& f, int degree, std::mt19937_64& rng, int range = 9)
{
    std::vector<Elem> c;
    for (int i = 0; i < degree; ++i)
        c.push_back(random_elem(f, rng, range));
    Elem lead = random_elem(f, rng, range);
    while (lead.is_zero())
        lead = random_elem(f, rng, range);
    c.push_back(lead);
    return Poly(f, c);
}

inline RatFunc random_ratfunc(const Field& f, int degree, std::mt19937_64& rng)
{
    for (;;) {
        Poly num = random_poly(f, degree, rng, 5);
        Poly den = random_poly(f, static_cast<int>(rng() % static_cast<std::uint64_t>(degree + 1)), rng, 5);
        RatFunc r(num, den);
        if (r.degree() == degree)
            return r;
    }
}

inline Mobius random_mobius(const Field& f, std::mt19937_64& rng)
{
    for (;;) {
        Elem a = random_elem(f, rng), b = random_elem(f, rng), c = random_elem(f, rng), d = random_elem(f, rng);
        if (!(a * d - b * c).is_zero())
            return Mobius(a, b, c, d);
    }
}

inline bool tame(const Field& f, int d) { return f.characteristic() == 0 || d % f.characteristic() != 0; }

} // namespace testing

#endif
