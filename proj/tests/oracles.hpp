#ifndef RATDECOMP_TESTS_ORACLES_HPP
#define RATDECOMP_TESTS_ORACLES_HPP

#include <gmpxx.h>

#include <set>
#include <utility>
#include <vector>

#include "ratdecomp/ratfunc.hpp"

// Slow, independent reference implementations used to cross-check the
// production routines.
namespace oracle {

using namespace ratdecomp;

// Rational roots of p over Q by enumerating ±d/e with d | a0 and e | an.
std::vector<Elem> rational_roots_by_divisors(const Poly& p);

// Roots of p over Q(α): substitute x = u + vα, eliminate v by a Sylvester
// resultant and recover v from the gcd of the coordinate polynomials.
std::vector<Elem> quadext_roots_by_resultant(const Poly& p);

// Roots over a finite field by evaluating at every element.
std::vector<Elem> roots_by_scan(const Poly& p);

// Schoolbook long division.
std::pair<Poly, Poly> long_division(const Poly& a, const Poly& b);

// Digits of f in base h by repeated long division.
std::vector<Poly> h_adic_digits(Poly f, const Poly& h);

// All of PGL(2, q) tested with compose(), not the production fixing test.
std::set<Mobius> fixing_group_enumerate(const RatFunc& f);

} // namespace oracle

#endif
