#ifndef RATDECOMP_ROOTS_HPP
#define RATDECOMP_ROOTS_HPP

#include <cstdint>
#include <vector>

#include "ratdecomp/field.hpp"
#include "ratdecomp/poly.hpp"

namespace ratdecomp {

// Finite fields larger than this are not scanned.
inline constexpr std::uint64_t kMaxScanFieldSize = 65536;

// All roots of p lying in its coefficient field, sorted and without
// repetition. Every returned root is checked by exact evaluation.
//
// Finite fields are scanned exhaustively. Over Q and quadratic extensions of
// Q the roots are found l-adically: simple roots modulo a suitable prime are
// Newton-lifted past a height bound and rationally reconstructed. For an
// extension the pair of embeddings g -> s1, s2 recovers trace and norm of
// each root, which are rational with height bounded through the norm
// polynomial p * conj(p).
std::vector<Elem> roots_in_field(const Poly& p);

// Solutions of x^n = 1 in the field of F.
std::vector<Elem> nth_roots_of_unity(const Field& field, int n);

namespace detail {

// Rational roots of a nonzero polynomial over Q (l-adic route only).
std::vector<mpq_class> rational_roots_padic(const Poly& p);

// Rational p/q with p = a*q mod m, |p| <= num_bound, 0 < q <= den_bound.
// Requires 2 * num_bound * den_bound < m for uniqueness.
bool rational_reconstruct(const mpz_class& a, const mpz_class& m, const mpz_class& num_bound,
                          const mpz_class& den_bound, mpq_class& out);

// Primitive integer polynomial proportional to p (Q coefficients).
std::vector<mpz_class> primitive_integer_form(const Poly& p);

} // namespace detail

} // namespace ratdecomp

#endif
