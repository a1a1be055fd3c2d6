#ifndef RATDECOMP_DECOMP_HPP
#define RATDECOMP_DECOMP_HPP

#include <optional>
#include <utility>
#include <vector>

#include "ratdecomp/ratfunc.hpp"

namespace ratdecomp {

// f = components[0] ∘ components[1] ∘ ... (outermost first).
// The constructor checks that the components recompose to `original`.
class Decomposition {
public:
    Decomposition(std::vector<Poly> components, Poly original);

    const std::vector<Poly>& components() const { return components_; }
    const Poly& original() const { return original_; }
    Poly recompose() const;

    bool operator==(const Decomposition&) const = default;

private:
    std::vector<Poly> components_;
    Poly original_;
};

// f = sum digits[i] * base^i with deg digits[i] < deg base.
struct HAdicExpansion {
    Poly base;
    std::vector<Poly> digits;

    Poly reconstruct() const;
    bool all_digits_constant() const;
};

struct PolyPair {
    Poly g;
    Poly h;
    bool operator==(const PolyPair&) const = default;
};

struct RatPair {
    RatFunc g;
    RatFunc h;
    bool operator==(const RatPair&) const = default;
};

// Monic h of degree deg(f)/r with deg(f - h^r) < deg f - deg h.
Poly approximate_root(const Poly& f, int r);

HAdicExpansion expand_in_h(const Poly& f, const Poly& h);

// Tame decomposition f = g ∘ h with deg h = s. The returned h is monic with
// h(0) = 0, which by uniqueness of tame right components makes the answer
// canonical.
std::optional<PolyPair> decompose_poly(const Poly& f, int s);

// All complete decompositions of a tame polynomial, outermost component
// first. An indecomposable f yields the single chain [f].
std::vector<Decomposition> complete_decompositions(const Poly& f);

// Every (g, h) with g ∘ h = f, deg h = s and h monic with h(0) = 0, by
// enumeration of all coefficient vectors. Finite fields only.
std::vector<PolyPair> decompose_poly_bruteforce(const Poly& f, int s);

inline constexpr double kBruteforceSearchCap = 1e7;

// The g with g ∘ h = f, if one exists.
std::optional<RatFunc> left_divide(const RatFunc& f, const RatFunc& h);

// g ∈ K(h).
bool is_member(const RatFunc& g, const RatFunc& h);

// The unit u with h1 = u ∘ h2 and g1 = g2 ∘ u^{-1}, if the two
// decompositions are equivalent.
std::optional<Mobius> equivalent_decompositions(const RatPair& d1, const RatPair& d2);

// Rewrites a decomposition of a polynomial with polynomial components
// (g ∘ u, u^{-1} ∘ h). Supports h with a constant denominator or a single
// K-rational pole; returns nullopt for other pole configurations.
std::optional<PolyPair> polynomialize(const RatFunc& g, const RatFunc& h);

} // namespace ratdecomp

#endif
