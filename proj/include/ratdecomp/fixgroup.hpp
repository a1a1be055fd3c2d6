#ifndef RATDECOMP_FIXGROUP_HPP
#define RATDECOMP_FIXGROUP_HPP

#include <optional>
#include <vector>

#include "ratdecomp/decomp.hpp"
#include "ratdecomp/ratfunc.hpp"

namespace ratdecomp {

// The group {u in PGL(2, K) : f ∘ u = f} of a nonconstant f.
//
// Construction checks identity, closure, inverses, that every element fixes
// the subject, and that the order divides deg f; a failed check throws
// GroupInvariantViolated.
class FixGroup {
public:
    FixGroup(RatFunc subject, std::vector<Mobius> elements);

    const RatFunc& subject() const { return subject_; }
    // Sorted canonical forms, identity included.
    const std::vector<Mobius>& elements() const { return elements_; }
    int order() const { return static_cast<int>(elements_.size()); }
    // Present iff the group is cyclic; the smallest generator in element order.
    const std::optional<Mobius>& generator() const { return generator_; }
    bool contains(const Mobius& u) const;

private:
    RatFunc subject_;
    std::vector<Mobius> elements_;
    std::optional<Mobius> generator_;
};

// Cyclic subgroup <generator> of a parent group.
struct Subgroup {
    Mobius generator;
    std::vector<Mobius> elements;
    int order() const { return static_cast<int>(elements.size()); }
};

// Powers of u; throws GroupInvariantViolated if u has no finite order
// within `bound`.
Subgroup cyclic_subgroup(const Mobius& u, int bound = 60);
// <u> as a subgroup of `parent`; u must belong to it.
Subgroup cyclic_subgroup(const FixGroup& parent, const Mobius& u);

// Tame polynomials: elements are ax + b with a^n = 1 and b determined by
// the x^(n-1) coefficient.
FixGroup fixing_group_poly_tame(const Poly& f);

// Any nonconstant f: candidates come from fibers of three sample points
// and each is verified exactly. Finite fields with fewer than 7 elements
// fall back to brute force.
FixGroup fixing_group_rational(const RatFunc& f);

// Exhaustive scan of PGL(2, q), q <= 32.
FixGroup fixing_group_bruteforce(const RatFunc& f);

inline constexpr std::uint64_t kBruteforceGroupFieldCap = 32;

// Picks the tame path for tame polynomials and the fiber method otherwise.
FixGroup fixing_group(const RatFunc& f);

struct GroupStructure {
    std::vector<std::pair<Mobius, int>> element_orders;
    bool cyclic = false;
    std::optional<Mobius> generator;
    // Distinct cyclic subgroups, ordered by order then generator.
    std::vector<Subgroup> cyclic_subgroups;
};

GroupStructure group_structure(const FixGroup& group);

// A generator h of the fixed field of H: deg h = |H| and h ∘ u = h for all
// u in H. Numerator made monic.
RatFunc invariant_function(const Subgroup& subgroup);

// h = invariant_function(H), g = left_divide(f, h).
std::optional<RatPair> decompose_via_subgroup(const RatFunc& f, const Subgroup& subgroup);

} // namespace ratdecomp

#endif
