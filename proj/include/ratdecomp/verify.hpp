#ifndef RATDECOMP_VERIFY_HPP
#define RATDECOMP_VERIFY_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"
#include "ratdecomp/fixgroup.hpp"

namespace ratdecomp {

inline constexpr const char* kReportSchema = "ratdecomp.report/1";

// One step of the witness chain for P = left ∘ right, where left is the
// composition of the preceding components: right ∘ gamma = eta ∘ right.
struct DivisibilityWitness {
    int step = 0;
    Mobius gamma;
    Mobius eta;
    int l1 = 0;
    int l2 = 0;
    int k = 0;
    int k1 = 0;
    int k2 = 0;
    bool eta_fixes_left = false;
    bool gamma_power_fixes_right = false;
    bool l1_divides_k1 = false;
    bool l2_divides_k2 = false;
    bool product_matches = false;

    bool coherent() const
    {
        return eta_fixes_left && gamma_power_fixes_right && l1_divides_k1 && l2_divides_k2 && product_matches;
    }
};

struct DivisibilityReport {
    std::vector<Poly> components;
    std::vector<int> component_orders;
    int composite_order = 0;
    bool holds = false;
    std::optional<std::vector<DivisibilityWitness>> witnesses;

    bool witnesses_coherent() const;
    nlohmann::json to_json() const;
};

// Throws WildComponent if some component has degree divisible by the
// characteristic, BadArgument if fewer than two components are given.
DivisibilityReport check_divisibility(const std::vector<Poly>& components, bool with_witnesses);

struct GcdCounterexampleReport {
    std::string field;
    int k = 0;
    int k1 = 0;
    int k2 = 0;
    int gcd = 0;
    bool k_divides_gcd = false;
    bool k_divides_product = false;

    nlohmann::json to_json() const;
};

// Orders for x^4 = x^2 ∘ x^2 over `field` (default Q(i)).
GcdCounterexampleReport check_gcd_counterexample();
GcdCounterexampleReport check_gcd_counterexample(const Field& field);

// Monic, coefficients drawn uniformly from [-10, 10].
Poly random_tame_poly(const Field& field, int degree, std::uint64_t seed);

struct DivisibilitySuiteReport {
    std::vector<std::string> fields;
    std::uint64_t seed = 0;
    int trials = 0;
    int witness_trials = 0;
    int violations = 0;
    int witness_failures = 0;
    std::vector<DivisibilityReport> rows;

    bool ok() const { return violations == 0 && witness_failures == 0; }
    nlohmann::json to_json() const;
};

// Trial t runs over fields[t % fields.size()] with 2 or 3 tame components and
// composite degree <= 24; the first `witness_trials` trials carry witnesses.
DivisibilitySuiteReport run_divisibility_suite(const std::vector<Field>& fields, int trials, std::uint64_t seed,
                                               int witness_trials);

enum class CorpusStatus { Confirmed, ConfirmedWithCorrection, Failed };

std::string_view status_name(CorpusStatus status);

struct CorpusItem {
    std::string id;
    CorpusStatus status = CorpusStatus::Failed;
    std::string details;
    nlohmann::json data;
};

struct CorpusReport {
    std::vector<CorpusItem> items;

    const CorpusItem* find(const std::string& id) const;
    bool any_failed() const;
    nlohmann::json to_json() const;
};

CorpusReport run_example_corpus();

struct ExplorationRow {
    int trial = 0;
    RatFunc g;
    RatFunc h;
    RatFunc f;
    int k = 0;
    int k1 = 0;
    int k2 = 0;
    bool divides = false;
    int resamples = 0;

    nlohmann::json to_json() const;
};

struct ExplorationReport {
    std::string field;
    std::uint64_t seed = 0;
    int max_degree = 0;
    std::vector<ExplorationRow> rows;
    int violations = 0;

    nlohmann::json to_json() const;
};

// Random f = g ∘ h with tame deg f <= max_degree; reports whether
// |Γ(f)| divides |Γ(g)|·|Γ(h)|. Never throws on a violation.
ExplorationReport explore_conjecture(const Field& field, int trials, std::uint64_t seed, int max_degree);

struct NormalPartialReport {
    std::string field;
    int n = 0;
    int group_order = 0;
    int roots_of_unity = 0;
    bool holds = false;

    nlohmann::json to_json() const;
};

// |Γ(x^n)| against the number of n-th roots of unity in the field.
NormalPartialReport check_normal_partial(const Field& field, int n);

// Sorted-key JSON with a top-level "schema" field.
std::string render_json(nlohmann::json body);

} // namespace ratdecomp

#endif
