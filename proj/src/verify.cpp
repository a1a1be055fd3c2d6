#include "ratdecomp/verify.hpp"

#include <algorithm>
#include <numeric>
#include <random>
#include <set>

#include "ratdecomp/parse.hpp"
#include "ratdecomp/roots.hpp"

namespace ratdecomp {

using nlohmann::json;

namespace {

std::int64_t draw(std::mt19937_64& rng, std::int64_t lo, std::int64_t hi)
{
    return lo + static_cast<std::int64_t>(rng() % static_cast<std::uint64_t>(hi - lo + 1));
}

bool tame_degree(const Field& field, int d)
{
    const std::int64_t p = field.characteristic();
    return p == 0 || d % p != 0;
}

json strings(const std::vector<Mobius>& us)
{
    json out = json::array();
    for (const auto& u : us)
        out.push_back(u.to_string());
    return out;
}

Mobius mobius(std::string_view text, const Field& field) { return Mobius::from_ratfunc(parse_expression(text, field)); }

json pair_json(const RatPair& p) { return json{{"g", p.g.to_string("y")}, {"h", p.h.to_string()}}; }

} // namespace

bool DivisibilityReport::witnesses_coherent() const
{
    if (!witnesses)
        return true;
    return std::all_of(witnesses->begin(), witnesses->end(), [](const DivisibilityWitness& w) { return w.coherent(); });
}

json DivisibilityReport::to_json() const
{
    json comps = json::array();
    for (const auto& p : components)
        comps.push_back(p.to_string());
    json out{{"components", comps},
             {"component_orders", component_orders},
             {"composite_order", composite_order},
             {"holds", holds},
             {"field", components.empty() ? std::string() : components.front().field().descriptor()}};
    if (witnesses) {
        json ws = json::array();
        for (const auto& w : *witnesses)
            ws.push_back(json{{"step", w.step},
                              {"gamma", w.gamma.to_string()},
                              {"eta", w.eta.to_string()},
                              {"l1", w.l1},
                              {"l2", w.l2},
                              {"k", w.k},
                              {"k1", w.k1},
                              {"k2", w.k2},
                              {"eta_fixes_left", w.eta_fixes_left},
                              {"gamma_power_fixes_right", w.gamma_power_fixes_right},
                              {"l1_divides_k1", w.l1_divides_k1},
                              {"l2_divides_k2", w.l2_divides_k2},
                              {"product_matches", w.product_matches}});
        out["witnesses"] = ws;
    }
    return out;
}

namespace {

DivisibilityWitness witness_step(int step, const Poly& left, const Poly& right)
{
    DivisibilityWitness w;
    w.step = step;
    const Poly composite = compose_poly(left, right);
    const FixGroup group = fixing_group_poly_tame(composite);
    if (!group.generator())
        throw Error(ErrorCode::Internal, "tame fixing group without a generator");
    w.gamma = *group.generator();
    w.k = group.order();
    w.k1 = fixing_group_poly_tame(left).order();
    w.k2 = fixing_group_poly_tame(right).order();

    const RatFunc r(right);
    auto eta = left_divide(compose(r, w.gamma.as_ratfunc()), r);
    if (!eta || eta->degree() != 1)
        return w;
    w.eta = Mobius::from_ratfunc(*eta);
    w.l1 = mobius_order(w.eta, w.k).value_or(0);
    if (w.l1 == 0)
        return w;
    w.l2 = w.k / w.l1;
    w.eta_fixes_left = fixes(RatFunc(left), w.eta);
    w.gamma_power_fixes_right = fixes(r, w.gamma.pow(w.l1));
    w.l1_divides_k1 = w.k1 % w.l1 == 0;
    w.l2_divides_k2 = w.k2 % w.l2 == 0;
    w.product_matches = w.k % w.l1 == 0 && w.l1 * w.l2 == w.k;
    return w;
}

} // namespace

DivisibilityReport check_divisibility(const std::vector<Poly>& components, bool with_witnesses)
{
    if (components.size() < 2)
        throw Error(ErrorCode::BadArgument, "divisibility check needs at least two components");
    const Field field = components.front().field();
    for (const auto& p : components) {
        if (!(p.field() == field))
            throw Error(ErrorCode::MixedFields, "components over different fields");
        if (p.degree() < 1)
            throw Error(ErrorCode::BadDegree, "constant component");
        if (!tame_degree(field, p.degree()))
            throw Error(ErrorCode::WildComponent, p.to_string() + " has degree divisible by the characteristic");
    }
    DivisibilityReport out;
    out.components = components;
    std::int64_t product = 1;
    Poly composite = components.front();
    for (std::size_t i = 0; i < components.size(); ++i) {
        int k = fixing_group_poly_tame(components[i]).order();
        out.component_orders.push_back(k);
        product *= k;
        if (i > 0)
            composite = compose_poly(composite, components[i]);
    }
    out.composite_order = fixing_group_poly_tame(composite).order();
    out.holds = product % out.composite_order == 0;
    if (with_witnesses) {
        std::vector<DivisibilityWitness> ws;
        Poly left = components.front();
        for (std::size_t j = 1; j < components.size(); ++j) {
            ws.push_back(witness_step(static_cast<int>(j), left, components[j]));
            left = compose_poly(left, components[j]);
        }
        out.witnesses = std::move(ws);
    }
    return out;
}

json GcdCounterexampleReport::to_json() const
{
    return json{{"field", field},     {"k", k},     {"k1", k1},
                {"k2", k2},           {"gcd", gcd}, {"k_divides_gcd", k_divides_gcd},
                {"k_divides_product", k_divides_product}};
}

GcdCounterexampleReport check_gcd_counterexample() { return check_gcd_counterexample(make_field("Q[i]/(i^2+1)")); }

GcdCounterexampleReport check_gcd_counterexample(const Field& field)
{
    const Poly x2 = Poly::monomial(field.one(), 2);
    DivisibilityReport d = check_divisibility({x2, x2}, false);
    GcdCounterexampleReport out;
    out.field = field.descriptor();
    out.k = d.composite_order;
    out.k1 = d.component_orders[0];
    out.k2 = d.component_orders[1];
    out.gcd = std::gcd(out.k1, out.k2);
    out.k_divides_gcd = out.gcd % out.k == 0;
    out.k_divides_product = d.holds;
    return out;
}

Poly random_tame_poly(const Field& field, int degree, std::uint64_t seed)
{
    if (degree < 2)
        throw Error(ErrorCode::BadDegree, "random polynomial degree must be at least 2");
    if (!tame_degree(field, degree))
        throw Error(ErrorCode::WildDegree, "degree " + std::to_string(degree) + " is divisible by the characteristic");
    std::mt19937_64 rng(seed);
    std::vector<Elem> coeffs;
    for (int i = 0; i < degree; ++i)
        coeffs.push_back(field.from_int(draw(rng, -10, 10)));
    coeffs.push_back(field.one());
    return Poly(field, std::move(coeffs));
}

namespace {

// Components with nontrivial fixing groups show up often enough to exercise
// the witness chain.
Poly random_component(const Field& field, int d, std::mt19937_64& rng)
{
    const Poly x = Poly::x(field);
    switch (rng() % 4) {
    case 1:
        return x.pow(d);
    case 2: {
        Elem c = field.from_int(draw(rng, -3, 3));
        Elem e = field.from_int(draw(rng, -3, 3));
        return (x + Poly::constant(c)).pow(d) + Poly::constant(e);
    }
    case 3:
        if (d % 2 == 0 && d / 2 >= 2)
            return compose_poly(random_tame_poly(field, d / 2, rng()), x.pow(2));
        if (d % 2 == 0)
            return x.pow(2) + Poly::constant(field.from_int(draw(rng, -3, 3)));
        [[fallthrough]];
    default:
        return random_tame_poly(field, d, rng());
    }
}

std::vector<int> random_degrees(const Field& field, std::mt19937_64& rng, int count, int max_product)
{
    std::vector<int> pool;
    for (int d = 2; d <= max_product / 2; ++d)
        if (tame_degree(field, d))
            pool.push_back(d);
    for (int attempt = 0; attempt < 1000; ++attempt) {
        std::vector<int> ds;
        int product = 1;
        for (int i = 0; i < count; ++i) {
            ds.push_back(pool[rng() % pool.size()]);
            product *= ds.back();
        }
        if (product <= max_product)
            return ds;
    }
    throw Error(ErrorCode::SeedExhaustion, "no admissible degree combination found");
}

std::uint64_t trial_seed(std::uint64_t seed, int trial)
{
    std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                      static_cast<std::uint32_t>(trial)};
    std::uint32_t words[2];
    seq.generate(words, words + 2);
    return (static_cast<std::uint64_t>(words[0]) << 32) | words[1];
}

} // namespace

json DivisibilitySuiteReport::to_json() const
{
    json rs = json::array();
    for (const auto& r : rows)
        rs.push_back(r.to_json());
    return json{{"kind", "divisibility-suite"},
                {"fields", fields},
                {"seed", seed},
                {"trials", trials},
                {"witness_trials", witness_trials},
                {"violations", violations},
                {"witness_failures", witness_failures},
                {"ok", ok()},
                {"rows", rs}};
}

DivisibilitySuiteReport run_divisibility_suite(const std::vector<Field>& fields, int trials, std::uint64_t seed,
                                               int witness_trials)
{
    if (fields.empty())
        throw Error(ErrorCode::BadArgument, "no fields given");
    if (trials < 1)
        throw Error(ErrorCode::BadArgument, "trials must be positive");
    DivisibilitySuiteReport out;
    for (const auto& f : fields)
        out.fields.push_back(f.descriptor());
    out.seed = seed;
    out.trials = trials;
    out.witness_trials = std::min(witness_trials, trials);
    for (int t = 0; t < trials; ++t) {
        const Field& field = fields[static_cast<std::size_t>(t) % fields.size()];
        std::mt19937_64 rng(trial_seed(seed, t));
        const int m = 2 + static_cast<int>(rng() % 2);
        std::vector<Poly> comps;
        for (int d : random_degrees(field, rng, m, 24))
            comps.push_back(random_component(field, d, rng));
        DivisibilityReport r = check_divisibility(comps, t < out.witness_trials);
        if (!r.holds)
            ++out.violations;
        if (!r.witnesses_coherent())
            ++out.witness_failures;
        out.rows.push_back(std::move(r));
    }
    return out;
}

std::string_view status_name(CorpusStatus status)
{
    switch (status) {
    case CorpusStatus::Confirmed:
        return "Confirmed";
    case CorpusStatus::ConfirmedWithCorrection:
        return "ConfirmedWithCorrection";
    case CorpusStatus::Failed:
        return "Failed";
    }
    return "Failed";
}

const CorpusItem* CorpusReport::find(const std::string& id) const
{
    for (const auto& item : items)
        if (item.id == id)
            return &item;
    return nullptr;
}

bool CorpusReport::any_failed() const
{
    return std::any_of(items.begin(), items.end(), [](const CorpusItem& i) { return i.status == CorpusStatus::Failed; });
}

json CorpusReport::to_json() const
{
    json is = json::array();
    for (const auto& i : items)
        is.push_back(json{{"id", i.id}, {"status", status_name(i.status)}, {"details", i.details}, {"data", i.data}});
    return json{{"kind", "corpus"}, {"items", is}};
}

namespace {

CorpusItem corpus_fixgroup_quartic()
{
    CorpusItem item{"fixgroup-quartic", CorpusStatus::Confirmed, "", json::object()};
    bool all = true;
    for (const char* desc : {"Q", "GF(5)", "GF(7)"}) {
        Field field = make_field(desc);
        RatFunc f = parse_expression("x^2*(x-1)^2", field);
        std::vector<Mobius> expected{Mobius::identity(field), mobius("-x+1", field)};
        std::sort(expected.begin(), expected.end());
        FixGroup g = fixing_group(f);
        bool ok = g.elements() == expected && fixing_group_rational(f).elements() == expected;
        if (field.is_finite())
            ok = ok && fixing_group_bruteforce(f).elements() == expected;
        item.data[desc] = json{{"elements", strings(g.elements())}, {"matches", ok}};
        all = all && ok;
    }
    if (all) {
        item.details = "fixing group of x^2*(x-1)^2 is {x, 1-x} over Q, GF(5), GF(7)";
    } else {
        item.status = CorpusStatus::Failed;
        item.details = "fixing group of x^2*(x-1)^2 differs from {x, 1-x}";
    }
    return item;
}

bool pairwise_inequivalent(const std::vector<PolyPair>& pairs)
{
    for (std::size_t i = 0; i < pairs.size(); ++i)
        for (std::size_t j = i + 1; j < pairs.size(); ++j)
            if (equivalent_decompositions(RatPair{RatFunc(pairs[i].g), RatFunc(pairs[i].h)},
                                          RatPair{RatFunc(pairs[j].g), RatFunc(pairs[j].h)}))
                return false;
    return true;
}

json poly_pairs(const std::vector<PolyPair>& pairs)
{
    json out = json::array();
    for (const auto& p : pairs)
        out.push_back(json{{"g", p.g.to_string("y")}, {"h", p.h.to_string()}});
    return out;
}

CorpusItem corpus_wild_f4()
{
    CorpusItem item{"wild-f4", CorpusStatus::Failed, "", json::object()};
    Field f4 = make_field("GF(2)[a]/(a^2+a+1)");
    const Elem a = f4.gen();
    const Poly x = Poly::x(f4);
    const Poly printed = parse_polynomial("x^4+x^2+x", f4);
    const Poly inner = x * x + x.scale(a);
    const Poly identity_rhs = inner * inner + inner.scale(a.inv());
    const bool printed_identity = identity_rhs == printed;
    const auto printed_pairs = decompose_poly_bruteforce(printed, 2);

    const Poly derived = parse_polynomial("x^4+x", f4);
    const auto derived_pairs = decompose_poly_bruteforce(derived, 2);
    auto has_h = [&](const Poly& h) {
        return std::any_of(derived_pairs.begin(), derived_pairs.end(), [&](const PolyPair& p) { return p.h == h; });
    };
    const bool expected_hs = has_h(inner) && has_h(x * x + x.scale(a * a));
    const bool derived_ok = derived_pairs.size() >= 2 && expected_hs && pairwise_inequivalent(derived_pairs);
    const bool printed_ok = printed_identity && printed_pairs.size() >= 2 && pairwise_inequivalent(printed_pairs);

    item.data = json{{"field", f4.descriptor()},
                     {"printed_polynomial", printed.to_string()},
                     {"printed_identity_rhs", identity_rhs.to_string()},
                     {"printed_identity_holds", printed_identity},
                     {"printed_decompositions", poly_pairs(printed_pairs)},
                     {"derived_polynomial", derived.to_string()},
                     {"derived_decompositions", poly_pairs(derived_pairs)},
                     {"derived_pairwise_inequivalent", pairwise_inequivalent(derived_pairs)}};
    if (printed_ok) {
        item.status = CorpusStatus::Confirmed;
        item.details = "x^4+x^2+x has inequivalent degree-2 right components over F4";
    } else if (derived_ok) {
        item.status = CorpusStatus::ConfirmedWithCorrection;
        item.details = "printed identity expands to " + identity_rhs.to_string() + "; x^4+x has " +
                       std::to_string(derived_pairs.size()) + " pairwise inequivalent normalized decompositions";
    } else {
        item.details = "no pair of inequivalent decompositions found";
    }
    return item;
}

CorpusItem corpus_extension_decomposition()
{
    CorpusItem item{"extension-decomposition", CorpusStatus::Failed, "", json::object()};
    Field qw = make_field("Q[w]/(w^2+w+1)");
    RatFunc f1 = parse_expression("(x^2+(4-w)*x-w)/(2*x^2+(8+w)*x+w)", qw);
    RatFunc f2 = parse_expression("x*w*(x*w-2)/(x*w+1)", qw);
    RatFunc printed = parse_expression("(w^3*x^4-w^3*x^3-8*x-1)/(2*w^3*x^4+w^3*x^3-16*x+1)", qw);
    RatFunc composed = compose(f1, f2);
    const bool equal = composed == printed;
    item.data = json{{"field", qw.descriptor()},
                     {"f1", f1.to_string()},
                     {"f2", f2.to_string()},
                     {"printed_f", printed.to_string()},
                     {"composition", composed.to_string()},
                     {"composition_degree", composed.degree()},
                     {"equal", equal}};
    if (equal) {
        item.status = CorpusStatus::Confirmed;
        item.details = "f1 o f2 equals the printed f after w^3 = 1";
    } else {
        item.details = "f1 o f2 = " + composed.to_string() + " differs from the printed f";
    }
    return item;
}

CorpusItem corpus_inequivalent_decompositions()
{
    CorpusItem item{"inequivalent-decompositions", CorpusStatus::Failed, "", json::object()};
    Field q = Field::rationals();
    RatFunc f = parse_expression("(x^4+1)/x^2", q);
    auto p = [&](std::string_view t) { return parse_expression(t, q); };
    const bool printed_a = compose(p("1/x"), p("x^2")) == f;
    const bool printed_b = compose(p("x^2-2"), p("1/x")) == f;

    auto d1 = decompose_via_subgroup(f, cyclic_subgroup(mobius("1/x", q)));
    auto d2 = decompose_via_subgroup(f, cyclic_subgroup(mobius("-x", q)));
    bool derived = d1 && d2 && compose(d1->g, d1->h) == f && compose(d2->g, d2->h) == f &&
                   !equivalent_decompositions(*d1, *d2);
    item.data = json{{"f", f.to_string()},
                     {"printed_first_recomposes", printed_a},
                     {"printed_second_recomposes", printed_b},
                     {"printed_first_composition", compose(p("1/x"), p("x^2")).to_string()},
                     {"printed_second_composition", compose(p("x^2-2"), p("1/x")).to_string()}};
    if (d1)
        item.data["via_inversion"] = pair_json(*d1);
    if (d2)
        item.data["via_negation"] = pair_json(*d2);
    item.data["derived_inequivalent"] = derived;
    if (printed_a && printed_b && derived) {
        item.status = CorpusStatus::Confirmed;
        item.details = "two inequivalent degree-2 decompositions";
    } else if (derived) {
        item.status = CorpusStatus::ConfirmedWithCorrection;
        item.details = "printed components recompose to 1/x^2 and 1/x^2-2; subgroup decompositions " +
                       d1->g.to_string("y") + " o " + d1->h.to_string() + " and " + d2->g.to_string("y") + " o " +
                       d2->h.to_string() + " are inequivalent";
    } else {
        item.details = "subgroup decompositions missing or equivalent";
    }
    return item;
}

CorpusItem corpus_degree12()
{
    CorpusItem item{"degree-12-qi", CorpusStatus::Failed, "", json::object()};
    Field qi = make_field("Q[i]/(i^2+1)");
    RatFunc f = parse_expression("(-1+33*x^4+33*x^8-x^12)/(x^2-2*x^6+x^10)", qi);
    std::vector<Mobius> printed;
    for (const char* t : {"x", "-x", "1/x", "-1/x", "i*(x+1)/(x-1)", "-i*(x+1)/(x-1)", "i*(x-1)/(x+1)",
                          "-i*(x-1)/(x+1)", "(x+i)/(x-i)", "-(x+i)/(x-i)", "(x-i)/(x+i)", "-(x-i)/(x+i)"})
        printed.push_back(mobius(t, qi));
    std::sort(printed.begin(), printed.end());
    FixGroup group = fixing_group(f);
    const bool set_ok = group.elements() == printed;

    const Mobius u = mobius("i*(x+1)/(x-1)", qi);
    Subgroup sub = cyclic_subgroup(group, u);
    RatFunc printed_h = parse_expression("(x^3+(x-1)*x+1-i)/((x-1)*(x-i))", qi);
    const bool printed_h_fixed = fixes(printed_h, u);
    RatFunc h = invariant_function(sub);
    const bool h_fixed = h.degree() == 3 && fixes(h, u);
    auto g = left_divide(f, h);
    const bool g_ok = g && g->degree() == 4 && compose(*g, h) == f;
    const bool neg_member = is_member(compose(h, parse_expression("-x", qi)), h);
    int preserving = 0;
    for (const auto& v : group.elements())
        if (is_member(compose(h, v.as_ratfunc()), h))
            ++preserving;

    item.data = json{{"field", qi.descriptor()},
                     {"group_order", group.order()},
                     {"group", strings(group.elements())},
                     {"matches_printed_set", set_ok},
                     {"cyclic", group.generator().has_value()},
                     {"subgroup_order", sub.order()},
                     {"printed_h", printed_h.to_string()},
                     {"printed_h_fixed", printed_h_fixed},
                     {"derived_h", h.to_string()},
                     {"derived_h_fixed", h_fixed},
                     {"g", g ? g->to_string("y") : std::string()},
                     {"h_neg_x_in_field", neg_member},
                     {"elements_preserving_field", preserving}};
    const bool structure = set_ok && sub.order() == 3 && h_fixed && g_ok && !neg_member;
    if (structure && printed_h_fixed) {
        item.status = CorpusStatus::Confirmed;
        item.details = "order-12 group, order-3 subgroup, printed h invariant";
    } else if (structure) {
        item.status = CorpusStatus::ConfirmedWithCorrection;
        item.details = "order-12 group and order-3 subgroup confirmed; printed h is not fixed by " + u.to_string() +
                       ", derived invariant h = " + h.to_string();
    } else {
        item.details = "degree-12 checks failed";
    }
    return item;
}

CorpusItem corpus_gcd()
{
    CorpusItem item{"gcd-counterexample", CorpusStatus::Failed, "", json::object()};
    GcdCounterexampleReport r = check_gcd_counterexample();
    item.data = r.to_json();
    if (r.k == 4 && r.k1 == 2 && r.k2 == 2 && !r.k_divides_gcd && r.k_divides_product) {
        item.status = CorpusStatus::Confirmed;
        item.details = "k(x^4) = 4 does not divide gcd(2, 2) over Q(i)";
    } else {
        item.details = "unexpected orders for x^4 = x^2 o x^2";
    }
    return item;
}

CorpusItem guarded(const std::string& id, CorpusItem (*run)())
{
    try {
        return run();
    } catch (const Error& e) {
        return CorpusItem{id, CorpusStatus::Failed, std::string(code_name(e.code())) + ": " + e.what(),
                          json::object()};
    }
}

} // namespace

CorpusReport run_example_corpus()
{
    CorpusReport out;
    out.items.push_back(guarded("fixgroup-quartic", corpus_fixgroup_quartic));
    out.items.push_back(guarded("wild-f4", corpus_wild_f4));
    out.items.push_back(guarded("extension-decomposition", corpus_extension_decomposition));
    out.items.push_back(guarded("inequivalent-decompositions", corpus_inequivalent_decompositions));
    out.items.push_back(guarded("degree-12-qi", corpus_degree12));
    out.items.push_back(guarded("gcd-counterexample", corpus_gcd));
    return out;
}

json ExplorationRow::to_json() const
{
    return json{{"trial", trial},       {"g", g.to_string("y")}, {"h", h.to_string()}, {"f", f.to_string()},
                {"k", k},               {"k1", k1},              {"k2", k2},           {"divides", divides},
                {"resamples", resamples}};
}

json ExplorationReport::to_json() const
{
    json rs = json::array();
    json vs = json::array();
    for (const auto& r : rows) {
        rs.push_back(r.to_json());
        if (!r.divides)
            vs.push_back(r.to_json());
    }
    return json{{"kind", "conjecture-exploration"},
                {"field", field},
                {"seed", seed},
                {"max_degree", max_degree},
                {"trials", rows.size()},
                {"violations", violations},
                {"violating_rows", vs},
                {"rows", rs}};
}

namespace {

RatFunc random_ratfunc(const Field& field, int d, std::mt19937_64& rng)
{
    const Poly x = Poly::x(field);
    auto coeffs = [&](int deg) {
        std::vector<Elem> c;
        for (int i = 0; i <= deg; ++i)
            c.push_back(field.from_int(draw(rng, -5, 5)));
        return Poly(field, std::move(c));
    };
    switch (rng() % 4) {
    case 0:
        return RatFunc(x.pow(d) + Poly::constant(field.from_int(draw(rng, -3, 3))));
    case 1: {
        int j = static_cast<int>(draw(rng, 1, d - 1));
        return RatFunc(x.pow(d) + Poly::constant(field.from_int(draw(rng, 1, 3))), x.pow(j));
    }
    default: {
        Poly num = coeffs(d);
        Poly den = coeffs(static_cast<int>(draw(rng, 0, d)));
        return RatFunc(num, den.is_zero() ? Poly::constant(field.one()) : den);
    }
    }
}

} // namespace

ExplorationReport explore_conjecture(const Field& field, int trials, std::uint64_t seed, int max_degree)
{
    if (trials < 1)
        throw Error(ErrorCode::BadArgument, "trials must be positive");
    std::vector<std::pair<int, int>> shapes;
    for (int a = 2; a * 2 <= max_degree; ++a)
        for (int b = 2; a * b <= max_degree; ++b)
            if (tame_degree(field, a * b))
                shapes.emplace_back(a, b);
    if (shapes.empty())
        throw Error(ErrorCode::BadArgument, "no tame composite degree up to " + std::to_string(max_degree));

    ExplorationReport out;
    out.field = field.descriptor();
    out.seed = seed;
    out.max_degree = max_degree;
    for (int t = 0; t < trials; ++t) {
        std::mt19937_64 rng(trial_seed(seed, t));
        ExplorationRow row;
        row.trial = t;
        for (;; ++row.resamples) {
            if (row.resamples > 1000)
                throw Error(ErrorCode::SeedExhaustion, "could not sample a nontrivial composition");
            auto [dg, dh] = shapes[rng() % shapes.size()];
            row.g = random_ratfunc(field, dg, rng);
            row.h = random_ratfunc(field, dh, rng);
            if (row.g.degree() == dg && row.h.degree() == dh)
                break;
        }
        row.f = compose(row.g, row.h);
        row.k = fixing_group(row.f).order();
        row.k1 = fixing_group(row.g).order();
        row.k2 = fixing_group(row.h).order();
        row.divides = (row.k1 * row.k2) % row.k == 0;
        if (!row.divides)
            ++out.violations;
        out.rows.push_back(std::move(row));
    }
    return out;
}

json NormalPartialReport::to_json() const
{
    return json{{"field", field},
                {"n", n},
                {"group_order", group_order},
                {"roots_of_unity", roots_of_unity},
                {"holds", holds}};
}

NormalPartialReport check_normal_partial(const Field& field, int n)
{
    if (n < 1)
        throw Error(ErrorCode::BadDegree, "n must be positive");
    if (!tame_degree(field, n))
        throw Error(ErrorCode::WildDegree, "n = " + std::to_string(n) + " is divisible by the characteristic");
    NormalPartialReport out;
    out.field = field.descriptor();
    out.n = n;
    out.group_order = fixing_group_poly_tame(Poly::monomial(field.one(), n)).order();
    out.roots_of_unity = static_cast<int>(nth_roots_of_unity(field, n).size());
    out.holds = out.group_order == out.roots_of_unity;
    return out;
}

std::string render_json(json body)
{
    body["schema"] = kReportSchema;
    return body.dump(2) + "\n";
}

} // namespace ratdecomp
