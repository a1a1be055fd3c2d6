#include "ratdecomp/cli.hpp"

#include <algorithm>
#include <optional>
#include <sstream>

#include "CLI11.hpp"
#include "ratdecomp/parse.hpp"
#include "ratdecomp/verify.hpp"

namespace ratdecomp {

using nlohmann::json;

namespace {

struct Options {
    std::string field = "Q";
    bool json = false;
    std::vector<std::string> exprs;
    std::optional<std::uint64_t> seed;
    int trials = 0;
    int right_degree = 0;
    int max_degree = 9;
    int witnesses = 20;
    bool all_fields = false;
    std::string method = "auto";
};

struct Context {
    Options opt;
    std::istream* in = nullptr;
    std::ostringstream out;

    Field field() const { return make_field(opt.field); }

    std::string text(const std::string& arg)
    {
        if (arg != "-")
            return arg;
        std::string line;
        while (std::getline(*in, line))
            if (line.find_first_not_of(" \t\r") != std::string::npos)
                return line;
        throw Error(ErrorCode::BadArgument, "no expression on standard input");
    }

    RatFunc expr(const std::string& arg, const Field& f) { return parse_expression(text(arg), f); }

    void need(std::size_t count, const char* what)
    {
        if (opt.exprs.size() != count)
            throw Error(ErrorCode::BadArgument, std::string("expected ") + what);
    }

    std::uint64_t seed() const
    {
        if (!opt.seed)
            throw Error(ErrorCode::BadArgument, "--seed is required for randomized commands");
        return *opt.seed;
    }

    void emit(json body, const std::string& text_form)
    {
        if (opt.json)
            out << render_json(std::move(body));
        else
            out << text_form;
    }
};

std::string braces(const std::vector<Mobius>& us)
{
    std::string s = "{";
    for (std::size_t i = 0; i < us.size(); ++i)
        s += (i ? ", " : "") + us[i].pretty();
    return s + "}";
}

void cmd_compose(Context& c)
{
    if (c.opt.exprs.size() < 2)
        throw Error(ErrorCode::BadArgument, "compose needs at least two expressions");
    Field f = c.field();
    json comps = json::array();
    RatFunc acc = c.expr(c.opt.exprs.front(), f);
    comps.push_back(acc.to_string());
    for (std::size_t i = 1; i < c.opt.exprs.size(); ++i) {
        RatFunc next = c.expr(c.opt.exprs[i], f);
        comps.push_back(next.to_string());
        acc = compose(acc, next);
    }
    c.emit(json{{"kind", "compose"}, {"field", f.descriptor()}, {"components", comps}, {"result", acc.to_string()},
                {"degree", acc.degree()}},
           acc.to_string() + "\n");
}

void cmd_decompose(Context& c)
{
    c.need(1, "one expression");
    Field field = c.field();
    RatFunc rf = c.expr(c.opt.exprs[0], field);
    if (!rf.is_polynomial())
        throw Error(ErrorCode::BadArgument, "decompose expects a polynomial");
    Poly f = rf.as_poly();
    const int s = c.opt.right_degree;
    if (c.opt.method == "bruteforce") {
        if (s < 1)
            throw Error(ErrorCode::BadArgument, "--right-degree is required with --method bruteforce");
        auto pairs = decompose_poly_bruteforce(f, s);
        json rows = json::array();
        std::string text;
        for (const auto& p : pairs) {
            rows.push_back(json{{"g", p.g.to_string("y")}, {"h", p.h.to_string()}});
            text += "g = " + p.g.to_string("y") + ", h = " + p.h.to_string() + "\n";
        }
        if (pairs.empty())
            text = "no decomposition with deg h = " + std::to_string(s) + "\n";
        c.emit(json{{"kind", "decompose"}, {"method", "bruteforce"}, {"field", field.descriptor()},
                    {"f", f.to_string()}, {"right_degree", s}, {"decompositions", rows}},
               text);
        return;
    }
    if (c.opt.method != "auto" && c.opt.method != "tame")
        throw Error(ErrorCode::BadArgument, "unknown method " + c.opt.method);
    if (s > 0) {
        auto d = decompose_poly(f, s);
        json body{{"kind", "decompose"}, {"method", "tame"}, {"field", field.descriptor()}, {"f", f.to_string()},
                  {"right_degree", s}, {"found", d.has_value()}};
        std::string text = "no decomposition with deg h = " + std::to_string(s) + "\n";
        if (d) {
            body["g"] = d->g.to_string("y");
            body["h"] = d->h.to_string();
            text = "g = " + d->g.to_string("y") + "\nh = " + d->h.to_string() + "\n";
        }
        c.emit(body, text);
        return;
    }
    auto chains = complete_decompositions(f);
    json rows = json::array();
    std::string text;
    for (const auto& d : chains) {
        json comps = json::array();
        std::string line;
        for (const auto& p : d.components()) {
            comps.push_back(p.to_string());
            line += (line.empty() ? "" : " o ") + ("(" + p.to_string() + ")");
        }
        rows.push_back(comps);
        text += line + "\n";
    }
    c.emit(json{{"kind", "complete-decompositions"}, {"field", field.descriptor()}, {"f", f.to_string()},
                {"chains", rows}},
           text);
}

void cmd_fixgroup(Context& c)
{
    c.need(1, "one expression");
    Field field = c.field();
    RatFunc f = c.expr(c.opt.exprs[0], field);
    const std::string& m = c.opt.method;
    FixGroup g = m == "auto"         ? fixing_group(f)
                 : m == "rational"   ? fixing_group_rational(f)
                 : m == "bruteforce" ? fixing_group_bruteforce(f)
                 : m == "tame"       ? (f.is_polynomial() ? fixing_group_poly_tame(f.as_poly())
                                                          : throw Error(ErrorCode::BadArgument, "tame method needs a polynomial"))
                                     : throw Error(ErrorCode::BadArgument, "unknown method " + m);
    GroupStructure st = group_structure(g);
    json elems = json::array();
    for (const auto& [u, k] : st.element_orders)
        elems.push_back(json{{"element", u.to_string()}, {"pretty", u.pretty()}, {"order", k}});
    json body{{"kind", "fixgroup"}, {"field", field.descriptor()}, {"f", f.to_string()},
              {"order", g.order()},  {"cyclic", st.cyclic},          {"elements", elems}};
    std::string text = "f = " + f.to_string() + "\norder: " + std::to_string(g.order()) + "\ngroup: " +
                       braces(g.elements()) + "\n";
    if (st.generator) {
        body["generator"] = st.generator->to_string();
        text += "cyclic, generated by " + st.generator->pretty() + "\n";
    } else {
        text += "not cyclic\n";
    }
    c.emit(body, text);
}

void cmd_leftdiv(Context& c)
{
    c.need(2, "f and h");
    Field field = c.field();
    RatFunc f = c.expr(c.opt.exprs[0], field);
    RatFunc h = c.expr(c.opt.exprs[1], field);
    auto g = left_divide(f, h);
    if (!g)
        throw Error(ErrorCode::LeftDivisionFailed, h.to_string() + " is not a right component of " + f.to_string());
    c.emit(json{{"kind", "leftdiv"}, {"field", field.descriptor()}, {"f", f.to_string()}, {"h", h.to_string()},
                {"g", g->to_string("y")}},
           "g = " + g->to_string("y") + "\n");
}

void cmd_member(Context& c)
{
    c.need(2, "g and h");
    Field field = c.field();
    RatFunc g = c.expr(c.opt.exprs[0], field);
    RatFunc h = c.expr(c.opt.exprs[1], field);
    bool in = is_member(g, h);
    c.emit(json{{"kind", "member"}, {"field", field.descriptor()}, {"g", g.to_string()}, {"h", h.to_string()},
                {"member", in}},
           std::string(in ? "true" : "false") + "\n");
}

void cmd_invariant(Context& c)
{
    if (c.opt.exprs.empty() || c.opt.exprs.size() > 2)
        throw Error(ErrorCode::BadArgument, "expected a generator u and optionally f");
    Field field = c.field();
    Mobius u = Mobius::from_ratfunc(c.expr(c.opt.exprs[0], field));
    Subgroup sub = cyclic_subgroup(u);
    RatFunc h = invariant_function(sub);
    json body{{"kind", "invariant"}, {"field", field.descriptor()}, {"generator", u.to_string()},
              {"subgroup_order", sub.order()}, {"h", h.to_string()}};
    std::string text = "subgroup order: " + std::to_string(sub.order()) + "\nh = " + h.to_string() + "\n";
    if (c.opt.exprs.size() == 2) {
        RatFunc f = c.expr(c.opt.exprs[1], field);
        auto g = left_divide(f, h);
        if (!g)
            throw Error(ErrorCode::LeftDivisionFailed, "f is not a function of the invariant h");
        body["f"] = f.to_string();
        body["g"] = g->to_string("y");
        text += "g = " + g->to_string("y") + "\n";
    }
    c.emit(body, text);
}

bool cmd_verify(Context& c)
{
    if (!c.opt.exprs.empty()) {
        Field field = c.field();
        std::vector<Poly> comps;
        for (const auto& e : c.opt.exprs)
            comps.push_back(parse_polynomial(c.text(e), field));
        DivisibilityReport r = check_divisibility(comps, c.opt.witnesses > 0);
        std::string text = "k = " + std::to_string(r.composite_order) + ", k_i =";
        for (int k : r.component_orders)
            text += " " + std::to_string(k);
        text += r.holds ? "\nholds\n" : "\nVIOLATED\n";
        if (!r.witnesses_coherent())
            text += "witness chain incoherent\n";
        c.emit(r.to_json(), text);
        return r.holds && r.witnesses_coherent();
    }
    std::vector<Field> fields;
    if (c.opt.all_fields)
        for (const char* d : {"GF(7)", "GF(11)", "GF(13)", "Q"})
            fields.push_back(make_field(d));
    else
        fields.push_back(c.field());
    DivisibilitySuiteReport r =
        run_divisibility_suite(fields, c.opt.trials > 0 ? c.opt.trials : 200, c.seed(), c.opt.witnesses);
    std::string text = "trials: " + std::to_string(r.trials) + "\nviolations: " + std::to_string(r.violations) +
                       "\nwitness trials: " + std::to_string(r.witness_trials) +
                       "\nwitness failures: " + std::to_string(r.witness_failures) + "\n" +
                       (r.ok() ? "all hold\n" : "FAILED\n");
    c.emit(r.to_json(), text);
    return r.ok();
}

void cmd_explore(Context& c)
{
    Field field = c.field();
    ExplorationReport r = explore_conjecture(field, c.opt.trials > 0 ? c.opt.trials : 50, c.seed(), c.opt.max_degree);
    std::string text = "trials: " + std::to_string(r.rows.size()) + "\nviolations: " + std::to_string(r.violations) + "\n";
    for (const auto& row : r.rows)
        if (!row.divides)
            text += "  trial " + std::to_string(row.trial) + ": g = " + row.g.to_string("y") + ", h = " +
                    row.h.to_string() + ", k = " + std::to_string(row.k) + ", k1 = " + std::to_string(row.k1) +
                    ", k2 = " + std::to_string(row.k2) + "\n";
    c.emit(r.to_json(), text);
}

bool cmd_corpus(Context& c)
{
    CorpusReport r = run_example_corpus();
    std::string text;
    for (const auto& item : r.items)
        text += std::string(status_name(item.status)) + "  " + item.id + ": " + item.details + "\n";
    c.emit(r.to_json(), text);
    return !r.any_failed();
}

bool mathematical(ErrorCode code)
{
    switch (code) {
    case ErrorCode::GroupInvariantViolated:
    case ErrorCode::LeftDivisionFailed:
    case ErrorCode::SeedExhaustion:
    case ErrorCode::Internal:
        return true;
    default:
        return false;
    }
}

} // namespace

CliResult run_cli(const std::vector<std::string>& args, std::istream& in)
{
    Context ctx;
    ctx.in = &in;
    Options& o = ctx.opt;
    CLI::App app{"Exact decomposition of polynomials and rational functions", "ratdecomp"};
    app.require_subcommand(1);

    auto common = [&](CLI::App* sub) {
        sub->add_option("--field", o.field, "Field descriptor, e.g. Q, GF(7), Q[i]/(i^2+1)");
        sub->add_flag("--json", o.json, "Emit JSON");
    };
    auto exprs = [&](CLI::App* sub, const char* desc) { sub->add_option("expressions", o.exprs, desc); };
    auto seeded = [&](CLI::App* sub) {
        sub->add_option("--seed", o.seed, "Random seed (required)");
        sub->add_option("--trials", o.trials, "Number of trials")->check(CLI::PositiveNumber);
    };

    auto* compose_cmd = app.add_subcommand("compose", "Compose g1 o g2 o ...");
    common(compose_cmd);
    exprs(compose_cmd, "Components, outermost first");

    auto* decompose_cmd = app.add_subcommand("decompose", "Decompose a polynomial");
    common(decompose_cmd);
    exprs(decompose_cmd, "Polynomial");
    decompose_cmd->add_option("--right-degree", o.right_degree, "Degree of the right component");
    decompose_cmd->add_option("--method", o.method, "tame or bruteforce")->check(CLI::IsMember({"auto", "tame", "bruteforce"}));
    decompose_cmd->add_flag_callback("--bruteforce", [&] { o.method = "bruteforce"; }, "Exhaustive search over a finite field");

    auto* fixgroup_cmd = app.add_subcommand("fixgroup", "Fixing group of f");
    common(fixgroup_cmd);
    exprs(fixgroup_cmd, "Function f");
    fixgroup_cmd->add_option("--method", o.method, "auto, tame, rational or bruteforce")
        ->check(CLI::IsMember({"auto", "tame", "rational", "bruteforce"}));
    fixgroup_cmd->add_flag_callback("--bruteforce", [&] { o.method = "bruteforce"; }, "Scan all of PGL(2, q)");

    auto* leftdiv_cmd = app.add_subcommand("leftdiv", "Find g with g o h = f");
    common(leftdiv_cmd);
    exprs(leftdiv_cmd, "f and h");

    auto* member_cmd = app.add_subcommand("member", "Test g in K(h)");
    common(member_cmd);
    exprs(member_cmd, "g and h");

    auto* invariant_cmd = app.add_subcommand("invariant", "Invariant function of <u>, optionally dividing f");
    common(invariant_cmd);
    exprs(invariant_cmd, "Generator u, then optionally f");

    auto* verify_cmd = app.add_subcommand("verify-theorem", "Check |Γ(p1 o ... o pm)| divides the product of |Γ(pi)|");
    common(verify_cmd);
    seeded(verify_cmd);
    exprs(verify_cmd, "Explicit components (otherwise random trials)");
    verify_cmd->add_option("--witnesses", o.witnesses, "Trials carrying witness chains");
    verify_cmd->add_flag("--all-fields", o.all_fields, "Cycle through GF(7), GF(11), GF(13), Q");

    auto* explore_cmd = app.add_subcommand("explore-conjecture", "Divisibility on random rational compositions");
    common(explore_cmd);
    seeded(explore_cmd);
    explore_cmd->add_option("--max-degree", o.max_degree, "Largest composite degree");

    auto* corpus_cmd = app.add_subcommand("corpus", "Run the worked-example corpus");
    common(corpus_cmd);

    CliResult result;
    try {
        std::vector<std::string> rev(args.rbegin(), args.rend());
        app.parse(rev);
    } catch (const CLI::CallForHelp&) {
        result.out = app.help();
        return result;
    } catch (const CLI::ParseError& e) {
        result.exit_code = 1;
        result.err = std::string("usage error: ") + e.what() + "\n";
        return result;
    }

    try {
        bool ok = true;
        if (compose_cmd->parsed())
            cmd_compose(ctx);
        else if (decompose_cmd->parsed())
            cmd_decompose(ctx);
        else if (fixgroup_cmd->parsed())
            cmd_fixgroup(ctx);
        else if (leftdiv_cmd->parsed())
            cmd_leftdiv(ctx);
        else if (member_cmd->parsed())
            cmd_member(ctx);
        else if (invariant_cmd->parsed())
            cmd_invariant(ctx);
        else if (verify_cmd->parsed())
            ok = cmd_verify(ctx);
        else if (explore_cmd->parsed())
            cmd_explore(ctx);
        else if (corpus_cmd->parsed())
            ok = cmd_corpus(ctx);
        result.out = ctx.out.str();
        result.exit_code = ok ? 0 : 2;
    } catch (const Error& e) {
        result.out = ctx.out.str();
        result.exit_code = mathematical(e.code()) ? 2 : 1;
        result.err = "error[" + std::string(code_name(e.code())) + "]: " + e.what() + "\n";
    } catch (const std::exception& e) {
        result.out = ctx.out.str();
        result.exit_code = 2;
        result.err = "error[" + std::string(code_name(ErrorCode::Internal)) + "]: " + e.what() + "\n";
    }
    return result;
}

} // namespace ratdecomp
