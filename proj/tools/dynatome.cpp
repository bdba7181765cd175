/*
   Copyright 2026 The dynatome Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "dynatome/classify.hpp"
#include "dynatome/disc_factor.hpp"
#include "dynatome/eisenstein.hpp"
#include "dynatome/numeric.hpp"
#include "dynatome/verify.hpp"

using namespace dynatome;
using json = nlohmann::ordered_json;

namespace {

constexpr const char *schema = "dynatome/1";

enum class Status { ok, verification_failed, error };

const char *status_name(Status s)
{
    switch (s) {
    case Status::ok:
        return "ok";
    case Status::verification_failed:
        return "verification-failed";
    default:
        return "error";
    }
}

int exit_code(Status s) { return s == Status::ok ? 0 : s == Status::verification_failed ? 2 : 1; }

struct Args {
    std::string family = "unicritical";
    int degree = 2;
    int period = 1;
    int max_period = 2;
    std::string c, a, u;
    long k = 1, l = 2;
    std::int64_t bound = 20;
    std::int64_t rational_bound = 400;
    long b_bound = 10'000;
    long max_height = 100;
    std::string which;
    std::string param;
    int criterion = 0;
    double tol = 1e-8;
    unsigned threads = 1;
    std::uint64_t trial_bound = default_trial_bound;
    std::size_t degree_cap = 100'000;
    std::string format = "json";
    bool timing = false;

    Options options() const
    {
        Options o;
        o.threads = threads;
        o.trial_bound = trial_bound;
        o.degree_cap = degree_cap;
        return o;
    }
};

// Collects a JSON payload and its text rendering side by side.
class Output {
public:
    json payload = json::object();
    std::vector<std::string> text;
    Status status = Status::ok;

    void value(const std::string &key, json v, const std::string &shown)
    {
        payload[key] = std::move(v);
        text.push_back(key + ": " + shown);
    }
    void value(const std::string &key, const std::string &v) { value(key, v, v); }
    void value(const std::string &key, const char *v) { value(key, std::string(v)); }
    void value(const std::string &key, long v) { value(key, v, std::to_string(v)); }
    void value(const std::string &key, int v) { value(key, static_cast<long>(v)); }
    void flag(const std::string &key, bool v) { value(key, v, v ? "true" : "false"); }

    void require(bool pass)
    {
        if (!pass && status == Status::ok)
            status = Status::verification_failed;
    }
};

json to_json(const Integer &x) { return to_string(x); }
json to_json(const Rational &x) { return to_string(x); }

json to_json(const IntPoly &p)
{
    json a = json::array();
    for (const auto &c : p.coeffs())
        a.push_back(to_string(c));
    return a;
}

json to_json(const RatPoly &p)
{
    json a = json::array();
    for (const auto &c : p.coeffs())
        a.push_back(to_string(c));
    return a;
}

json to_json(const ParamPoly &p)
{
    json a = json::array();
    for (const auto &c : p.coeffs())
        a.push_back(to_json(c));
    return a;
}

json to_json(const std::vector<RootMultiplicity> &roots)
{
    json a = json::array();
    for (const auto &r : roots)
        a.push_back({{"value", to_string(r.value)}, {"multiplicity", r.multiplicity}});
    return a;
}

std::string show(const Rational &x) { return x.get_den() == 1 ? to_string(x.get_num()) : to_string(x); }

std::string show_roots(const std::vector<RootMultiplicity> &roots)
{
    std::string s = "{";
    for (std::size_t i = 0; i < roots.size(); ++i) {
        if (i)
            s += ", ";
        s += show(roots[i].value);
        if (roots[i].multiplicity > 1)
            s += " (x" + std::to_string(roots[i].multiplicity) + ")";
    }
    return s + "}";
}

std::string complex_text(const Complex &z)
{
    char buf[96];
    std::snprintf(buf, sizeof buf, "%.12Lg%+.12Lgi", z.real(), z.imag());
    return buf;
}

std::string sci(long double x)
{
    char buf[48];
    std::snprintf(buf, sizeof buf, "%.3Le", x);
    return buf;
}

ParamFamily family_of(const Args &a)
{
    if (a.family == "unicritical") {
        if (a.degree < 2)
            throw error(errc::bad_param, "--degree must be at least 2");
        return ParamFamily::unicritical(a.degree);
    }
    if (a.family == "symcubic")
        return ParamFamily::symcubic();
    throw error(errc::bad_param, "unknown family '" + a.family + "'");
}

struct ParsedValue {
    Rational value;
    bool is_power = false;
    std::string symbol;
};

// The parameter from --c, --a or --u. For z^d + c, --u gives u = c^(d-1).
ParsedValue value_of(const Args &a, const ParamFamily &fam)
{
    const int given = !a.c.empty() + !a.a.empty() + !a.u.empty();
    if (given != 1)
        throw error(errc::bad_param, "give exactly one of --c, --a, --u");
    if (fam.kind() == FamilyKind::symcubic) {
        if (a.a.empty())
            throw error(errc::bad_param, "the symcubic family takes --a");
        return {parse_rational(a.a), false, "a"};
    }
    if (!a.a.empty())
        throw error(errc::bad_param, "z^d + c takes --c or --u");
    if (!a.u.empty())
        return {parse_rational(a.u), fam.degree() > 2, "u"};
    return {parse_rational(a.c), false, "c"};
}

void check_period(int n, const char *flag)
{
    if (n < 1)
        throw error(errc::bad_param, std::string(flag) + " must be at least 1");
}

void describe_family(Output &out, const ParamFamily &fam) { out.value("family", fam.id()); }

void cmd_phi(const Args &a, Output &out)
{
    check_period(a.period, "--period");
    const auto fam = family_of(a);
    const auto phi = dynatomic_poly(fam, a.period, a.options());
    describe_family(out, fam);
    out.value("period", a.period);
    out.value("phi", to_json(phi), format_poly(phi, "z", fam.param_symbol()));
}

void cmd_mult(const Args &a, Output &out)
{
    check_period(a.period, "--period");
    const auto fam = family_of(a);
    const auto m = multiplier_poly(fam, a.period, a.options());
    describe_family(out, fam);
    out.value("period", a.period);
    out.value("multiplier_poly", to_json(m.poly), format_poly(m.poly, "λ", fam.param_symbol()));
}

void cmd_delta(const Args &a, Output &out)
{
    check_period(a.period, "--period");
    const auto fam = family_of(a);
    const auto d = delta_n(fam, a.period, a.options());
    describe_family(out, fam);
    out.value("period", a.period);
    out.value("delta", to_json(d), format_poly(d, fam.param_symbol()));
}

void cmd_factor_delta(const Args &a, Output &out)
{
    check_period(a.period, "--period");
    const auto fam = family_of(a);
    const auto f = factor_delta(fam, a.period, a.options());
    const auto &sym = fam.param_symbol();
    describe_family(out, fam);
    out.value("period", a.period);
    out.value("delta", to_json(f.delta), format_poly(f.delta, sym));
    out.value("a", to_json(f.a), to_string(f.a));
    out.value("q", to_json(f.q), format_poly(f.q, sym));
    out.value("r", to_json(f.r), format_poly(f.r, sym));
    const bool reassembles = IntPoly(f.a) * f.q * f.r * f.r == f.delta;
    out.flag("reassembles", reassembles);
    out.flag("a_is_unit", f.a == 1 || f.a == -1);
    out.flag("q_r_common_root", common_root_check(f));
    out.require(reassembles);
}

void cmd_pkl(const Args &a, Output &out)
{
    const auto fam = family_of(a);
    const auto p = p_kl(fam, static_cast<int>(a.k), a.l, a.options());
    describe_family(out, fam);
    out.value("k", a.k);
    out.value("l", a.l);
    out.value("p_kl", to_json(p), format_poly(p, fam.param_symbol()));
}

void cmd_qn(const Args &a, Output &out)
{
    check_period(a.period, "--period");
    const auto fam = family_of(a);
    const auto q = q_n(fam, a.period, a.options());
    describe_family(out, fam);
    out.value("period", a.period);
    out.value("q", to_json(q), format_poly(q, fam.param_symbol()));
}

void cmd_classify(const Args &a, Output &out)
{
    check_period(a.max_period, "--max-period");
    const auto fam = family_of(a);
    const auto v = value_of(a, fam);
    const auto rep = classify_parameter(fam, v.value, a.max_period, v.is_power, a.options());
    describe_family(out, fam);
    out.value("parameter", v.symbol);
    out.value("value", to_json(v.value), show(v.value));
    out.value("max_period", a.max_period);
    json periods = json::array();
    for (const auto &p : rep.periods) {
        periods.push_back({{"period", p.period},
                           {"multiplier_poly", to_json(p.m)},
                           {"roots", to_json(p.roots)},
                           {"splits_over_q", p.splits_over_q},
                           {"splits_over_z", p.splits_over_z},
                           {"delta", to_string(p.delta)},
                           {"delta_is_square", p.delta_is_square}});
        out.text.push_back("period " + std::to_string(p.period) + ": " + format_poly(p.m, "λ"));
        out.text.push_back("  rational roots " + show_roots(p.roots) + ", splits over Q " +
                           (p.splits_over_q ? "yes" : "no") + ", over Z " + (p.splits_over_z ? "yes" : "no"));
        out.text.push_back("  delta " + show(p.delta) + (p.delta_is_square ? " (square)" : " (not a square)"));
    }
    out.payload["periods"] = periods;
    out.value("verdict", rep.verdict_text());
}

void cmd_parametrization(const Args &a, Output &out)
{
    const auto which = parse_parametrization(a.which);
    if (a.param.empty())
        throw error(errc::bad_param, "--param is required");
    const auto rep = verify_parametrization(which, parse_rational(a.param), a.options());
    out.value("which", parametrization_name(which));
    out.value("param", to_json(rep.param), show(rep.param));
    out.value(which == Parametrization::cubic_rat_fixed ? "c_squared" : "c", to_json(rep.value), show(rep.value));
    json checks = json::array();
    for (const auto &c : rep.checks) {
        checks.push_back({{"name", c.name}, {"pass", c.pass}});
        out.text.push_back("  " + c.name + ": " + (c.pass ? "pass" : "FAIL"));
    }
    out.payload["checks"] = checks;
    out.flag("pass", rep.pass());
    out.require(rep.pass());
}

json long_list(const std::vector<long> &v)
{
    json a = json::array();
    for (long x : v)
        a.push_back(x);
    return a;
}

std::string show_list(const std::vector<long> &v)
{
    std::string s = "{";
    for (std::size_t i = 0; i < v.size(); ++i)
        s += (i ? ", " : "") + std::to_string(v[i]);
    return s + "}";
}

void cmd_d3_check(const Args &a, Output &out)
{
    if (a.b_bound < 0)
        throw error(errc::bad_param, "--b-bound must be nonnegative");
    const auto opts = a.options();
    const auto rep = d3_integer_argument(-a.b_bound, a.b_bound, opts);
    const auto hits = d3_rational_search(a.max_height, opts);
    out.value("d3", to_json(rep.d3), format_poly(rep.d3, "a"));
    std::vector<long> residues(rep.square_residues_mod32.begin(), rep.square_residues_mod32.end());
    out.value("square_residues_mod32", long_list(residues), show_list(residues));
    out.flag("residues_force_one_mod8", rep.residues_force_one_mod8);
    out.value("exceptional_squares", long_list(rep.exceptional_squares), show_list(rep.exceptional_squares));
    out.value("b_bound", a.b_bound);
    out.value("sandwich_failures", long_list(rep.sandwich_failures), show_list(rep.sandwich_failures));
    out.value("max_height", a.max_height);
    json h = json::array();
    std::string shown;
    for (const auto &x : hits) {
        h.push_back(to_string(x));
        shown += (shown.empty() ? "" : ", ") + to_string(x);
    }
    out.value("rational_hits", h, "{" + shown + "}");
    const bool pass = rep.pass() && hits.empty();
    out.flag("pass", pass);
    out.require(pass);
}

void cmd_chebyshev(const Args &a, Output &out)
{
    if (a.degree < 0)
        throw error(errc::bad_param, "--degree must be nonnegative");
    const auto t = chebyshev_poly(a.degree);
    out.value("degree", a.degree);
    out.value("poly", to_json(t), format_poly(t, "z"));
    const bool identity = chebyshev_identity_holds(a.degree);
    out.flag("identity_holds", identity);
    out.require(identity);
    if (a.max_period > 0 && a.degree >= 2) {
        const auto rep = verify_integer_multipliers(t, a.max_period, a.options());
        json periods = json::array();
        for (std::size_t i = 0; i < rep.periods.size(); ++i) {
            periods.push_back({{"period", i + 1}, {"roots", to_json(rep.periods[i].roots)}});
            out.text.push_back("period " + std::to_string(i + 1) + " multipliers " + show_roots(rep.periods[i].roots));
        }
        out.payload["periods"] = periods;
        out.flag("integer_multipliers", rep.pass);
        out.require(rep.pass);
    }
}

void cmd_descent(const Args &a, Output &out)
{
    const auto rep = descent_search(a.bound, a.rational_bound, a.options());
    out.value("bound", static_cast<long>(rep.bound));
    out.value("eisenstein_solutions", static_cast<long>(rep.eisenstein_solutions));
    out.value("eisenstein_nonzero_z", static_cast<long>(rep.nonzero_z.size()));
    out.value("rational_bound", static_cast<long>(rep.rational_bound));
    out.value("rational_solutions", static_cast<long>(rep.rational_solutions));
    out.value("rational_nonzero_z", static_cast<long>(rep.rational_nonzero_z.size()));
    out.value("min_distance_norm", static_cast<long>(rep.min_distance_norm));
    out.flag("cube_distance_ok", rep.cube_distance_ok);
    out.flag("pass", rep.pass());
    out.require(rep.pass());
}

// Smallest-norm element of a class mod lambda^3.
std::string class_text(int index)
{
    std::optional<SmallEisenstein> best;
    for (std::int64_t a = -4; a <= 4; ++a)
        for (std::int64_t b = -4; b <= 4; ++b) {
            const SmallEisenstein x{a, b};
            if (class_mod_lambda3(x) == index && (!best || x.norm() < best->norm()))
                best = x;
        }
    return to_string(EisensteinInt{Integer(static_cast<long>(best->a)), Integer(static_cast<long>(best->b))});
}

void cmd_cube_residues(const Args &, Output &out)
{
    const auto rep = cube_residue_check();
    out.value("classes", rep.classes);
    json image = json::array();
    std::string shown;
    for (int i : rep.cube_image) {
        image.push_back(class_text(i));
        shown += (shown.empty() ? "" : ", ") + class_text(i);
    }
    out.value("cube_image", image, "{" + shown + "}");
    out.flag("image_is_plus_minus_one_zero", rep.image_is_plus_minus_one_zero);
    out.flag("refined_statement", rep.refined_statement);
    out.flag("pass", rep.pass());
    out.require(rep.pass());
}

void cmd_crosscheck(const Args &a, Output &out)
{
    check_period(a.period, "--period");
    const auto fam = family_of(a);
    const auto v = value_of(a, fam);
    NumericOptions nopts;
    nopts.match_tol = static_cast<long double>(a.tol);
    const auto rep = crosscheck_multiplier_poly(fam, {v.value, v.is_power}, a.period, nopts);
    describe_family(out, fam);
    out.value("parameter", v.symbol);
    out.value("value", to_json(v.value), show(v.value));
    out.value("period", a.period);
    out.value("cycles", rep.cycles);
    out.value("parabolic_adjustments", rep.parabolic_adjustments);
    out.value("max_deviation", sci(rep.max_deviation));
    out.value("max_residual", sci(rep.max_residual));
    json pairs = json::array();
    for (std::size_t i = 0; i < rep.numeric.size(); ++i) {
        pairs.push_back({{"numeric", complex_text(rep.numeric[i])}, {"exact", complex_text(rep.exact[i])}});
        out.text.push_back("  " + complex_text(rep.numeric[i]) + "  vs  " + complex_text(rep.exact[i]));
    }
    out.payload["pairs"] = pairs;
    out.flag("pass", rep.pass);
    out.require(rep.pass);
}

void cmd_verify_all(const Args &a, Output &out)
{
    VerifyOptions opts;
    opts.exact = a.options();
    opts.numeric.match_tol = static_cast<long double>(a.tol);
    if (a.criterion < 0 || a.criterion > criterion_count)
        throw error(errc::bad_param, "--criterion must be in 0.." + std::to_string(criterion_count));
    json crit = json::array();
    for (int id = 1; id <= criterion_count; ++id) {
        if (a.criterion != 0 && id != a.criterion)
            continue;
        const auto r = run_criterion(id, opts);
        json checks = json::array();
        for (const auto &c : r.checks)
            checks.push_back({{"name", c.name}, {"pass", c.pass}});
        json entry = {{"id", r.id}, {"title", r.title}, {"pass", r.pass()}, {"checks", checks}};
        if (a.timing)
            entry["seconds"] = r.seconds;
        crit.push_back(entry);
        std::string line = "criterion " + std::to_string(id) + ": " + (r.pass() ? "PASS" : "FAIL") + "  " + r.title;
        if (a.timing) {
            char buf[32];
            std::snprintf(buf, sizeof buf, " (%.2f s)", r.seconds);
            line += buf;
        }
        out.text.push_back(line);
        for (const auto &c : r.checks)
            if (!c.pass)
                out.text.push_back("    failed: " + c.name);
        if (!r.within_budget())
            out.text.push_back("    over the time budget");
        out.require(r.pass());
    }
    out.payload["criteria"] = crit;
}

void emit(const Args &a, const std::string &command, const Output &out, double millis)
{
    if (a.format == "json") {
        json doc = {{"schema", schema}, {"command", command}, {"status", status_name(out.status)}};
        doc["payload"] = out.payload;
        if (a.timing)
            doc["timing_ms"] = millis;
        std::cout << doc.dump(2) << "\n";
        return;
    }
    for (const auto &line : out.text)
        std::cout << line << "\n";
    std::cout << "status: " << status_name(out.status) << "\n";
    if (a.timing)
        std::cout << "timing_ms: " << millis << "\n";
}

void emit_error(const Args &a, const std::string &command, const std::string &code, const std::string &message)
{
    std::cerr << "dynatome " << command << ": " << message << "\n";
    if (a.format == "json") {
        json doc = {{"schema", schema},
                    {"command", command},
                    {"status", "error"},
                    {"payload", {{"code", code}, {"message", message}}}};
        std::cout << doc.dump(2) << "\n";
    }
}

} // namespace

int main(int argc, char **argv)
{
    Args args;
    CLI::App app{"Exact multiplier polynomials, discriminant factorizations and related checks"};
    app.require_subcommand(1);
    app.add_option("--format", args.format, "Output format")->check(CLI::IsMember({"json", "text"}));
    app.add_option("--threads", args.threads, "Worker threads; results do not depend on it")
        ->check(CLI::Range(1U, 256U));
    app.add_option("--trial-bound", args.trial_bound, "Trial-division bound for squarefree parts");
    app.add_option("--degree-cap", args.degree_cap, "Largest admissible d^n");
    app.add_flag("--timing", args.timing, "Report wall-clock timings");
    app.fallthrough();

    auto family_opts = [&](CLI::App *sub) {
        sub->add_option("--family", args.family, "unicritical (z^d + c) or symcubic (z^3 + a z)")
            ->check(CLI::IsMember({"unicritical", "symcubic"}));
        sub->add_option("--degree", args.degree, "Degree d of z^d + c");
    };
    auto value_opts = [&](CLI::App *sub) {
        sub->add_option("--c", args.c, "Parameter c of z^d + c (rational)");
        sub->add_option("--a", args.a, "Parameter a of z^3 + a z (rational)");
        sub->add_option("--u", args.u, "u = c^(d-1) for z^d + c (rational)");
    };

    struct Command {
        std::string name;
        std::function<void(const Args &, Output &)> run;
        CLI::App *sub;
    };
    std::vector<Command> commands;
    auto add = [&](const std::string &name, const std::string &help, std::function<void(const Args &, Output &)> fn) {
        CLI::App *sub = app.add_subcommand(name, help);
        commands.push_back({name, std::move(fn), sub});
        return sub;
    };

    auto *phi = add("phi", "Dynatomic polynomial Phi_n", cmd_phi);
    family_opts(phi);
    phi->add_option("--period", args.period, "Period n");
    auto *mult = add("mult", "Multiplier polynomial M_n", cmd_mult);
    family_opts(mult);
    mult->add_option("--period", args.period, "Period n");
    auto *delta = add("delta", "Discriminant Delta_n of M_n", cmd_delta);
    family_opts(delta);
    delta->add_option("--period", args.period, "Period n");
    auto *fd = add("factor-delta", "Delta_n = a Q_n R_n^2", cmd_factor_delta);
    family_opts(fd);
    fd->add_option("--period", args.period, "Period n");
    auto *pkl = add("pkl", "P_{k,l} = res(C_l, M_k)", cmd_pkl);
    family_opts(pkl);
    pkl->add_option("--k", args.k, "Period k")->check(CLI::Range(1L, 64L));
    pkl->add_option("--l", args.l, "Order l of the root of unity")->check(CLI::Range(2L, 1000L));
    auto *qn = add("qn", "Q_n", cmd_qn);
    family_opts(qn);
    qn->add_option("--period", args.period, "Period n");
    auto *cl = add("classify", "Rational and integer multipliers up to a period", cmd_classify);
    family_opts(cl);
    value_opts(cl);
    cl->add_option("--max-period", args.max_period, "Largest period N");
    auto *par = add("parametrization", "Check a rational parametrization", cmd_parametrization);
    par->add_option("--which", args.which, "quad-int-period12, quad-rat-period13 or cubic-rat-fixed")->required();
    par->add_option("--param", args.param, "m (integer) or r (rational)")->required();
    auto *d3 = add("d3-check", "Integer and rational arguments for D_3", cmd_d3_check);
    d3->add_option("--b-bound", args.b_bound, "Sandwich range |b| <= bound");
    d3->add_option("--max-height", args.max_height, "Height bound of the rational search")
        ->check(CLI::Range(1L, 1'000'000L));
    auto *ch = add("chebyshev", "Chebyshev polynomial T_d", cmd_chebyshev);
    ch->add_option("--degree", args.degree, "Degree d");
    ch->add_option("--max-period", args.max_period, "Also check integer multipliers up to this period (0: skip)");
    auto *de = add("descent", "Bounded searches for x^3 + u y^3 = 4 v z^3", cmd_descent);
    de->add_option("--bound", args.bound, "Coordinate bound over Z[j]")->check(CLI::Range(0L, 300L));
    de->add_option("--rational-bound", args.rational_bound, "Coordinate bound over Z")
        ->check(CLI::Range(0L, 1'000'000L));
    add("cube-residues", "Cubes modulo lambda^3 in Z[j]", cmd_cube_residues);
    auto *cc = add("crosscheck", "Numeric cycle multipliers against M_n", cmd_crosscheck);
    family_opts(cc);
    value_opts(cc);
    cc->add_option("--period", args.period, "Period n");
    cc->add_option("--tol", args.tol, "Largest admissible deviation");
    auto *vp = add("verify-paper", "Run the acceptance suite", cmd_verify_all);
    vp->add_option("--criterion", args.criterion, "Run one criterion (1..7); 0 runs all");
    vp->add_option("--tol", args.tol, "Largest admissible numeric deviation");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError &e) {
        const int rc = app.exit(e);
        return rc == 0 ? 0 : 1;
    }

    for (const auto &cmd : commands) {
        if (!cmd.sub->parsed())
            continue;
        // chebyshev skips the multiplier check unless --max-period is given.
        if (cmd.name == "chebyshev" && cmd.sub->count("--max-period") == 0)
            args.max_period = 0;
        Output out;
        const auto start = std::chrono::steady_clock::now();
        try {
            cmd.run(args, out);
        } catch (const error &e) {
            const std::string code(errc_name(e.code()));
            std::string message = e.what();
            if (message.rfind(code + ": ", 0) == 0)
                message.erase(0, code.size() + 2);
            emit_error(args, cmd.name, code, message);
            return 1;
        } catch (const std::exception &e) {
            emit_error(args, cmd.name, "internal", e.what());
            return 1;
        }
        const double millis =
            std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
        emit(args, cmd.name, out, millis);
        return exit_code(out.status);
    }
    return 1;
}
