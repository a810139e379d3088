#include "omnilie/cli.hpp"

#include "omnilie/calgebra.hpp"
#include "omnilie/courant.hpp"
#include "omnilie/dstruct.hpp"
#include "omnilie/liealg.hpp"
#include "omnilie/omni.hpp"

#include "CLI11.hpp"

#include <algorithm>
#include <chrono>
#include <functional>
#include <iomanip>
#include <ostream>
#include <sstream>

namespace omnilie::cli {

using io::json;

namespace {

struct CommandInfo {
    Command command;
    const char* name;
    const char* help;
};

constexpr CommandInfo kCommands[] = {
    {Command::omni_identity, "omni-identity", "jacobiator = (0, T) on seeded random triples"},
    {Command::lie_check, "lie-check", "Jacobi identity and graph D-structure verdict for structure constants"},
    {Command::dstruct_classify, "dstruct-classify", "isotropy, maximality and closure of a subspace of E_n"},
    {Command::dstruct_search, "dstruct-search", "search for D-structures of E_n"},
    {Command::calg_check, "calg-check", "C-algebra prerequisites and axioms 0-5"},
    {Command::courant_dirac, "courant-dirac", "Dirac structure check for a bivector, 2-form or foliation"},
    {Command::courant_axioms, "courant-axioms", "sampled C-algebra axioms for the Courant bracket"},
    {Command::linearize, "linearize", "linearization at the origin against the omni-Lie operations"},
};

const char* pass_fail(bool ok) { return ok ? "pass" : "fail"; }

std::string yes_no(bool b) { return b ? "yes" : "no"; }

json indices(std::initializer_list<std::size_t> idx)
{
    json out = json::array();
    for (auto i : idx) out.push_back(i + 1);
    return out;
}

json indices(std::span<const std::size_t> idx)
{
    json out = json::array();
    for (auto i : idx) out.push_back(i + 1);
    return out;
}

json request_json(const Request& req)
{
    const auto& o = req.options;
    json opts = {{"seed", o.seed},
                 {"trials", o.trials},
                 {"degree_bound", o.degree_bound},
                 {"budget", o.budget},
                 {"nvars", o.nvars},
                 {"strategy", o.strategy},
                 {"mutate_gradient", o.mutate_gradient},
                 {"uncorrected", o.uncorrected}};
    opts["n"] = o.n ? json(*o.n) : json(nullptr);
    opts["catalog"] = o.catalog ? json(*o.catalog) : json(nullptr);
    opts["omni"] = o.omni ? json(*o.omni) : json(nullptr);
    return {{"command", to_string(req.command)},
            {"input_path", req.input_path ? json(*req.input_path) : json(nullptr)},
            {"options", opts}};
}

std::vector<std::size_t> n_range(const Options& o, std::size_t lo, std::size_t hi)
{
    if (o.n) return {*o.n};
    std::vector<std::size_t> out;
    for (std::size_t n = lo; n <= hi; ++n) out.push_back(n);
    return out;
}

const std::string& need_input(const Request& req)
{
    if (!req.input_path) throw io::FormatError("an input file is required");
    return *req.input_path;
}

void run_omni_identity(const Request& req, Report& r)
{
    bool all = true;
    for (auto n : n_range(req.options, 1, 4)) {
        auto sweep = omni::anomaly_sweep(n, req.options.trials, req.options.seed);
        const bool ok = sweep.passed == sweep.trials;
        all = all && ok;
        r.checks.push_back({"anomaly.n=" + std::to_string(n),
                            std::to_string(sweep.passed) + "/" + std::to_string(sweep.trials)});
        if (sweep.first_failure && !r.witnesses.contains("anomaly")) {
            const auto& f = *sweep.first_failure;
            r.witnesses["anomaly"] = {{"n", n},
                                      {"trial", f.index},
                                      {"e1", io::to_json(f.e1)},
                                      {"e2", io::to_json(f.e2)},
                                      {"e3", io::to_json(f.e3)},
                                      {"jacobiator", io::to_json(f.jacobiator)},
                                      {"cartan", io::to_json(f.cartan)}};
        }
    }
    r.status = all ? Status::pass : Status::fail;
}

// Records the graph verdict of a classification into checks/witnesses.
void add_classification(const dstruct::Classification& c, const omni::OmniSubspace& f, Report& r,
                        const std::string& prefix)
{
    r.checks.push_back({prefix + "isotropic", yes_no(c.isotropic)});
    if (!c.isotropic) {
        const auto basis = f.basis();
        for (std::size_t i = 0; i < basis.size(); ++i)
            for (std::size_t j = i; j < basis.size(); ++j) {
                auto p = omni::omni_pairing(basis[i], basis[j]);
                if (!exactla::is_zero(p)) {
                    r.witnesses[prefix + "isotropy"] = {{"pair", indices({i, j})},
                                                       {"x", io::to_json(basis[i])},
                                                       {"y", io::to_json(basis[j])},
                                                       {"pairing", io::to_json(p)}};
                    i = basis.size();
                    break;
                }
            }
    }
    if (c.maximality) {
        r.checks.push_back({prefix + "maximal", std::string(dstruct::to_string(c.maximality->status))});
        if (c.maximality->witness) {
            const auto& w = *c.maximality->witness;
            json wj = {{"rational", io::to_json(w.rational)}, {"extension_dim", c.maximality->extension_dim}};
            if (w.surd) {
                wj["surd"] = io::to_json(*w.surd);
                wj["radicand"] = io::to_json(w.radicand);
            }
            r.witnesses[prefix + "null_vector"] = wj;
        }
    }
    r.checks.push_back({prefix + "closed", yes_no(c.closure.closed)});
    if (c.closure.failure) {
        const auto& fl = *c.closure.failure;
        r.witnesses[prefix + "closure"] = {{"pair", indices({fl.i, fl.j})},
                                          {"x", io::to_json(fl.x)},
                                          {"y", io::to_json(fl.y)},
                                          {"bracket", io::to_json(fl.bracket)}};
    }
    r.checks.push_back({prefix + "d_structure", yes_no(c.d_structure)});
    if (c.restricted_jacobi) r.checks.push_back({prefix + "restricted_jacobi", pass_fail(*c.restricted_jacobi)});
}

void run_lie_check(const Request& req, Report& r)
{
    liealg::BilinearOp b(1);
    if (req.options.catalog) {
        b = liealg::catalog(*req.options.catalog);
    } else {
        r.input = io::read_json_file(need_input(req));
        b = io::bilinear_from_json(r.input);
    }
    r.input = io::to_json(b);

    const bool skew = liealg::is_skew(b);
    r.checks.push_back({"skew", yes_no(skew)});
    if (!skew) {
        for (std::size_t i = 0; i < b.n(); ++i)
            for (std::size_t j = i; j < b.n(); ++j) {
                auto u = exactla::unit(b.n(), i), w = exactla::unit(b.n(), j);
                auto s = exactla::add(b.apply(u, w), b.apply(w, u));
                if (!exactla::is_zero(s)) {
                    r.witnesses["skew"] = {{"pair", indices({i, j})}, {"symmetric_part", io::to_json(s)}};
                    i = b.n();
                    break;
                }
            }
        r.checks.push_back({"is_lie", "no"});
        r.status = Status::fail;
        return;
    }
    bool lie = true;
    for (std::size_t i = 0; i < b.n() && lie; ++i)
        for (std::size_t j = i + 1; j < b.n() && lie; ++j)
            for (std::size_t k = j + 1; k < b.n() && lie; ++k) {
                auto d = liealg::jacobi_defect(b, i, j, k);
                if (!exactla::is_zero(d)) {
                    lie = false;
                    r.witnesses["jacobi_defect"] = {{"triple", indices({i, j, k})}, {"defect", io::to_json(d)}};
                }
            }
    r.checks.push_back({"is_lie", yes_no(lie)});

    const auto f = liealg::graph_subspace(b);
    const auto c = dstruct::classify(f, {req.options.seed});
    add_classification(c, f, r, "graph.");

    // The graph of a skew operation is a D-structure exactly when it is Lie.
    const bool consistent = c.d_structure == lie;
    r.checks.push_back({"graph.agrees_with_jacobi", pass_fail(consistent)});
    if (!lie || !consistent)
        r.status = Status::fail;
    else if (c.maximality && c.maximality->status == dstruct::Maximality::undetermined)
        r.status = Status::undetermined;
    else
        r.status = Status::pass;
}

void run_dstruct_classify(const Request& req, Report& r)
{
    r.input = io::read_json_file(need_input(req));
    const auto f = io::subspace_from_json(r.input);
    r.input = io::to_json(f);
    const auto c = dstruct::classify(f, {req.options.seed});
    add_classification(c, f, r, "");
    r.checks.push_back({"dim", std::to_string(f.dim())});
    if (c.d_structure)
        r.status = Status::pass;
    else if (c.isotropic && c.closure.closed && c.maximality &&
             c.maximality->status == dstruct::Maximality::undetermined)
        r.status = Status::undetermined;
    else
        r.status = Status::fail;
}

void run_dstruct_search(const Request& req, Report& r)
{
    if (!req.options.n) throw io::FormatError("dstruct-search requires --n");
    const auto strategy = dstruct::parse_strategy(req.options.strategy);
    if (!strategy) throw io::FormatError("unknown strategy '" + req.options.strategy + "'");
    const auto res = dstruct::search_d_structures(*req.options.n, *strategy, req.options.seed, req.options.budget);
    r.checks.push_back({"evaluated", std::to_string(res.evaluated)});
    r.checks.push_back({"d_structures", std::to_string(res.d_structures.size())});
    r.checks.push_back({"undetermined", std::to_string(res.undetermined.size())});
    r.checks.push_back({"budget_exhausted", yes_no(res.budget_exhausted)});
    json found = json::array(), undet = json::array();
    for (const auto& f : res.d_structures) found.push_back(io::to_json(f));
    for (const auto& f : res.undetermined) undet.push_back(io::to_json(f));
    r.witnesses["d_structures"] = found;
    if (!undet.empty()) r.witnesses["undetermined"] = undet;
    r.status = res.undetermined.empty() ? Status::pass : Status::undetermined;
}

void add_calg_report(const calgebra::Report& rep, Report& r, bool& ok)
{
    for (const auto& c : rep.checks) {
        r.checks.push_back({c.name, pass_fail(c.passed)});
        if (!c.passed) {
            ok = false;
            if (!r.witnesses.contains(c.name))
                r.witnesses[c.name] = {{"tuple", indices(c.witness)}, {"residual", io::to_json(c.residual)}};
        }
    }
}

void run_calg_check(const Request& req, Report& r)
{
    calgebra::CAlgebraInstance c;
    if (req.options.omni) {
        if (*req.options.omni == 0) throw io::FormatError("--omni must be >= 1");
        c = calgebra::build_omni_instance(*req.options.omni);
    } else {
        r.input = io::read_json_file(need_input(req));
        c = io::instance_from_json(r.input);
    }
    r.input = io::to_json(c);

    bool ok = true;
    add_calg_report(calgebra::validate_instance(c), r, ok);
    calgebra::AxiomOptions opts;
    if (req.options.mutate_gradient) {
        auto g = calgebra::gradient_matrix(c);
        if (!g) throw io::FormatError("--mutate-gradient needs a defined gradient");
        opts.forced_gradient = exactla::scale(Rat(2), *g);
    }
    add_calg_report(calgebra::check_axioms(c, opts), r, ok);
    if (auto g = calgebra::gradient_matrix(c)) r.witnesses["gradient"] = io::to_json(*g);
    r.status = ok ? Status::pass : Status::fail;
}

void run_courant_dirac(const Request& req, Report& r)
{
    r.input = io::read_json_file(need_input(req));
    const auto cand = io::candidate_from_json(r.input);
    r.input = io::to_json(cand);
    const auto d = courant::dirac_check(cand);
    r.checks.push_back({"kind", d.kind});
    r.checks.push_back({"rank", std::to_string(d.rank) + "/" + std::to_string(d.nvars)});
    r.checks.push_back({"isotropic", yes_no(d.isotropic)});
    r.checks.push_back({"closed", yes_no(d.closed)});
    if (d.form_closed) r.checks.push_back({"d_omega_zero", yes_no(*d.form_closed)});
    bool ok = d.passed;
    if (const auto* pi = std::get_if<courant::Bivector>(&cand)) {
        const auto s = courant::schouten_oracle(*pi);
        const bool agree = s.is_zero() == d.passed;
        r.checks.push_back({"schouten_zero", yes_no(s.is_zero())});
        r.checks.push_back({"schouten_agrees", pass_fail(agree)});
        ok = ok && agree;
        for (std::size_t t = 0; t < s.index.size(); ++t)
            if (!s.value[t].is_zero()) {
                const auto& ix = s.index[t];
                r.witnesses["schouten"] = {{"triple", indices({ix[0], ix[1], ix[2]})},
                                           {"jacobiator", io::to_json(s.value[t])}};
                break;
            }
    }
    r.checks.push_back({"dirac", pass_fail(d.passed)});
    if (d.failing_pair) r.witnesses["failing_pair"] = indices({(*d.failing_pair)[0], (*d.failing_pair)[1]});
    if (d.residual) r.witnesses["residual"] = io::to_json(*d.residual);
    r.witnesses["justification"] = d.justification;
    r.status = ok ? Status::pass : Status::fail;
}

void run_courant_axioms(const Request& req, Report& r)
{
    const auto& o = req.options;
    if (o.nvars == 0) throw io::FormatError("--nvars must be >= 1");
    const auto variant = o.uncorrected ? courant::BracketVariant::uncorrected : courant::BracketVariant::courant;
    const auto rep = courant::axioms_sample_check(o.nvars, o.degree_bound, o.trials, o.seed, variant);
    r.checks.push_back({"trials", std::to_string(rep.passed) + "/" + std::to_string(rep.trials)});
    for (const auto& a : rep.axioms) {
        const bool failed = rep.first_failure && rep.first_failure->axiom == a;
        r.checks.push_back({a, failed ? "fail" : (rep.first_failure ? "-" : "pass")});
    }
    if (rep.first_failure) {
        const auto& f = *rep.first_failure;
        json w = {{"trial", f.trial},
                  {"axiom", f.axiom},
                  {"s1", io::to_json(f.s1)},
                  {"s2", io::to_json(f.s2)},
                  {"s3", io::to_json(f.s3)},
                  {"f", io::to_json(f.f)},
                  {"g", io::to_json(f.g)}};
        if (f.residual) w["residual"] = io::to_json(*f.residual);
        if (f.residual_scalar) w["residual_scalar"] = io::to_json(*f.residual_scalar);
        r.witnesses["first_failure"] = w;
    }
    r.status = rep.passed == rep.trials ? Status::pass : Status::fail;
}

void run_linearize(const Request& req, Report& r)
{
    bool all = true;
    for (auto n : n_range(req.options, 1, 3)) {
        const std::size_t d = omni::flat_dim(n);
        std::size_t good = 0;
        for (std::size_t i = 0; i < d; ++i)
            for (std::size_t j = 0; j < d; ++j) {
                const auto e1 = omni::OmniElement::basis(n, i), e2 = omni::OmniElement::basis(n, j);
                const auto lr = courant::linearize_roundtrip(e1, e2);
                if (lr.ok()) {
                    ++good;
                } else if (!r.witnesses.contains("linearize")) {
                    r.witnesses["linearize"] = {{"n", n},
                                                {"pair", indices({i, j})},
                                                {"lhs", io::to_json(lr.lhs)},
                                                {"rhs", io::to_json(lr.rhs)},
                                                {"pairing", io::to_json(lr.pairing)},
                                                {"omni_pairing", io::to_json(lr.omni_pairing)}};
                }
            }
        all = all && good == d * d;
        r.checks.push_back({"linearize.n=" + std::to_string(n), std::to_string(good) + "/" + std::to_string(d * d)});
    }
    r.status = all ? Status::pass : Status::fail;
}

}  // namespace

std::string_view to_string(Command c)
{
    for (const auto& info : kCommands)
        if (info.command == c) return info.name;
    return "?";
}

std::string_view to_string(Status s)
{
    switch (s) {
    case Status::pass: return "pass";
    case Status::fail: return "fail";
    case Status::undetermined: return "undetermined";
    case Status::error: return "error";
    }
    return "?";
}

Request parse_request(const std::vector<std::string>& args)
{
    Request req;
    Options& o = req.options;
    std::string format = "human";
    std::size_t n = 0, omni_n = 0;
    std::string catalog, input;

    CLI::App app{"exact verifier for omni-Lie algebras, D-structures and Courant brackets", "omnilie-cli"};
    app.require_subcommand(1, 1);
    app.fallthrough();
    app.add_option("--format", format, "report format")->check(CLI::IsMember({"human", "machine"}));
    app.add_flag("--timing", o.timing, "include wall-clock time in the report");

    std::vector<std::pair<CLI::App*, Command>> subs;
    for (const auto& info : kCommands) subs.emplace_back(app.add_subcommand(info.name, info.help), info.command);
    auto sub = [&](Command c) {
        return std::find_if(subs.begin(), subs.end(), [c](const auto& p) { return p.second == c; })->first;
    };
    using C = Command;

    for (auto c : {C::lie_check, C::dstruct_classify, C::calg_check, C::courant_dirac})
        sub(c)->add_option("input", input, "input JSON file");
    for (auto c : {C::omni_identity, C::dstruct_search, C::linearize})
        sub(c)->add_option("--n", n, "dimension n")->check(CLI::Range(1, 64));
    for (auto c : {C::omni_identity, C::lie_check, C::dstruct_classify, C::dstruct_search, C::courant_axioms})
        sub(c)->add_option("--seed", o.seed, "RNG seed")->capture_default_str();
    for (auto c : {C::omni_identity, C::courant_axioms})
        sub(c)->add_option("--trials", o.trials, "number of random trials")->capture_default_str();
    sub(C::courant_axioms)->add_option("--degree-bound", o.degree_bound, "max polynomial degree")->capture_default_str();
    sub(C::courant_axioms)->add_option("--nvars", o.nvars, "number of variables")->capture_default_str();
    sub(C::courant_axioms)->add_flag("--uncorrected", o.uncorrected, "drop the -1/2 d(...) term");
    sub(C::dstruct_search)->add_option("--budget", o.budget, "max candidates classified")->capture_default_str();
    sub(C::dstruct_search)
        ->add_option("--strategy", o.strategy, "exhaustive | graph | greedy")
        ->check(CLI::IsMember({"exhaustive", "graph", "greedy"}))
        ->capture_default_str();
    sub(C::lie_check)->add_option("--catalog", catalog, "catalog algebra instead of a file");
    sub(C::calg_check)->add_option("--omni", omni_n, "use the omni instance E_n")->check(CLI::Range(1, 16));
    sub(C::calg_check)->add_flag("--mutate-gradient", o.mutate_gradient, "force D = 2 x gradient");

    std::vector<const char*> argv{"omnilie-cli"};
    for (const auto& a : args) argv.push_back(a.c_str());
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::CallForHelp&) {
        throw HelpRequested{app.help()};
    } catch (const CLI::CallForAllHelp&) {
        throw HelpRequested{app.help("", CLI::AppFormatMode::All)};
    } catch (const CLI::ParseError& e) {
        throw UsageError(e.what());
    }

    for (const auto& [s, c] : subs)
        if (s->parsed()) {
            req.command = c;
            auto given = [s](const char* name) {
                const auto* opt = s->get_option_no_throw(name);
                return opt != nullptr && opt->count() > 0;
            };
            if (given("--n")) o.n = n;
            if (given("--catalog")) o.catalog = catalog;
            if (given("--omni")) o.omni = omni_n;
        }
    o.format = format == "machine" ? Format::machine : Format::human;
    if (!input.empty()) req.input_path = input;

    const bool needs_file = req.command == C::dstruct_classify || req.command == C::courant_dirac ||
                            (req.command == C::lie_check && !o.catalog) ||
                            (req.command == C::calg_check && !o.omni);
    if (needs_file && !req.input_path) throw UsageError(std::string(to_string(req.command)) + ": input file required");
    if (req.input_path && ((req.command == C::lie_check && o.catalog) || (req.command == C::calg_check && o.omni)))
        throw UsageError(std::string(to_string(req.command)) + ": give either an input file or a built-in source");
    if (req.command == C::dstruct_search && !o.n) throw UsageError("dstruct-search: --n is required");
    if (req.command == C::dstruct_search && *o.n > 4 && o.strategy == "exhaustive")
        throw UsageError("dstruct-search: exhaustive strategy supports n <= 4");
    return req;
}

Report run(const Request& req)
{
    Report r;
    r.command = req.command;
    r.request = request_json(req);
    const auto start = std::chrono::steady_clock::now();
    try {
        switch (req.command) {
        case Command::omni_identity: run_omni_identity(req, r); break;
        case Command::lie_check: run_lie_check(req, r); break;
        case Command::dstruct_classify: run_dstruct_classify(req, r); break;
        case Command::dstruct_search: run_dstruct_search(req, r); break;
        case Command::calg_check: run_calg_check(req, r); break;
        case Command::courant_dirac: run_courant_dirac(req, r); break;
        case Command::courant_axioms: run_courant_axioms(req, r); break;
        case Command::linearize: run_linearize(req, r); break;
        }
    } catch (const std::exception& e) {
        // FormatError, DimensionError and invalid_argument all land here.
        r.status = Status::error;
        r.checks.clear();
        r.witnesses = {{"error", e.what()}};
    }
    if (req.options.timing)
        r.timing_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
    return r;
}

int exit_code(const Report& r)
{
    switch (r.status) {
    case Status::pass: return 0;
    case Status::fail: return 1;
    case Status::error: return 2;
    case Status::undetermined: return 3;
    }
    return 2;
}

std::string emit_report(const Report& r, Format format)
{
    if (format == Format::machine) {
        json checks = json::array();
        for (const auto& c : r.checks) checks.push_back({{"name", c.name}, {"result", c.result}});
        json out = {{"request", r.request},
                    {"input", r.input},
                    {"status", to_string(r.status)},
                    {"exit_code", exit_code(r)},
                    {"checks", checks},
                    {"witnesses", r.witnesses}};
        if (r.timing_ms) out["timing_ms"] = *r.timing_ms;
        return out.dump(2) + "\n";
    }
    std::ostringstream os;
    os << to_string(r.command);
    if (r.request.contains("input_path") && r.request["input_path"].is_string())
        os << " " << r.request["input_path"].get<std::string>();
    os << "\n";
    std::size_t width = 5;
    for (const auto& c : r.checks) width = std::max(width, c.name.size());
    for (const auto& c : r.checks) os << "  " << std::left << std::setw(static_cast<int>(width)) << c.name << "  " << c.result << "\n";
    os << "  " << std::left << std::setw(static_cast<int>(width)) << "status" << "  " << to_string(r.status) << "\n";
    if (r.timing_ms) os << "  " << std::setw(static_cast<int>(width)) << "time_ms" << "  " << *r.timing_ms << "\n";
    if (!r.witnesses.empty()) {
        os << "witnesses:\n";
        for (const auto& [k, v] : r.witnesses.items()) os << "  " << k << ": " << v.dump() << "\n";
    }
    return os.str();
}

int main_entry(const std::vector<std::string>& args, std::ostream& out, std::ostream& err)
{
    Request req;
    try {
        req = parse_request(args);
    } catch (const HelpRequested& h) {
        out << h.text;
        return 0;
    } catch (const UsageError& e) {
        err << "usage error: " << e.what() << "\n";
        return 2;
    }
    const auto report = run(req);
    out << emit_report(report, req.options.format);
    return exit_code(report);
}

}  // namespace omnilie::cli
