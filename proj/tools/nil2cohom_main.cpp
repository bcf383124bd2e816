#include <chrono>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "nil2/cecomplex.hpp"
#include "nil2/partition.hpp"
#include "nil2/sympoly.hpp"
#include "nil2/transfer.hpp"

namespace {

constexpr const char* kVersion = "1.0";
constexpr int kDimGuard = 5;
constexpr int kArityGuard = 5;

using Clock = std::chrono::steady_clock;

struct Output {
    bool json = false;
    std::string out_file;
};

int finish(nil2::RunReport& r, const Output& o, Clock::time_point started) {
    r.version = kVersion;
    r.elapsed_ms = std::chrono::duration_cast<std::chrono::milliseconds>(Clock::now() - started).count();
    if (!o.out_file.empty()) {
        std::ofstream f(o.out_file);
        if (!f) {
            std::cerr << "cannot write " << o.out_file << "\n";
            return 2;
        }
        f << nil2::run_report_to_json(r);
    }
    std::cout << (o.json ? nil2::run_report_to_json(r) : nil2::run_report_human(r));
    return r.body.all_pass() ? 0 : 1;
}

int guard_dim(int dim_v, bool force) {
    int cap = force ? 6 : kDimGuard;
    if (dim_v < 1 || dim_v > cap) {
        std::cerr << "dim V must be in 1.." << cap
                  << (force ? "" : " (raise with --force)") << "\n";
        return 2;
    }
    return 0;
}

std::string gen_listing(const nil2::GenTable& g) {
    std::string s;
    for (int id = 0; id < g.count(); ++id) s += (id ? " " : "") + g.name(id);
    return s;
}

// render a monomial with its sign absorbed by transposing the first two
// factors, so class representatives print in tableau order without a minus
std::string negated_mono_str(const nil2::GenTable& g, nil2::Mono m) {
    std::vector<int> ids;
    for (int id = 0; id < g.count(); ++id)
        if (m >> id & 1) ids.push_back(id);
    if (ids.size() < 2) return "-" + nil2::mono_str(g, m);
    std::swap(ids[0], ids[1]);
    std::string s;
    for (std::size_t i = 0; i < ids.size(); ++i) s += (i ? "^" : "") + g.name(ids[i]);
    return s;
}

// the matching signed tableau monomial when the class is one, else the
// element itself
std::string class_representative(nil2::Complex& cx, const nil2::Element& x) {
    if (x.is_zero()) return "0";
    int p = nil2::element_degree(x);
    auto md = nil2::multidegree(cx.gens(), x.terms().begin()->first);
    for (nil2::Mono m : nil2::basis_block(cx.gens(), md)) {
        if (nil2::mono_degree(m) != p) continue;
        nil2::Element pm = cx.project(nil2::Element::monomial(m));
        if (pm == x) return nil2::mono_str(cx.gens(), m);
        if (pm == x * nil2::Rat(-1)) return negated_mono_str(cx.gens(), m);
    }
    return nil2::element_str(cx.gens(), x);
}

int run_homology(int dim_v, bool force, const Output& o) {
    auto started = Clock::now();
    if (int rc = guard_dim(dim_v, force)) return rc;
    nil2::RunReport r;
    r.command = "homology";
    r.params["dim_v"] = std::to_string(dim_v);
    nil2::Complex cx(dim_v);
    r.body = cx.jw_verify();
    return finish(r, o, started);
}

int run_littlewood(int vars, int max_deg, bool expand, const Output& o) {
    auto started = Clock::now();
    if (vars < 1 || max_deg < 1) {
        std::cerr << "need --vars >= 1 and --max-deg >= 1\n";
        return 2;
    }
    nil2::RunReport r;
    r.command = "littlewood";
    r.params["vars"] = std::to_string(vars);
    r.params["max_deg"] = std::to_string(max_deg);
    r.body = nil2::littlewood_verify(vars, max_deg);
    if (expand) {
        nil2::Table t;
        t.name = "expansions";
        t.columns = {"side", "polynomial"};
        t.rows.push_back({"product", nil2::littlewood_lhs(vars, max_deg).str()});
        t.rows.push_back({"diagram sum", nil2::littlewood_rhs(vars, max_deg).str()});
        r.body.tables.push_back(std::move(t));
    }
    return finish(r, o, started);
}

int run_transfer(int dim_v, const std::string& op, int arity, const std::string& args_text,
                 bool force, const Output& o) {
    auto started = Clock::now();
    if (int rc = guard_dim(dim_v, force)) return rc;
    nil2::Complex cx(dim_v);
    const nil2::GenTable& g = cx.gens();

    std::vector<nil2::Element> args;
    std::stringstream ss(args_text);
    std::string piece;
    while (std::getline(ss, piece, ',')) {
        try {
            // the written form names a class; projection picks its harmonic
            // representative (weight-1 generators are already harmonic)
            args.push_back(cx.project(nil2::parse_element(g, piece)));
        } catch (const std::exception& e) {
            std::cerr << "cannot parse '" << piece << "': " << e.what()
                      << "\nvalid generators: " << gen_listing(g) << "\n";
            return 2;
        }
    }
    if (op == "m2" && args.size() != 2) {
        std::cerr << "m2 takes 2 arguments\n";
        return 2;
    }
    if (op == "m3" && args.size() != 3) {
        std::cerr << "m3 takes 3 arguments\n";
        return 2;
    }
    if (op == "mn") {
        if (arity == 0) arity = (int)args.size();
        if (arity != (int)args.size()) {
            std::cerr << "--arity " << arity << " does not match " << args.size()
                      << " arguments\n";
            return 2;
        }
        int cap = force ? 8 : kArityGuard;
        if (arity < 2 || arity > cap) {
            std::cerr << "arity must be in 2.." << cap
                      << (force ? "" : " (raise with --force)") << "\n";
            return 2;
        }
    }

    nil2::Transfer tr(cx);
    nil2::Element result;
    if (op == "m2")
        result = tr.m2(args[0], args[1]);
    else if (op == "m3")
        result = tr.m3(args[0], args[1], args[2]);
    else
        result = tr.mn(args);

    nil2::RunReport r;
    r.command = "transfer";
    r.params["dim_v"] = std::to_string(dim_v);
    r.params["op"] = op;
    r.params["args"] = args_text;
    if (op == "mn") r.params["arity"] = std::to_string(arity);
    r.sign_variant = nil2::sign_variant_formula(tr.variant());

    nil2::Table t;
    t.name = "result";
    t.columns = {"field", "value"};
    bool zero = result.is_zero();
    t.rows.push_back({"value", nil2::element_str(g, result)});
    t.rows.push_back({"class", class_representative(cx, result)});
    t.rows.push_back({"degree", zero ? "-" : std::to_string(nil2::element_degree(result))});
    t.rows.push_back(
        {"weight", zero ? "-" : std::to_string(nil2::mono_weight(g, result.terms().begin()->first))});
    r.body.tables.push_back(std::move(t));
    return finish(r, o, started);
}

int run_verify(const std::string& suite, int dim_v, int max_deg, int up_to, int samples,
               std::uint64_t seed, bool force, const Output& o) {
    auto started = Clock::now();
    if (int rc = guard_dim(dim_v, force)) return rc;
    if (up_to < 2 || up_to > (force ? 8 : kArityGuard)) {
        std::cerr << "--up-to must be in 2.." << (force ? 8 : kArityGuard) << "\n";
        return 2;
    }
    nil2::RunReport r;
    r.command = "verify";
    r.params["suite"] = suite;
    r.params["dim_v"] = std::to_string(dim_v);

    if (suite == "hilbert") {
        r.params["max_deg"] = std::to_string(max_deg);
        r.body = nil2::hilbert_verify(dim_v, max_deg);
        return finish(r, o, started);
    }

    nil2::Complex cx(dim_v);
    if (suite == "retract") {
        r.body = cx.verify_retract();
    } else if (suite == "duality") {
        r.body = cx.duality_verify();
    } else {
        r.params["up_to"] = std::to_string(up_to);
        r.params["samples"] = std::to_string(samples);
        r.params["seed"] = std::to_string(seed);
        nil2::Transfer tr(cx);
        r.sign_variant = nil2::sign_variant_formula(tr.variant());
        if (suite == "stasheff")
            r.body = nil2::check_stasheff(tr, up_to, samples, seed);
        else if (suite == "cinfty")
            r.body = nil2::check_cinfty(tr, up_to, samples, seed);
        else
            r.body = nil2::generation_closure(tr);
    }
    return finish(r, o, started);
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{
        "exact cohomology of 2-nilpotent exterior models: Young diagram "
        "decomposition, homotopy transfer, identity suites"};
    app.require_subcommand(1);

    Output out;
    bool force = false;
    int dim_v = 3, vars = 2, max_deg = 10, arity = 0, up_to = 4, samples = 200;
    std::uint64_t seed = 2026;
    std::string op = "m2", args_text, suite;
    int rc = 0;

    auto add_common = [&](CLI::App* c) {
        c->add_flag("--json", out.json, "machine-readable output");
        c->add_option("--out", out.out_file, "also write JSON to this file");
        c->add_flag("--force", force, "override the cost guards");
    };

    auto* h = app.add_subcommand("homology", "dimensions per degree with diagram decomposition");
    h->add_option("--dim-v", dim_v, "dimension of the weight-1 generator space")->required();
    add_common(h);
    h->callback([&] { rc = run_homology(dim_v, force, out); });

    auto* l = app.add_subcommand("littlewood", "truncated diagram-sum identity");
    l->add_option("--vars", vars, "variable count")->required();
    l->add_option("--max-deg", max_deg, "truncation degree")->required();
    bool expand = false;
    l->add_flag("--expand", expand, "print both expansions");
    add_common(l);
    l->callback([&] { rc = run_littlewood(vars, max_deg, expand, out); });

    auto* t = app.add_subcommand("transfer", "evaluate a transferred operation");
    t->add_option("--dim-v", dim_v, "dimension of the weight-1 generator space")->required();
    t->add_option("--op", op, "m2, m3 or mn")->required()->check(CLI::IsMember({"m2", "m3", "mn"}));
    t->add_option("--arity", arity, "arity for mn (defaults to the argument count)");
    t->add_option("--args", args_text, "comma-separated class expressions, e.g. e1,e2,e{1,3}^e2")
        ->required();
    add_common(t);
    t->callback([&] { rc = run_transfer(dim_v, op, arity, args_text, force, out); });

    auto* v = app.add_subcommand("verify", "run an identity suite");
    v->add_option("--suite", suite, "retract, stasheff, cinfty, duality, hilbert or generation")
        ->required()
        ->check(CLI::IsMember({"retract", "stasheff", "cinfty", "duality", "hilbert", "generation"}));
    v->add_option("--dim-v", dim_v, "dimension of the weight-1 generator space")->required();
    v->add_option("--max-deg", max_deg, "truncation degree for hilbert");
    v->add_option("--up-to", up_to, "arity cap for stasheff/cinfty");
    v->add_option("--samples", samples, "mixed-degree sample count");
    v->add_option("--seed", seed, "sampling seed");
    add_common(v);
    v->callback([&] { rc = run_verify(suite, dim_v, max_deg, up_to, samples, seed, force, out); });

    CLI11_PARSE(app, argc, argv);
    return rc;
}
