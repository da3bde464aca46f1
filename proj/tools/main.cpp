#include <CLI11.hpp>

#include <cstdint>
#include <iostream>
#include <optional>
#include <string>

#include "digest.hpp"
#include "json_io.hpp"
#include "supermorph/bivector.hpp"
#include "supermorph/connection.hpp"
#include "supermorph/morphism.hpp"
#include "supermorph/sampling.hpp"
#include "supermorph/strata.hpp"

// Exit codes: 0 = success, 1 = a checked mathematical condition failed,
// 2 = input error. Reports are byte-deterministic: same inputs, same flags,
// same seed, same stdout.

namespace {

using supermorph::io::json;
namespace io = supermorph::io;
using namespace supermorph;

constexpr int kOk = 0;
constexpr int kConditionFailed = 1;
constexpr int kInputError = 2;

int emit(const std::string& command, const json& canonical_input, const std::string& verdict,
         json details, int code) {
    json report;
    report["command"] = command;
    report["input_digest"] = io::content_digest(io::canonical_dump(canonical_input));
    report["verdict"] = verdict;
    report["details"] = std::move(details);
    std::cout << io::canonical_dump(report);
    return code;
}

json wedge_pattern_json(const OddVectorSystem& s) {
    json out = json::array();
    for (const auto& [ij, bv] : wedge_matrix(s)) {
        out.push_back({{"i", ij.first + 1}, {"j", ij.second + 1}, {"zero", bv.is_zero()}});
    }
    return out;
}

int run_verify(const std::string& spec_path, unsigned degree_bound, std::optional<int> k_override) {
    json spec = io::load_json_file(spec_path);
    if (k_override) {
        if (*k_override <= 0) throw ParseError("--k must be positive");
        spec["k"] = *k_override;
    }
    const PullbackData d = io::morphism_from_json(spec);
    const json canonical = io::morphism_to_json(d);

    const ViolationReport report = check_homomorphism(d, degree_bound);
    json details;
    details["k"] = d.k;
    details["n"] = d.n;
    details["degree_bound"] = degree_bound;
    details["violation_count"] = report.violations.size();
    details["violations"] = io::violations_to_json(report);
    if (d.k == 2) {
        const ValidityCertificate cert = is_valid_morphism(d);
        details["certificate"] = {{"valid", cert.valid()},
                                  {"psis_dependent", cert.psis_dependent},
                                  {"even_operators_zero", cert.even_ops_zero}};
    }
    const bool ok = report.empty();
    return emit("verify", canonical, ok ? "homomorphism" : "violations", std::move(details),
                ok ? kOk : kConditionFailed);
}

int run_param(const std::string& path, const std::string& direction) {
    json input = io::load_json_file(path);
    if (direction == "forward") {
        const PullbackData d = io::morphism_from_json(input);
        const json canonical = io::morphism_to_json(d);
        try {
            const ClassifyingPoint c = to_classifying_point(d);
            return emit("param", canonical, "ok",
                        json{{"direction", "forward"},
                             {"classifying_point", io::classifying_point_to_json(c)}},
                        kOk);
        } catch (const ConstraintViolationError& e) {
            return emit("param", canonical, "constraint-violation",
                        json{{"direction", "forward"}, {"reason", e.what()}}, kConditionFailed);
        }
    }
    // inverse: input is a classifying point
    ClassifyingPoint c = io::classifying_point_from_json(input);
    const json canonical = io::classifying_point_to_json(c);
    try {
        const PullbackData d = from_classifying_point(c);
        return emit("param", canonical, "ok",
                    json{{"direction", "inverse"}, {"morphism", io::morphism_to_json(d)}}, kOk);
    } catch (const ConstraintViolationError& e) {
        return emit("param", canonical, "constraint-violation",
                    json{{"direction", "inverse"}, {"reason", e.what()}}, kConditionFailed);
    }
}

int run_classify(const std::string& spec_path) {
    const json spec = io::load_json_file(spec_path);
    const PullbackData d = io::morphism_from_json(spec);
    const json canonical = io::morphism_to_json(d);

    const OddVectorSystem s{static_cast<std::size_t>(d.k), d.n, d.odd_vectors};
    const StratumReport rep = make_stratum_report(s);
    json details;
    details["r"] = rep.r;
    details["wedge_matrix"] = wedge_pattern_json(s);
    details["stratum"] = io::stratum_report_to_json(rep);
    const auto label = physics_label(s.k, rep.r);
    details["physics_label"] = label ? json(*label) : json(nullptr);
    return emit("classify", canonical, "classified", std::move(details), kOk);
}

int run_fiber(std::size_t n, std::size_t samples, std::uint64_t seed) {
    if (samples < 1) throw ParseError("--samples must be at least 1");
    const json canonical = {{"n", n}, {"samples", samples}, {"seed", seed}};
    const ReducedDimension red = reduced_dimension(n);
    if (n == 1) {
        json details;
        details["n"] = n;
        details["degenerate"] = true;
        details["note"] = "all tangent pairs on a line are dependent; the fiber is the full plane";
        details["fiber_dimension"] = 2;
        details["reduced_dimension"] = red.value;
        return emit("fiber", canonical, "degenerate", std::move(details), kOk);
    }

    Rng rng(seed);
    const std::size_t expected = n + 1;
    json failures = json::array();
    auto sample_component = [&](FiberComponent which, const char* name) {
        for (std::size_t i = 0; i < samples; ++i) {
            const FiberPoint p = sample_fiber_point(n, which, rng);
            const std::size_t dim = local_fiber_dimension(p);
            if (dim != expected) {
                failures.push_back({{"component", name},
                                    {"psi1", io::vec_to_json(p.psi1)},
                                    {"psi2", io::vec_to_json(p.psi2)},
                                    {"dimension", dim}});
            }
        }
    };
    sample_component(FiberComponent::A, "A");
    sample_component(FiberComponent::B, "B");

    json details;
    details["n"] = n;
    details["samples_per_component"] = samples;
    details["seed"] = seed;
    details["expected_dimension"] = expected;
    details["failures"] = failures;
    details["reduced_dimension"] = red.value;
    const bool ok = failures.empty();
    return emit("fiber", canonical, ok ? "confirmed" : "dimension-mismatch", std::move(details),
                ok ? kOk : kConditionFailed);
}

int run_diagram(const std::string& spec_path, const std::string& connection_path,
                unsigned degree_bound) {
    const PullbackData d = io::morphism_from_json(io::load_json_file(spec_path));
    const ConnectionData c = io::connection_from_json(io::load_json_file(connection_path));
    const json canonical = {{"morphism", io::morphism_to_json(d)},
                            {"connection", io::connection_to_json(c)}};

    const ValidityCertificate cert = is_valid_morphism(d);
    if (!cert.valid()) {
        return emit("diagram", canonical, "invalid-morphism",
                    json{{"reason", cert.describe_failure()}}, kConditionFailed);
    }

    const DiagramCheck check = check_diagram(c, d, degree_bound);
    const ExtendedPoint lhs = connection_normal_form(c, d);
    const ExtendedPoint rhs = embed_classifying_point(c, to_classifying_point(d));
    json evaluations = json::array();
    for (const Monomial& m : monomials_up_to(d.n, degree_bound)) {
        const Polynomial f = Polynomial::monomial(m, 1);
        evaluations.push_back({{"exponents", m.exponents()},
                               {"normal_form", io::rational_to_json(lhs.f_op.apply(f, d.base_point))},
                               {"embedding", io::rational_to_json(rhs.f_op.apply(f, d.base_point))}});
    }
    json details;
    details["degree_bound"] = degree_bound;
    details["points_match"] = check.points_match;
    details["f_applied"] = evaluations;
    details["mismatch_count"] = check.mismatches.size();
    return emit("diagram", canonical, check.commutes ? "commutes" : "mismatch", std::move(details),
                check.commutes ? kOk : kConditionFailed);
}

int run_strata_dim(std::size_t k, std::size_t n, std::size_t r, std::size_t samples,
                   std::optional<std::uint64_t> seed) {
    const unsigned oracle = stratum_dimension_oracle(k, n, r);
    json canonical;
    canonical["k"] = k;
    canonical["n"] = n;
    canonical["r"] = r;
    json details;
    details["k"] = k;
    details["n"] = n;
    details["r"] = r;
    details["oracle_dimension"] = oracle;

    if (r == std::min(k, n)) {
        details["jacobian_dimension"] = nullptr;
        details["note"] = "open stratum: no minors to linearize, oracle value only";
        return emit("strata-dim", canonical, "oracle-only", std::move(details), kOk);
    }
    if (!seed) throw ParseError("--seed is required when r < min(k, n) (sampling occurs)");
    canonical["samples"] = samples;
    canonical["seed"] = *seed;
    details["samples"] = samples;
    details["seed"] = *seed;
    try {
        const unsigned jac = jacobian_dimension_estimate(k, n, r, samples, *seed);
        details["jacobian_dimension"] = jac;
        const bool agree = jac == oracle;
        return emit("strata-dim", canonical, agree ? "agree" : "disagree", std::move(details),
                    agree ? kOk : kConditionFailed);
    } catch (const InconsistencyError& e) {
        details["error"] = e.what();
        return emit("strata-dim", canonical, "inconsistent", std::move(details), kConditionFailed);
    }
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact pullback algebra of morphisms R^{0|k} -> R^n: verification, "
                 "parameterization, fiber geometry, rank strata"};
    app.require_subcommand(1);

    std::string spec_path;
    std::string connection_path;
    std::string direction = "forward";
    unsigned degree_bound = 2;
    std::optional<int> k_override;
    std::size_t n = 0;
    std::size_t k = 0;
    std::size_t r = 0;
    std::size_t samples = 100;
    std::optional<std::uint64_t> seed;

    CLI::App* verify = app.add_subcommand("verify", "check the product condition by brute force");
    verify->add_option("spec", spec_path, "morphism spec JSON")->required();
    verify->add_option("--degree-bound", degree_bound, "monomial degree bound (default 2)");
    verify->add_option("--k", k_override, "override the spec's generator count");

    CLI::App* param = app.add_subcommand("param", "map between morphism specs and classifying points");
    param->add_option("spec", spec_path, "input JSON")->required();
    param->add_option("--direction", direction, "forward | inverse")
        ->check(CLI::IsMember({"forward", "inverse"}));

    CLI::App* classify = app.add_subcommand("classify", "rank stratum of the odd vector system");
    classify->add_option("spec", spec_path, "morphism spec JSON")->required();

    CLI::App* fiber = app.add_subcommand("fiber", "sampled fiber dimensions and the reduced dimension");
    fiber->add_option("--n", n, "ambient dimension")->required();
    fiber->add_option("--samples", samples, "samples per component (default 100)");
    fiber->add_option("--seed", seed, "sampling seed (required)")->required();

    CLI::App* diagram = app.add_subcommand("diagram", "compare the two routes into the extended space");
    diagram->add_option("spec", spec_path, "morphism spec JSON")->required();
    diagram->add_option("connection", connection_path, "connection JSON")->required();
    diagram->add_option("--degree-bound", degree_bound, "monomial degree bound (default 2)");

    CLI::App* strata_dim = app.add_subcommand("strata-dim", "stratum dimension: formula vs Jacobian");
    strata_dim->add_option("--k", k, "number of odd vectors")->required();
    strata_dim->add_option("--n", n, "ambient dimension")->required();
    strata_dim->add_option("--r", r, "stratum rank")->required();
    strata_dim->add_option("--samples", samples, "sample count (default 100)");
    strata_dim->add_option("--seed", seed, "sampling seed");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        std::cerr << e.what() << "\n";
        return kInputError;
    }

    try {
        if (verify->parsed()) return run_verify(spec_path, degree_bound, k_override);
        if (param->parsed()) return run_param(spec_path, direction);
        if (classify->parsed()) return run_classify(spec_path);
        if (fiber->parsed()) return run_fiber(n, samples, *seed);
        if (diagram->parsed()) return run_diagram(spec_path, connection_path, degree_bound);
        if (strata_dim->parsed()) return run_strata_dim(k, n, r, samples, seed);
    } catch (const ParseError& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return kInputError;
    } catch (const Error& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return kInputError;
    } catch (const std::exception& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return kInputError;
    }
    return kInputError;
}
