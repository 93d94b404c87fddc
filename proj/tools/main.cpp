#include "sf2/checks.hpp"
#include "sf2/report.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdio>
#include <functional>
#include <iostream>
#include <optional>

namespace {

using namespace sf2;
using nlohmann::json;

constexpr int kExitPass = 0;
constexpr int kExitCheckFailure = 1;
constexpr int kExitUsage = 2;
constexpr int kExitResource = 3;

constexpr std::uint64_t kSeed = 0x5f2c0de5ull;

struct Config {
    std::uint32_t max_degree = 12;
    std::uint32_t presentation_degree = 10;
    std::string format = "text";
    unsigned jobs = 1;
};

/// Lazily built shared tables; each command touches only what it needs.
struct Context {
    const Config& cfg;
    std::optional<OmegaTable> om;
    std::optional<PowerSumTable> ps;
    std::optional<StandardFormTable> sf;
    std::optional<SchurTable> st;
    std::optional<GradedFamily> fam;

    explicit Context(const Config& c) : cfg(c) {}

    const OmegaTable& omega() {
        if (!om) om.emplace(cfg.max_degree);
        return *om;
    }
    const PowerSumTable& power_sums() {
        if (!ps) ps.emplace(omega());
        return *ps;
    }
    const StandardFormTable& standard_form() {
        if (!sf) sf.emplace(power_sums());
        return *sf;
    }
    const SchurTable& schur() {
        if (!st) st.emplace(cfg.max_degree);
        return *st;
    }
    const GradedFamily& family() {
        if (!fam) fam.emplace(power_sums(), cfg.jobs);
        return *fam;
    }

    /// Parse and normalize into w-coordinates: p generators name ring
    /// elements and substitute straight in.
    Poly parse_element(const std::string& text) {
        return power_sums().from_mixed(parse_poly(text, cfg.max_degree));
    }
};

void print_result(const Config& cfg, const std::string& command, const std::string& input,
                  const std::string& result) {
    if (cfg.format == "json") {
        json j{{"schema", 1}, {"command", command}, {"input", input}, {"result", result}};
        std::cout << j.dump(2) << '\n';
    } else {
        std::cout << result << '\n';
    }
}

using CheckRunner = std::function<std::vector<CheckReport>(Context&)>;

std::vector<std::pair<std::string, CheckRunner>> check_registry() {
    auto one = [](CheckReport r) { return std::vector<CheckReport>{std::move(r)}; };
    return {
        {"involution", [=](Context& c) { return one(check_involution_soundness(c.omega())); }},
        {"formal-series", [=](Context& c) { return one(check_formal_series(c.omega())); }},
        {"thick-leibniz",
         [=](Context& c) { return one(check_thick_leibniz(c.omega(), 200, kSeed)); }},
        {"newton", [=](Context& c) { return one(check_newton_suite(c.power_sums())); }},
        {"q-equals-ri",
         [=](Context& c) { return one(check_Q_equals_RI(c.family(), 0, c.cfg.max_degree)); }},
        {"normality", [=](Context& c) { return one(check_normality(c.family())); }},
        {"norm-ring-map",
         [=](Context& c) { return one(check_norm_additive_mod_I(c.family(), 50, kSeed)); }},
        {"squares-in-ri",
         [=](Context& c) { return one(check_squares_in_RI(c.family(), 50, kSeed)); }},
        {"ses", [=](Context& c) { return one(check_ses_dims(c.family(), 0, c.cfg.max_degree)); }},
        {"preimage-1",
         [=](Context& c) {
             return one(check_preimage_lemma(c.family(), 1, 0, c.cfg.max_degree));
         }},
        {"preimage-2",
         [=](Context& c) {
             return one(check_preimage_lemma(c.family(), 2, 0, c.cfg.max_degree));
         }},
        {"kernel-omega0",
         [=](Context& c) { return one(check_kernel_omega0(c.family(), 0, c.cfg.max_degree)); }},
        {"transversality-1",
         [=](Context& c) {
             return one(check_transversality(1, c.family(), 0, c.cfg.max_degree));
         }},
        {"transversality-2",
         [=](Context& c) {
             return one(check_transversality(2, c.family(), 0, c.cfg.max_degree));
         }},
        {"conjecture-n3",
         [=](Context& c) {
             return one(check_transversality(3, c.family(), 0,
                                             std::min<std::uint32_t>(10, c.cfg.max_degree)));
         }},
        {"standard-form",
         [=](Context& c) { return one(check_standard_form_bijection(c.standard_form())); }},
        {"mixed-coordinates",
         [=](Context& c) { return one(check_mixed_coordinates(c.power_sums())); }},
        {"schur", [=](Context& c) { return one(check_schur_suite(c.schur(), c.power_sums())); }},
        {"exterior-si",
         [=](Context& c) { return one(check_exterior_SI(c.family(), 0, c.cfg.max_degree)); }},
        {"omega-basis",
         [=](Context& c) {
             std::vector<CheckReport> out;
             for (unsigned m = 0; m <= 2; ++m)
                 out.push_back(check_omega_basis(c.family(), m, 0, c.cfg.max_degree));
             return out;
         }},
        {"top-form",
         [=](Context&) {
             std::vector<CheckReport> out;
             for (unsigned m = 1; m <= 4; ++m) out.push_back(check_top_form_divisibility(m));
             return out;
         }},
        {"presentation",
         [=](Context& c) {
             Presentation pres(c.standard_form(), c.cfg.presentation_degree);
             return one(pres.verify(c.family()));
         }},
        {"dims-oracle", [=](Context& c) { return one(check_dims_oracle(c.family())); }},
    };
}

int run_verify(Context& ctx, const std::string& which) {
    auto registry = check_registry();
    std::vector<CheckReport> reports;
    bool found = false;
    for (auto& [name, runner] : registry) {
        if (which != "all" && which != name) continue;
        found = true;
        for (CheckReport& r : runner(ctx)) reports.push_back(std::move(r));
    }
    if (!found) {
        std::cerr << "error: unknown check '" << which << "'\n";
        return kExitUsage;
    }

    bool all_pass = true;
    for (const CheckReport& r : reports)
        if (!r.conjecture && !r.pass()) all_pass = false;

    if (ctx.cfg.format == "json") {
        json checks = json::array();
        for (const CheckReport& r : reports) checks.push_back(report_json(r));
        json j{{"schema", 1},
               {"config",
                {{"max_degree", ctx.cfg.max_degree},
                 {"presentation_degree", ctx.cfg.presentation_degree},
                 {"jobs", ctx.cfg.jobs}}},
               {"checks", std::move(checks)},
               {"pass", all_pass}};
        std::cout << j.dump(2) << '\n';
    } else {
        for (const CheckReport& r : reports) std::cout << report_text(r);
        std::cout << (all_pass ? "all checks passed" : "CHECK FAILURES PRESENT") << '\n';
    }
    return all_pass ? kExitPass : kExitCheckFailure;
}

int run_dims(Context& ctx, std::uint32_t bound) {
    const GradedFamily& fam = ctx.family();
    if (ctx.cfg.format == "json") {
        json rows = json::array();
        for (std::uint32_t d = 0; d <= bound; ++d) {
            rows.push_back(json{{"degree", d},
                                {"p", partition_count(d)},
                                {"dim_R", fam.basis(d).dim()},
                                {"dim_S", fam.S(d).dim()},
                                {"dim_I", fam.Ipow(1, d).dim()},
                                {"dim_S_mod_I", fam.S(d).dim() - fam.Ipow(1, d).dim()},
                                {"sc", count_self_conjugate(d)}});
        }
        std::cout << json{{"schema", 1}, {"rows", std::move(rows)}}.dump(2) << '\n';
    } else {
        std::printf("%4s %6s %6s %6s %6s %8s %4s\n", "d", "p(d)", "dimR", "dimS", "dimI",
                    "dim(S/I)", "sc");
        for (std::uint32_t d = 0; d <= bound; ++d)
            std::printf("%4u %6u %6zu %6zu %6zu %8zu %4u\n", d, partition_count(d),
                        fam.basis(d).dim(), fam.S(d).dim(), fam.Ipow(1, d).dim(),
                        fam.S(d).dim() - fam.Ipow(1, d).dim(), count_self_conjugate(d));
    }
    return kExitPass;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Symmetric polynomials over GF(2): the omega involution, its invariant "
                 "ring, and a degreewise verification suite"};
    app.require_subcommand(1);

    Config cfg;
    app.add_option("--max-degree", cfg.max_degree, "Truncation degree N (default 12)")
        ->check(CLI::Range(1u, 20u));
    CLI::Option* pres_opt =
        app.add_option("--presentation-degree", cfg.presentation_degree,
                       "Degree budget for the presentation check (default min(10, N))");
    app.add_option("--format", cfg.format, "Output format: text or json")
        ->check(CLI::IsMember({"text", "json"}));
    app.add_option("--jobs", cfg.jobs, "Worker threads for degreewise builds")
        ->check(CLI::Range(1u, 64u));

    std::string expr, schur_expr, check_name = "all";
    std::uint32_t mn_k = 1;
    std::optional<std::uint32_t> dims_bound;

    CLI::App* cmd_omega = app.add_subcommand("omega", "Apply the omega involution");
    cmd_omega->add_option("expr", expr, "polynomial")->required();
    CLI::App* cmd_dd = app.add_subcommand("dd", "Apply d(x) = x + omega(x)");
    cmd_dd->add_option("expr", expr, "polynomial")->required();
    CLI::App* cmd_norm = app.add_subcommand("norm", "Apply N(x) = x * omega(x)");
    cmd_norm->add_option("expr", expr, "polynomial")->required();
    CLI::App* cmd_sf = app.add_subcommand("standard-form", "Decompose into the standard form");
    cmd_sf->add_option("expr", expr, "polynomial")->required();
    CLI::App* cmd_tos = app.add_subcommand("to-schur", "Expand in the Schur basis");
    cmd_tos->add_option("expr", expr, "polynomial")->required();
    CLI::App* cmd_froms = app.add_subcommand("from-schur", "Expand a Schur combination in w's");
    cmd_froms->add_option("expr", schur_expr, "schur expression")->required();
    CLI::App* cmd_mn = app.add_subcommand("mn", "Murnaghan-Nakayama product p_k * expr");
    cmd_mn->add_option("k", mn_k, "power sum index")->required()->check(CLI::Range(1u, 20u));
    cmd_mn->add_option("expr", schur_expr, "schur expression")->required();
    CLI::App* cmd_dims = app.add_subcommand("dims", "Graded dimension table");
    cmd_dims->add_option("bound", dims_bound, "degree bound (default max degree)");
    CLI::App* cmd_verify = app.add_subcommand("verify", "Run verification checks");
    cmd_verify->add_option("check", check_name, "check name or 'all'");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e);  // --help and friends
        app.exit(e);
        return kExitUsage;
    }

    if (pres_opt->count() == 0)
        cfg.presentation_degree = std::min(cfg.presentation_degree, cfg.max_degree);
    if (cfg.presentation_degree > cfg.max_degree) {
        std::cerr << "error: presentation degree must not exceed max degree\n";
        return kExitUsage;
    }

    Context ctx(cfg);
    try {
        if (cmd_omega->parsed() || cmd_dd->parsed() || cmd_norm->parsed()) {
            Poly x = ctx.parse_element(expr);
            const OmegaTable& om = ctx.omega();
            Poly result = cmd_omega->parsed() ? om.omega(x)
                          : cmd_dd->parsed()  ? om.dd(x)
                                              : om.norm(x);
            print_result(cfg, app.get_subcommands().front()->get_name(), expr,
                         result.to_string());
        } else if (cmd_sf->parsed()) {
            print_result(cfg, "standard-form", expr,
                         ctx.standard_form().decompose(ctx.parse_element(expr)).to_string());
        } else if (cmd_tos->parsed()) {
            print_result(cfg, "to-schur", expr,
                         ctx.schur().to_schur(ctx.parse_element(expr)).to_string());
        } else if (cmd_froms->parsed()) {
            SchurExpr e = parse_schur(schur_expr, cfg.max_degree);
            print_result(cfg, "from-schur", schur_expr, ctx.schur().from_schur(e).to_string());
        } else if (cmd_mn->parsed()) {
            SchurExpr e = parse_schur(schur_expr, cfg.max_degree);
            print_result(cfg, "mn", schur_expr, mn_multiply(mn_k, e).to_string());
        } else if (cmd_dims->parsed()) {
            std::uint32_t bound = dims_bound.value_or(cfg.max_degree);
            if (bound > cfg.max_degree) {
                std::cerr << "error: bound exceeds max degree\n";
                return kExitUsage;
            }
            return run_dims(ctx, bound);
        } else if (cmd_verify->parsed()) {
            return run_verify(ctx, check_name);
        }
    } catch (const ParseError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const DegreeError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitResource;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitUsage;
    }
    return kExitPass;
}
