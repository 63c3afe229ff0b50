// Command-line driver: every pipeline stage, JSON on stdout, diagnostics on
// stderr.  Coefficient lists are ascending (c0 first) everywhere.
#include <CLI11.hpp>

#include <cstdint>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "g3ss/json_io.hpp"

namespace {

using g3ss::json;

std::vector<std::int64_t> parse_int_list(const std::string& s) {
    std::vector<std::int64_t> out;
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, ',')) {
        if (item.empty()) continue;
        out.push_back(std::stoll(item));
    }
    return out;
}

// "--f" syntax: "c0,c1,..." over F_p; "[a,b],[c,d],..." over F_{p^k}, each
// bracket one ascending coefficient vector of length k.
std::vector<std::vector<std::int64_t>> parse_coeff_list(const std::string& s, unsigned k) {
    std::vector<std::vector<std::int64_t>> out;
    if (k == 1 && s.find('[') == std::string::npos) {
        for (std::int64_t v : parse_int_list(s)) out.push_back({v});
        return out;
    }
    std::size_t pos = 0;
    while ((pos = s.find('[', pos)) != std::string::npos) {
        std::size_t end = s.find(']', pos);
        if (end == std::string::npos)
            throw CLI::ValidationError("--f", "unbalanced '[' in coefficient list");
        out.push_back(parse_int_list(s.substr(pos + 1, end - pos - 1)));
        pos = end + 1;
    }
    if (out.empty()) throw CLI::ValidationError("--f", "empty coefficient list");
    return out;
}

struct CurveArgs {
    std::uint64_t p = 0;
    unsigned k = 1;
    std::string modulus;
    std::string f;
};

void add_curve_options(CLI::App* cmd, CurveArgs& a, bool need_f = true) {
    cmd->add_option("--p", a.p, "characteristic (odd prime)")->required();
    cmd->add_option("--k", a.k, "extension degree over F_p (default 1)");
    cmd->add_option("--modulus", a.modulus,
                    "ascending modulus coefficients for F_{p^k} (default: lex-smallest)");
    auto* f = cmd->add_option("--f", a.f,
                              "ascending coefficients of f; over F_{p^k} each one is a "
                              "bracketed vector, e.g. [0,1],[2,0],...");
    if (need_f) f->required();
}

g3ss::Curve build_curve(const CurveArgs& a) {
    g3ss::FieldCtxPtr ctx;
    if (!a.modulus.empty())
        ctx = g3ss::build_field(a.p, a.k, parse_int_list(a.modulus));
    else
        ctx = g3ss::build_field(a.p, a.k);
    std::vector<g3ss::FieldElement> coeffs;
    for (const auto& c : parse_coeff_list(a.f, a.k)) coeffs.push_back(ctx->element(c));
    return g3ss::Curve::make(ctx, g3ss::Poly(ctx, std::move(coeffs)));
}

int error_exit_code(g3ss::ErrorCode c) {
    switch (c) {
        case g3ss::ErrorCode::BudgetExceeded: return 3;
        case g3ss::ErrorCode::Internal: return 4;
        default: return 2;
    }
}

void emit(const json& j) { std::cout << j.dump() << "\n"; }

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{
        "Genus-3 hyperelliptic curves: Cartier-Manin matrices, zeta functions, and the "
        "non-transversality criterion.  All coefficient lists are ascending (c0 first)."};
    app.require_subcommand(1);

    CurveArgs curve_args;
    std::uint64_t prime = 0;
    std::uint64_t budget = 100'000'000;
    unsigned workers = 0;
    std::string family = "odd";
    std::string format = "json";

    auto* matrix = app.add_subcommand("matrix", "Cartier-Manin matrix and kernel data");
    add_curve_options(matrix, curve_args);

    auto* zeta = app.add_subcommand("zeta", "point counts, L-polynomial, Newton slopes");
    add_curve_options(zeta, curve_args);
    zeta->add_option("--budget", budget, "field-evaluation budget");
    zeta->add_option("--workers", workers, "counting threads (0 = all cores)");

    auto* classify = app.add_subcommand("classify", "the full non-transversality decision");
    add_curve_options(classify, curve_args);
    classify->add_option("--budget", budget, "field-evaluation budget");
    classify->add_option("--workers", workers, "counting threads (0 = all cores)");

    auto* touchpoint = app.add_subcommand("touchpoint", "touchpoint detection only");
    add_curve_options(touchpoint, curve_args);

    auto* cm = app.add_subcommand("cm", "verify the CM-family prediction at a prime");
    cm->add_option("--p", prime, "odd prime")->required();
    cm->add_option("--budget", budget, "field-evaluation budget");
    cm->add_option("--workers", workers, "counting threads (0 = all cores)");

    auto* search = app.add_subcommand("search", "enumerate a coefficient family over F_p");
    search->add_option("--p", prime, "odd prime")->required();
    search->add_option("--family", family, "odd | general")
        ->check(CLI::IsMember({"odd", "general"}));
    search->add_option("--budget", budget, "per-candidate field-evaluation budget");
    search->add_option("--workers", workers, "search threads (0 = all cores)");
    search->add_option("--format", format, "json | csv")->check(CLI::IsMember({"json", "csv"}));

    auto* table = app.add_subcommand("verify-table", "re-verify the published example table");
    table->add_option("--budget", budget, "field-evaluation budget");
    table->add_option("--workers", workers, "counting threads (0 = all cores)");

    auto* components = app.add_subcommand("components", "p^5 + p^2 + 1");
    components->add_option("--p", prime, "odd prime")->required();

    CLI11_PARSE(app, argc, argv);

    try {
        g3ss::CountOptions opts;
        opts.budget = budget;
        opts.workers = workers;
        if (matrix->parsed()) {
            emit(g3ss::to_json(g3ss::cartier_manin(build_curve(curve_args))));
        } else if (zeta->parsed()) {
            emit(g3ss::to_json(g3ss::zeta_data(build_curve(curve_args), opts)));
        } else if (classify->parsed()) {
            emit(g3ss::to_json(g3ss::classify(build_curve(curve_args), opts)));
        } else if (touchpoint->parsed()) {
            emit(g3ss::to_json(g3ss::find_touchpoint(build_curve(curve_args))));
        } else if (cm->parsed()) {
            emit(g3ss::to_json(g3ss::verify_cm_prediction(prime, opts)));
        } else if (search->parsed()) {
            g3ss::SearchSpec spec;
            spec.p = prime;
            spec.family = family == "odd" ? g3ss::Family::Odd : g3ss::Family::General;
            spec.budget = budget;
            g3ss::SearchResult res = g3ss::run_search(spec, workers);
            if (format == "csv") {
                for (const g3ss::Hit& h : res.hits) {
                    for (std::size_t i = 0; i < h.coeffs.size(); ++i)
                        std::cout << (i ? "," : "") << h.coeffs[i];
                    std::cout << "\n";
                }
                std::cerr << "tested=" << res.summary.tested
                          << " skipped=" << res.summary.skipped
                          << " hits=" << res.summary.hits << "\n";
            } else {
                for (const g3ss::Hit& h : res.hits) emit(g3ss::to_json(h));
                emit(g3ss::to_json(res.summary));
            }
        } else if (table->parsed()) {
            g3ss::TableReport rep = g3ss::verify_table(opts);
            emit(g3ss::to_json(rep));
            if (!rep.all_pass) return 1;
        } else if (components->parsed()) {
            emit(json{{"count", g3ss::pftq_component_count(prime)}});
        }
    } catch (const g3ss::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return error_exit_code(e.code());
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 0;
}
