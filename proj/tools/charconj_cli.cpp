#include <functional>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "charconj/conjecture.hpp"
#include "charconj/series.hpp"

namespace {

using namespace charconj;

void print_poly(const MultiPoly& f, const std::string& format) {
    if (format == "json")
        std::cout << f.to_json().dump(2) << '\n';
    else
        std::cout << f.to_string() << '\n';
}

// Byte-identical output across runs and worker counts: wall time is zeroed
// unless explicitly requested.
int print_report(VerificationReport r, const std::string& format, bool timing) {
    if (!timing) r.elapsed_ms = 0.0;
    if (format == "json") {
        std::cout << r.to_json().dump(2) << '\n';
    } else {
        std::cout << r.summary() << '\n';
        for (const auto& mm : r.mismatches)
            std::cout << "COUNTEREXAMPLE " << mm.inputs.dump() << " lhs=" << mm.lhs << " rhs=" << mm.rhs
                      << '\n';
    }
    return r.pass() ? 0 : 2;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact symmetric-group character values, colored-permutation polynomials, and "
                 "verification campaigns"};
    app.require_subcommand(1);
    std::function<int()> run;

    std::string lambda_text, nu_text, mu_text, identity;
    std::string poly_format = "text", verify_format = "json";
    int m = 1, k = 1, kmax = 0, mmax = 0, dim = 0, nmax = -1, fmax = -1, merge_i = 0, threads = 1;
    bool signed_form = false, timing = false;

    auto* cmd_char = app.add_subcommand("char", "Irreducible character value chi^lambda(nu)");
    cmd_char->add_option("--lambda", lambda_text, "partition, e.g. 2,2")->required();
    cmd_char->add_option("--nu", nu_text, "partition of the same size")->required();
    cmd_char->callback([&] {
        run = [&] {
            std::cout << mn_character(Partition::parse(lambda_text), Partition::parse(nu_text)).str() << '\n';
            return 0;
        };
    });

    auto* cmd_fhat = app.add_subcommand("fhat", "Normalized character (n)_k chi^lambda(mu,1^(n-k)) / f^lambda");
    cmd_fhat->add_option("--lambda", lambda_text, "partition of n")->required();
    cmd_fhat->add_option("--mu", mu_text, "partition of k <= n")->required();
    cmd_fhat->callback([&] {
        run = [&] {
            std::cout << normalized_character(Partition::parse(lambda_text), Partition::parse(mu_text)).str()
                      << '\n';
            return 0;
        };
    });

    auto* cmd_gpoly = app.add_subcommand("gpoly", "Colored-pair polynomial G_mu, or its signed form");
    cmd_gpoly->add_option("--mu", mu_text, "partition")->required();
    cmd_gpoly->add_option("--m", m, "number of colors")->required()->check(CLI::PositiveNumber);
    cmd_gpoly->add_flag("--signed", signed_form, "apply the (-1)^k, q -> -q transform");
    cmd_gpoly->add_option("--format", poly_format, "text | json")->check(CLI::IsMember({"text", "json"}));
    cmd_gpoly->callback([&] {
        run = [&] {
            const Partition mu = Partition::parse(mu_text);
            print_poly(signed_form ? conjectured_F(mu, m) : g_mu(mu, m), poly_format);
            return 0;
        };
    });

    auto* cmd_fk = app.add_subcommand("fk", "F_k by coefficient extraction from the rational series");
    cmd_fk->add_option("--k", k, "cycle length")->required()->check(CLI::PositiveNumber);
    cmd_fk->add_option("--m", m, "number of rectangles")->required()->check(CLI::PositiveNumber);
    cmd_fk->add_option("--format", poly_format, "text | json")->check(CLI::IsMember({"text", "json"}));
    cmd_fk->callback([&] {
        run = [&] {
            print_poly(formula9_Fk(k, m), poly_format);
            return 0;
        };
    });

    auto* cmd_interp = app.add_subcommand("interp", "F_mu reconstructed by exact Newton interpolation");
    cmd_interp->add_option("--mu", mu_text, "partition")->required();
    cmd_interp->add_option("--m", m, "number of rectangles")->required()->check(CLI::PositiveNumber);
    cmd_interp->add_option("--format", poly_format, "text | json")->check(CLI::IsMember({"text", "json"}));
    cmd_interp->callback([&] {
        run = [&] {
            print_poly(interpolate_F(Partition::parse(mu_text), m), poly_format);
            return 0;
        };
    });

    auto* cmd_verify = app.add_subcommand("verify", "Run a verification campaign; exit 2 on any mismatch");
    cmd_verify->add_option("identity", identity, "theorem1 | conjecture | prop1 | reduction | formula9 | oracles")
        ->required()
        ->check(CLI::IsMember({"theorem1", "conjecture", "prop1", "reduction", "formula9", "oracles"}));
    cmd_verify->add_option("--kmax", kmax, "largest |mu|");
    cmd_verify->add_option("--mmax", mmax, "largest number of rectangles");
    cmd_verify->add_option("--m", m, "number of rectangles (conjecture, single reduction)");
    cmd_verify->add_option("--dim", dim, "largest rectangle side on the shape grid");
    cmd_verify->add_option("--nmax", nmax, "largest n for orthogonality (oracles)");
    cmd_verify->add_option("--fmax", fmax, "largest n for tableau-count cross-checks (oracles)");
    cmd_verify->add_option("--mu", mu_text, "single partition (reduction)");
    cmd_verify->add_option("--i", merge_i, "merge index (reduction with --mu)");
    cmd_verify->add_option("--threads", threads, "worker count; CHARCONJ_THREADS overrides")
        ->check(CLI::PositiveNumber);
    cmd_verify->add_option("--format", verify_format, "text | json")->check(CLI::IsMember({"text", "json"}));
    cmd_verify->add_flag("--timing", timing, "include wall time in the report");
    cmd_verify->callback([&] {
        run = [&] {
            const int workers = effective_threads(threads);
            VerificationReport report;
            if (identity == "theorem1")
                report = verify_theorem1(kmax > 0 ? kmax : 4, dim > 0 ? dim : 4, workers);
            else if (identity == "conjecture")
                report = verify_conjecture(kmax > 0 ? kmax : 3, m > 1 ? m : 2, dim > 0 ? dim : 3, workers);
            else if (identity == "prop1")
                report = verify_prop1_specialization(kmax > 0 ? kmax : 3, mmax > 0 ? mmax : 3);
            else if (identity == "reduction")
                report = mu_text.empty()
                             ? verify_reduction_range(kmax > 0 ? kmax : 4, mmax > 0 ? mmax : 3)
                             : verify_reduction(Partition::parse(mu_text), m, merge_i);
            else if (identity == "formula9")
                report = verify_formula9(kmax > 0 ? kmax : 3, mmax > 0 ? mmax : 2, dim > 0 ? dim : 3, workers);
            else
                report = verify_oracles(nmax >= 0 ? nmax : 6, fmax >= 0 ? fmax : 8);
            return print_report(std::move(report), verify_format, timing);
        };
    });

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 1;
    }

    try {
        return run();
    } catch (const charconj::error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
}
