#include "qsb/spectra.hpp"

#include <CLI11.hpp>
#include <omp.h>

#include <fstream>
#include <iostream>

using namespace qsb;

namespace {

struct Common {
    int n = 0;
    int eps = 1;
};

void add_common(CLI::App* sub, Common& c, bool with_eps = true) {
    sub->add_option("--n", c.n, "rank parameter N")->required()->check(CLI::NonNegativeNumber);
    if (with_eps) sub->add_option("--eps", c.eps, "sign choice for odd N")->check(CLI::IsMember({-1, 1}));
}

std::string strip_spaces(const std::string& s) {
    std::string out;
    for (char c : s)
        if (!std::isspace(static_cast<unsigned char>(c))) out += c;
    return out;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact verification engine for the quantum spin Brauer category"};
    app.require_subcommand(1);
    int threads = 0;
    app.add_option("--threads", threads, "OpenMP threads (default: all logical cores)")->check(CLI::NonNegativeNumber);

    Common cv, ce, cs, cq, cr, cp;
    std::string suite = "all", report_path, expr_e, expr_q, word;
    int rmax = 3;
    bool probe = false;

    auto* verify_cmd = app.add_subcommand("verify", "check a relation suite in the image of F");
    add_common(verify_cmd, cv);
    verify_cmd->add_option("--suite", suite)->check(CLI::IsMember(suite_names()));
    verify_cmd->add_option("--rmax", rmax, "largest antisymmetrizer size")->check(CLI::NonNegativeNumber);
    verify_cmd->add_flag("--probe", probe, "numeric pre-screen before the exact comparison");
    verify_cmd->add_option("--report", report_path, "write one JSON record per check");

    auto* eval_cmd = app.add_subcommand("eval", "evaluate a diagram expression");
    add_common(eval_cmd, ce);
    eval_cmd->add_option("expr", expr_e)->required();

    auto* spec_cmd = app.add_subcommand("spectrum", "eigenvalues of the barbell on S (x) S");
    add_common(spec_cmd, cs);

    auto* qtr_cmd = app.add_subcommand("qtrace", "quantum trace of an endomorphism diagram");
    add_common(qtr_cmd, cq);
    qtr_cmd->add_option("expr", expr_q)->required();

    auto* rank_cmd = app.add_subcommand("rank", "dimension of End(word), checked against the barbell span");
    add_common(rank_cmd, cr);
    rank_cmd->add_option("--word", word)->required();

    auto* params_cmd = app.add_subcommand("params", "print sigma_N, t, kappa, d_S, d_V");
    add_common(params_cmd, cp, false);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        std::cerr << app.help();
        return 2;
    }
    if (threads > 0) omp_set_num_threads(threads);

    try {
        if (*verify_cmd) {
            if (cv.n > 7) std::cerr << "warning: N > 7 may take a long time\n";
            Report rep = verify(cv.n, cv.eps, suite, rmax, probe);
            if (suite == "all") rep.append(symmetry_checks(cv.n, cv.eps));
            for (const auto& c : rep.checks) {
                std::cout << (c.pass ? "PASS " : "FAIL ") << c.suite << " / " << c.relation;
                if (c.r) std::cout << " (r=" << *c.r << ")";
                if (!c.pass) std::cout << " : " << *c.witness;
                std::cout << "\n";
            }
            std::cout << rep.checks.size() - rep.failures() << "/" << rep.checks.size() << " checks pass\n";
            if (!report_path.empty()) {
                std::ofstream f(report_path);
                if (!f) {
                    std::cerr << "cannot write " << report_path << "\n";
                    return 2;
                }
                f << rep.to_jsonl();
            }
            return rep.all_pass() ? 0 : 1;
        }
        if (*eval_cmd) {
            Diagram d = parse(expr_e);
            if (d->dom.empty() && d->cod.empty())
                std::cout << evaluate_closed(ce.n, ce.eps, d).pretty() << "\n";
            else
                std::cout << to_json(evaluate(ce.n, ce.eps, d), 2) << "\n";
            return 0;
        }
        if (*spec_cmd) {
            Spectrum s = spectrum_SS(cs.n, cs.eps);
            for (const auto& [lam, m] : s.eigen) std::cout << lam.pretty() << "\t" << m << "\n";
            std::cout << "F(barbell) = displayed Clifford formula: " << (s.matches_literal ? "yes" : "no") << "\n";
            std::cout << "F(barbell) = corrected Clifford formula: " << (s.matches_corrected ? "yes" : "no") << "\n";
            return s.matches_corrected ? 0 : 1;
        }
        if (*qtr_cmd) {
            std::cout << qtrace(cq.n, cq.eps, parse(expr_q)).pretty() << "\n";
            return 0;
        }
        if (*rank_cmd) {
            EndoRank r = endo_rank_detail(cr.n, cr.eps, strip_spaces(word));
            std::cout << r.intertwiners << "\n";
            if (r.barbell_span != r.intertwiners) {
                std::cerr << "barbell span rank " << r.barbell_span << " differs from intertwiner dimension "
                          << r.intertwiners << "\n";
                return 1;
            }
            return 0;
        }
        if (*params_cmd) {
            Params p = qparams(cp.n);
            std::cout << "N " << p.N << "\nn " << p.n << "\nsigma_N " << p.sigmaN.pretty() << "\nt " << p.t.pretty()
                      << "\nkappa " << p.kappa.pretty() << "\nd_S " << p.dS.pretty() << "\nd_V " << p.dV.pretty()
                      << "\n";
            return 0;
        }
    } catch (const ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const TypeError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const DomainError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
