#pragma once

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "contactsym/decomposition.hpp"
#include "contactsym/io.hpp"
#include "contactsym/verify.hpp"

namespace contactsym {
namespace cli {

namespace detail {

inline std::string read_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open file '" + path + "'", 0, 0);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

inline void write_file(const std::string& path, const std::string& text) {
    std::ofstream out(path);
    if (!out) throw ParseError("cannot write file '" + path + "'", 0, 0);
    out << text;
}

inline std::vector<Rational> parse_delta_list(const std::vector<std::string>& items) {
    std::vector<Rational> out;
    out.reserve(items.size());
    for (const std::string& s : items) out.push_back(parse_rational(s));
    return out;
}

}  // namespace detail

/// Runs the command line given the arguments after the program name.
/// Exit codes: 0 success / all checks passed, 1 a check or a mathematical
/// operation failed, 2 usage or parse errors.
inline int run(std::vector<std::string> args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Exact symbol calculus on the standard contact space R^{2n+1}"};
    app.require_subcommand(1);

    // verify
    auto* verify_cmd = app.add_subcommand("verify", "Run the proposition suites");
    std::vector<int> ns = {1, 2};
    int k_max = 4;
    std::vector<std::string> delta_strs = {"1", "1/2", "-1/3", "7/5"};
    int base_deg = 3;
    int trials = 25;
    std::uint64_t seed = 1;
    std::vector<std::string> suites;
    std::string report_path;
    bool no_timing = false;
    verify_cmd->add_option("--n", ns, "Base dimensions n to test")->delimiter(',');
    verify_cmd->add_option("--k", k_max, "Largest fiber degree in the panel");
    verify_cmd->add_option("--delta", delta_strs, "Weight panel, rationals p/q")->delimiter(',');
    verify_cmd->add_option("--base-deg", base_deg, "Base-degree bound for random symbols");
    verify_cmd->add_option("--trials", trials, "Trials per identity");
    verify_cmd->add_option("--seed", seed, "Generator seed");
    verify_cmd->add_option("--suite", suites, "Suites to run (default: all)")->delimiter(',');
    verify_cmd->add_option("--out", report_path, "Write the JSON report here");
    verify_cmd->add_flag("--no-timing", no_timing, "Omit timing fields from the report");

    // decompose
    auto* decompose_cmd =
        app.add_subcommand("decompose", "Split a symbol into kernel components");
    std::string dec_in, dec_out;
    decompose_cmd->add_option("--in", dec_in, "Symbol file (R grading, homogeneous)")->required();
    decompose_cmd->add_option("--out", dec_out, "Output prefix (files <prefix>.l<l>.sym)");

    // projector
    auto* proj_cmd = app.add_subcommand("projector", "Apply p_k to a symbol");
    std::string proj_in, proj_out;
    proj_cmd->add_option("--in", proj_in, "Symbol file (R grading, homogeneous)")->required();
    proj_cmd->add_option("--out", proj_out, "Output file (default stdout)");

    // generators
    auto* gen_cmd = app.add_subcommand("generators", "Emit algebra generators as symbol files");
    std::string algebra = "sp";
    int gen_n = 1;
    std::string gen_out;
    gen_cmd->add_option("--algebra", algebra, "One of sp, sl, aff")
        ->check(CLI::IsMember({"sp", "sl", "aff"}));
    gen_cmd->add_option("--n", gen_n, "Base dimension");
    gen_cmd->add_option("--out", gen_out, "Output file (default stdout)");

    // bracket
    auto* br_cmd = app.add_subcommand("bracket", "Lagrange bracket of two density files");
    std::string br_left, br_right, br_out;
    br_cmd->add_option("--left", br_left, "Left density file")->required();
    br_cmd->add_option("--right", br_right, "Right density file")->required();
    br_cmd->add_option("--out", br_out, "Output file (default stdout)");

    // singular
    auto* sing_cmd = app.add_subcommand("singular", "Print the singular weight set I_k");
    int sing_k = 1;
    int sing_n = 1;
    sing_cmd->add_option("--k", sing_k, "Fiber degree")->required();
    sing_cmd->add_option("--n", sing_n, "Base dimension");

    try {
        std::reverse(args.begin(), args.end());
        app.parse(std::move(args));
    } catch (const CLI::CallForHelp& e) {
        out << app.help();
        return 0;
    } catch (const CLI::ParseError& e) {
        err << e.what() << "\n";
        return 2;
    }

    try {
        if (*verify_cmd) {
            for (const std::string& s : suites) {
                const auto& names = verify::suite_names();
                if (std::find(names.begin(), names.end(), s) == names.end()) {
                    err << "unknown suite '" << s << "'; available:";
                    for (const auto& name : names) err << " " << name;
                    err << "\n";
                    return 2;
                }
            }
            SuiteConfig cfg;
            cfg.ns = ns;
            cfg.k_max = k_max;
            try {
                cfg.deltas = detail::parse_delta_list(delta_strs);
            } catch (const Error& e) {
                err << e.what() << "\n";
                return 2;
            }
            cfg.base_deg = base_deg;
            cfg.trials = trials;
            cfg.seed = seed;
            cfg.suites = suites;
            Report rep = verify::run_suite(cfg);
            for (const auto& c : rep.checks) {
                out << "[" << to_string(c.status) << "] " << c.id;
                if (!c.params.empty()) out << "  (" << c.params_str() << ")";
                if (c.status != CheckStatus::Pass && !c.detail.empty()) {
                    out << "\n    " << c.detail << "\n";
                } else {
                    out << "\n";
                }
            }
            out << rep.count(CheckStatus::Pass) << " passed, " << rep.count(CheckStatus::Fail)
                << " failed, " << rep.count(CheckStatus::Skip) << " skipped\n";
            if (!report_path.empty())
                detail::write_file(report_path, rep.to_json(!no_timing).dump(2) + "\n");
            return rep.all_passed() ? 0 : 1;
        }

        if (*decompose_cmd) {
            Symbol u = parse_symbol(detail::read_file(dec_in));
            DecompositionResult d = decompose(u);
            if (dec_out.empty()) {
                for (int l = 0; l <= d.k; ++l) {
                    out << "# component l = " << l << " (fiber degree " << (d.k - l) << ")\n";
                    out << serialize_symbol(d.components[l]);
                }
            } else {
                for (int l = 0; l <= d.k; ++l)
                    detail::write_file(dec_out + ".l" + std::to_string(l) + ".sym",
                                       serialize_symbol(d.components[l]));
                out << "wrote " << (d.k + 1) << " components to " << dec_out << ".l*.sym\n";
            }
            return 0;
        }

        if (*proj_cmd) {
            Symbol u = parse_symbol(detail::read_file(proj_in));
            if (u.grading != Grading::R)
                throw GradingError("projector expects an R-graded symbol file");
            StructureConstants sc{u.n, u.weight.value};
            Projector p(u.fiber_degree(), sc);
            std::string text = serialize_symbol(p(u));
            if (proj_out.empty()) out << text;
            else detail::write_file(proj_out, text);
            return 0;
        }

        if (*gen_cmd) {
            AlgebraBasis basis = algebra == "sp"   ? sp_generators(gen_n)
                                 : algebra == "sl" ? sl_generators(gen_n)
                                                   : aff_generators(gen_n);
            std::vector<Symbol> symbols;
            symbols.reserve(basis.elements.size());
            for (const auto& z : basis.elements) symbols.push_back(z.as_symbol());
            std::string text = "# " + algebra + " generators, n = " + std::to_string(gen_n) +
                               ", count " + std::to_string(symbols.size()) + ", expected rank " +
                               std::to_string(basis.expected_rank) + "\n" +
                               serialize_symbols(symbols);
            if (gen_out.empty()) out << text;
            else detail::write_file(gen_out, text);
            return 0;
        }

        if (*br_cmd) {
            Symbol f = parse_symbol(detail::read_file(br_left));
            Symbol g = parse_symbol(detail::read_file(br_right));
            if (f.grading != Grading::S || g.grading != Grading::S)
                throw GradingError("bracket expects S-graded density files");
            Density r = lagrange_bracket(f.poly, f.weight, g.poly, g.weight);
            std::string text =
                serialize_symbol(Symbol(f.n, r.weight, Grading::S, std::move(r.poly)));
            if (br_out.empty()) out << text;
            else detail::write_file(br_out, text);
            return 0;
        }

        if (*sing_cmd) {
            for (const Rational& d : singular_set(sing_k, sing_n)) out << to_string(d) << "\n";
            return 0;
        }
    } catch (const ParseError& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const Error& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    }
    return 2;
}

inline int run_main(int argc, char** argv) {
    std::vector<std::string> args;
    for (int i = 1; i < argc; ++i) args.emplace_back(argv[i]);
    return run(std::move(args), std::cout, std::cerr);
}

}  // namespace cli
}  // namespace contactsym
