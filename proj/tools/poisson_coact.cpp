// poisson_coact: build and verify universal coacting Poisson bialgebras
// from structure-constant files.

#include <cstdlib>
#include <iostream>
#include <string>

#include "CLI11.hpp"

#include "pcoact/errors.hpp"
#include "pcoact/io.hpp"

using namespace pcoact;

namespace {

constexpr int EXIT_SEMANTIC = 1;
constexpr int EXIT_INPUT = 2;
constexpr int EXIT_BUDGET = 3;

void emit(const Json& j, bool pretty) {
    if (pretty)
        std::cout << j.dump(2) << '\n';
    else
        std::cout << j.dump() << '\n';
}

std::size_t default_budget() {
    if (const char* env = std::getenv("POISSON_COACT_BUDGET")) {
        char* end = nullptr;
        unsigned long long v = std::strtoull(env, &end, 10);
        if (end && *end == '\0' && v > 0) return static_cast<std::size_t>(v);
    }
    return SaturateOptions{}.budget;
}

std::string render_fp(const Presentation& pres, const FpElem& x, bool latex) {
    auto name = [&](Letter g) {
        if (latex)
            return "h_{" + std::to_string(pres.row_of(g) + 1) + "," +
                   std::to_string(pres.col_of(g) + 1) + "}";
        return generator_name(pres, g);
    };
    auto word_str = [&](auto&& self, const Word& w) -> std::string {
        if (w.size() == 1) return name(w[0]);
        auto [u, v] = standard_factorization(w);
        return "[" + self(self, u) + "," + self(self, v) + "]";
    };
    auto mono_str = [&](const CommMono& m) {
        if (m.factors.empty()) return std::string("1");
        std::string s;
        for (std::size_t k = 0; k < m.factors.size(); ++k) {
            if (k) s += latex ? " " : "*";
            s += word_str(word_str, m.factors[k]);
        }
        return s;
    };
    if (x.empty()) return "0";
    std::string out;
    for (auto it = x.rbegin(); it != x.rend(); ++it) {
        Rational c = it->second;
        if (out.empty()) {
            if (c < 0) {
                out += "-";
                c = -c;
            }
        } else {
            out += (c < 0) ? " - " : " + ";
            if (c < 0) c = -c;
        }
        bool unit_mono = it->first.factors.empty();
        if (c != 1 || unit_mono) {
            out += rational_str(c);
            if (!unit_mono) out += latex ? " " : "*";
        }
        if (!unit_mono) out += mono_str(it->first);
    }
    return out;
}

int cmd_validate(const std::string& path, bool pretty) {
    PoissonAlgebraData a = load_algebra(path);
    ValidationReport rep = validate_poisson(a);
    emit(validation_to_json(rep), pretty);
    return rep.ok() ? 0 : EXIT_SEMANTIC;
}

int cmd_build(const std::string& p_path, const std::string& u_path, std::size_t degree,
              std::size_t margin, const std::string& out_path, const SaturateOptions& opts,
              bool skip_validate, bool pretty) {
    PoissonAlgebraData P = load_algebra(p_path);
    PoissonAlgebraData U = u_path.empty() ? P : load_algebra(u_path);
    if (!skip_validate) {
        if (!validate_poisson(P).ok()) {
            std::cerr << "error: the P algebra fails the Poisson axioms\n";
            return EXIT_SEMANTIC;
        }
        if (!validate_poisson(U).ok()) {
            std::cerr << "error: the U algebra fails the Poisson axioms\n";
            return EXIT_SEMANTIC;
        }
    }
    Presentation pres = build_universal(P, U, degree, margin, opts);
    Json doc = presentation_to_json(pres);
    if (!out_path.empty()) {
        write_json_file(out_path, doc);
        Json summary = {{"out", out_path},
                        {"quotient_dims", pres.ctx.quotient_dims()},
                        {"margin_stable", pres.ctx.margin_stable}};
        emit(summary, pretty);
    } else {
        emit(doc, pretty);
    }
    return 0;
}

int cmd_verify(const std::string& pres_path, const std::string& f_path,
               const std::string& g_path, const SaturateOptions& opts, bool pretty) {
    Presentation pres = load_presentation(pres_path, opts);
    Report rep;
    bool same = (pres.P == pres.U);
    if (!f_path.empty() || !g_path.empty()) {
        if (f_path.empty() || g_path.empty())
            throw ParseError("verify: --f and --g must be given together");
        LinearMap f = load_linear_map(f_path);
        LinearMap g = load_linear_map(g_path);
        rep = verify_bialgebra(pres, f, g);
    } else if (same) {
        rep = verify_bialgebra(pres, LinearMap::identity(pres.U.dim),
                               LinearMap::identity(pres.P.dim));
    }
    Report com = verify_comodule(pres);
    rep.checks.insert(rep.checks.end(), com.checks.begin(), com.checks.end());
    emit(report_to_json(rep, pres.ctx.D, pres.ctx.margin), pretty);
    return rep.ok() ? 0 : EXIT_SEMANTIC;
}

int cmd_solve(const std::string& pres_path, const std::string& q_path,
              const std::string& f_path, const SaturateOptions& opts, bool pretty) {
    Presentation pres = load_presentation(pres_path, opts);
    PoissonAlgebraData Q = load_algebra(q_path);
    if (!validate_poisson(Q).ok()) {
        std::cerr << "error: Q fails the Poisson axioms\n";
        return EXIT_SEMANTIC;
    }
    CoactionMatrix dmat = coaction_from_json(load_json_file(f_path), pres.rows(), pres.cols());
    SolveResult res = solve_coaction(pres, Q, dmat);
    CoactionMatrix back = theta(pres, Q, res.g);
    bool round_trip = (back.qdim == dmat.qdim && back.d == dmat.d);
    Json out;
    Json gens = Json::object();
    for (std::size_t g = 0; g < pres.alphabet(); ++g) {
        Json vec = Json::array();
        for (const auto& c : res.g.images[g]) vec.push_back(rational_str(c));
        gens[generator_name(pres, static_cast<Letter>(g))] = std::move(vec);
    }
    out["generators"] = std::move(gens);
    out["report"] = report_to_json(res.report, pres.ctx.D, pres.ctx.margin);
    out["round_trip"] = round_trip;
    emit(out, pretty);
    return (res.report.ok() && round_trip) ? 0 : EXIT_SEMANTIC;
}

int cmd_export(const std::string& pres_path, const std::string& format,
               const SaturateOptions& opts, bool pretty) {
    if (format != "text" && format != "latex" && format != "json") {
        std::cerr << "error: unknown format '" << format << "'\n";
        return EXIT_INPUT;
    }
    Json doc = load_json_file(pres_path);
    if (format == "json") {
        emit(doc, pretty);
        return 0;
    }
    Presentation pres = presentation_from_json(doc, opts);
    bool latex = (format == "latex");
    if (latex) std::cout << "\\begin{align*}\n";
    for (std::size_t k = 0; k < pres.relations.relations.size(); ++k) {
        std::string body = render_fp(pres, pres.relations.relations[k], latex);
        if (latex) {
            std::cout << "  " << body << " &= 0";
            if (k + 1 < pres.relations.relations.size()) std::cout << " \\\\";
            std::cout << "\n";
        } else {
            std::string family =
                k < pres.n_I1 ? "I1[" + std::to_string(k) + "]"
                              : "I2[" + std::to_string(k - pres.n_I1) + "]";
            std::cout << family << ": " << body << " = 0\n";
        }
    }
    if (latex) std::cout << "\\end{align*}\n";
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"universal coacting Poisson bialgebras from structure constants"};
    app.require_subcommand(1);
    bool pretty = false;
    app.add_flag("--pretty", pretty, "human-readable JSON output");

    std::size_t budget = default_budget();
    bool serial = false;
    app.add_option("--budget", budget, "monomial budget for ideal saturation");
    app.add_flag("--serial", serial, "use the serial saturation lane");

    auto* validate = app.add_subcommand("validate", "check the Poisson axioms of an algebra file");
    std::string validate_path;
    validate->add_option("path", validate_path, "algebra file")->required();

    auto* build = app.add_subcommand("build", "construct the presentation of B(P,U)");
    std::string p_path, u_path, out_path;
    std::size_t degree = 3, margin = 2;
    bool skip_validate = false;
    build->add_option("--p", p_path, "structure constants of P")->required();
    build->add_option("--u", u_path, "structure constants of U (defaults to P)");
    build->add_option("--degree", degree, "truncation degree D");
    build->add_option("--margin", margin, "saturation margin m");
    build->add_option("--out", out_path, "output presentation file");
    build->add_flag("--skip-validate", skip_validate, "skip axiom validation at load");

    auto* verify = app.add_subcommand("verify", "run the bialgebra and comodule verifiers");
    std::string pres_path, f_path, g_path;
    verify->add_option("--pres", pres_path, "presentation file")->required();
    verify->add_option("--f", f_path, "matrix of f: U -> P");
    verify->add_option("--g", g_path, "matrix of g: P -> U");

    auto* solve = app.add_subcommand("solve", "solve a coaction matrix through the universal property");
    std::string solve_pres, q_path, dmat_path;
    solve->add_option("--pres", solve_pres, "presentation file")->required();
    solve->add_option("--q", q_path, "structure constants of Q")->required();
    solve->add_option("--f", dmat_path, "coaction coefficient file")->required();

    auto* exp = app.add_subcommand("export", "render a presentation");
    std::string exp_pres, format = "text";
    exp->add_option("--pres", exp_pres, "presentation file")->required();
    exp->add_option("--format", format, "text|latex|json");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : EXIT_INPUT;
    }

    SaturateOptions opts;
    opts.budget = budget;
    opts.parallel = !serial;

    try {
        if (*validate) return cmd_validate(validate_path, pretty);
        if (*build)
            return cmd_build(p_path, u_path, degree, margin, out_path, opts, skip_validate,
                             pretty);
        if (*verify) return cmd_verify(pres_path, f_path, g_path, opts, pretty);
        if (*solve) return cmd_solve(solve_pres, q_path, dmat_path, opts, pretty);
        if (*exp) return cmd_export(exp_pres, format, opts, pretty);
    } catch (const BudgetExceeded& e) {
        std::cerr << "error: " << e.what() << '\n';
        return EXIT_BUDGET;
    } catch (const ConstraintViolation& e) {
        std::cerr << "error: " << e.what() << '\n';
        return EXIT_SEMANTIC;
    } catch (const NotAHomomorphism& e) {
        std::cerr << "error: " << e.what() << '\n';
        return EXIT_SEMANTIC;
    } catch (const DescentFailure& e) {
        std::cerr << "error: " << e.what() << '\n';
        return EXIT_SEMANTIC;
    } catch (const InvalidAlgebra& e) {
        std::cerr << "error: " << e.what() << '\n';
        return EXIT_SEMANTIC;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return EXIT_INPUT;
    }
    return EXIT_INPUT;
}
