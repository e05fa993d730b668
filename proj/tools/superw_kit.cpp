// Command-line driver: verification suites, series and symbolic-object
// emitters, a small expression DSL for brackets, plane-partition counting and
// the named-element catalog.

#include "superw/dsl.hpp"
#include "superw/suites.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <iostream>

using namespace superw;
using nlohmann::json;

namespace {

json series_json(const std::string& name, const QSeries& s) {
    json coeffs = json::array();
    for (const auto& [v, c] : s.coeffs()) {
        std::string expo = (v % 2 == 0) ? std::to_string(v / 2) : (std::to_string(v) + "/2");
        coeffs.push_back({expo, rat_to_string(c)});
    }
    return json{{"name", name}, {"trunc", s.trunc()}, {"coeffs", coeffs}};
}

json psido_json(const PsiDO& p, const std::vector<std::string>& names) {
    json terms = json::array();
    for (auto it = p.coeffs().rbegin(); it != p.coeffs().rend(); ++it) {
        std::string expo = std::to_string(it->first);
        if (p.eps_shifted()) expo = (it->first == 0) ? "eps" : expo + "+eps";
        terms.push_back({{"exponent", expo}, {"coefficient", it->second.str(names)}});
    }
    return terms;
}

json suite_json(const SuiteResult& r) {
    json checks = json::array();
    for (const auto& c : r.checks) {
        json e{{"name", c.name}, {"status", c.pass ? "pass" : "fail"}, {"paper_anchor", c.anchor}};
        if (!c.pass) e["residual"] = c.residual;
        checks.push_back(std::move(e));
    }
    json cfg{{"n", r.config.n},
             {"pmax", r.config.pmax},
             {"order", r.config.order},
             {"seed", r.config.seed}};
    return json{{"suite", r.suite},
                {"config", cfg},
                {"checks", checks},
                {"duration_ms", r.duration_ms}};
}

struct ParsedAlgebra {
    Algebra alg;
    std::shared_ptr<GlN1> ambient; // set for lattice-enabled presets
};

ParsedAlgebra make_algebra(const std::string& preset) {
    auto colon = preset.find(':');
    std::string kind = preset.substr(0, colon);
    std::string arg = colon == std::string::npos ? "" : preset.substr(colon + 1);
    auto geti = [&](const std::string& s, int dflt) { return s.empty() ? dflt : std::stoi(s); };
    if (kind == "heis") {
        int r = geti(arg, 1);
        std::vector<std::vector<Scalar>> gram((size_t)r, std::vector<Scalar>((size_t)r));
        for (int i = 0; i < r; ++i) gram[(size_t)i][(size_t)i] = Scalar::level();
        return {heisenberg(gram), nullptr};
    }
    if (kind == "bc") return {bc_pairs(geti(arg, 1)), nullptr};
    if (kind == "betagamma") return {betagamma_pairs(geti(arg, 1)), nullptr};
    if (kind == "degenerate-betagamma") return {degenerate_betagamma_pairs(geti(arg, 1)), nullptr};
    if (kind == "coset") return {coset_algebra(geti(arg, 1)), nullptr};
    if (kind == "affine") {
        auto comma = arg.find(',');
        if (comma == std::string::npos)
            throw CLI::ValidationError("affine preset expects affine:m,n");
        int m = std::stoi(arg.substr(0, comma));
        int n = std::stoi(arg.substr(comma + 1));
        return {affine_gl(m, n), nullptr};
    }
    if (kind == "gln1") {
        auto g = std::make_shared<GlN1>(geti(arg, 1));
        return {g->algebra(), g};
    }
    throw CLI::ValidationError("unknown algebra preset '" + preset + "'");
}

void print_parse_error(const std::string& src, const ParseError& e) {
    std::cerr << "parse error at position " << e.pos << ": " << e.what() << "\n";
    std::cerr << "  " << src << "\n  " << std::string(e.pos, ' ') << "^\n";
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"symbolic verification kit for free-field vertex superalgebra calculus"};
    app.require_subcommand(1);

    auto* verify = app.add_subcommand("verify", "run a named verification suite");
    std::string suite;
    SuiteConfig cfg;
    bool as_json = false;
    {
        std::string all;
        for (const auto& n : suite_names()) all += n + " ";
        verify->add_option("suite", suite, "one of: " + all)->required();
    }
    verify->add_option("--n", cfg.n, "restrict to a single rank n");
    verify->add_option("--pmax", cfg.pmax, "largest Miura coefficient index");
    verify->add_option("--order", cfg.order, "series truncation order");
    verify->add_option("--seed", cfg.seed, "seed for randomized checks");
    verify->add_flag("--json", as_json, "machine-readable report");

    auto* series = app.add_subcommand("series", "emit a named q-series as JSON");
    std::string series_name;
    int order = 12, series_n = 1;
    series->add_option("name", series_name,
                       "center-character | pit-gf | macmahon | gl32-character | false-theta")
        ->required();
    series->add_option("--order", order, "truncation order")->required();
    series->add_option("--n", series_n, "rank parameter (shift for false-theta)");

    auto* miura = app.add_subcommand("miura", "emit the Miura operator and its coefficients");
    int mn = 1, mpmax = 3;
    bool critical = false;
    miura->add_option("--n", mn, "rank")->required();
    miura->add_option("--pmax", mpmax, "number of coefficients")->required();
    miura->add_flag("--critical", critical, "specialize eps -> -1");

    auto* bracket = app.add_subcommand("bracket", "lambda-bracket of two DSL expressions");
    std::string preset, lhs, rhs;
    bracket
        ->add_option("--algebra", preset,
                     "heis:r | bc:r | betagamma:r | degenerate-betagamma:r | coset:n | "
                     "affine:m,n | gln1:n")
        ->required();
    bracket->add_option("--lhs", lhs)->required();
    bracket->add_option("--rhs", rhs)->required();

    auto* pp = app.add_subcommand("pp", "plane-partition counts per weight");
    std::string pit;
    int maxw = 8;
    pp->add_option("--pit", pit, "pit position i,j");
    pp->add_option("--max-weight", maxw, "weight cap")->required();

    auto* list = app.add_subcommand("list", "catalog of named constructions");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (*verify) {
            SuiteResult r = run_suite(suite, cfg);
            if (as_json) {
                std::cout << suite_json(r).dump(2) << "\n";
            } else {
                std::cout << "suite " << r.suite << " (seed " << cfg.seed << ")\n";
                for (const auto& c : r.checks) {
                    std::cout << "  [" << (c.pass ? "PASS" : "FAIL") << "] " << c.name << "\n";
                    if (!c.pass) std::cout << "         " << c.residual << "\n";
                }
                std::cout << (r.ok() ? "all checks passed" : "FAILURES present") << "\n";
            }
            return r.ok() ? 0 : 1;
        }
        if (*series) {
            QSeries s(order);
            if (series_name == "center-character") s = center_character(series_n, order);
            else if (series_name == "pit-gf") s = pit_gf_formula(1, series_n, order);
            else if (series_name == "macmahon") s = macmahon(order);
            else if (series_name == "gl32-character") s = gl32_characters(order).closed_form;
            else if (series_name == "false-theta") s = false_theta(series_n, order);
            else throw CLI::ValidationError("unknown series '" + series_name + "'");
            std::cout << series_json(series_name, s).dump(2) << "\n";
            return 0;
        }
        if (*miura) {
            PsiDO L = miura_operator(mn, mpmax);
            if (critical) L = critical_specialize(L);
            std::vector<std::string> names;
            for (int i = 1; i <= mn + 1; ++i) names.push_back("t" + std::to_string(i));
            json out;
            out["operator"] = psido_json(L, names);
            json w = json::object();
            auto ws = w_coefficients(mn, mpmax);
            for (int p = 1; p <= mpmax; ++p) {
                DiffPoly f = ws[(size_t)p - 1];
                if (critical) f = critical_specialize(f);
                w["W" + std::to_string(p)] = f.str(names);
            }
            out["coefficients"] = w;
            std::cout << out.dump(2) << "\n";
            return 0;
        }
        if (*bracket) {
            ParsedAlgebra pa = make_algebra(preset);
            const FockSpace* sp = pa.ambient ? &pa.ambient->space() : nullptr;
            ParsedElement a, b;
            try {
                a = DslParser(lhs, pa.alg, sp).parse();
            } catch (const ParseError& e) {
                print_parse_error(lhs, e);
                return 2;
            }
            try {
                b = DslParser(rhs, pa.alg, sp).parse();
            } catch (const ParseError& e) {
                print_parse_error(rhs, e);
                return 2;
            }
            if (sp) {
                FockState fa{a.state, a.gamma ? *a.gamma : sp->zero_vec()};
                FockState fb{b.state, b.gamma ? *b.gamma : sp->zero_vec()};
                auto br = pa.ambient->fock_bracket(fa, fb);
                bool all0 = true;
                std::string out;
                for (size_t m = 0; m < br.size(); ++m) {
                    if (br[m].is_zero()) continue;
                    all0 = false;
                    if (!out.empty()) out += " + ";
                    std::string body = br[m].str();
                    if (m > 0) {
                        body = "(" + body + ")*lambda";
                        if (m > 1) body += "^" + std::to_string(m);
                    }
                    out += body;
                }
                std::cout << (all0 ? "0" : out) << "\n";
            } else {
                auto br = lambda_bracket(a.state, b.state);
                std::cout << br.str() << "\n";
            }
            return 0;
        }
        if (*pp) {
            std::optional<std::pair<size_t, size_t>> pitpos;
            if (!pit.empty()) {
                auto comma = pit.find(',');
                if (comma == std::string::npos) throw CLI::ValidationError("--pit expects i,j");
                pitpos = std::make_pair((size_t)std::stoul(pit.substr(0, comma)),
                                        (size_t)std::stoul(pit.substr(comma + 1)));
                if (pitpos->first < 1 || pitpos->second < 1)
                    throw CLI::ValidationError("pit coordinates start at (1,1)");
            }
            auto counts = enumerate_plane_partitions(maxw, pitpos);
            json out = json::array();
            for (auto c : counts) out.push_back(c);
            std::cout << out.dump() << "\n";
            return 0;
        }
        if (*list) {
            for (const auto& e : catalog()) std::cout << e.name << "\n    " << e.anchor << "\n";
            return 0;
        }
    } catch (const CLI::Error& e) {
        std::cerr << e.what() << "\n";
        return 2;
    } catch (const ParseError& e) {
        std::cerr << "parse error at position " << e.pos << ": " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
