#include <catch2/catch_amalgamated.hpp>

#include "superw/dsl.hpp"
#include "superw/paperlib.hpp"
#include "superw/presets.hpp"
#include "superw/suites.hpp"

using namespace superw;

TEST_CASE("scalar expressions") {
    Algebra h = heisenberg({{Scalar::level()}});
    auto S = [&](const std::string& s) { return DslParser(s, h).parse_scalar_only(); };
    REQUIRE(S("3/2") == Scalar(Rational(3, 2)));
    REQUIRE(S("(eps+1)/eps") == Scalar::level());
    REQUIRE(S("eps^2 - 1") == Scalar::eps() * Scalar::eps() - Scalar(1));
    REQUIRE(S("-2*eps") == Scalar(-2) * Scalar::eps());
}

TEST_CASE("state expressions round-trip the canonical text form") {
    Algebra t = coset_algebra(2);
    auto P = [&](const std::string& s) { return DslParser(s, t).parse().state; };
    State x = Scalar(Rational(3, 2)) * Scalar::eps() *
                  normal_product(t.gen(0), t.gen_der(1, 2)) +
              normal_product(t.gen(0), t.gen(0));
    REQUIRE(P("3/2*eps :t1 d^2 t2: + :t1 t1:") == x);
    // rendering parses back to the same state
    REQUIRE(P(x.str()) == x);
    REQUIRE(P("1").term_count() == 1);
    REQUIRE(P("t1 - t1").is_zero());
    // derivative atom without colon form
    REQUIRE(P("d^1 t1") == t.gen_der(0, 1));
}

TEST_CASE("bracket through the DSL matches the engine") {
    Algebra t = coset_algebra(1);
    auto P = [&](const std::string& s) { return DslParser(s, t).parse().state; };
    State a = P(":t1 t1:");
    REQUIRE(lambda_bracket(P("t1"), a).coeff(1) == Scalar(2) * Scalar::level() * t.gen(0));
}

TEST_CASE("fock vectors in a lattice-enabled algebra") {
    GlN1 g(1);
    const FockSpace& sp = g.space();
    auto P = [&](const std::string& s) { return DslParser(s, g.algebra(), &sp).parse(); };
    ParsedElement psi = P("|0,0,1>");
    REQUIRE(psi.gamma.has_value());
    REQUIRE((*psi.gamma)[2] == Scalar(1));
    ParsedElement mixed = P("u1 |0,0,-1>");
    REQUIRE(mixed.state == g.algebra().gen(0));
    ParsedElement eps_coord = P("|-eps/(eps+1), -eps/(eps+1), 1>");
    REQUIRE((*eps_coord.gamma)[0] == -Scalar::eps() / (Scalar::eps() + Scalar(1)));
}

TEST_CASE("suite reports are deterministic for fixed config and seed") {
    SuiteConfig cfg;
    cfg.seed = 12345;
    for (const std::string name : {"wakimoto-gl11", "plane-partitions"}) {
        SuiteResult a = run_suite(name, cfg);
        SuiteResult b = run_suite(name, cfg);
        REQUIRE(a.checks.size() == b.checks.size());
        for (size_t i = 0; i < a.checks.size(); ++i) {
            REQUIRE(a.checks[i].name == b.checks[i].name);
            REQUIRE(a.checks[i].pass == b.checks[i].pass);
            REQUIRE(a.checks[i].residual == b.checks[i].residual);
        }
    }
}

TEST_CASE("position-annotated parse errors") {
    Algebra t = coset_algebra(1);
    auto expect_err = [&](const std::string& s, size_t pos) {
        try {
            DslParser(s, t).parse();
            FAIL("expected a parse error for: " + s);
        } catch (const ParseError& e) {
            REQUIRE(e.pos == pos);
        }
    };
    expect_err("t1 +", 4);
    expect_err(":t1", 3);
    expect_err("unknown", 0);
    expect_err("t1 ) t2", 3);
}
