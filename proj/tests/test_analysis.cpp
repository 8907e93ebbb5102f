#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "folcoh/analysis.hpp"

using namespace folcoh;

namespace {

Model bundled(const std::string& name) { return parse_model_file("models/" + name + ".fol"); }

}  // namespace

TEST_CASE("ddbar lemma verdicts") {
    SUBCASE("torus models satisfy the lemma") {
        for (const char* name : {"torus1", "torus2"}) {
            Bicomplex b = bigrade_split(bundled(name));
            DdbarVerdict verdict = ddbar_check(b);
            INFO("model ", name);
            CHECK(verdict.holds);
        }
    }

    SUBCASE("s6 fails at (1,1) with the β1^β̄1 witness") {
        Model m = bundled("s6");
        Bicomplex b = bigrade_split(m);
        DdbarVerdict verdict = ddbar_check(b);
        REQUIRE_FALSE(verdict.holds);
        CHECK(verdict.p == 1);
        CHECK(verdict.q == 1);
        REQUIRE(verdict.witness.has_value());
        CHECK(format_form(*verdict.witness) == "β1^β̄1");

        // membership: witness lies in Ker(dbar) ∩ Im(del) and not in Im(del dbar)
        RowVectorQ v = coords_of(*verdict.witness, b.basis_at(1, 1));
        Subspace ker_dbar = Subspace::kernel_of(b.dbar_at(1, 1));
        Subspace im_del = Subspace::image_of(b.del_at(0, 1));
        Subspace im_dd = Subspace::image_of(MatrixQ(b.del_at(0, 1) * b.dbar_at(0, 0)));
        CHECK(ker_dbar.contains(v));
        CHECK(im_del.contains(v));
        CHECK_FALSE(im_dd.contains(v));
    }

    SUBCASE("verdict matches the froelicher equality criterion") {
        for (const char* name : {"s6", "torus1", "torus2"}) {
            Model m = bundled(name);
            Bicomplex b = bigrade_split(m);
            FroelicherReport report = froelicher_inequality_report(b, full_complex(m));
            INFO("model ", name);
            CHECK(ddbar_check(b).holds == report.equality_everywhere);
        }
    }
}

TEST_CASE("froelicher inequality rows") {
    SUBCASE("s6 slack is 2 at k=2 and 0 elsewhere") {
        Model m = bundled("s6");
        FroelicherReport report = froelicher_inequality_report(bigrade_split(m), full_complex(m));
        REQUIRE(report.rows.size() == 5);
        CHECK(report.rows[1].lhs == 2);
        CHECK(report.rows[1].rhs == 2);
        for (const auto& row : report.rows) {
            CHECK(row.slack() == (row.degree == 2 ? 2 : 0));
        }
        CHECK(report.inequality_holds);
        CHECK_FALSE(report.equality_everywhere);
    }
    SUBCASE("torus1 has zero slack everywhere") {
        Model m = bundled("torus1");
        FroelicherReport report = froelicher_inequality_report(bigrade_split(m), full_complex(m));
        for (const auto& row : report.rows) CHECK(row.slack() == 0);
        CHECK(report.equality_everywhere);
    }
}

TEST_CASE("homological orientability") {
    CHECK(homological_orientability_check(full_complex(bundled("s6"))));
    CHECK(homological_orientability_check(full_complex(bundled("torus1"))));
    for (const Rational& s : {Rational(0), Rational(1, 7), Rational(1, 2), Rational(1)}) {
        CHECK(homological_orientability_check(basic_subcomplex(bundled("hopf-family"), s)));
    }

    SUBCASE("top representative at s=1/2 is proportional to α1^α2^δ^α4") {
        Model m = bundled("hopf-family");
        GradedComplex basic = basic_subcomplex(m, Rational(1, 2));
        CohomologyTable dr = de_rham(basic);
        const CohEntry* top = nullptr;
        for (const auto& e : dr.entries) {
            if (e.p == 4) top = &e;
        }
        REQUIRE(top != nullptr);
        REQUIRE(top->representatives.size() == 1);
        // α1^α2^((1/2)γ-(1/2)α3)^α4 in canonical order, scaled by 2
        Form gamma_part = Form::unit(m.gens, ParamPoly(Rational(1, 2)));
        int g = m.gens->index_of("γ");
        int a1 = m.gens->index_of("α1");
        int a2 = m.gens->index_of("α2");
        int a3 = m.gens->index_of("α3");
        int a4 = m.gens->index_of("α4");
        Form delta = Form::generator(m.gens, g, ParamPoly(Rational(1, 2))) -
                     Form::generator(m.gens, a3, ParamPoly(Rational(1, 2)));
        Form expected = wedge(Form::generator(m.gens, a1),
                              wedge(Form::generator(m.gens, a2),
                                    wedge(delta, Form::generator(m.gens, a4))));
        CHECK(top->representatives[0] == ParamPoly(2) * expected);
    }
}

TEST_CASE("kaehler witnesses") {
    SUBCASE("torus1 finds the flat form") {
        Model m = bundled("torus1");
        Bicomplex b = bigrade_split(m);
        KaehlerVerdict verdict = kaehler_witness(b, 64, 1);
        REQUIRE(verdict.kind == KaehlerVerdict::Kind::Witness);
        CHECK(format_form(*verdict.witness) == "i β^β̄");
        CHECK(verify_kaehler_witness(b, metric_context(m), *verdict.witness));
    }
    SUBCASE("torus2 finds a positive-definite combination") {
        Model m = bundled("torus2");
        Bicomplex b = bigrade_split(m);
        KaehlerVerdict verdict = kaehler_witness(b, 64, 1);
        REQUIRE(verdict.kind == KaehlerVerdict::Kind::Witness);
        CHECK(verify_kaehler_witness(b, metric_context(m), *verdict.witness));
    }
    SUBCASE("s6 is decidably impossible") {
        Bicomplex b = bigrade_split(bundled("s6"));
        KaehlerVerdict verdict = kaehler_witness(b, 64, 1);
        CHECK(verdict.kind == KaehlerVerdict::Kind::ImpossibleNondegenerate);
    }
    SUBCASE("an untyped model is rejected") {
        Model m = bundled("hopf-family");
        CHECK_THROWS_AS(bigrade_split(m), Error);
    }
    SUBCASE("re-verification rejects forms failing a condition") {
        Model m = bundled("torus2");
        Bicomplex b = bigrade_split(m);
        MetricContext ctx = metric_context(m);
        int b1 = m.gens->index_of("β1");
        int b1c = m.gens->index_of("β̄1");
        // degenerate: i β1^β̄1 alone has vanishing square
        Form degenerate =
            wedge(Form::generator(m.gens, b1, ParamPoly(GaussianRational::i())),
                  Form::generator(m.gens, b1c));
        CHECK_FALSE(verify_kaehler_witness(b, ctx, degenerate));
        // non-real: β1^β̄1 without the i
        Form unreal = wedge(Form::generator(m.gens, b1), Form::generator(m.gens, b1c));
        CHECK_FALSE(verify_kaehler_witness(b, ctx, unreal));
    }
}

TEST_CASE("parameter sweep of the hopf family") {
    Model m = bundled("hopf-family");
    std::vector<Rational> grid = {Rational(0), Rational(1, 7), Rational(1, 2)};
    SweepReport report = parameter_sweep(m, grid, Rational(0));

    REQUIRE(report.points.size() == 3);
    CHECK(report.points[0].dims == std::vector<Index>{1, 2, 2, 2, 1});
    CHECK(report.points[1].dims == std::vector<Index>{1, 1, 0, 1, 1});
    CHECK(report.points[2].dims == std::vector<Index>{1, 1, 0, 1, 1});

    SUBCASE("exactly one jump, between 0 and 1/7") {
        REQUIRE(report.jumps.size() == 1);
        CHECK(report.jumps[0] == std::pair<size_t, size_t>{0, 1});
    }
    SUBCASE("semicontinuity pattern against the reference s=0") {
        REQUIRE(report.reference_index.has_value());
        CHECK(*report.reference_index == 0);
        for (bool dominated : report.dominated_by_reference) CHECK(dominated);
    }
    SUBCASE("orientable with a top class at every point") {
        for (const auto& point : report.points) {
            CHECK(point.orientable);
            CHECK(point.top_representative.has_value());
        }
    }
    SUBCASE("grid errors") {
        CHECK_THROWS_AS(parameter_sweep(m, {}, std::nullopt), Error);
        CHECK_THROWS_AS(parameter_sweep(m, {Rational(1), Rational(0)}, std::nullopt), Error);
        CHECK_THROWS_AS(parameter_sweep(m, grid, Rational(1, 3)), Error);
    }
    SUBCASE("repeated sweeps are identical") {
        SweepReport again = parameter_sweep(m, grid, Rational(0));
        REQUIRE(again.points.size() == report.points.size());
        for (size_t k = 0; k < report.points.size(); ++k) {
            CHECK(again.points[k].dims == report.points[k].dims);
            CHECK(again.points[k].subcomplex_dims == report.points[k].subcomplex_dims);
            CHECK(again.points[k].top_representative == report.points[k].top_representative);
        }
        CHECK(again.jumps == report.jumps);
    }
}

TEST_CASE("torus1 top class is the volume monomial") {
    Model m = bundled("torus1");
    GradedComplex total = full_complex(m);
    CHECK(homological_orientability_check(total));
    CohomologyTable dr = de_rham(total);
    for (const auto& e : dr.entries) {
        if (e.p == 2) {
            REQUIRE(e.representatives.size() == 1);
            CHECK(format_form(e.representatives[0]) == "β^β̄");
        }
    }
}

TEST_CASE("the nilpotent model is decidably non-Kaehler") {
    // Closed real (1,1) forms only involve the two closed holomorphic
    // directions, so the third power vanishes identically.
    Model m = parse_model(
        "model iwasawa\n"
        "generator φ1 : deg=1, type=(1,0), conj=φ̄1\n"
        "generator φ2 : deg=1, type=(1,0), conj=φ̄2\n"
        "generator φ3 : deg=1, type=(1,0), conj=φ̄3\n"
        "generator φ̄1 : deg=1, type=(0,1), conj=φ1\n"
        "generator φ̄2 : deg=1, type=(0,1), conj=φ2\n"
        "generator φ̄3 : deg=1, type=(0,1), conj=φ3\n"
        "d φ3 = -1 φ1^φ2\n"
        "d φ̄3 = -1 φ̄1^φ̄2\n"
        "metric orthonormal\n"
        "orient φ1^φ2^φ3^φ̄1^φ̄2^φ̄3\n"
        "end\n");
    Bicomplex b = bigrade_split(m);
    KaehlerVerdict verdict = kaehler_witness(b, 64, 1);
    CHECK(verdict.kind == KaehlerVerdict::Kind::ImpossibleNondegenerate);
}
