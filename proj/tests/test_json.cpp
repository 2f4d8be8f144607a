#include <doctest.h>

#include "dilkit/json_io.hpp"
#include "dilkit/prng.hpp"
#include "test_support.hpp"

using namespace dilkit;
using dilkit::test::check_close;

TEST_CASE("wire encodings round-trip") {
    Splitmix64 rng(555);
    for (int i = 0; i < 100; ++i) {
        Complex z = random_scale(rng, 0.0, 20.0);
        CHECK(complex_from_json(to_json(z)) == z);

        QuadraticForm q = random_form(rng);
        QuadraticForm q2 = form_from_json(to_json(q));
        CHECK(q2.a == q.a);
        CHECK(q2.b == q.b);
        CHECK(q2.c == q.c);

        RealLinearMap m = random_matrix(rng);
        RealLinearMap m2 = matrix_from_json(to_json(m));
        CHECK(m2.m11 == m.m11);
        CHECK(m2.m12 == m.m12);
        CHECK(m2.m21 == m.m21);
        CHECK(m2.m22 == m.m22);
    }
}

TEST_CASE("disc points carry their model tag") {
    Json k = to_json(KleinPoint{{0.25, -0.5}});
    CHECK(k.at("model") == "klein");
    auto [kv, km] = disc_point_from_json(k);
    CHECK(km == DiscModel::klein);
    CHECK(kv == Complex{0.25, -0.5});

    Json p = to_json(PoincarePoint{{0.1, 0.2}});
    CHECK(p.at("model") == "poincare");
    auto [pv, pm] = disc_point_from_json(p);
    CHECK(pm == DiscModel::poincare);
    CHECK(pv == Complex{0.1, 0.2});

    CHECK_THROWS_AS((void)disc_point_from_json(Json{
                        {"model", "hyperboloid"}, {"re", 0.0}, {"im", 0.0}}),
                    std::invalid_argument);
}

TEST_CASE("matrix decoding validates the entry count") {
    Json bad{{"m", {1.0, 2.0, 3.0}}};
    CHECK_THROWS_AS((void)matrix_from_json(bad), std::invalid_argument);
}

TEST_CASE("hemisphere and automorphism encodings expose their fields") {
    Json h = to_json(HemispherePoint{{0.6, 0.0}, 0.8});
    CHECK(h.at("re") == 0.6);
    CHECK(h.at("w") == 0.8);

    Json a = to_json(DiscAutomorphism{});
    CHECK(complex_from_json(a.at("A")) == Complex{1.0, 0.0});
    CHECK(complex_from_json(a.at("B")) == Complex{0.0, 0.0});

    Json t = to_json(DilatationTensor{{0.5, -0.25}});
    CHECK(complex_from_json(t.at("coeff")) == Complex{0.5, -0.25});

    Json line = to_json(FramedLine{{2.0, 1.0}});
    CHECK(complex_from_json(line.at("basis")) == Complex{2.0, 1.0});
}

TEST_CASE("verification reports serialize every field") {
    VerificationReport r;
    r.property = "mult_lemma";
    r.trials = 10;
    r.failures = 1;
    r.max_error = 0.5;
    r.seed = 9;
    r.tolerance = 1e-10;
    r.elapsed_ms = 1.25;
    Json j = to_json(r);
    CHECK(j.at("property") == "mult_lemma");
    CHECK(j.at("trials") == 10);
    CHECK(j.at("failures") == 1);
    CHECK(j.at("max_error") == 0.5);
    CHECK(j.at("seed") == 9);
    CHECK(j.at("tolerance") == 1e-10);
}
