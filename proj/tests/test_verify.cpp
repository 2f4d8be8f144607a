#include <set>
#include <string>

#include <doctest.h>

#include "dilkit/errors.hpp"
#include "dilkit/verify.hpp"

using namespace dilkit;

TEST_CASE("property registry matches the advertised set") {
    std::set<std::string> names;
    for (const Property& p : property_registry())
        names.insert(p.name);
    std::set<std::string> expected = {
        "equality_theorem", "model_roundtrip",    "mult_lemma",
        "functoriality",    "analyticity",        "geom_interpretation",
        "tensor_invariance", "isometry",          "fixed_point"};
    CHECK(names == expected);
    CHECK(is_registered_property("equality_theorem"));
    CHECK(!is_registered_property("no_such_thing"));
}

TEST_CASE("unknown properties are rejected") {
    CHECK_THROWS_AS((void)run_property("nope", 10, 1, 0.0), Error);
    try {
        (void)run_property("nope", 10, 1, 0.0);
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::unknown_property);
    }
}

TEST_CASE("reports are deterministic given (property, trials, seed)") {
    for (const Property& p : property_registry()) {
        VerificationReport first = run_property(p.name, 500, 2718, 0.0);
        VerificationReport second = run_property(p.name, 500, 2718, 0.0);
        CHECK(first.failures == second.failures);
        CHECK(first.max_error == second.max_error);
        CHECK(first.tolerance == second.tolerance);
        CHECK(first.trials == 500);
        CHECK(first.seed == 2718);
    }
}

TEST_CASE("parallel kernels reproduce the serial reference bit for bit") {
    for (const Property& p : property_registry()) {
        VerificationReport serial =
            run_property(p.name, 400, 99, 0.0, RunMode::serial);
        VerificationReport parallel =
            run_property(p.name, 400, 99, 0.0, RunMode::parallel);
        CHECK(serial.failures == parallel.failures);
        CHECK(serial.max_error == parallel.max_error);
    }
}

TEST_CASE("every registered property passes at its default tolerance") {
    for (const Property& p : property_registry()) {
        VerificationReport report = run_property(p.name, 2000, 424242, 0.0);
        CAPTURE(p.name);
        CAPTURE(report.max_error);
        CHECK(report.failures == 0);
        CHECK(report.max_error <= report.tolerance);
    }
}

TEST_CASE("failures appear when the tolerance is absurd") {
    VerificationReport report =
        run_property("equality_theorem", 200, 7, 1e-300);
    CHECK(report.failures > 0);
    CHECK(report.max_error > report.tolerance);
}
