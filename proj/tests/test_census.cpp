#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "quotforge/adhm.hpp"
#include "quotforge/census.hpp"
#include "quotforge/jordan.hpp"
#include "support/generators.hpp"

using namespace quotforge;

namespace {

// Reference census on the public Scalar path: enumerate everything with the
// library's own stability tests.
struct ReferenceCounts {
    mpz_class pairs = 0;
    mpz_class stable = 0;
    mpz_class w_slice = 0;
};

ReferenceCounts reference_census(std::size_t d, std::size_t r, std::uint32_t q) {
    const FieldSpec f = FieldSpec::prime_field(q);
    ReferenceCounts counts;
    const auto pairs = qftest::all_commuting_nilpotent_pairs(f, d);
    counts.pairs = pairs.size();
    const auto vectors = qftest::all_vectors(f, d);
    std::vector<std::size_t> picks(r, 0);
    for (const auto& [b1, b2] : pairs) {
        std::fill(picks.begin(), picks.end(), 0);
        while (true) {
            std::vector<Vec> tuple;
            for (std::size_t j = 0; j < r; ++j) tuple.push_back(vectors[picks[j]]);
            const QuotDatum datum = make_datum(b1, b2, tuple);
            if (is_stable(datum)) {
                counts.stable += 1;
                if (in_w_slice(datum)) counts.w_slice += 1;
            }
            std::size_t pos = 0;
            while (pos < r && ++picks[pos] == vectors.size()) picks[pos++] = 0;
            if (pos == r) break;
        }
    }
    return counts;
}

}  // namespace

TEST_CASE("gl_order examples and exhaustive cross-checks") {
    CHECK(gl_order(1, 3) == 2);
    CHECK(gl_order(2, 2) == 6);
    CHECK(gl_order(3, 2) == 168);
    CHECK(gl_order(2, 2) == mpz_class(qftest::all_invertible(FieldSpec::prime_field(2), 2).size()));
    CHECK(gl_order(3, 2) == mpz_class(qftest::all_invertible(FieldSpec::prime_field(2), 3).size()));
    CHECK_THROWS_AS(gl_order(2, 4), std::invalid_argument);
}

TEST_CASE("commuting nilpotent pair counts") {
    CHECK(count_commuting_nilpotent_pairs(1, 2) == 1);
    CHECK(count_commuting_nilpotent_pairs(1, 5) == 1);
    // two-case analysis gives q^3 + q^2 - q in dimension 2
    CHECK(count_commuting_nilpotent_pairs(2, 2) == 10);
    CHECK(count_commuting_nilpotent_pairs(2, 3) == 33);
    CHECK(count_commuting_nilpotent_pairs(2, 5) == 145);
    // reference enumeration on the Scalar path
    CHECK(count_commuting_nilpotent_pairs(2, 2) == reference_census(2, 1, 2).pairs);
    CHECK(count_commuting_nilpotent_pairs(3, 2) == reference_census(3, 1, 2).pairs);
}

TEST_CASE("stable tuple counts match the reference path exhaustively") {
    for (const auto& [d, r, q] : std::vector<std::array<std::size_t, 3>>{
             {1, 1, 2}, {1, 2, 3}, {2, 1, 2}, {2, 2, 2}, {2, 1, 3}, {3, 1, 2}, {3, 2, 2}}) {
        const ReferenceCounts expected = reference_census(d, r, static_cast<std::uint32_t>(q));
        const StableCounts got = count_stable_tuples(d, r, static_cast<std::uint32_t>(q));
        CHECK_MESSAGE(got.count_stable == expected.stable, "stable count off at d=", d, " r=", r, " q=", q);
        CHECK_MESSAGE(got.count_w_slice == expected.w_slice, "w count off at d=", d, " r=", r, " q=", q);
    }
}

TEST_CASE("named stable counts") {
    const StableCounts c212 = count_stable_tuples(2, 1, 2);
    CHECK(c212.count_stable == 18);
    CHECK(c212.count_w_slice == 18);  // r = 1: the slice is everything stable

    const StableCounts c122 = count_stable_tuples(1, 2, 2);
    CHECK(c122.count_stable == 3);
}

TEST_CASE("orbit counts: the headline values") {
    CHECK(quot_point_count(2, 1, 2).quot_points == 3);
    CHECK(quot_point_count(2, 1, 3).quot_points == 4);
    CHECK(quot_point_count(3, 1, 2).quot_points == 7);
    CHECK(quot_point_count(1, 2, 3).quot_points == 4);
}

TEST_CASE("divisibility and W-slice comparison fields") {
    const CensusReport report = quot_point_count(2, 2, 2);
    CHECK(report.divisibility_ok);
    CHECK(report.w_points <= report.quot_points);
    CHECK(report.count_pairs == 10);
    const mpq_class expected_fraction(report.quot_points - report.w_points, report.quot_points);
    CHECK(report.w_complement_fraction == expected_fraction);
}

TEST_CASE("product law for the W-slice count") {
    for (std::uint32_t q : {2u, 3u}) {
        const StableCounts r1 = count_stable_tuples(2, 1, q);
        const StableCounts r2 = count_stable_tuples(2, 2, q);
        mpz_class qd;
        mpz_ui_pow_ui(qd.get_mpz_t(), q, 2);
        CHECK(r2.count_w_slice == r1.count_stable * qd);
    }
}

TEST_CASE("stable counts grow at least by q^d per extra vector") {
    for (std::uint32_t q : {2u, 3u}) {
        const StableCounts r1 = count_stable_tuples(2, 1, q);
        const StableCounts r2 = count_stable_tuples(2, 2, q);
        mpz_class qd;
        mpz_ui_pow_ui(qd.get_mpz_t(), q, 2);
        CHECK(r2.count_stable >= r1.count_stable * qd);
    }
}

TEST_CASE("factorized counting agrees with raw brute force") {
    CensusOptions factorized;
    factorized.factorized = true;
    for (std::uint32_t q : {2u, 3u, 5u}) {
        CHECK(count_commuting_nilpotent_pairs(2, q, factorized) == count_commuting_nilpotent_pairs(2, q));
        const StableCounts raw = count_stable_tuples(2, 1, q);
        const StableCounts fac = count_stable_tuples(2, 1, q, factorized);
        CHECK(fac.count_stable == raw.count_stable);
        CHECK(fac.count_w_slice == raw.count_w_slice);
    }
    CHECK(count_commuting_nilpotent_pairs(3, 2, factorized) == count_commuting_nilpotent_pairs(3, 2));
    const StableCounts raw32 = count_stable_tuples(3, 2, 2);
    const StableCounts fac32 = count_stable_tuples(3, 2, 2, factorized);
    CHECK(fac32.count_stable == raw32.count_stable);
    CHECK(fac32.count_w_slice == raw32.count_w_slice);
}

TEST_CASE("worker count never changes results") {
    for (std::size_t jobs : {1u, 2u, 3u}) {
        CensusOptions options;
        options.jobs = jobs;
        CHECK(count_stable_tuples(2, 2, 3, options).count_stable == count_stable_tuples(2, 2, 3).count_stable);
        CHECK(count_commuting_nilpotent_pairs(3, 2, options) == count_commuting_nilpotent_pairs(3, 2));
    }
}

TEST_CASE("d = 4 needs the factorized mode and reproduces the cell polynomial value") {
    CensusOptions factorized;
    factorized.factorized = true;
    const CensusReport report = quot_point_count(4, 1, 2, factorized);
    CHECK(report.quot_points == 19);  // q^3 + 2q^2 + q + 1 at q = 2
    CHECK(report.divisibility_ok);
    CHECK(report.gl_order_value == 20160);
}

TEST_CASE("a squeezed budget falls back to the exact-pairs staging and agrees") {
    // fused estimate for (3,2,3) is ~45M; the exact pair count admits the
    // tuple stage under a 10M budget, so the two-stage path must engage and
    // produce identical counts
    CensusOptions squeezed;
    squeezed.budget = 10'000'000;
    const StableCounts tight = count_stable_tuples(3, 2, 3, squeezed);
    const StableCounts loose = count_stable_tuples(3, 2, 3);
    CHECK(tight.count_stable == loose.count_stable);
    CHECK(tight.count_w_slice == loose.count_w_slice);

    // same fallback on the factorized side: the a-priori weight estimate for
    // (2,2,3) is 90 * 81, over a budget of 5000, but the 12 representative
    // pairs admit the tuple stage
    CensusOptions fact_squeezed;
    fact_squeezed.factorized = true;
    fact_squeezed.budget = 5000;
    CensusOptions fact;
    fact.factorized = true;
    const StableCounts ftight = count_stable_tuples(2, 2, 3, fact_squeezed);
    const StableCounts floose = count_stable_tuples(2, 2, 3, fact);
    CHECK(ftight.count_stable == floose.count_stable);
    CHECK(ftight.count_w_slice == floose.count_w_slice);
    CHECK(ftight.count_stable == count_stable_tuples(2, 2, 3).count_stable);
}

TEST_CASE("budget guard refuses oversized runs with an estimate") {
    CensusOptions tiny;
    tiny.budget = 100;
    CHECK_THROWS_AS(count_commuting_nilpotent_pairs(2, 5, tiny), BudgetError);
    try {
        count_commuting_nilpotent_pairs(2, 5, tiny);
    } catch (const BudgetError& e) {
        CHECK(e.estimate > 100);
        CHECK(e.budget == 100);
    }
}

TEST_CASE("census preconditions") {
    CHECK_THROWS_AS(count_commuting_nilpotent_pairs(4, 2), std::invalid_argument);  // needs factorized
    CensusOptions factorized;
    factorized.factorized = true;
    CHECK_THROWS_AS(count_commuting_nilpotent_pairs(5, 2, factorized), std::invalid_argument);
    CHECK_THROWS_AS(count_stable_tuples(2, 0, 2), std::invalid_argument);
    CHECK_THROWS_AS(quot_point_count(2, 1, 6), std::invalid_argument);
}

TEST_CASE("partitions, canonical nilpotents and centralizer orders") {
    CHECK(partitions_of(4).size() == 5);
    CHECK(partitions_of(1) == std::vector<std::vector<std::size_t>>{{1}});

    const FieldSpec f3 = FieldSpec::prime_field(3);
    for (std::size_t d = 1; d <= 4; ++d) {
        for (const auto& mu : partitions_of(d)) {
            const Matrix canonical = nilpotent_of_type(f3, mu);
            CHECK(is_nilpotent(canonical));
            CHECK(jordan_type(canonical) == mu);

            // commutant dimension formula vs a direct solve
            LinearSystem system(f3, d * d);
            add_intertwine_equations(system, canonical, canonical);
            const auto solution = solve_affine(system);
            REQUIRE(solution);
            CHECK(solution->homogeneous.dim() == commutant_dimension(mu));
        }
    }

    // centralizer order vs direct enumeration of invertible commuting matrices
    for (std::uint32_t q : {2u, 3u}) {
        const FieldSpec f = FieldSpec::prime_field(q);
        for (std::size_t d = 1; d <= 3; ++d) {
            for (const auto& mu : partitions_of(d)) {
                const Matrix canonical = nilpotent_of_type(f, mu);
                mpz_class direct = 0;
                for (const Matrix& g : qftest::all_invertible(f, d)) {
                    if (g * canonical == canonical * g) direct += 1;
                }
                CHECK(nilpotent_centralizer_order(mu, q) == direct);
            }
        }
    }

    // class sizes partition the nilpotent cone: sum = q^(d^2 - d)
    for (std::uint32_t q : {2u, 3u, 5u}) {
        for (std::size_t d = 1; d <= 4; ++d) {
            mpz_class total = 0;
            for (const auto& mu : partitions_of(d)) total += nilpotent_class_size(mu, q);
            mpz_class expected;
            mpz_ui_pow_ui(expected.get_mpz_t(), q, d * d - d);
            CHECK(total == expected);
        }
    }
}

TEST_CASE("interpolation evidence: monic integer of degree d-1 for d <= 3") {
    CensusOptions factorized;
    factorized.factorized = true;
    for (std::size_t d = 1; d <= 3; ++d) {
        std::vector<std::pair<std::uint32_t, mpz_class>> points;
        for (std::uint32_t q : {2u, 3u, 5u}) {
            const StableCounts counts = count_stable_tuples(d, 1, q, factorized);
            points.emplace_back(q, mpz_class(counts.count_stable / gl_order(d, q)));
        }
        const PolynomialEvidence evidence = interpolate_point_counts(points);
        CHECK_MESSAGE(evidence.degree == d - 1, "degree off at d=", d);
        CHECK_MESSAGE(evidence.monic_integer, "not a monic integer polynomial at d=", d);
    }

    // quot(2,1,q) = q + 1 over q in {2,3,5}
    std::vector<std::pair<std::uint32_t, mpz_class>> points;
    for (std::uint32_t q : {2u, 3u, 5u}) {
        points.emplace_back(q, quot_point_count(2, 1, q).quot_points);
    }
    const PolynomialEvidence evidence = interpolate_point_counts(points);
    CHECK(evidence.degree == 1);
    CHECK(evidence.monic_integer);
    CHECK(evidence.coefficients[0] == 1);
    CHECK(evidence.coefficients[1] == 1);

    // a non-monic sample: 2q^2
    const PolynomialEvidence other = interpolate_point_counts({{1, 2}, {2, 8}, {3, 18}});
    CHECK(other.degree == 2);
    CHECK_FALSE(other.monic_integer);

    CHECK_THROWS_AS(interpolate_point_counts({{2, 1}, {2, 2}}), std::invalid_argument);
}
