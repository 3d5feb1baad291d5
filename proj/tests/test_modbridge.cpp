#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "quotforge/census.hpp"
#include "quotforge/jordan.hpp"
#include "quotforge/modbridge.hpp"
#include "support/generators.hpp"

using namespace quotforge;
using qftest::Rng;

namespace {

const FieldSpec QQ = FieldSpec::rationals();

Vec vec(const FieldSpec& f, const std::vector<long>& entries) {
    Vec v;
    for (long x : entries) v.push_back(Scalar::of_int(f, x));
    return v;
}

Vec monomial_elt(const TruncatedFreeModule& ambient, std::size_t a, std::size_t b, std::size_t j) {
    Vec e = ambient.zero_element();
    e[ambient.index_of({a, b, j})] = Scalar::one(ambient.field());
    return e;
}

std::vector<std::size_t> conjugate_partition(const std::vector<std::size_t>& mu) {
    std::vector<std::size_t> out;
    for (std::size_t k = 1; !mu.empty() && k <= mu.front(); ++k) {
        std::size_t count = 0;
        for (std::size_t part : mu) {
            if (part >= k) ++count;
        }
        out.push_back(count);
    }
    return out;
}

}  // namespace

TEST_CASE("module layout: graded order and dimension") {
    const TruncatedFreeModule m(QQ, 2, 3);
    CHECK(m.dim() == 2 * 3 * 4 / 2);
    CHECK(m.monomial_at(0) == TruncatedFreeModule::Monomial{0, 0, 1});
    CHECK(m.monomial_at(1) == TruncatedFreeModule::Monomial{0, 0, 2});
    CHECK(m.monomial_at(2) == TruncatedFreeModule::Monomial{1, 0, 1});  // higher x first
    CHECK(m.monomial_at(4) == TruncatedFreeModule::Monomial{0, 1, 1});
    for (std::size_t idx = 0; idx < m.dim(); ++idx) {
        CHECK(m.index_of(m.monomial_at(idx)) == idx);
    }
    CHECK_THROWS_AS(m.index_of({2, 1, 1}), std::invalid_argument);  // degree 3 truncated away
}

TEST_CASE("multiplication shifts exponents and truncates") {
    const TruncatedFreeModule m(QQ, 1, 3);
    const Vec one = monomial_elt(m, 0, 0, 1);
    CHECK(m.mul_x(one) == monomial_elt(m, 1, 0, 1));
    CHECK(m.mul_y(m.mul_x(one)) == monomial_elt(m, 1, 1, 1));
    CHECK(is_zero_vec(m.mul_x(m.mul_x(m.mul_x(one)))));  // degree 3 dies
}

TEST_CASE("closure examples") {
    SUBCASE("generators spanning everything") {
        const TruncatedFreeModule m(QQ, 2, 2);
        const auto pres = submodule_closure({m.generator(1), m.generator(2)}, m);
        CHECK(pres.colength == 0);
        CHECK(pres.closure.dim() == m.dim());
    }
    SUBCASE("r=1, d=2, generators {x, y}") {
        const TruncatedFreeModule m(QQ, 1, 2);
        const auto pres = submodule_closure({monomial_elt(m, 1, 0, 1), monomial_elt(m, 0, 1, 1)}, m);
        CHECK(pres.closure.dim() == 2);
        CHECK(pres.colength == 1);
        CHECK(pres.closure.contains(monomial_elt(m, 1, 0, 1)));
        CHECK_FALSE(pres.closure.contains(monomial_elt(m, 0, 0, 1)));
    }
    SUBCASE("r=1, d=2, generator y - x: the tangent-direction ideal") {
        const TruncatedFreeModule m(QQ, 1, 2);
        const Vec gen = vec_sub(monomial_elt(m, 0, 1, 1), monomial_elt(m, 1, 0, 1));
        const auto pres = submodule_closure({gen}, m);
        CHECK(pres.closure.dim() == 1);
        CHECK(pres.colength == 2);
        CHECK(pres.closure.contains(gen));
    }
}

TEST_CASE("closure is idempotent and monotone") {
    Rng rng(51);
    for (int trial = 0; trial < 15; ++trial) {
        const std::size_t r = 1 + rng.next() % 2;
        const std::size_t d = 1 + rng.next() % 3;
        const TruncatedFreeModule m(QQ, r, d);
        std::vector<Vec> gens;
        const std::size_t count = 1 + rng.next() % 3;
        for (std::size_t g = 0; g < count; ++g) {
            Vec v = m.zero_element();
            for (std::size_t i = 0; i < m.dim(); ++i) v[i] = rng.small_scalar(QQ, -2, 2);
            gens.push_back(std::move(v));
        }
        const auto once = submodule_closure(gens, m);
        const auto twice = submodule_closure(once.closure.basis(), m);
        CHECK(once.closure == twice.closure);

        std::vector<Vec> more = gens;
        Vec extra = m.zero_element();
        for (std::size_t i = 0; i < m.dim(); ++i) extra[i] = rng.small_scalar(QQ, -2, 2);
        more.push_back(extra);
        const auto bigger = submodule_closure(more, m);
        CHECK(bigger.closure.contains(once.closure));
    }
}

TEST_CASE("quotient datum: monomial ideal (y, x^2) in length 2") {
    const TruncatedFreeModule m(QQ, 1, 2);
    // x^2 is already past the truncation, so the ideal is generated by y here
    const auto pres = submodule_closure({monomial_elt(m, 0, 1, 1)}, m);
    REQUIRE(pres.colength == 2);
    const QuotDatum datum = quotient_datum(pres);
    CHECK(datum.d == 2);
    CHECK(datum.r == 1);
    // quotient basis {1, x}: multiplication by x is the shift, by y is zero
    Matrix expected_b1(QQ, 2, 2);
    expected_b1.set(1, 0, Scalar::one(QQ));
    CHECK(datum.b1 == expected_b1);
    CHECK(datum.b2.is_zero());
    CHECK(datum.vectors[0] == vec(QQ, {1, 0}));
    CHECK(is_stable(datum));
}

TEST_CASE("quotient datum: length-1 case with r = 2") {
    const TruncatedFreeModule m(QQ, 2, 1);
    const auto pres = submodule_closure({m.generator(2)}, m);
    REQUIRE(pres.colength == 1);
    const QuotDatum datum = quotient_datum(pres);
    CHECK(datum.b1.is_zero());
    CHECK(datum.b2.is_zero());
    CHECK(datum.vectors[0] == vec(QQ, {1}));
    CHECK(datum.vectors[1] == vec(QQ, {0}));
}

TEST_CASE("quotient datum: y - x identifies the two multiplications") {
    const TruncatedFreeModule m(QQ, 1, 2);
    const Vec gen = vec_sub(monomial_elt(m, 0, 1, 1), monomial_elt(m, 1, 0, 1));
    const auto pres = submodule_closure({gen}, m);
    const QuotDatum datum = quotient_datum(pres);
    CHECK(datum.b1 == datum.b2);
    CHECK_FALSE(datum.b1.is_zero());
    CHECK(is_stable(datum));
}

TEST_CASE("quotient datum rejects colength mismatches") {
    const TruncatedFreeModule m(QQ, 1, 2);
    const auto everything = submodule_closure({m.generator(1)}, m);
    CHECK(everything.colength == 0);
    CHECK_THROWS_AS(quotient_datum(everything), std::invalid_argument);
}

TEST_CASE("presentation of a datum: length 1") {
    const QuotDatum datum = make_datum(Matrix(QQ, 1, 1), Matrix(QQ, 1, 1), {vec(QQ, {1})});
    const auto pres = presentation_of_datum(datum);
    CHECK(pres.ambient.dim() == 1);
    CHECK(pres.closure.dim() == 0);
    CHECK(pres.colength == 1);
}

TEST_CASE("presentation of the shift datum contains the class of y") {
    Matrix b1(QQ, 2, 2);
    b1.set(1, 0, Scalar::one(QQ));
    const QuotDatum datum = make_datum(b1, Matrix(QQ, 2, 2), {vec(QQ, {1, 0})});
    const auto pres = presentation_of_datum(datum);
    CHECK(pres.colength == 2);
    CHECK(pres.closure.contains(monomial_elt(pres.ambient, 0, 1, 1)));
    CHECK_FALSE(pres.closure.contains(monomial_elt(pres.ambient, 1, 0, 1)));
}

TEST_CASE("presentation refuses unstable data") {
    const QuotDatum unstable = make_datum(Matrix(QQ, 2, 2), Matrix(QQ, 2, 2), {vec(QQ, {1, 0})});
    CHECK_THROWS_AS(presentation_of_datum(unstable), std::invalid_argument);
}

TEST_CASE("support check") {
    Matrix b1(QQ, 2, 2);
    b1.set(1, 0, Scalar::one(QQ));
    CHECK(support_check(b1, Matrix(QQ, 2, 2)));
    CHECK_FALSE(support_check(b1, Matrix::identity(QQ, 2)));
    CHECK_FALSE(support_check(b1, b1 + Matrix::identity(QQ, 2)));  // unipotent
}

TEST_CASE("round trip is orbit-equivalent to the original") {
    Rng rng(53);
    for (int trial = 0; trial < 12; ++trial) {
        const std::size_t d = 1 + rng.next() % 4;
        const std::size_t r = 1 + rng.next() % 2;
        const FieldSpec f = trial % 2 == 0 ? QQ : FieldSpec::prime_field(trial % 4 == 1 ? 2 : 5);
        const QuotDatum datum = qftest::random_stable_datum(rng, f, d, r);
        const auto pres = presentation_of_datum(datum);
        CHECK(pres.colength == d);
        const QuotDatum back = quotient_datum(pres);
        const auto witness = orbit_witness(datum, back);
        CHECK(witness.has_value());
    }
}

TEST_CASE("monomial staircases realize every Jordan type, d <= 4") {
    for (std::size_t d = 1; d <= 4; ++d) {
        for (const auto& mu : partitions_of(d)) {
            const TruncatedFreeModule m(QQ, 1, d);
            // cells (a, b) with a < mu[b]; generators: all monomials outside
            std::vector<Vec> gens;
            for (std::size_t idx = 0; idx < m.dim(); ++idx) {
                const auto& mono = m.monomial_at(idx);
                const bool inside = mono.b < mu.size() && mono.a < mu[mono.b];
                if (!inside) gens.push_back(monomial_elt(m, mono.a, mono.b, 1));
            }
            const auto pres = submodule_closure(gens, m);
            REQUIRE(pres.colength == d);
            const QuotDatum datum = quotient_datum(pres);
            CHECK(jordan_type(datum.b1) == mu);
            CHECK(jordan_type(datum.b2) == conjugate_partition(mu));
        }
    }
}
