#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "quotforge/census.hpp"
#include "quotforge/jordan.hpp"
#include "support/generators.hpp"

using namespace quotforge;
using qftest::Rng;

namespace {

const FieldSpec QQ = FieldSpec::rationals();

Matrix mat(const FieldSpec& f, const std::vector<std::vector<long>>& rows) {
    std::vector<Vec> converted;
    for (const auto& row : rows) {
        Vec v;
        for (long x : row) v.push_back(Scalar::of_int(f, x));
        converted.push_back(std::move(v));
    }
    return Matrix::from_rows(f, converted);
}

Vec vec(const FieldSpec& f, const std::vector<long>& entries) {
    Vec v;
    for (long x : entries) v.push_back(Scalar::of_int(f, x));
    return v;
}

// single lower-shift block of size d: e_1 -> e_2 -> ... -> e_d -> 0
Matrix shift_block(const FieldSpec& f, std::size_t d) {
    Matrix m(f, d, d);
    for (std::size_t j = 0; j + 1 < d; ++j) m.set(j + 1, j, Scalar::one(f));
    return m;
}

}  // namespace

TEST_CASE("kernel filtration examples") {
    SUBCASE("zero operator, d = 2") {
        const auto filt = kernel_filtration(Matrix(QQ, 2, 2));
        REQUIRE(filt.size() == 3);
        CHECK(filt[0].dim() == 2);
        CHECK(filt[1].dim() == 2);
        CHECK(filt[2].dim() == 0);
    }
    SUBCASE("single 3-block") {
        const auto filt = kernel_filtration(shift_block(QQ, 3));
        REQUIRE(filt.size() == 4);
        CHECK(filt[0].dim() == 3);
        CHECK(filt[1] == Subspace::span_of(QQ, 3, {vec(QQ, {0, 1, 0}), vec(QQ, {0, 0, 1})}));
        CHECK(filt[2] == Subspace::span_of(QQ, 3, {vec(QQ, {0, 0, 1})}));
        CHECK(filt[3].dim() == 0);
    }
    SUBCASE("2-dimensional shift") {
        const auto filt = kernel_filtration(mat(QQ, {{0, 0}, {1, 0}}));
        REQUIRE(filt.size() == 3);
        CHECK(filt[0].dim() == 2);
        CHECK(filt[1] == Subspace::span_of(QQ, 2, {vec(QQ, {0, 1})}));
        CHECK(filt[2].dim() == 0);
    }
    SUBCASE("each step maps into the next") {
        Rng rng(5);
        for (int trial = 0; trial < 10; ++trial) {
            const auto [b1, b2] = qftest::random_commuting_pair(rng, QQ, 4);
            const auto filt = kernel_filtration(b1);
            for (std::size_t i = 0; i + 1 < filt.size(); ++i) {
                for (const Vec& row : filt[i].basis()) {
                    CHECK(filt[i + 1].contains(b1.apply(row)));
                }
            }
        }
    }
    SUBCASE("non-nilpotent input is refused") {
        CHECK_THROWS_AS(kernel_filtration(Matrix::identity(QQ, 2)), std::invalid_argument);
    }
}

TEST_CASE("frame construction refuses bad pairs") {
    const Matrix e12 = mat(QQ, {{0, 1}, {0, 0}});
    const Matrix e21 = mat(QQ, {{0, 0}, {1, 0}});
    CHECK_THROWS_AS(compatible_jordan_frame(e12, e21), std::invalid_argument);  // non-commuting
    CHECK_THROWS_AS(compatible_jordan_frame(e12, Matrix::identity(QQ, 2)), std::invalid_argument);
    CHECK_THROWS_AS(compatible_jordan_frame(e12, Matrix(QQ, 3, 3)), ShapeError);
}

TEST_CASE("compatible frame: zero pair, d = 2") {
    const JordanFrame frame = compatible_jordan_frame(Matrix(QQ, 2, 2), Matrix(QQ, 2, 2));
    CHECK(frame.k == 2);
    CHECK(frame.mu == std::vector<std::size_t>{1, 1});
    CHECK(frame.blocks[0][0] == vec(QQ, {1, 0}));
    CHECK(frame.blocks[1][0] == vec(QQ, {0, 1}));
    CHECK(verify_frame(frame, Matrix(QQ, 2, 2), Matrix(QQ, 2, 2)).ok());
}

TEST_CASE("compatible frame: single block with B2 = B1^2") {
    const Matrix b1 = shift_block(QQ, 3);
    const Matrix b2 = b1 * b1;
    const JordanFrame frame = compatible_jordan_frame(b1, b2);
    CHECK(frame.mu == std::vector<std::size_t>{3});
    CHECK(frame.blocks[0][0] == vec(QQ, {1, 0, 0}));
    CHECK(frame.blocks[0][1] == vec(QQ, {0, 1, 0}));
    CHECK(frame.blocks[0][2] == vec(QQ, {0, 0, 1}));
    CHECK(verify_frame(frame, b1, b2).ok());
}

TEST_CASE("compatible frame: 2-dimensional shift with zero partner") {
    const Matrix b1 = mat(QQ, {{0, 0}, {1, 0}});
    const JordanFrame frame = compatible_jordan_frame(b1, Matrix(QQ, 2, 2));
    CHECK(frame.mu == std::vector<std::size_t>{2});
    CHECK(frame.blocks[0][0] == vec(QQ, {1, 0}));
    CHECK(verify_frame(frame, b1, Matrix(QQ, 2, 2)).ok());
}

TEST_CASE("verify_frame flags a broken shift chain") {
    const Matrix b1 = shift_block(QQ, 3);
    const Matrix b2 = b1 * b1;
    JordanFrame frame = compatible_jordan_frame(b1, b2);
    frame.blocks[0][1] = vec(QQ, {0, 0, 1});  // not the image of the lead
    const FrameCheck check = verify_frame(frame, b1, b2);
    CHECK_FALSE(check.shift_ok);
    CHECK_FALSE(check.ok());
}

TEST_CASE("property (b) for B2 = B1 on a single block") {
    const Matrix b1 = shift_block(QQ, 3);
    const JordanFrame frame = compatible_jordan_frame(b1, b1);
    const FrameCheck check = verify_frame(frame, b1, b1);
    CHECK(check.leading_ok);  // B2 e_{1,1} = e_{1,2} lies in B1 V
    CHECK(check.ok());
}

TEST_CASE("frame mu equals the rank-difference Jordan type") {
    Rng rng(17);
    for (int trial = 0; trial < 25; ++trial) {
        const std::size_t d = 2 + rng.next() % 4;
        const auto [b1, b2] = qftest::random_commuting_pair(rng, QQ, d);
        const JordanFrame frame = compatible_jordan_frame(b1, b2);
        CHECK(frame.mu == jordan_type(b1));
    }
}

TEST_CASE("change of basis brings B1 to the canonical block shift") {
    Rng rng(19);
    for (int trial = 0; trial < 15; ++trial) {
        const std::size_t d = 2 + rng.next() % 3;
        const auto [b1, b2] = qftest::random_commuting_pair(rng, QQ, d);
        const JordanFrame frame = compatible_jordan_frame(b1, b2);

        // block-major basis order: the matrix of B1 must be exactly the
        // canonical shift of type mu
        std::vector<Vec> block_major;
        for (const auto& block : frame.blocks) {
            block_major.insert(block_major.end(), block.begin(), block.end());
        }
        CHECK(matrix_in_basis(b1, block_major) == nilpotent_of_type(QQ, frame.mu));
    }
}

TEST_CASE("exhaustive frames over GF(2), d <= 3, and GF(3), d <= 2") {
    for (std::uint32_t p : {2u, 3u}) {
        const FieldSpec f = FieldSpec::prime_field(p);
        const std::size_t dmax = p == 2 ? 3 : 2;
        for (std::size_t d = 1; d <= dmax; ++d) {
            for (const auto& [b1, b2] : qftest::all_commuting_nilpotent_pairs(f, d)) {
                const JordanFrame frame = compatible_jordan_frame(b1, b2);
                const FrameCheck check = verify_frame(frame, b1, b2);
                REQUIRE_MESSAGE(check.ok(), "frame verification failed for some pair, d=", d, " p=", p);
                CHECK(frame.mu == jordan_type(b1));
            }
        }
    }
}

TEST_CASE("frame JSON ordering data: interleaved basis covers all vectors") {
    Rng rng(29);
    const auto [b1, b2] = qftest::random_commuting_pair(rng, QQ, 5);
    const JordanFrame frame = compatible_jordan_frame(b1, b2);
    const auto basis = frame.interleaved_basis();
    CHECK(basis.size() == 5);
    CHECK(Subspace::span_of(QQ, 5, basis).dim() == 5);
}
