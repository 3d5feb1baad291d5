#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include <gmpxx.h>

#include "quotforge/matrix.hpp"

namespace quotforge {

/// Thrown when an enumeration would exceed the configured budget; carries
/// the estimated inner-loop count.
struct BudgetError : std::runtime_error {
    BudgetError(const std::string& what, mpz_class estimate_, std::uint64_t budget_)
        : std::runtime_error(what), estimate(std::move(estimate_)), budget(budget_) {}
    mpz_class estimate;
    std::uint64_t budget;
};

struct CensusOptions {
    bool factorized = false;  // enumerate one B1 per Jordan type, weight by class size
    std::size_t jobs = 1;     // worker count; results are bit-identical for any value
    std::uint64_t budget = 1'000'000'000ULL;
};

/// Exact counts over GF(q) for one (d, r, q) run.
struct CensusReport {
    std::uint32_t q = 0;
    std::size_t d = 0;
    std::size_t r = 0;
    mpz_class count_pairs;    // commuting nilpotent pairs
    mpz_class count_stable;   // stable tuples
    mpz_class count_w_slice;  // stable tuples whose first vector is cyclic
    mpz_class gl_order_value;
    mpz_class quot_points;  // count_stable / gl_order
    mpz_class w_points;     // count_w_slice / gl_order
    bool divisibility_ok = false;
    mpq_class w_complement_fraction;  // (quot_points - w_points) / quot_points
    double elapsed_seconds = 0.0;
    bool factorized = false;
    std::size_t jobs = 1;
};

/// |GL_d(F_q)| = prod_{i=0}^{d-1} (q^d - q^i).
mpz_class gl_order(std::size_t d, std::uint32_t q);

/// Exact number of commuting nilpotent pairs on F_q^d. Full brute force for
/// d <= 3; d = 4 requires the factorized mode.
mpz_class count_commuting_nilpotent_pairs(std::size_t d, std::uint32_t q,
                                          const CensusOptions& options = {});

struct StableCounts {
    mpz_class count_stable;
    mpz_class count_w_slice;
};

/// Exact stable-tuple and W-slice counts by enumerating vector tuples per
/// commuting pair.
StableCounts count_stable_tuples(std::size_t d, std::size_t r, std::uint32_t q,
                                 const CensusOptions& options = {});

/// Full census run: counts, exact orbit quotients (divisibility asserted)
/// and the W-slice comparison.
CensusReport quot_point_count(std::size_t d, std::size_t r, std::uint32_t q,
                              const CensusOptions& options = {});

/// All partitions of d, non-increasing parts, descending lexicographic order.
std::vector<std::vector<std::size_t>> partitions_of(std::size_t d);

/// The block-shift nilpotent with Jordan type mu.
Matrix nilpotent_of_type(const FieldSpec& f, const std::vector<std::size_t>& mu);

/// dim of the commuting algebra of a nilpotent of type mu: sum min(mu_i, mu_j).
std::size_t commutant_dimension(const std::vector<std::size_t>& mu);

/// Order of the GL centralizer of a nilpotent of type mu over GF(q)
/// (q^{sum (mu'_i)^2} * prod_s prod_{j<=m_s} (1 - q^-j), as an integer).
mpz_class nilpotent_centralizer_order(const std::vector<std::size_t>& mu, std::uint32_t q);

/// Conjugacy class size |GL| / |centralizer| (exact division).
mpz_class nilpotent_class_size(const std::vector<std::size_t>& mu, std::uint32_t q);

/// Lagrange interpolation of (q, count) points over the rationals;
/// coefficients are low degree first with trailing zeros trimmed.
struct PolynomialEvidence {
    std::vector<mpq_class> coefficients;
    std::size_t degree = 0;
    bool monic_integer = false;
};

PolynomialEvidence interpolate_point_counts(
    const std::vector<std::pair<std::uint32_t, mpz_class>>& points);

}  // namespace quotforge
