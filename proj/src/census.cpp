#include "quotforge/census.hpp"

#include <array>
#include <chrono>
#include <thread>

namespace quotforge {

namespace {

// ---------------------------------------------------------------------------
// Word-sized GF(p) kernels for the enumeration inner loops. The public
// Scalar/Matrix path stays the reference; these are equivalence-tested
// against it over exhaustive small domains.
// ---------------------------------------------------------------------------

constexpr std::size_t kMaxD = 6;
constexpr std::size_t kMaxD2 = kMaxD * kMaxD;

struct SmallMat {
    std::array<std::uint32_t, kMaxD2> e{};
};

using SmallVec = std::array<std::uint32_t, kMaxD>;

void mat_mul(const SmallMat& a, const SmallMat& b, SmallMat& out, std::size_t d, std::uint64_t p) {
    for (std::size_t i = 0; i < d; ++i) {
        for (std::size_t j = 0; j < d; ++j) {
            std::uint64_t acc = 0;
            for (std::size_t k = 0; k < d; ++k) {
                acc += static_cast<std::uint64_t>(a.e[i * d + k]) * b.e[k * d + j] % p;
            }
            out.e[i * d + j] = static_cast<std::uint32_t>(acc % p);
        }
    }
}

bool mat_is_zero(const SmallMat& m, std::size_t d) {
    for (std::size_t k = 0; k < d * d; ++k) {
        if (m.e[k] != 0) return false;
    }
    return true;
}

void mat_add_inplace(SmallMat& a, const SmallMat& b, std::size_t d, std::uint32_t p) {
    for (std::size_t k = 0; k < d * d; ++k) {
        const std::uint32_t s = a.e[k] + b.e[k];
        a.e[k] = s >= p ? s - p : s;
    }
}

bool mat_is_nilpotent(const SmallMat& m, std::size_t d, std::uint64_t p) {
    std::uint64_t trace = 0;
    for (std::size_t i = 0; i < d; ++i) trace += m.e[i * d + i];
    if (trace % p != 0) return false;
    SmallMat w = m;
    SmallMat tmp;
    std::size_t e = 1;
    while (true) {
        if (mat_is_zero(w, d)) return true;
        if (e >= d) return false;
        mat_mul(w, w, tmp, d, p);
        w = tmp;
        e *= 2;
    }
}

SmallMat decode_matrix(std::uint64_t index, std::size_t d, std::uint32_t p) {
    SmallMat m;
    for (std::size_t k = 0; k < d * d; ++k) {
        m.e[k] = static_cast<std::uint32_t>(index % p);
        index /= p;
    }
    return m;
}

// dense RREF over GF(p); rows of length `cols`, returns pivot columns
std::vector<std::size_t> fp_rref(std::vector<std::vector<std::uint32_t>>& rows,
                                 std::size_t cols, std::uint32_t p) {
    std::vector<std::size_t> pivots;
    std::size_t cur = 0;
    for (std::size_t col = 0; col < cols && cur < rows.size(); ++col) {
        std::size_t sel = cur;
        while (sel < rows.size() && rows[sel][col] == 0) ++sel;
        if (sel == rows.size()) continue;
        std::swap(rows[cur], rows[sel]);
        const std::uint64_t inv = pow_mod(rows[cur][col], p - 2, p);
        for (std::size_t j = col; j < cols; ++j) {
            rows[cur][j] = static_cast<std::uint32_t>(inv * rows[cur][j] % p);
        }
        for (std::size_t i = 0; i < rows.size(); ++i) {
            if (i == cur || rows[i][col] == 0) continue;
            const std::uint64_t f = rows[i][col];
            for (std::size_t j = col; j < cols; ++j) {
                const std::uint64_t sub = f * rows[cur][j] % p;
                rows[i][j] = static_cast<std::uint32_t>((rows[i][j] + p - sub) % p);
            }
        }
        pivots.push_back(col);
        ++cur;
    }
    return pivots;
}

// basis of {X : X B = B X} as flat d*d coefficient rows
std::vector<SmallMat> fp_commutant_basis(const SmallMat& b, std::size_t d, std::uint32_t p) {
    const std::size_t n = d * d;
    std::vector<std::vector<std::uint32_t>> rows;
    rows.reserve(n);
    for (std::size_t i = 0; i < d; ++i) {
        for (std::size_t j = 0; j < d; ++j) {
            std::vector<std::uint32_t> row(n, 0);
            for (std::size_t k = 0; k < d; ++k) {
                row[i * d + k] = (row[i * d + k] + b.e[k * d + j]) % p;
                row[k * d + j] = (row[k * d + j] + p - b.e[i * d + k] % p) % p;
            }
            rows.push_back(std::move(row));
        }
    }
    const std::vector<std::size_t> pivots = fp_rref(rows, n, p);
    std::vector<bool> is_pivot(n, false);
    for (std::size_t c : pivots) is_pivot[c] = true;

    std::vector<SmallMat> basis;
    for (std::size_t c = 0; c < n; ++c) {
        if (is_pivot[c]) continue;
        SmallMat v;
        v.e[c] = 1;
        for (std::size_t i = 0; i < pivots.size(); ++i) {
            v.e[pivots[i]] = (p - rows[i][c]) % p;
        }
        basis.push_back(v);
    }
    return basis;
}

std::size_t fp_commutant_dim(const SmallMat& b, std::size_t d, std::uint32_t p) {
    const std::size_t n = d * d;
    std::vector<std::vector<std::uint32_t>> rows;
    rows.reserve(n);
    for (std::size_t i = 0; i < d; ++i) {
        for (std::size_t j = 0; j < d; ++j) {
            std::vector<std::uint32_t> row(n, 0);
            for (std::size_t k = 0; k < d; ++k) {
                row[i * d + k] = (row[i * d + k] + b.e[k * d + j]) % p;
                row[k * d + j] = (row[k * d + j] + p - b.e[i * d + k] % p) % p;
            }
            rows.push_back(std::move(row));
        }
    }
    return n - fp_rref(rows, n, p).size();
}

// row-echelon accumulator for stability closures
struct FpReducer {
    std::array<SmallVec, kMaxD> rows;
    std::array<std::size_t, kMaxD> lead{};
    std::size_t dim = 0;

    bool insert(SmallVec v, std::size_t d, std::uint32_t p) {
        for (std::size_t i = 0; i < dim; ++i) {
            const std::uint64_t c = v[lead[i]];
            if (c == 0) continue;
            for (std::size_t j = 0; j < d; ++j) {
                const std::uint64_t sub = c * rows[i][j] % p;
                v[j] = static_cast<std::uint32_t>((v[j] + p - sub) % p);
            }
        }
        std::size_t l = 0;
        while (l < d && v[l] == 0) ++l;
        if (l == d) return false;
        const std::uint64_t inv = pow_mod(v[l], p - 2, p);
        for (std::size_t j = 0; j < d; ++j) {
            v[j] = static_cast<std::uint32_t>(inv * v[j] % p);
        }
        rows[dim] = v;
        lead[dim] = l;
        ++dim;
        return true;
    }
};

void mat_apply(const SmallMat& m, const SmallVec& v, SmallVec& out, std::size_t d, std::uint64_t p) {
    for (std::size_t i = 0; i < d; ++i) {
        std::uint64_t acc = 0;
        for (std::size_t j = 0; j < d; ++j) {
            acc += static_cast<std::uint64_t>(m.e[i * d + j]) * v[j] % p;
        }
        out[i] = static_cast<std::uint32_t>(acc % p);
    }
}

struct TupleClass {
    bool stable = false;
    bool w_slice = false;
};

// Krylov closure; vectors are the rows of `tuple` (r vectors of length d)
TupleClass classify_tuple(const SmallMat& b1, const SmallMat& b2,
                          const std::array<SmallVec, kMaxD>& tuple, std::size_t r,
                          std::size_t d, std::uint32_t p) {
    FpReducer red;
    std::array<SmallVec, kMaxD> queue;
    std::size_t head = 0, tail = 0;

    auto admit = [&](const SmallVec& v) {
        if (red.insert(v, d, p)) queue[tail++] = v;
    };
    auto expand = [&]() {
        SmallVec img;
        while (head < tail && red.dim < d) {
            const SmallVec v = queue[head++];
            mat_apply(b1, v, img, d, p);
            admit(img);
            if (red.dim == d) return;
            mat_apply(b2, v, img, d, p);
            admit(img);
        }
    };

    admit(tuple[0]);
    expand();
    if (red.dim == d) return {true, true};

    for (std::size_t j = 1; j < r; ++j) {
        admit(tuple[j]);
        expand();
        if (red.dim == d) return {true, false};
    }
    return {false, false};
}

// ---------------------------------------------------------------------------
// Enumeration drivers
// ---------------------------------------------------------------------------

struct Totals {
    std::uint64_t pairs = 0;
    std::uint64_t stable = 0;
    std::uint64_t w_slice = 0;
};

mpz_class mpz_pow(std::uint64_t base, std::size_t exp) {
    mpz_class out;
    mpz_ui_pow_ui(out.get_mpz_t(), base, exp);
    return out;
}

// enumerates the commutant of b1 and, per nilpotent partner, the vector
// tuples (when r > 0); returns raw counts for this b1
Totals process_b1(const SmallMat& b1, std::size_t d, std::uint32_t p, std::size_t r) {
    Totals totals;
    const std::vector<SmallMat> basis = fp_commutant_basis(b1, d, p);
    const std::size_t c = basis.size();

    std::vector<std::uint32_t> digits(c, 0);
    SmallMat b2;  // runs through the commutant incrementally

    auto advance = [&]() -> bool {
        for (std::size_t pos = 0; pos < c; ++pos) {
            mat_add_inplace(b2, basis[pos], d, p);
            if (++digits[pos] < p) return true;
            digits[pos] = 0;
        }
        return false;
    };

    while (true) {
        if (mat_is_nilpotent(b2, d, p)) {
            ++totals.pairs;
            if (r > 0) {
                std::array<SmallVec, kMaxD> tuple{};
                const std::size_t coords = r * d;
                std::vector<std::uint32_t> vdigits(coords, 0);
                while (true) {
                    const TupleClass cls = classify_tuple(b1, b2, tuple, r, d, p);
                    if (cls.stable) ++totals.stable;
                    if (cls.w_slice) ++totals.w_slice;
                    std::size_t pos = 0;
                    for (; pos < coords; ++pos) {
                        std::uint32_t& digit = vdigits[pos];
                        std::uint32_t& coord = tuple[pos / d][pos % d];
                        if (++digit < p) {
                            coord = digit;
                            break;
                        }
                        digit = 0;
                        coord = 0;
                    }
                    if (pos == coords) break;
                }
            }
        }
        if (!advance()) break;
    }
    return totals;
}

void check_census_args(std::size_t d, std::size_t r, std::uint32_t q, const CensusOptions& options) {
    if (d == 0) throw std::invalid_argument("d must be positive");
    if (r == 0) throw std::invalid_argument("r must be positive");
    if (!is_prime(q)) throw std::invalid_argument("census needs a prime q");
    if (!options.factorized && d > 3) {
        throw std::invalid_argument("full brute force is limited to d <= 3; use the factorized mode");
    }
    if (options.factorized && d > 4) {
        throw std::invalid_argument("censuses beyond d = 4 are out of scope");
    }
    if (d > kMaxD) throw std::invalid_argument("d exceeds the enumeration kernel bound");
}

// nilpotent scan for the raw mode: flat indices plus the inner-loop weight
struct NilpotentScan {
    std::vector<std::uint64_t> indices;
    mpz_class weight;  // sum of q^{commutant dim}
};

NilpotentScan scan_nilpotents(std::size_t d, std::uint32_t p, std::uint64_t budget) {
    const mpz_class outer = mpz_pow(p, d * d);
    if (outer > mpz_class(static_cast<unsigned long>(budget))) {
        throw BudgetError("matrix enumeration exceeds the budget", outer, budget);
    }
    NilpotentScan scan;
    const std::uint64_t total = mpz_get_ui(outer.get_mpz_t());
    for (std::uint64_t idx = 0; idx < total; ++idx) {
        const SmallMat m = decode_matrix(idx, d, p);
        if (!mat_is_nilpotent(m, d, p)) continue;
        scan.indices.push_back(idx);
        scan.weight += mpz_pow(p, fp_commutant_dim(m, d, p));
    }
    return scan;
}

// splits [0, n) into `jobs` slices and merges per-slice totals in order
template <typename PerItem>
std::array<mpz_class, 3> parallel_totals(std::size_t n, std::size_t jobs, PerItem per_item) {
    if (jobs == 0) jobs = 1;
    if (jobs > n && n > 0) jobs = n;
    std::vector<std::array<mpz_class, 3>> partial(jobs);
    std::vector<std::thread> workers;
    workers.reserve(jobs);
    for (std::size_t w = 0; w < jobs; ++w) {
        const std::size_t lo = n * w / jobs;
        const std::size_t hi = n * (w + 1) / jobs;
        workers.emplace_back([&, w, lo, hi]() {
            for (std::size_t i = lo; i < hi; ++i) per_item(i, partial[w]);
        });
    }
    for (std::thread& t : workers) t.join();
    std::array<mpz_class, 3> merged;
    for (const auto& part : partial) {
        merged[0] += part[0];
        merged[1] += part[1];
        merged[2] += part[2];
    }
    return merged;
}

SmallMat small_nilpotent_of_type(const std::vector<std::size_t>& mu, std::size_t d) {
    SmallMat m;
    std::size_t offset = 0;
    for (const std::size_t part : mu) {
        for (std::size_t j = 0; j + 1 < part; ++j) {
            m.e[(offset + j + 1) * d + (offset + j)] = 1;
        }
        offset += part;
    }
    return m;
}

struct CensusCounts {
    mpz_class pairs;
    mpz_class stable;
    mpz_class w_slice;
};

// shared driver: r == 0 counts pairs only
CensusCounts run_census(std::size_t d, std::size_t r, std::uint32_t q, const CensusOptions& options) {
    check_census_args(d, r == 0 ? 1 : r, q, options);
    const mpz_class budget_z(static_cast<unsigned long>(options.budget));
    const mpz_class tuple_count = r > 0 ? mpz_pow(q, r * d) : mpz_class(1);

    if (options.factorized) {
        const auto mus = partitions_of(d);
        mpz_class weight = 0;
        for (const auto& mu : mus) weight += mpz_pow(q, commutant_dimension(mu));
        if (weight * tuple_count > budget_z) {
            if (weight > budget_z) {
                throw BudgetError("factorized enumeration exceeds the budget", weight, options.budget);
            }
            // exact per-representative pair counts give a tighter tuple estimate
            const auto rep_pairs = parallel_totals(
                mus.size(), options.jobs, [&](std::size_t i, std::array<mpz_class, 3>& acc) {
                    acc[0] += process_b1(small_nilpotent_of_type(mus[i], d), d, q, 0).pairs;
                });
            const mpz_class tuple_estimate = rep_pairs[0] * tuple_count;
            if (tuple_estimate > budget_z) {
                throw BudgetError("factorized tuple enumeration exceeds the budget", tuple_estimate,
                                  options.budget);
            }
        }
        const auto merged = parallel_totals(
            mus.size(), options.jobs, [&](std::size_t i, std::array<mpz_class, 3>& acc) {
                const Totals t = process_b1(small_nilpotent_of_type(mus[i], d), d, q, r);
                const mpz_class size = nilpotent_class_size(mus[i], q);
                acc[0] += size * t.pairs;
                acc[1] += size * t.stable;
                acc[2] += size * t.w_slice;
            });
        return CensusCounts{merged[0], merged[1], merged[2]};
    }

    const NilpotentScan scan = scan_nilpotents(d, q, options.budget);
    if (scan.weight * tuple_count > budget_z) {
        // the fused pass would be too big; see whether the exact pair count
        // admits the tuple stage on its own
        if (scan.weight > budget_z) {
            throw BudgetError("commutant enumeration exceeds the budget", scan.weight, options.budget);
        }
        const auto pairs_only = parallel_totals(
            scan.indices.size(), options.jobs, [&](std::size_t i, std::array<mpz_class, 3>& acc) {
                const Totals t = process_b1(decode_matrix(scan.indices[i], d, q), d, q, 0);
                acc[0] += t.pairs;
            });
        const mpz_class tuple_estimate = pairs_only[0] * tuple_count;
        if (r == 0) return CensusCounts{pairs_only[0], 0, 0};
        if (tuple_estimate > budget_z) {
            throw BudgetError("tuple enumeration exceeds the budget", tuple_estimate, options.budget);
        }
    }
    const auto merged = parallel_totals(
        scan.indices.size(), options.jobs, [&](std::size_t i, std::array<mpz_class, 3>& acc) {
            const Totals t = process_b1(decode_matrix(scan.indices[i], d, q), d, q, r);
            acc[0] += t.pairs;
            acc[1] += t.stable;
            acc[2] += t.w_slice;
        });
    return CensusCounts{merged[0], merged[1], merged[2]};
}

}  // namespace

mpz_class gl_order(std::size_t d, std::uint32_t q) {
    if (d == 0) throw std::invalid_argument("d must be positive");
    if (!is_prime(q)) throw std::invalid_argument("gl_order needs a prime q");
    const mpz_class qd = mpz_pow(q, d);
    mpz_class out = 1;
    for (std::size_t i = 0; i < d; ++i) {
        out *= qd - mpz_pow(q, i);
    }
    return out;
}

mpz_class count_commuting_nilpotent_pairs(std::size_t d, std::uint32_t q, const CensusOptions& options) {
    return run_census(d, 0, q, options).pairs;
}

StableCounts count_stable_tuples(std::size_t d, std::size_t r, std::uint32_t q, const CensusOptions& options) {
    if (r == 0) throw std::invalid_argument("r must be positive");
    const CensusCounts counts = run_census(d, r, q, options);
    return StableCounts{counts.stable, counts.w_slice};
}

CensusReport quot_point_count(std::size_t d, std::size_t r, std::uint32_t q, const CensusOptions& options) {
    if (r == 0) throw std::invalid_argument("r must be positive");
    const auto t0 = std::chrono::steady_clock::now();

    CensusReport report;
    report.q = q;
    report.d = d;
    report.r = r;
    report.factorized = options.factorized;
    report.jobs = options.jobs == 0 ? 1 : options.jobs;

    // tuple stage first: its budget estimate is cheap and refuses oversized
    // runs before any heavy pair scan
    const CensusCounts counts = run_census(d, r, q, options);
    report.count_stable = counts.stable;
    report.count_w_slice = counts.w_slice;
    report.count_pairs = count_commuting_nilpotent_pairs(d, q, options);
    report.gl_order_value = gl_order(d, q);

    report.divisibility_ok = mpz_divisible_p(report.count_stable.get_mpz_t(), report.gl_order_value.get_mpz_t()) &&
                             mpz_divisible_p(report.count_w_slice.get_mpz_t(), report.gl_order_value.get_mpz_t());
    if (!report.divisibility_ok) {
        throw std::logic_error("group order does not divide the stable counts (free action violated)");
    }
    report.quot_points = report.count_stable / report.gl_order_value;
    report.w_points = report.count_w_slice / report.gl_order_value;
    if (report.w_points > report.quot_points) {
        throw std::logic_error("W-slice orbit count exceeds the total orbit count");
    }
    if (report.quot_points != 0) {
        report.w_complement_fraction = mpq_class(report.quot_points - report.w_points, report.quot_points);
        report.w_complement_fraction.canonicalize();
    }

    report.elapsed_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    return report;
}

std::vector<std::vector<std::size_t>> partitions_of(std::size_t d) {
    std::vector<std::vector<std::size_t>> out;
    std::vector<std::size_t> current;
    auto recurse = [&](auto&& self, std::size_t remaining, std::size_t max_part) -> void {
        if (remaining == 0) {
            out.push_back(current);
            return;
        }
        for (std::size_t part = std::min(remaining, max_part); part >= 1; --part) {
            current.push_back(part);
            self(self, remaining - part, part);
            current.pop_back();
        }
    };
    recurse(recurse, d, d);
    return out;
}

Matrix nilpotent_of_type(const FieldSpec& f, const std::vector<std::size_t>& mu) {
    std::size_t d = 0;
    for (std::size_t part : mu) {
        if (part == 0) throw std::invalid_argument("partition parts must be positive");
        d += part;
    }
    Matrix m(f, d, d);
    std::size_t offset = 0;
    for (const std::size_t part : mu) {
        for (std::size_t j = 0; j + 1 < part; ++j) {
            m.set(offset + j + 1, offset + j, Scalar::one(f));
        }
        offset += part;
    }
    return m;
}

std::size_t commutant_dimension(const std::vector<std::size_t>& mu) {
    std::size_t dim = 0;
    for (std::size_t a : mu) {
        for (std::size_t b : mu) dim += std::min(a, b);
    }
    return dim;
}

mpz_class nilpotent_centralizer_order(const std::vector<std::size_t>& mu, std::uint32_t q) {
    if (!is_prime(q)) throw std::invalid_argument("centralizer order needs a prime q");
    std::size_t d = 0;
    for (std::size_t part : mu) d += part;
    if (d == 0) throw std::invalid_argument("empty partition");

    std::vector<std::size_t> multiplicity(d + 1, 0);
    for (std::size_t part : mu) multiplicity[part] += 1;

    std::size_t exponent = commutant_dimension(mu);
    mpz_class out = 1;
    for (std::size_t s = 1; s <= d; ++s) {
        const std::size_t m = multiplicity[s];
        exponent -= m * (m + 1) / 2;
        for (std::size_t j = 1; j <= m; ++j) {
            out *= mpz_pow(q, j) - 1;
        }
    }
    out *= mpz_pow(q, exponent);
    return out;
}

mpz_class nilpotent_class_size(const std::vector<std::size_t>& mu, std::uint32_t q) {
    std::size_t d = 0;
    for (std::size_t part : mu) d += part;
    const mpz_class centralizer = nilpotent_centralizer_order(mu, q);
    const mpz_class gl = gl_order(d, q);
    if (!mpz_divisible_p(gl.get_mpz_t(), centralizer.get_mpz_t())) {
        throw std::logic_error("centralizer order does not divide the group order");
    }
    return gl / centralizer;
}

PolynomialEvidence interpolate_point_counts(
    const std::vector<std::pair<std::uint32_t, mpz_class>>& points) {
    const std::size_t n = points.size();
    if (n == 0) throw std::invalid_argument("no interpolation points");
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
            if (points[i].first == points[j].first) {
                throw std::invalid_argument("repeated interpolation abscissa");
            }
        }
    }

    std::vector<mpq_class> coeffs(n, mpq_class(0));
    for (std::size_t i = 0; i < n; ++i) {
        std::vector<mpq_class> basis{mpq_class(1)};
        mpq_class denom(1);
        for (std::size_t j = 0; j < n; ++j) {
            if (j == i) continue;
            // basis *= (x - q_j)
            std::vector<mpq_class> next(basis.size() + 1, mpq_class(0));
            const mpq_class minus_qj(-static_cast<long>(points[j].first));
            for (std::size_t k = 0; k < basis.size(); ++k) {
                next[k] += basis[k] * minus_qj;
                next[k + 1] += basis[k];
            }
            basis = std::move(next);
            denom *= mpq_class(static_cast<long>(points[i].first) - static_cast<long>(points[j].first));
        }
        mpq_class scale = mpq_class(points[i].second) / denom;
        scale.canonicalize();
        for (std::size_t k = 0; k < basis.size(); ++k) {
            mpq_class term = basis[k] * scale;
            term.canonicalize();
            coeffs[k] += term;
        }
    }
    for (mpq_class& c : coeffs) c.canonicalize();
    while (coeffs.size() > 1 && coeffs.back() == 0) coeffs.pop_back();

    PolynomialEvidence evidence;
    evidence.degree = coeffs.size() - 1;
    evidence.monic_integer = coeffs.back() == 1;
    for (const mpq_class& c : coeffs) {
        if (c.get_den() != 1) evidence.monic_integer = false;
    }
    evidence.coefficients = std::move(coeffs);
    return evidence;
}

}  // namespace quotforge
