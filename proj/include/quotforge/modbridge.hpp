#pragma once

#include <vector>

#include "quotforge/adhm.hpp"

namespace quotforge {

/// The free rank-r module over the polynomial ring in x, y truncated at
/// total degree d: basis monomials x^a y^b e_j with a + b < d, in graded
/// order (degree first, then higher x-power first, then j). Multiplication
/// by x or y shifts exponents and kills monomials of degree >= d.
class TruncatedFreeModule {
  public:
    struct Monomial {
        std::size_t a = 0;
        std::size_t b = 0;
        std::size_t j = 1;  // 1-based generator index
        bool operator==(const Monomial&) const = default;
    };

    TruncatedFreeModule(const FieldSpec& f, std::size_t r, std::size_t d);

    const FieldSpec& field() const { return field_; }
    std::size_t rank() const { return r_; }
    std::size_t truncation_order() const { return d_; }
    std::size_t dim() const { return monomials_.size(); }  // r * d * (d+1) / 2

    const std::vector<Monomial>& monomials() const { return monomials_; }
    const Monomial& monomial_at(std::size_t index) const { return monomials_[index]; }
    std::size_t index_of(const Monomial& m) const;  // throws on out-of-range monomials

    Vec zero_element() const { return zero_vec(field_, dim()); }
    Vec generator(std::size_t j) const;  // the element e_j, 1-based

    Vec mul_x(const Vec& element) const;
    Vec mul_y(const Vec& element) const;

    bool operator==(const TruncatedFreeModule& o) const {
        return field_ == o.field_ && r_ == o.r_ && d_ == o.d_;
    }

  private:
    FieldSpec field_;
    std::size_t r_;
    std::size_t d_;
    std::vector<Monomial> monomials_;
    std::vector<std::size_t> shift_x_;  // image index under x, dim() = killed
    std::vector<std::size_t> shift_y_;
};

/// A submodule of the truncated free module: generators, their closure under
/// the x and y actions, and the codimension of the closure.
struct SubmodulePresentation {
    TruncatedFreeModule ambient;
    std::vector<Vec> generators;
    Subspace closure;
    std::size_t colength = 0;
};

/// Smallest subspace containing the generators and stable under the
/// truncated x and y actions (iterate multiplication and re-span).
SubmodulePresentation submodule_closure(const std::vector<Vec>& generators,
                                        const TruncatedFreeModule& ambient);

/// Quotient by the closure, realized on the non-pivot monomials of its RREF
/// basis: B1, B2 are the induced multiplication matrices and v_j the images
/// of the generators e_j. Requires colength == truncation order.
QuotDatum quotient_datum(const SubmodulePresentation& presentation);

/// The kernel of the evaluation map x^a y^b e_j -> B1^a B2^b v_j from the
/// truncated free module onto V; needs a valid stable datum (the evaluation
/// must be onto) and has colength exactly d.
SubmodulePresentation presentation_of_datum(const QuotDatum& datum);

/// True iff both operators are nilpotent, i.e. the associated sheaf is
/// supported at the chosen point.
bool support_check(const Matrix& b1, const Matrix& b2);

}  // namespace quotforge
