#pragma once

#include <string>
#include <vector>

#include "delsarte/numeric.hpp"

namespace delsarte {

// Integer polynomial, coefficient of t^i at index i, no trailing zeros.
using IntPoly = std::vector<Int>;

long poly_deg(const IntPoly& p);  // -1 for the zero polynomial
void poly_trim(IntPoly& p);
IntPoly poly_from(std::initializer_list<long> coeffs);
IntPoly poly_t_pow_minus_one(long n);  // t^n - 1; n == 0 yields the zero polynomial
IntPoly poly_mul(const IntPoly& a, const IntPoly& b);
IntPoly poly_sub(const IntPoly& a, const IntPoly& b);
// exact division, throws internal_error on nonzero remainder
IntPoly poly_divexact(const IntPoly& a, const IntPoly& b);
std::string poly_str(const IntPoly& p);
bool poly_monic(const IntPoly& p);

// Cyclotomic polynomial of order d, by the divisor recursion
// t^d - 1 = prod_{e | d} Phi_e.  Results are cached; safe to call from
// concurrent workers.
IntPoly cyclotomic(long d);

using RatPoly = std::vector<Rat>;   // char-0 field polynomials
using ModPoly = std::vector<long>;  // char-p, canonical coefficients in [0, p)

RatPoly to_rational(const IntPoly& p);
ModPoly reduce_mod(const IntPoly& p, long prime);

// Matrix over k[t] for k = Q (characteristic 0) or F_p; entries are given as
// integer templates and reduced into the field.  invariant_factors() returns
// the monic Smith chain f1 | f2 | ...; zero factors (rank defect) come last.
class FieldPolyMatrix {
  public:
    FieldPolyMatrix(long characteristic, std::size_t rows, std::size_t cols);

    long characteristic() const { return char_; }
    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    void set(std::size_t i, std::size_t j, IntPoly p);
    const IntPoly& entry_template(std::size_t i, std::size_t j) const;

    std::vector<RatPoly> invariant_factors_q() const;  // characteristic 0 only
    std::vector<ModPoly> invariant_factors_p() const;  // characteristic p only

    // degree sequence of the invariant factors in this characteristic
    std::vector<long> invariant_degrees() const;

  private:
    long char_;
    std::size_t rows_, cols_;
    std::vector<IntPoly> e_;
};

}  // namespace delsarte
