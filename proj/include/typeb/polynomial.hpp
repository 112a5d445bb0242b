#pragma once

#include <string>
#include <vector>

#include "typeb/bigint.hpp"

namespace typeb {

// Dense integer polynomial, constant term first, no trailing zero coefficient.
class IntPolynomial {
public:
    IntPolynomial() = default;
    explicit IntPolynomial(std::vector<BigInt> coeffs) : c_(std::move(coeffs)) { trim(); }
    static IntPolynomial constant(BigInt v) { return IntPolynomial({std::move(v)}); }
    static IntPolynomial monomial(int degree, BigInt v = 1);

    bool is_zero() const { return c_.empty(); }
    int degree() const { return static_cast<int>(c_.size()) - 1; }  // -1 for zero
    const std::vector<BigInt>& coeffs() const { return c_; }
    BigInt coeff(int i) const { return i >= 0 && i < static_cast<int>(c_.size()) ? c_[i] : BigInt(0); }
    const BigInt& leading() const;

    IntPolynomial operator+(const IntPolynomial& o) const;
    IntPolynomial operator-(const IntPolynomial& o) const;
    IntPolynomial operator*(const IntPolynomial& o) const;
    IntPolynomial operator*(const BigInt& s) const;
    bool operator==(const IntPolynomial& o) const = default;

    IntPolynomial derivative() const;
    BigRat evaluate(const BigRat& x) const;
    BigInt evaluate_int(const BigInt& x) const;
    BigInt content() const;          // gcd of coefficients, 0 for the zero polynomial
    IntPolynomial primitive() const; // content divided out, leading coefficient positive
    int trailing_zero_count() const; // multiplicity of the root 0
    IntPolynomial shift_down(int k) const;  // divide by x^k

    std::string to_string(const std::string& var = "x") const;

private:
    void trim();
    std::vector<BigInt> c_;
};

// Exact division helpers used by the root machinery.
IntPolynomial poly_divide_exact(const IntPolynomial& num, const IntPolynomial& den);
IntPolynomial poly_gcd(const IntPolynomial& a, const IntPolynomial& b);

// Square-free decomposition: p = prod f_i^(m_i) with pairwise coprime
// square-free f_i (content dropped).
std::vector<std::pair<IntPolynomial, int>> squarefree_decomposition(const IntPolynomial& p);

// Recurrence families.
IntPolynomial poly_T(int n);             // block counts without zero block
IntPolynomial poly_Q(int n, int s);      // succession-refined block counts
IntPolynomial poly_block_family(int C1, int C2, int n);  // generic two-term family
IntPolynomial poly_mf(int n);            // merging-free block counts
IntPolynomial poly_run_sorted(int n);    // run-sorted permutation run counts
IntPolynomial poly_btilde(int n);
IntPolynomial poly_ms(int n);            // merging-free separated block counts
IntPolynomial poly_des(int n);           // descent polynomial of the flattened class

// name in {T, Q, P_mf, P_ms, des, a, btilde, b}
IntPolynomial recurrence_poly(const std::string& family, int n, int extra_index = 0);

struct GammaVector {
    int center = 0;
    std::vector<BigInt> gamma;
    bool nonnegative = true;
};

// Expansion of a palindromic polynomial in the basis x^i (1+x)^(center-2i).
// Throws std::domain_error when p is not palindromic with that center.
GammaVector gamma_vector(const IntPolynomial& p, int center);
IntPolynomial gamma_reconstruct(const GammaVector& g);

}  // namespace typeb
