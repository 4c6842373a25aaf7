#pragma once

#include <map>
#include <string>
#include <vector>

#include "svt/bigint.hpp"

namespace svt {

// Exponent vector: x1..xn first, the beta exponent last. All entries >= 0.
using Exponents = std::vector<int>;

// Graded lexicographic term order with x1 > x2 > ... > xn > beta, wrapped as
// a greater-than comparator so map iteration starts at the leading term.
struct TermOrderDesc {
    bool operator()(const Exponents& a, const Exponents& b) const;
};

// Multivariate polynomial over the integers in x1..xn and beta. The term map
// stores no zero coefficients, so structural equality is polynomial equality.
class MultiPoly {
public:
    using TermMap = std::map<Exponents, BigInt, TermOrderDesc>;

    explicit MultiPoly(int num_x_vars = 0);
    static MultiPoly constant(int num_x_vars, BigInt value);
    static MultiPoly variable(int num_x_vars, int index);  // x_index, 1-based
    static MultiPoly beta(int num_x_vars);
    static MultiPoly monomial(int num_x_vars, Exponents exps, BigInt coeff);

    int num_x_vars() const { return n_; }
    bool is_zero() const { return terms_.empty(); }
    const TermMap& terms() const { return terms_; }
    int beta_degree() const;

    void add_term(const Exponents& exps, const BigInt& coeff);

    MultiPoly operator+(const MultiPoly&) const;
    MultiPoly operator-(const MultiPoly&) const;
    MultiPoly operator*(const MultiPoly&) const;
    MultiPoly operator-() const;
    MultiPoly pow(int e) const;
    bool operator==(const MultiPoly&) const = default;

    MultiPoly substitute_beta_zero() const;

    // Canonical text form: terms in descending order, variables x1..xn and b,
    // e.g. "x1^2*x2*b + 3*x1 - 1".
    std::string to_string() const;

private:
    int n_ = 0;
    TermMap terms_;
};

// Exact determinant by cofactor expansion along the sparsest row or column.
MultiPoly poly_det(const std::vector<std::vector<MultiPoly>>& m);

// Long division in the graded-lex order; throws std::logic_error when the
// division is not exact.
MultiPoly poly_divide_exact(const MultiPoly& p, const MultiPoly& d);

BigRational poly_eval(const MultiPoly& p, const std::vector<BigRational>& xs,
                      const BigRational& beta);

// Single-variable polynomial with possibly negative exponents.
class LaurentPoly {
public:
    LaurentPoly() = default;
    void add_term(long exponent, const BigInt& coeff);
    bool is_zero() const { return terms_.empty(); }
    bool is_single_term(long exponent, const BigInt& coeff) const;
    const std::map<long, BigInt>& terms() const { return terms_; }
    BigRational eval(const BigRational& t) const;
    std::string to_string() const;
    bool operator==(const LaurentPoly&) const = default;

private:
    std::map<long, BigInt> terms_;
};

// Substitute x_i := t for every i and beta := -1/t, exactly, as a Laurent
// polynomial in t.
LaurentPoly specialize_principal(const MultiPoly& p);

}  // namespace svt
