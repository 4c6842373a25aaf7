#pragma once

#include <string>
#include <vector>

#include "svt/polyring.hpp"
#include "svt/tableaux.hpp"

namespace svt {

// Tableaux sum: sum over SVT(theta,n) of beta^(|T|-|theta|) x^w(T).
MultiPoly grothendieck_tableaux(const SkewShape& shape, int n);

// Sum of x^w(T) over SST; the skew overload backs the CLI's skew Schur sums.
MultiPoly schur_tableaux(const SkewShape& shape, int n);
MultiPoly schur_tableaux(const Partition& lambda, int n);

// Determinant/Vandermonde constructions; lambda is zero-padded to length n
// internally. Require length(lambda) <= n.
MultiPoly grothendieck_bialternant(const Partition& lambda, int n);
MultiPoly schur_bialternant(const Partition& lambda, int n);

// beta := 0 in the tableaux sum reproduces the Schur polynomial.
bool check_beta_zero(const Partition& lambda, int n);

// Principal specialization collapses to the single term t^(|theta|).
bool check_principal_specialization(const SkewShape& shape, int n);

// Evaluation at all-ones with beta = 1 equals |SVT(theta,n)|.
bool check_count_identity(const SkewShape& shape, int n);

// Peel-off identity behind the principal specialization: with x_n := t and
// beta := -1/t, G_lambda(x1..x_{n-1},t) = t^(lambda_1) * G_lambdahat(x1..x_{n-1})
// where lambdahat drops the first part. xs supplies the n-1 leading values.
bool check_reduction_identity(const Partition& lambda, int n,
                              const std::vector<BigRational>& xs, const BigRational& t);

struct PolynomialReport {
    SkewShape shape;
    int n = 0;
    std::string formula;  // "tableaux" | "bialternant"
    std::string basis;    // "schur" | "grothendieck"
    MultiPoly value;
};

std::string report_json(const PolynomialReport& r);

}  // namespace svt
