#include "svt/grothendieck.hpp"

#include <stdexcept>

#include "json.hpp"

namespace svt {

namespace {

MultiPoly tableaux_sum(const SkewShape& shape, int n, bool singletons) {
    if (n < 1) throw std::invalid_argument("need at least one variable");
    MultiPoly acc(n);
    int base = shape.cell_count();
    Exponents e(n + 1);
    auto add = [&](const SetValuedTableau& t) {
        std::fill(e.begin(), e.end(), 0);
        for (uint64_t m : t.entries())
            for (int l : mask_letters(m)) ++e[l - 1];
        e[n] = t.letter_count() - base;
        acc.add_term(e, 1);
        return true;
    };
    if (singletons)
        enumerate_sst(shape, n, add);
    else
        enumerate_svt(shape, n, add);
    return acc;
}

}  // namespace

MultiPoly grothendieck_tableaux(const SkewShape& shape, int n) {
    return tableaux_sum(shape, n, false);
}

MultiPoly schur_tableaux(const SkewShape& shape, int n) { return tableaux_sum(shape, n, true); }

MultiPoly schur_tableaux(const Partition& lambda, int n) {
    return schur_tableaux(SkewShape(lambda), n);
}

namespace {

MultiPoly alternant(const Partition& lambda, int n, bool with_beta) {
    if (n < 1) throw std::invalid_argument("need at least one variable");
    if (lambda.length() > n)
        throw std::invalid_argument("partition has more rows than variables");
    std::vector<std::vector<MultiPoly>> m(n, std::vector<MultiPoly>(n, MultiPoly(n)));
    for (int i = 1; i <= n; ++i) {
        MultiPoly one_plus_bx =
            MultiPoly::constant(n, 1) + MultiPoly::beta(n) * MultiPoly::variable(n, i);
        for (int j = 1; j <= n; ++j) {
            Exponents e(n + 1, 0);
            e[i - 1] = lambda.part(j) + n - j;
            MultiPoly entry = MultiPoly::monomial(n, std::move(e), 1);
            if (with_beta) entry = entry * one_plus_bx.pow(j - 1);
            m[i - 1][j - 1] = std::move(entry);
        }
    }
    MultiPoly result = poly_det(m);
    // Vandermonde division, one linear factor at a time so a non-exact step
    // fails right where it happened.
    for (int i = 1; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j)
            result = poly_divide_exact(
                result, MultiPoly::variable(n, i) - MultiPoly::variable(n, j));
    return result;
}

}  // namespace

MultiPoly grothendieck_bialternant(const Partition& lambda, int n) {
    return alternant(lambda, n, true);
}

MultiPoly schur_bialternant(const Partition& lambda, int n) { return alternant(lambda, n, false); }

bool check_beta_zero(const Partition& lambda, int n) {
    return grothendieck_tableaux(SkewShape(lambda), n).substitute_beta_zero() ==
           schur_tableaux(lambda, n);
}

bool check_principal_specialization(const SkewShape& shape, int n) {
    LaurentPoly s = specialize_principal(grothendieck_tableaux(shape, n));
    return s.is_single_term(shape.cell_count(), 1);
}

bool check_count_identity(const SkewShape& shape, int n) {
    std::vector<BigRational> ones(n, 1);
    BigRational value = poly_eval(grothendieck_tableaux(shape, n), ones, 1);
    return value == BigRational(count_svt(shape, n));
}

bool check_reduction_identity(const Partition& lambda, int n,
                              const std::vector<BigRational>& xs, const BigRational& t) {
    if (lambda.length() > n)
        throw std::invalid_argument("partition has more rows than variables");
    if (static_cast<int>(xs.size()) != n - 1)
        throw std::invalid_argument("need n-1 leading coordinates");
    if (t == 0) throw std::invalid_argument("t must be nonzero");
    BigRational beta = BigRational(-1) / t;

    std::vector<BigRational> point = xs;
    point.push_back(t);
    BigRational lhs = poly_eval(grothendieck_tableaux(SkewShape(lambda), n), point, beta);

    BigRational rhs = rational_pow(t, lambda.part(1));
    if (n >= 2) {
        std::vector<int> hat_parts;
        for (int i = 2; i <= n; ++i) hat_parts.push_back(lambda.part(i));
        Partition hat(std::move(hat_parts));
        rhs *= poly_eval(grothendieck_tableaux(SkewShape(hat), n - 1), xs, beta);
    }
    return lhs == rhs;
}

std::string report_json(const PolynomialReport& r) {
    nlohmann::ordered_json j;
    j["shape"] = format_shape(r.shape);
    j["n"] = r.n;
    j["formula"] = r.formula;
    j["basis"] = r.basis;
    j["poly"] = r.value.to_string();
    return j.dump();
}

}  // namespace svt
