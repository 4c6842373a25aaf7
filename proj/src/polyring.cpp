#include "svt/polyring.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace svt {

namespace {

// Degrees in every planned use are tiny; the guard catches runaway loops.
constexpr int kMaxExponent = 1 << 20;

int total_degree(const Exponents& e) { return std::accumulate(e.begin(), e.end(), 0); }

}  // namespace

bool TermOrderDesc::operator()(const Exponents& a, const Exponents& b) const {
    int da = total_degree(a);
    int db = total_degree(b);
    if (da != db) return da > db;
    return std::lexicographical_compare(b.begin(), b.end(), a.begin(), a.end());
}

MultiPoly::MultiPoly(int num_x_vars) : n_(num_x_vars) {
    if (n_ < 0) throw std::invalid_argument("negative variable count");
}

MultiPoly MultiPoly::constant(int num_x_vars, BigInt value) {
    MultiPoly p(num_x_vars);
    p.add_term(Exponents(num_x_vars + 1, 0), value);
    return p;
}

MultiPoly MultiPoly::variable(int num_x_vars, int index) {
    if (index < 1 || index > num_x_vars) throw std::invalid_argument("variable index out of range");
    Exponents e(num_x_vars + 1, 0);
    e[index - 1] = 1;
    return monomial(num_x_vars, std::move(e), 1);
}

MultiPoly MultiPoly::beta(int num_x_vars) {
    Exponents e(num_x_vars + 1, 0);
    e[num_x_vars] = 1;
    return monomial(num_x_vars, std::move(e), 1);
}

MultiPoly MultiPoly::monomial(int num_x_vars, Exponents exps, BigInt coeff) {
    MultiPoly p(num_x_vars);
    p.add_term(exps, coeff);
    return p;
}

int MultiPoly::beta_degree() const {
    int d = 0;
    for (const auto& [e, c] : terms_) d = std::max(d, e[n_]);
    return d;
}

void MultiPoly::add_term(const Exponents& exps, const BigInt& coeff) {
    if (static_cast<int>(exps.size()) != n_ + 1)
        throw std::invalid_argument("exponent vector has the wrong length");
    for (int e : exps) {
        if (e < 0) throw std::invalid_argument("negative exponent");
        if (e > kMaxExponent) throw std::overflow_error("exponent beyond configured bound");
    }
    if (coeff == 0) return;
    auto [it, inserted] = terms_.emplace(exps, coeff);
    if (!inserted) {
        it->second += coeff;
        if (it->second == 0) terms_.erase(it);
    }
}

MultiPoly MultiPoly::operator+(const MultiPoly& o) const {
    if (n_ != o.n_) throw std::invalid_argument("variable counts differ");
    MultiPoly out = *this;
    for (const auto& [e, c] : o.terms_) out.add_term(e, c);
    return out;
}

MultiPoly MultiPoly::operator-(const MultiPoly& o) const {
    if (n_ != o.n_) throw std::invalid_argument("variable counts differ");
    MultiPoly out = *this;
    for (const auto& [e, c] : o.terms_) out.add_term(e, -c);
    return out;
}

MultiPoly MultiPoly::operator-() const {
    MultiPoly out(n_);
    for (const auto& [e, c] : terms_) out.terms_.emplace(e, -c);
    return out;
}

MultiPoly MultiPoly::operator*(const MultiPoly& o) const {
    if (n_ != o.n_) throw std::invalid_argument("variable counts differ");
    MultiPoly out(n_);
    Exponents sum(n_ + 1);
    for (const auto& [ea, ca] : terms_) {
        for (const auto& [eb, cb] : o.terms_) {
            for (int i = 0; i <= n_; ++i) sum[i] = ea[i] + eb[i];
            out.add_term(sum, ca * cb);
        }
    }
    return out;
}

MultiPoly MultiPoly::pow(int e) const {
    if (e < 0) throw std::invalid_argument("negative power");
    MultiPoly out = constant(n_, 1);
    for (int i = 0; i < e; ++i) out = out * *this;
    return out;
}

MultiPoly MultiPoly::substitute_beta_zero() const {
    MultiPoly out(n_);
    for (const auto& [e, c] : terms_)
        if (e[n_] == 0) out.terms_.emplace(e, c);
    return out;
}

std::string MultiPoly::to_string() const {
    if (terms_.empty()) return "0";
    std::string out;
    bool first = true;
    for (const auto& [e, c] : terms_) {
        BigInt mag = c < 0 ? BigInt(-c) : c;
        if (first) {
            if (c < 0) out += '-';
            first = false;
        } else {
            out += c < 0 ? " - " : " + ";
        }
        std::string vars;
        for (int i = 0; i <= n_; ++i) {
            if (e[i] == 0) continue;
            if (!vars.empty()) vars += '*';
            vars += i < n_ ? "x" + std::to_string(i + 1) : "b";
            if (e[i] > 1) vars += "^" + std::to_string(e[i]);
        }
        if (vars.empty()) {
            out += mag.str();
        } else {
            if (mag != 1) out += mag.str() + "*";
            out += vars;
        }
    }
    return out;
}

namespace {

MultiPoly det_rec(const std::vector<std::vector<MultiPoly>>& m, std::vector<int> rows,
                  std::vector<int> cols, int num_x_vars) {
    if (rows.empty()) return MultiPoly::constant(num_x_vars, 1);
    if (rows.size() == 1) return m[rows[0]][cols[0]];

    // Expand along whichever active row or column has the fewest nonzeros.
    std::size_t best_count = rows.size() + 1;
    int best_index = 0;
    bool best_is_row = true;
    for (std::size_t ri = 0; ri < rows.size(); ++ri) {
        std::size_t nz = 0;
        for (int c : cols) nz += !m[rows[ri]][c].is_zero();
        if (nz < best_count) {
            best_count = nz;
            best_index = static_cast<int>(ri);
            best_is_row = true;
        }
    }
    for (std::size_t ci = 0; ci < cols.size(); ++ci) {
        std::size_t nz = 0;
        for (int r : rows) nz += !m[r][cols[ci]].is_zero();
        if (nz < best_count) {
            best_count = nz;
            best_index = static_cast<int>(ci);
            best_is_row = false;
        }
    }

    MultiPoly acc(num_x_vars);
    if (best_is_row) {
        int r = rows[best_index];
        std::vector<int> sub_rows = rows;
        sub_rows.erase(sub_rows.begin() + best_index);
        for (std::size_t ci = 0; ci < cols.size(); ++ci) {
            const MultiPoly& entry = m[r][cols[ci]];
            if (entry.is_zero()) continue;
            std::vector<int> sub_cols = cols;
            sub_cols.erase(sub_cols.begin() + ci);
            MultiPoly minor = det_rec(m, sub_rows, sub_cols, num_x_vars);
            MultiPoly term = entry * minor;
            acc = ((best_index + static_cast<int>(ci)) % 2 == 0) ? acc + term : acc - term;
        }
    } else {
        int c = cols[best_index];
        std::vector<int> sub_cols = cols;
        sub_cols.erase(sub_cols.begin() + best_index);
        for (std::size_t ri = 0; ri < rows.size(); ++ri) {
            const MultiPoly& entry = m[rows[ri]][c];
            if (entry.is_zero()) continue;
            std::vector<int> sub_rows = rows;
            sub_rows.erase(sub_rows.begin() + ri);
            MultiPoly minor = det_rec(m, sub_rows, sub_cols, num_x_vars);
            MultiPoly term = entry * minor;
            acc = ((static_cast<int>(ri) + best_index) % 2 == 0) ? acc + term : acc - term;
        }
    }
    return acc;
}

}  // namespace

MultiPoly poly_det(const std::vector<std::vector<MultiPoly>>& m) {
    std::size_t dim = m.size();
    if (dim == 0) return MultiPoly::constant(0, 1);
    int num_x_vars = m[0][0].num_x_vars();
    for (const auto& row : m) {
        if (row.size() != dim) throw std::invalid_argument("matrix is not square");
        for (const auto& p : row)
            if (p.num_x_vars() != num_x_vars)
                throw std::invalid_argument("variable counts differ across the matrix");
    }
    std::vector<int> idx(dim);
    std::iota(idx.begin(), idx.end(), 0);
    return det_rec(m, idx, idx, num_x_vars);
}

MultiPoly poly_divide_exact(const MultiPoly& p, const MultiPoly& d) {
    if (p.num_x_vars() != d.num_x_vars()) throw std::invalid_argument("variable counts differ");
    if (d.is_zero()) throw std::invalid_argument("division by the zero polynomial");
    int n = p.num_x_vars();
    const auto& [lead_e, lead_c] = *d.terms().begin();

    MultiPoly q(n);
    MultiPoly r = p;
    Exponents qe(n + 1);
    while (!r.is_zero()) {
        const auto& [re, rc] = *r.terms().begin();
        for (int i = 0; i <= n; ++i) {
            qe[i] = re[i] - lead_e[i];
            if (qe[i] < 0) throw std::logic_error("polynomial division is not exact");
        }
        if (rc % lead_c != 0) throw std::logic_error("polynomial division is not exact");
        BigInt qc = rc / lead_c;
        MultiPoly step = MultiPoly::monomial(n, qe, qc);
        q.add_term(qe, qc);
        r = r - step * d;
    }
    return q;
}

BigRational poly_eval(const MultiPoly& p, const std::vector<BigRational>& xs,
                      const BigRational& beta) {
    if (static_cast<int>(xs.size()) != p.num_x_vars())
        throw std::invalid_argument("evaluation point has the wrong arity");
    int n = p.num_x_vars();
    BigRational total = 0;
    for (const auto& [e, c] : p.terms()) {
        BigRational term(c);
        for (int i = 0; i < n; ++i)
            if (e[i] > 0) term *= rational_pow(xs[i], e[i]);
        if (e[n] > 0) term *= rational_pow(beta, e[n]);
        total += term;
    }
    return total;
}

void LaurentPoly::add_term(long exponent, const BigInt& coeff) {
    if (coeff == 0) return;
    auto [it, inserted] = terms_.emplace(exponent, coeff);
    if (!inserted) {
        it->second += coeff;
        if (it->second == 0) terms_.erase(it);
    }
}

bool LaurentPoly::is_single_term(long exponent, const BigInt& coeff) const {
    return terms_.size() == 1 && terms_.begin()->first == exponent &&
           terms_.begin()->second == coeff;
}

BigRational LaurentPoly::eval(const BigRational& t) const {
    if (t == 0) throw std::invalid_argument("Laurent evaluation at zero");
    BigRational total = 0;
    for (const auto& [e, c] : terms_) {
        BigRational pw = e >= 0 ? rational_pow(t, static_cast<int>(e))
                                : 1 / rational_pow(t, static_cast<int>(-e));
        total += BigRational(c) * pw;
    }
    return total;
}

std::string LaurentPoly::to_string() const {
    if (terms_.empty()) return "0";
    std::string out;
    bool first = true;
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        const auto& [e, c] = *it;
        BigInt mag = c < 0 ? BigInt(-c) : c;
        if (first) {
            if (c < 0) out += '-';
            first = false;
        } else {
            out += c < 0 ? " - " : " + ";
        }
        if (e == 0) {
            out += mag.str();
        } else {
            if (mag != 1) out += mag.str() + "*";
            out += "t";
            if (e != 1) out += "^" + std::to_string(e);
        }
    }
    return out;
}

LaurentPoly specialize_principal(const MultiPoly& p) {
    int n = p.num_x_vars();
    LaurentPoly out;
    for (const auto& [e, c] : p.terms()) {
        long x_total = 0;
        for (int i = 0; i < n; ++i) x_total += e[i];
        BigInt signed_c = (e[n] % 2 == 0) ? c : BigInt(-c);
        out.add_term(x_total - e[n], signed_c);
    }
    return out;
}

}  // namespace svt
