#include "fol/exact_linalg.hpp"

#include "fol/errors.hpp"

#include <utility>

namespace fol {

SymMatrix SymMatrix::from_rows(const std::vector<std::vector<Rational>>& rows) {
    SymMatrix m(rows.size());
    for (std::size_t i = 0; i < rows.size(); ++i) {
        if (rows[i].size() != rows.size()) throw PreconditionViolated("matrix is not square");
        for (std::size_t j = 0; j < rows.size(); ++j) {
            if (rows[i][j] != rows[j][i]) throw PreconditionViolated("matrix is not symmetric");
            m.a_[i * m.n_ + j] = rows[i][j];
        }
    }
    return m;
}

void SymMatrix::set(std::size_t i, std::size_t j, const Rational& v) {
    a_[i * n_ + j] = v;
    a_[j * n_ + i] = v;
}

SymMatrix SymMatrix::principal(const std::vector<std::size_t>& idx) const {
    SymMatrix m(idx.size());
    for (std::size_t i = 0; i < idx.size(); ++i)
        for (std::size_t j = 0; j < idx.size(); ++j) m.a_[i * m.n_ + j] = (*this)(idx[i], idx[j]);
    return m;
}

SymMatrix SymMatrix::negated() const {
    SymMatrix m = *this;
    for (auto& x : m.a_) x = -x;
    return m;
}

void SymMatrix::grow() {
    SymMatrix m(n_ + 1);
    for (std::size_t i = 0; i < n_; ++i)
        for (std::size_t j = 0; j < n_; ++j) m.a_[i * m.n_ + j] = (*this)(i, j);
    *this = std::move(m);
}

void SymMatrix::erase(std::size_t k) {
    SymMatrix m(n_ - 1);
    for (std::size_t i = 0, r = 0; i < n_; ++i) {
        if (i == k) continue;
        for (std::size_t j = 0, c = 0; j < n_; ++j) {
            if (j == k) continue;
            m.a_[r * m.n_ + c] = (*this)(i, j);
            ++c;
        }
        ++r;
    }
    *this = std::move(m);
}

namespace {

using IntMatrix = std::vector<std::vector<mpz_class>>;

// Scales m by the lcm of its denominators; returns the scale.
mpz_class clear_denominators(const SymMatrix& m, IntMatrix& out) {
    const std::size_t n = m.size();
    mpz_class l = 1;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), m(i, j).den().get_mpz_t());
    out.assign(n, std::vector<mpz_class>(n));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) out[i][j] = m(i, j).num() * (l / m(i, j).den());
    return l;
}

Rational scaled(const mpz_class& value, const mpz_class& scale, std::size_t power) {
    mpz_class s;
    mpz_pow_ui(s.get_mpz_t(), scale.get_mpz_t(), power);
    return Rational(mpq_class(value, s));
}

// One Bareiss step at pivot k; all divisions are exact.
void bareiss_step(IntMatrix& a, std::size_t k, const mpz_class& prev) {
    const std::size_t n = a.size();
    for (std::size_t i = k + 1; i < n; ++i) {
        for (std::size_t j = k + 1; j < n; ++j) {
            mpz_class t = a[i][j] * a[k][k] - a[i][k] * a[k][j];
            mpz_divexact(a[i][j].get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
        }
        a[i][k] = 0;
    }
}

}  // namespace

Rational determinant(const SymMatrix& m) {
    const std::size_t n = m.size();
    if (n == 0) return 1;
    IntMatrix a;
    mpz_class l = clear_denominators(m, a);
    mpz_class prev = 1;
    int sign = 1;
    for (std::size_t k = 0; k < n; ++k) {
        if (a[k][k] == 0) {
            std::size_t p = k + 1;
            while (p < n && a[p][k] == 0) ++p;
            if (p == n) return 0;
            std::swap(a[k], a[p]);
            sign = -sign;
        }
        bareiss_step(a, k, prev);
        prev = a[k][k];
    }
    return scaled(mpz_class(sign * a[n - 1][n - 1]), l, n);
}

std::vector<Rational> leading_minors(const SymMatrix& m) {
    std::vector<Rational> out;
    for (std::size_t k = 1; k <= m.size(); ++k) {
        std::vector<std::size_t> idx(k);
        for (std::size_t i = 0; i < k; ++i) idx[i] = i;
        out.push_back(determinant(m.principal(idx)));
    }
    return out;
}

bool is_negative_definite(const SymMatrix& m) {
    // Without pivoting the k-th Bareiss pivot is the k-th leading minor of
    // the scaled matrix, so one pass yields every Sylvester sign.
    IntMatrix a;
    clear_denominators(m.negated(), a);
    mpz_class prev = 1;
    for (std::size_t k = 0; k < a.size(); ++k) {
        if (sgn(a[k][k]) <= 0) return false;
        bareiss_step(a, k, prev);
        prev = a[k][k];
    }
    return true;
}

std::vector<Rational> solve(const SymMatrix& m, const std::vector<Rational>& b) {
    const std::size_t n = m.size();
    if (b.size() != n) throw PreconditionViolated("right-hand side has wrong length");
    std::vector<std::vector<Rational>> a(n, std::vector<Rational>(n + 1));
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) a[i][j] = m(i, j);
        a[i][n] = b[i];
    }
    for (std::size_t k = 0; k < n; ++k) {
        std::size_t p = k;
        while (p < n && a[p][k].is_zero()) ++p;
        if (p == n) throw SingularMatrix("matrix of size " + std::to_string(n) + " is singular");
        std::swap(a[k], a[p]);
        Rational inv = a[k][k].inverse();
        for (std::size_t j = k; j <= n; ++j) a[k][j] *= inv;
        for (std::size_t i = 0; i < n; ++i) {
            if (i == k || a[i][k].is_zero()) continue;
            Rational f = a[i][k];
            for (std::size_t j = k; j <= n; ++j) a[i][j] -= f * a[k][j];
        }
    }
    std::vector<Rational> x(n);
    for (std::size_t i = 0; i < n; ++i) x[i] = a[i][n];
    return x;
}

bool sign_solution_check(const SymMatrix& m, const std::vector<Rational>& a) {
    const std::size_t n = m.size();
    if (a.size() != n) throw PreconditionViolated("vector has wrong length");
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            if (i != j && m(i, j).sign() < 0) throw PreconditionViolated("negative off-diagonal entry");
    if (!is_negative_definite(m)) throw PreconditionViolated("matrix is not negative definite");
    for (std::size_t j = 0; j < n; ++j) {
        Rational s;
        for (std::size_t i = 0; i < n; ++i) s += a[i] * m(i, j);
        if (s.sign() < 0) return true;
    }
    for (const auto& x : a)
        if (x.sign() > 0) return false;
    return true;
}

Rational continuant(const std::vector<Rational>& diag) {
    Rational prev2 = 0, prev = 1;
    for (std::size_t k = 0; k < diag.size(); ++k) {
        Rational cur = diag[k] * prev - (k == 0 ? Rational(0) : prev2);
        prev2 = prev;
        prev = cur;
    }
    return prev;
}

}  // namespace fol
