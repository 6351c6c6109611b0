#pragma once

#include "fol/rational.hpp"

#include <cstddef>
#include <vector>

namespace fol {

// Dense symmetric matrix over the rationals. Writes go through set() so both
// triangles stay equal.
class SymMatrix {
public:
    SymMatrix() = default;
    explicit SymMatrix(std::size_t n) : n_(n), a_(n * n) {}

    // Throws PreconditionViolated when rows are ragged or not symmetric.
    static SymMatrix from_rows(const std::vector<std::vector<Rational>>& rows);

    std::size_t size() const { return n_; }
    const Rational& operator()(std::size_t i, std::size_t j) const { return a_[i * n_ + j]; }
    void set(std::size_t i, std::size_t j, const Rational& v);

    SymMatrix principal(const std::vector<std::size_t>& idx) const;
    SymMatrix negated() const;

    // Appends a zero row/column.
    void grow();
    void erase(std::size_t k);

    friend bool operator==(const SymMatrix&, const SymMatrix&) = default;

private:
    std::size_t n_ = 0;
    std::vector<Rational> a_;
};

// Fraction-free Bareiss elimination with row pivoting.
Rational determinant(const SymMatrix& m);

// Leading principal minors of orders 1..n.
std::vector<Rational> leading_minors(const SymMatrix& m);

// Sylvester: -m has all leading principal minors positive. Empty matrix counts.
bool is_negative_definite(const SymMatrix& m);

// Throws SingularMatrix when m has no unique solution.
std::vector<Rational> solve(const SymMatrix& m, const std::vector<Rational>& b);

// For m negative definite with nonnegative off-diagonal entries: if a*m >= 0
// entrywise then every a_i <= 0. Returns whether the implication holds for a.
// Throws PreconditionViolated when m does not qualify.
bool sign_solution_check(const SymMatrix& m, const std::vector<Rational>& a);

// Determinant of the tridiagonal matrix with the given diagonal and all
// off-diagonal entries equal to 1, via the three-term recurrence.
Rational continuant(const std::vector<Rational>& diag);

}  // namespace fol
