#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "toric/error.hpp"

namespace toric {

// Exact arithmetic everywhere: arbitrary-precision integers and rationals.
using Int = mpz_class;
using Rat = mpq_class;

// A point of the lattice N (or of its dual M; both are coordinate vectors).
using IntVec = std::vector<Int>;
// A point of N_R with exact rational coordinates.
using RatVec = std::vector<Rat>;

IntVec int_vec(std::initializer_list<long> v);
RatVec to_rat(const IntVec& v);
bool is_integral(const RatVec& v);
IntVec to_int(const RatVec& v); // throws dimension_error if not integral

IntVec vec_add(const IntVec& a, const IntVec& b);
IntVec vec_sub(const IntVec& a, const IntVec& b);
IntVec vec_neg(const IntVec& a);
IntVec vec_scaled(const IntVec& a, const Int& c);
bool is_zero(const IntVec& a);
bool lex_less(const IntVec& a, const IntVec& b);
std::string show(const IntVec& v);
std::string show(const RatVec& v);

// <m, e> = sum_i m_i e_i. Throws dimension_error on length mismatch.
Int pairing(const IntVec& m, const IntVec& e);
Rat pairing(const RatVec& m, const RatVec& e);

// v / gcd(v). Throws degeneracy_error on the zero vector.
IntVec primitive(const IntVec& v);
// Primitive integer vector with the same direction as a nonzero rational one.
IntVec primitive_direction(const RatVec& v);

// Dense row-major matrix of arbitrary-precision integers.
class IntMatrix {
public:
    IntMatrix() : rows_(0), cols_(0) {}
    IntMatrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), a_(rows * cols) {}

    static IntMatrix identity(std::size_t n);
    static IntMatrix from_rows(const std::vector<IntVec>& rows);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    Int& at(std::size_t i, std::size_t j) { return a_[i * cols_ + j]; }
    const Int& at(std::size_t i, std::size_t j) const { return a_[i * cols_ + j]; }

    IntVec row(std::size_t i) const;
    IntVec col(std::size_t j) const;
    IntMatrix transposed() const;
    IntMatrix mul(const IntMatrix& other) const;
    IntVec apply(const IntVec& v) const; // matrix * column vector

    void swap_rows(std::size_t i, std::size_t j);
    void swap_cols(std::size_t i, std::size_t j);
    void add_row_multiple(std::size_t dst, std::size_t src, const Int& c);
    void add_col_multiple(std::size_t dst, std::size_t src, const Int& c);
    void negate_row(std::size_t i);

    bool operator==(const IntMatrix& o) const = default;

private:
    std::size_t rows_, cols_;
    std::vector<Int> a_;
};

// Dense matrix of exact rationals.
class RatMatrix {
public:
    RatMatrix() : rows_(0), cols_(0) {}
    RatMatrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), a_(rows * cols) {}

    static RatMatrix from_rows(const std::vector<RatVec>& rows);
    static RatMatrix from_int(const IntMatrix& m);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    Rat& at(std::size_t i, std::size_t j) { return a_[i * cols_ + j]; }
    const Rat& at(std::size_t i, std::size_t j) const { return a_[i * cols_ + j]; }

private:
    std::size_t rows_, cols_;
    std::vector<Rat> a_;
};

// Smith normal form U*A*V = D with U, V unimodular and the diagonal of D
// nonnegative with each entry dividing the next.
struct SnfResult {
    IntMatrix u, d, v;
    std::vector<Int> diagonal() const;
};
SnfResult smith_normal_form(const IntMatrix& a);

// Exact rank via fraction-free (Bareiss) elimination.
std::size_t rank_rational(const RatMatrix& a);
std::size_t rank_int(const IntMatrix& a);

// Determinant of a square matrix, fraction-free.
Int det(const IntMatrix& a);

// One exact solution of A x = b over the rationals (free variables set to 0),
// or nullopt if the system is inconsistent.
std::optional<RatVec> solve(const RatMatrix& a, const RatVec& b);
std::optional<RatVec> solve(const IntMatrix& a, const IntVec& b);

// Basis of { x : A x = 0 } as primitive integer vectors.
std::vector<IntVec> nullspace(const RatMatrix& a);
std::vector<IntVec> nullspace(const IntMatrix& a);

} // namespace toric
