#include "toric/lattice.hpp"

#include <algorithm>
#include <sstream>

namespace toric {

IntVec int_vec(std::initializer_list<long> v)
{
    IntVec out;
    out.reserve(v.size());
    for (long x : v) out.emplace_back(x);
    return out;
}

RatVec to_rat(const IntVec& v)
{
    RatVec out;
    out.reserve(v.size());
    for (const Int& x : v) out.emplace_back(x);
    return out;
}

bool is_integral(const RatVec& v)
{
    return std::all_of(v.begin(), v.end(),
                       [](const Rat& x) { return x.get_den() == 1; });
}

IntVec to_int(const RatVec& v)
{
    if (!is_integral(v))
        throw dimension_error("expected an integral vector, got " + show(v));
    IntVec out;
    out.reserve(v.size());
    for (const Rat& x : v) out.push_back(x.get_num());
    return out;
}

IntVec vec_add(const IntVec& a, const IntVec& b)
{
    if (a.size() != b.size()) throw dimension_error("vector length mismatch in add");
    IntVec out(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] + b[i];
    return out;
}

IntVec vec_sub(const IntVec& a, const IntVec& b)
{
    if (a.size() != b.size()) throw dimension_error("vector length mismatch in sub");
    IntVec out(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] - b[i];
    return out;
}

IntVec vec_neg(const IntVec& a)
{
    IntVec out(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) out[i] = -a[i];
    return out;
}

IntVec vec_scaled(const IntVec& a, const Int& c)
{
    IntVec out(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] * c;
    return out;
}

bool is_zero(const IntVec& a)
{
    return std::all_of(a.begin(), a.end(), [](const Int& x) { return x == 0; });
}

bool lex_less(const IntVec& a, const IntVec& b)
{
    return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
}

std::string show(const IntVec& v)
{
    std::ostringstream os;
    os << '(';
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) os << ',';
        os << v[i].get_str();
    }
    os << ')';
    return os.str();
}

std::string show(const RatVec& v)
{
    std::ostringstream os;
    os << '(';
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) os << ',';
        os << v[i].get_str();
    }
    os << ')';
    return os.str();
}

Int pairing(const IntVec& m, const IntVec& e)
{
    if (m.size() != e.size())
        throw dimension_error("pairing: lengths " + std::to_string(m.size()) +
                              " and " + std::to_string(e.size()) + " differ");
    Int acc = 0;
    for (std::size_t i = 0; i < m.size(); ++i) acc += m[i] * e[i];
    return acc;
}

Rat pairing(const RatVec& m, const RatVec& e)
{
    if (m.size() != e.size())
        throw dimension_error("pairing: lengths " + std::to_string(m.size()) +
                              " and " + std::to_string(e.size()) + " differ");
    Rat acc = 0;
    for (std::size_t i = 0; i < m.size(); ++i) acc += m[i] * e[i];
    return acc;
}

IntVec primitive(const IntVec& v)
{
    Int g = 0;
    for (const Int& x : v) g = gcd(g, x);
    if (g == 0) throw degeneracy_error("primitive: zero vector");
    IntVec out(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) out[i] = v[i] / g;
    return out;
}

IntVec primitive_direction(const RatVec& v)
{
    Int den = 1;
    for (const Rat& x : v) den = lcm(den, Int(x.get_den()));
    IntVec scaled(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) {
        Rat s = v[i] * Rat(den);
        scaled[i] = s.get_num();
    }
    return primitive(scaled);
}

IntMatrix IntMatrix::identity(std::size_t n)
{
    IntMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
}

IntMatrix IntMatrix::from_rows(const std::vector<IntVec>& rows)
{
    std::size_t r = rows.size();
    std::size_t c = r ? rows[0].size() : 0;
    IntMatrix m(r, c);
    for (std::size_t i = 0; i < r; ++i) {
        if (rows[i].size() != c) throw dimension_error("ragged rows in matrix");
        for (std::size_t j = 0; j < c; ++j) m.at(i, j) = rows[i][j];
    }
    return m;
}

IntVec IntMatrix::row(std::size_t i) const
{
    IntVec out(cols_);
    for (std::size_t j = 0; j < cols_; ++j) out[j] = at(i, j);
    return out;
}

IntVec IntMatrix::col(std::size_t j) const
{
    IntVec out(rows_);
    for (std::size_t i = 0; i < rows_; ++i) out[i] = at(i, j);
    return out;
}

IntMatrix IntMatrix::transposed() const
{
    IntMatrix m(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) m.at(j, i) = at(i, j);
    return m;
}

IntMatrix IntMatrix::mul(const IntMatrix& other) const
{
    if (cols_ != other.rows_) throw dimension_error("matrix product shape mismatch");
    IntMatrix m(rows_, other.cols_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t k = 0; k < cols_; ++k) {
            const Int& x = at(i, k);
            if (x == 0) continue;
            for (std::size_t j = 0; j < other.cols_; ++j)
                m.at(i, j) += x * other.at(k, j);
        }
    return m;
}

IntVec IntMatrix::apply(const IntVec& v) const
{
    if (cols_ != v.size()) throw dimension_error("matrix apply shape mismatch");
    IntVec out(rows_);
    for (std::size_t i = 0; i < rows_; ++i) {
        Int acc = 0;
        for (std::size_t j = 0; j < cols_; ++j) acc += at(i, j) * v[j];
        out[i] = acc;
    }
    return out;
}

void IntMatrix::swap_rows(std::size_t i, std::size_t j)
{
    if (i == j) return;
    for (std::size_t c = 0; c < cols_; ++c) std::swap(at(i, c), at(j, c));
}

void IntMatrix::swap_cols(std::size_t i, std::size_t j)
{
    if (i == j) return;
    for (std::size_t r = 0; r < rows_; ++r) std::swap(at(r, i), at(r, j));
}

void IntMatrix::add_row_multiple(std::size_t dst, std::size_t src, const Int& c)
{
    for (std::size_t j = 0; j < cols_; ++j) at(dst, j) += c * at(src, j);
}

void IntMatrix::add_col_multiple(std::size_t dst, std::size_t src, const Int& c)
{
    for (std::size_t i = 0; i < rows_; ++i) at(i, dst) += c * at(i, src);
}

void IntMatrix::negate_row(std::size_t i)
{
    for (std::size_t j = 0; j < cols_; ++j) at(i, j) = -at(i, j);
}

RatMatrix RatMatrix::from_rows(const std::vector<RatVec>& rows)
{
    std::size_t r = rows.size();
    std::size_t c = r ? rows[0].size() : 0;
    RatMatrix m(r, c);
    for (std::size_t i = 0; i < r; ++i) {
        if (rows[i].size() != c) throw dimension_error("ragged rows in matrix");
        for (std::size_t j = 0; j < c; ++j) m.at(i, j) = rows[i][j];
    }
    return m;
}

RatMatrix RatMatrix::from_int(const IntMatrix& m)
{
    RatMatrix r(m.rows(), m.cols());
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) r.at(i, j) = Rat(m.at(i, j));
    return r;
}

std::vector<Int> SnfResult::diagonal() const
{
    std::size_t n = std::min(d.rows(), d.cols());
    std::vector<Int> out(n);
    for (std::size_t i = 0; i < n; ++i) out[i] = d.at(i, i);
    return out;
}

namespace {

// Pivot = minimal nonzero absolute value in the trailing submatrix,
// ties broken by (row, col) order.
bool find_pivot(const IntMatrix& a, std::size_t t, std::size_t& pi, std::size_t& pj)
{
    bool found = false;
    Int best;
    for (std::size_t i = t; i < a.rows(); ++i)
        for (std::size_t j = t; j < a.cols(); ++j) {
            const Int& x = a.at(i, j);
            if (x == 0) continue;
            Int ax = abs(x);
            if (!found || ax < best) {
                found = true;
                best = ax;
                pi = i;
                pj = j;
            }
        }
    return found;
}

} // namespace

SnfResult smith_normal_form(const IntMatrix& a)
{
    IntMatrix d = a;
    IntMatrix u = IntMatrix::identity(a.rows());
    IntMatrix v = IntMatrix::identity(a.cols());
    std::size_t n = std::min(a.rows(), a.cols());

    for (std::size_t t = 0; t < n; ++t) {
        for (;;) {
            std::size_t pi, pj;
            if (!find_pivot(d, t, pi, pj)) {
                // trailing submatrix is zero; remaining diagonal stays 0
                t = n;
                break;
            }
            d.swap_rows(t, pi);
            u.swap_rows(t, pi);
            d.swap_cols(t, pj);
            v.swap_cols(t, pj);

            bool dirty = false;
            for (std::size_t i = t + 1; i < d.rows(); ++i) {
                if (d.at(i, t) == 0) continue;
                Int q = d.at(i, t) / d.at(t, t); // truncated division
                if (q != 0) {
                    d.add_row_multiple(i, t, -q);
                    u.add_row_multiple(i, t, -q);
                }
                if (d.at(i, t) != 0) dirty = true;
            }
            for (std::size_t j = t + 1; j < d.cols(); ++j) {
                if (d.at(t, j) == 0) continue;
                Int q = d.at(t, j) / d.at(t, t);
                if (q != 0) {
                    d.add_col_multiple(j, t, -q);
                    v.add_col_multiple(j, t, -q);
                }
                if (d.at(t, j) != 0) dirty = true;
            }
            if (dirty) continue; // smaller remainders exist, re-pivot

            // force the divisibility chain
            bool fixed = false;
            for (std::size_t i = t + 1; i < d.rows() && !fixed; ++i)
                for (std::size_t j = t + 1; j < d.cols() && !fixed; ++j)
                    if (d.at(i, j) % d.at(t, t) != 0) {
                        d.add_row_multiple(t, i, 1);
                        u.add_row_multiple(t, i, 1);
                        fixed = true;
                    }
            if (!fixed) break;
        }
        if (t >= n) break;
        if (d.at(t, t) < 0) {
            d.negate_row(t);
            u.negate_row(t);
        }
    }
    for (std::size_t t = 0; t < n; ++t)
        if (d.at(t, t) < 0) {
            d.negate_row(t);
            u.negate_row(t);
        }
    return SnfResult{std::move(u), std::move(d), std::move(v)};
}

namespace {

// Clears denominators row by row so Bareiss can run over the integers.
IntMatrix cleared(const RatMatrix& a)
{
    IntMatrix m(a.rows(), a.cols());
    for (std::size_t i = 0; i < a.rows(); ++i) {
        Int den = 1;
        for (std::size_t j = 0; j < a.cols(); ++j)
            den = lcm(den, Int(a.at(i, j).get_den()));
        for (std::size_t j = 0; j < a.cols(); ++j) {
            Rat s = a.at(i, j) * Rat(den);
            m.at(i, j) = s.get_num();
        }
    }
    return m;
}

// Bareiss fraction-free elimination. Returns rank; when det_out is nonnull
// and the matrix is square of full rank the determinant is stored there.
std::size_t bareiss(IntMatrix m, Int* det_out)
{
    std::size_t rows = m.rows(), cols = m.cols();
    Int prev = 1;
    std::size_t r = 0;
    int sign = 1;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        std::size_t piv = r;
        while (piv < rows && m.at(piv, c) == 0) ++piv;
        if (piv == rows) continue;
        if (piv != r) {
            m.swap_rows(piv, r);
            sign = -sign;
        }
        for (std::size_t i = r + 1; i < rows; ++i) {
            for (std::size_t j = c + 1; j < cols; ++j) {
                Int t = m.at(i, j) * m.at(r, c) - m.at(i, c) * m.at(r, j);
                m.at(i, j) = t / prev; // exact by Bareiss
            }
            m.at(i, c) = 0;
        }
        prev = m.at(r, c);
        ++r;
    }
    if (det_out) {
        if (rows != cols) throw dimension_error("det of non-square matrix");
        *det_out = (r == rows) ? Int(sign * prev) : Int(0);
    }
    return r;
}

} // namespace

std::size_t rank_rational(const RatMatrix& a)
{
    return bareiss(cleared(a), nullptr);
}

std::size_t rank_int(const IntMatrix& a)
{
    return bareiss(a, nullptr);
}

Int det(const IntMatrix& a)
{
    Int d;
    bareiss(a, &d);
    return d;
}

namespace {

// Reduced row echelon form over Q. Returns pivot column per pivot row.
std::vector<std::size_t> rref(RatMatrix& m)
{
    std::vector<std::size_t> pivots;
    std::size_t r = 0;
    for (std::size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
        std::size_t piv = r;
        while (piv < m.rows() && m.at(piv, c) == 0) ++piv;
        if (piv == m.rows()) continue;
        if (piv != r)
            for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m.at(piv, j), m.at(r, j));
        Rat inv = m.at(r, c);
        for (std::size_t j = 0; j < m.cols(); ++j) m.at(r, j) /= inv;
        for (std::size_t i = 0; i < m.rows(); ++i) {
            if (i == r || m.at(i, c) == 0) continue;
            Rat f = m.at(i, c);
            for (std::size_t j = 0; j < m.cols(); ++j) m.at(i, j) -= f * m.at(r, j);
        }
        pivots.push_back(c);
        ++r;
    }
    return pivots;
}

} // namespace

std::optional<RatVec> solve(const RatMatrix& a, const RatVec& b)
{
    if (a.rows() != b.size()) throw dimension_error("solve: rhs length mismatch");
    RatMatrix aug(a.rows(), a.cols() + 1);
    for (std::size_t i = 0; i < a.rows(); ++i) {
        for (std::size_t j = 0; j < a.cols(); ++j) aug.at(i, j) = a.at(i, j);
        aug.at(i, a.cols()) = b[i];
    }
    auto pivots = rref(aug);
    for (std::size_t idx = 0; idx < pivots.size(); ++idx)
        if (pivots[idx] == a.cols()) return std::nullopt; // 0 = 1 row
    RatVec x(a.cols(), Rat(0));
    for (std::size_t idx = 0; idx < pivots.size(); ++idx)
        x[pivots[idx]] = aug.at(idx, a.cols());
    return x;
}

std::optional<RatVec> solve(const IntMatrix& a, const IntVec& b)
{
    RatVec rb;
    rb.reserve(b.size());
    for (const Int& x : b) rb.emplace_back(x);
    return solve(RatMatrix::from_int(a), rb);
}

std::vector<IntVec> nullspace(const RatMatrix& a)
{
    RatMatrix m = a;
    auto pivots = rref(m);
    std::vector<bool> is_pivot(a.cols(), false);
    for (std::size_t c : pivots) is_pivot[c] = true;
    std::vector<IntVec> basis;
    for (std::size_t c = 0; c < a.cols(); ++c) {
        if (is_pivot[c]) continue;
        RatVec x(a.cols(), Rat(0));
        x[c] = 1;
        for (std::size_t idx = 0; idx < pivots.size(); ++idx)
            x[pivots[idx]] = -m.at(idx, c);
        basis.push_back(primitive_direction(x));
    }
    return basis;
}

std::vector<IntVec> nullspace(const IntMatrix& a)
{
    return nullspace(RatMatrix::from_int(a));
}

} // namespace toric
