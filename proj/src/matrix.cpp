#include "feec/matrix.hpp"

#include <utility>

#include "feec/errors.hpp"

namespace feec {

namespace {

struct Echelon {
    std::vector<std::vector<Integer>> m;
    std::vector<int> pivot_cols;  // pivot of row i sits in pivot_cols[i]
    int swap_sign = 1;
    Integer row_scale_product{1};  // product of the denominators cleared per row
};

// Fraction-free Bareiss elimination. Rows are first scaled to integers by
// their denominator LCM; every later division is exact.
Echelon eliminate(const ExactMatrix& a, const std::vector<Rational>* rhs) {
    const int rows = a.rows();
    const int cols = a.cols() + (rhs ? 1 : 0);
    Echelon e;
    e.m.assign(static_cast<std::size_t>(rows), std::vector<Integer>(static_cast<std::size_t>(cols), Integer(0)));
    for (int i = 0; i < rows; ++i) {
        Integer lcm(1);
        for (int j = 0; j < a.cols(); ++j)
            mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), a.at(i, j).get_den().get_mpz_t());
        if (rhs) mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), (*rhs)[static_cast<std::size_t>(i)].get_den().get_mpz_t());
        e.row_scale_product *= lcm;
        for (int j = 0; j < cols; ++j) {
            const Rational& q = (j < a.cols()) ? a.at(i, j) : (*rhs)[static_cast<std::size_t>(i)];
            e.m[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] =
                q.get_num() * (lcm / q.get_den());
        }
    }

    Integer prev(1);
    int r = 0;
    for (int c = 0; c < a.cols() && r < rows; ++c) {
        int p = -1;
        for (int i = r; i < rows; ++i)
            if (e.m[static_cast<std::size_t>(i)][static_cast<std::size_t>(c)] != 0) {
                p = i;
                break;
            }
        if (p < 0) continue;
        if (p != r) {
            std::swap(e.m[static_cast<std::size_t>(p)], e.m[static_cast<std::size_t>(r)]);
            e.swap_sign = -e.swap_sign;
        }
        const Integer pivot = e.m[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)];
        for (int i = r + 1; i < rows; ++i) {
            const Integer head = e.m[static_cast<std::size_t>(i)][static_cast<std::size_t>(c)];
            for (int j = 0; j < cols; ++j) {
                Integer v = e.m[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] * pivot -
                            head * e.m[static_cast<std::size_t>(r)][static_cast<std::size_t>(j)];
                mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), prev.get_mpz_t());
                e.m[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = v;
            }
        }
        prev = pivot;
        e.pivot_cols.push_back(c);
        ++r;
    }
    return e;
}

} // namespace

ExactMatrix::ExactMatrix(int rows, int cols) : rows_(rows), cols_(cols) {
    if (rows < 0 || cols < 0) throw InvalidRange("negative matrix shape");
    data_.assign(static_cast<std::size_t>(rows) * static_cast<std::size_t>(cols), Rational(0));
}

Rational& ExactMatrix::at(int i, int j) {
    if (i < 0 || i >= rows_ || j < 0 || j >= cols_) throw OutOfRange("matrix index");
    return data_[static_cast<std::size_t>(i) * static_cast<std::size_t>(cols_) + static_cast<std::size_t>(j)];
}

const Rational& ExactMatrix::at(int i, int j) const {
    if (i < 0 || i >= rows_ || j < 0 || j >= cols_) throw OutOfRange("matrix index");
    return data_[static_cast<std::size_t>(i) * static_cast<std::size_t>(cols_) + static_cast<std::size_t>(j)];
}

int ExactMatrix::rank() const {
    if (rows_ == 0 || cols_ == 0) return 0;
    return static_cast<int>(eliminate(*this, nullptr).pivot_cols.size());
}

Rational ExactMatrix::determinant() const {
    if (rows_ != cols_) throw NotSquare("determinant of non-square matrix");
    if (rows_ == 0) return Rational(1);
    Echelon e = eliminate(*this, nullptr);
    if (static_cast<int>(e.pivot_cols.size()) < rows_) return Rational(0);
    // Bareiss leaves det(scaled) as the last pivot, up to row swaps.
    Rational det(e.m[static_cast<std::size_t>(rows_ - 1)][static_cast<std::size_t>(cols_ - 1)]);
    det *= e.swap_sign;
    det /= Rational(e.row_scale_product);
    det.canonicalize();
    return det;
}

std::vector<std::vector<Rational>> ExactMatrix::nullspace() const {
    std::vector<std::vector<Rational>> out;
    if (cols_ == 0) return out;
    Echelon e = (rows_ == 0) ? Echelon{} : eliminate(*this, nullptr);
    std::vector<bool> is_pivot(static_cast<std::size_t>(cols_), false);
    for (int c : e.pivot_cols) is_pivot[static_cast<std::size_t>(c)] = true;
    for (int f = 0; f < cols_; ++f) {
        if (is_pivot[static_cast<std::size_t>(f)]) continue;
        std::vector<Rational> v(static_cast<std::size_t>(cols_), Rational(0));
        v[static_cast<std::size_t>(f)] = 1;
        for (int i = static_cast<int>(e.pivot_cols.size()) - 1; i >= 0; --i) {
            const int pc = e.pivot_cols[static_cast<std::size_t>(i)];
            Rational acc(0);
            for (int j = pc + 1; j < cols_; ++j)
                if (v[static_cast<std::size_t>(j)] != 0)
                    acc += Rational(e.m[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)]) *
                           v[static_cast<std::size_t>(j)];
            v[static_cast<std::size_t>(pc)] =
                -acc / Rational(e.m[static_cast<std::size_t>(i)][static_cast<std::size_t>(pc)]);
            v[static_cast<std::size_t>(pc)].canonicalize();
        }
        out.push_back(std::move(v));
    }
    return out;
}

std::optional<std::vector<Rational>> ExactMatrix::solve(const std::vector<Rational>& b) const {
    if (static_cast<int>(b.size()) != rows_) throw ShapeMismatch("rhs length");
    std::vector<Rational> x(static_cast<std::size_t>(cols_), Rational(0));
    if (rows_ == 0) return x;
    Echelon e = eliminate(*this, &b);
    // Inconsistency: a row that is zero on the coefficient part but not on b.
    for (int i = static_cast<int>(e.pivot_cols.size()); i < rows_; ++i)
        if (e.m[static_cast<std::size_t>(i)][static_cast<std::size_t>(cols_)] != 0) return std::nullopt;
    for (int i = static_cast<int>(e.pivot_cols.size()) - 1; i >= 0; --i) {
        const int pc = e.pivot_cols[static_cast<std::size_t>(i)];
        Rational acc(e.m[static_cast<std::size_t>(i)][static_cast<std::size_t>(cols_)]);
        for (int j = pc + 1; j < cols_; ++j)
            if (x[static_cast<std::size_t>(j)] != 0)
                acc -= Rational(e.m[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)]) *
                       x[static_cast<std::size_t>(j)];
        x[static_cast<std::size_t>(pc)] =
            acc / Rational(e.m[static_cast<std::size_t>(i)][static_cast<std::size_t>(pc)]);
        x[static_cast<std::size_t>(pc)].canonicalize();
    }
    return x;
}

std::vector<Rational> ExactMatrix::apply(const std::vector<Rational>& x) const {
    if (static_cast<int>(x.size()) != cols_) throw ShapeMismatch("vector length");
    std::vector<Rational> y(static_cast<std::size_t>(rows_), Rational(0));
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j)
            if (at(i, j) != 0) y[static_cast<std::size_t>(i)] += at(i, j) * x[static_cast<std::size_t>(j)];
    return y;
}

ExactMatrix ExactMatrix::transposed() const {
    ExactMatrix t(cols_, rows_);
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j) t.at(j, i) = at(i, j);
    return t;
}

} // namespace feec
