#include "galdef/matrix.hpp"

#include <sstream>

namespace galdef {

Mat::Mat(Ring R, int rows, int cols) : R_(std::move(R)), nr_(rows), nc_(cols) {
    GALDEF_CHECK(rows >= 0 && cols >= 0, "negative matrix dimensions");
    a_.assign(size_t(rows) * size_t(cols), R_.zero());
}

Mat Mat::identity(const Ring& R, int n) {
    Mat m(R, n, n);
    for (int i = 0; i < n; ++i) m.set(i, i, R.one());
    return m;
}

Mat Mat::from_ints(const Ring& R, const std::vector<std::vector<int64_t>>& rows) {
    int nr = int(rows.size());
    int nc = nr ? int(rows[0].size()) : 0;
    Mat m(R, nr, nc);
    for (int i = 0; i < nr; ++i) {
        GALDEF_CHECK(int(rows[size_t(i)].size()) == nc, "ragged matrix literal");
        for (int j = 0; j < nc; ++j) m.set(i, j, R.from_int(rows[size_t(i)][size_t(j)]));
    }
    return m;
}

Mat Mat::diag_blocks(const std::vector<Mat>& blocks) {
    GALDEF_CHECK(!blocks.empty(), "diag_blocks needs at least one block");
    int n = 0;
    for (const auto& b : blocks) {
        GALDEF_CHECK(b.rows() == b.cols(), "diag_blocks needs square blocks");
        n += b.rows();
    }
    Mat m(blocks[0].ring(), n, n);
    int off = 0;
    for (const auto& b : blocks) {
        for (int i = 0; i < b.rows(); ++i)
            for (int j = 0; j < b.cols(); ++j) m.set(off + i, off + j, b.at(i, j));
        off += b.rows();
    }
    return m;
}

Mat Mat::random(const Ring& R, int rows, int cols, Rng& rng) {
    Mat m(R, rows, cols);
    for (int i = 0; i < rows; ++i)
        for (int j = 0; j < cols; ++j) m.set(i, j, R.elem_at(rng.below(R.size())));
    return m;
}

Mat Mat::random_invertible(const Ring& R, int n, Rng& rng) {
    for (int tries = 0; tries < 10000; ++tries) {
        Mat m = random(R, n, n, rng);
        if (m.is_invertible()) return m;
    }
    throw internal_error("failed to sample an invertible matrix");
}

Mat Mat::add(const Mat& o) const {
    GALDEF_CHECK(nr_ == o.nr_ && nc_ == o.nc_ && R_ == o.R_, "matrix shape/ring mismatch");
    Mat r = *this;
    for (size_t i = 0; i < a_.size(); ++i) r.a_[i] = R_.add(a_[i], o.a_[i]);
    return r;
}

Mat Mat::sub(const Mat& o) const { return add(o.neg()); }

Mat Mat::neg() const {
    Mat r = *this;
    for (auto& e : r.a_) e = R_.neg(e);
    return r;
}

Mat Mat::mul(const Mat& o) const {
    GALDEF_CHECK(nc_ == o.nr_ && R_ == o.R_, "matrix product shape/ring mismatch");
    Mat r(R_, nr_, o.nc_);
    for (int i = 0; i < nr_; ++i)
        for (int k = 0; k < nc_; ++k) {
            const Elem& aik = at(i, k);
            if (R_.is_zero(aik)) continue;
            for (int j = 0; j < o.nc_; ++j)
                r.set(i, j, R_.add(r.at(i, j), R_.mul(aik, o.at(k, j))));
        }
    return r;
}

Mat Mat::scale(const Elem& s) const {
    Mat r = *this;
    for (auto& e : r.a_) e = R_.mul(e, s);
    return r;
}

Mat Mat::transpose() const {
    Mat r(R_, nc_, nr_);
    for (int i = 0; i < nr_; ++i)
        for (int j = 0; j < nc_; ++j) r.set(j, i, at(i, j));
    return r;
}

Mat Mat::pow(int64_t e) const {
    GALDEF_CHECK(nr_ == nc_ && e >= 0, "pow needs a square matrix and e >= 0");
    Mat r = identity(R_, nr_), b = *this;
    while (e > 0) {
        if (e & 1) r = r.mul(b);
        b = b.mul(b);
        e >>= 1;
    }
    return r;
}

Mat Mat::power_sum(int64_t e) const {
    GALDEF_CHECK(nr_ == nc_ && e >= 0, "power_sum needs a square matrix and e >= 0");
    // S(e) = I + A + ... + A^{e-1}; S(2k) = S(k)(I + A^k), S(2k+1) = S(2k) + A^{2k}
    if (e == 0) return zero(R_, nr_, nr_);
    if (e == 1) return identity(R_, nr_);
    Mat half = power_sum(e / 2);
    Mat ak = pow(e / 2);
    Mat s = half.add(ak.mul(half));
    if (e & 1) s = s.add(ak.mul(ak));
    return s;
}

bool Mat::is_zero() const {
    for (const auto& e : a_)
        if (!R_.is_zero(e)) return false;
    return true;
}

bool Mat::is_identity() const { return nr_ == nc_ && *this == identity(R_, nr_); }

Elem Mat::det() const {
    GALDEF_CHECK(nr_ == nc_, "determinant needs a square matrix");
    int n = nr_;
    if (n == 0) return R_.one();
    GALDEF_CHECK(n <= 12, "determinant size out of supported range");
    // subset DP over column sets; works over any commutative ring
    std::vector<Elem> dp(size_t(1) << n, R_.zero());
    dp[0] = R_.one();
    for (uint32_t s = 1; s < (uint32_t(1) << n); ++s) {
        int row = __builtin_popcount(s) - 1;
        Elem acc = R_.zero();
        int pos = 0;
        for (int j = 0; j < n; ++j) {
            if (!(s & (uint32_t(1) << j))) continue;
            // Laplace expansion along the last included row: sign (-1)^{row+pos}
            Elem term = R_.mul(at(row, j), dp[s ^ (uint32_t(1) << j)]);
            if ((row + pos) % 2 == 1) term = R_.neg(term);
            acc = R_.add(acc, term);
            ++pos;
        }
        dp[s] = acc;
    }
    return dp[(size_t(1) << n) - 1];
}

Poly Mat::char_poly() const {
    GALDEF_CHECK(nr_ == nc_, "char_poly needs a square matrix");
    int n = nr_;
    GALDEF_CHECK(n <= 12, "char_poly size out of supported range");
    // det(xI - A) via the same subset DP with degree <= 1 entries
    Poly one = Poly::constant(R_, R_.one());
    std::vector<Poly> dp(size_t(1) << n, Poly(R_));
    dp[0] = one;
    Poly px = Poly::x(R_);
    for (uint32_t s = 1; s < (uint32_t(1) << n); ++s) {
        int row = __builtin_popcount(s) - 1;
        Poly acc(R_);
        int pos = 0;
        for (int j = 0; j < n; ++j) {
            if (!(s & (uint32_t(1) << j))) continue;
            Poly entry = Poly::constant(R_, R_.neg(at(row, j)));
            if (row == j) entry = entry.add(px);
            Poly term = entry.mul(dp[s ^ (uint32_t(1) << j)]);
            if ((row + pos) % 2 == 1) term = term.neg();
            acc = acc.add(term);
            ++pos;
        }
        dp[s] = acc;
    }
    return dp[(size_t(1) << n) - 1];
}

std::optional<Mat> Mat::inverse() const {
    GALDEF_CHECK(nr_ == nc_, "inverse needs a square matrix");
    int n = nr_;
    Mat work = *this;
    Mat inv = identity(R_, n);
    for (int col = 0; col < n; ++col) {
        int pivot = -1;
        for (int r = col; r < n; ++r)
            if (R_.is_unit(work.at(r, col))) { pivot = r; break; }
        if (pivot < 0) return std::nullopt;
        if (pivot != col) {
            for (int j = 0; j < n; ++j) {
                std::swap(work.a_[size_t(pivot * n + j)], work.a_[size_t(col * n + j)]);
                std::swap(inv.a_[size_t(pivot * n + j)], inv.a_[size_t(col * n + j)]);
            }
        }
        Elem pinv = R_.must_inv(work.at(col, col));
        for (int j = 0; j < n; ++j) {
            work.set(col, j, R_.mul(work.at(col, j), pinv));
            inv.set(col, j, R_.mul(inv.at(col, j), pinv));
        }
        for (int r = 0; r < n; ++r) {
            if (r == col) continue;
            Elem f = work.at(r, col);
            if (R_.is_zero(f)) continue;
            for (int j = 0; j < n; ++j) {
                work.set(r, j, R_.sub(work.at(r, j), R_.mul(f, work.at(col, j))));
                inv.set(r, j, R_.sub(inv.at(r, j), R_.mul(f, inv.at(col, j))));
            }
        }
    }
    return inv;
}

Mat Mat::must_inverse() const {
    auto r = inverse();
    GALDEF_CHECK(r.has_value(), "matrix not invertible");
    return *r;
}

namespace {

// row echelon over a field; returns pivot columns; modifies m in place
std::vector<int> echelonize(Mat& m) {
    const Ring& R = m.ring();
    GALDEF_CHECK(R.is_field(), "echelon form needs field coefficients");
    std::vector<int> pivots;
    int row = 0;
    for (int col = 0; col < m.cols() && row < m.rows(); ++col) {
        int p = -1;
        for (int r = row; r < m.rows(); ++r)
            if (!R.is_zero(m.at(r, col))) { p = r; break; }
        if (p < 0) continue;
        if (p != row)
            for (int j = 0; j < m.cols(); ++j) {
                Elem tmp = m.at(p, j);
                m.set(p, j, m.at(row, j));
                m.set(row, j, tmp);
            }
        Elem pinv = R.must_inv(m.at(row, col));
        for (int j = 0; j < m.cols(); ++j) m.set(row, j, R.mul(m.at(row, j), pinv));
        for (int r = 0; r < m.rows(); ++r) {
            if (r == row) continue;
            Elem f = m.at(r, col);
            if (R.is_zero(f)) continue;
            for (int j = 0; j < m.cols(); ++j)
                m.set(r, j, R.sub(m.at(r, j), R.mul(f, m.at(row, j))));
        }
        pivots.push_back(col);
        ++row;
    }
    return pivots;
}

} // namespace

int Mat::rank() const {
    Mat m = *this;
    return int(echelonize(m).size());
}

Mat Mat::kernel_basis() const {
    Mat m = *this;
    std::vector<int> pivots = echelonize(m);
    std::vector<bool> is_pivot(size_t(nc_), false);
    for (int p : pivots) is_pivot[size_t(p)] = true;
    int k = nc_ - int(pivots.size());
    Mat basis(R_, nc_, k);
    int out = 0;
    for (int freec = 0; freec < nc_; ++freec) {
        if (is_pivot[size_t(freec)]) continue;
        basis.set(freec, out, R_.one());
        for (size_t pr = 0; pr < pivots.size(); ++pr)
            basis.set(pivots[pr], out, R_.neg(m.at(int(pr), freec)));
        ++out;
    }
    return basis;
}

Mat Mat::left_kernel_rows() const { return transpose().kernel_basis().transpose(); }

Mat Mat::column_space_basis() const {
    Mat res = residue();
    std::vector<int> keep;
    {
        Mat m = res;
        keep = echelonize(m);
    }
    Mat basis(R_, nr_, int(keep.size()));
    for (size_t j = 0; j < keep.size(); ++j)
        for (int i = 0; i < nr_; ++i) basis.set(i, int(j), at(i, keep[j]));
    return basis;
}

Mat Mat::hcat(const Mat& o) const {
    GALDEF_CHECK(nr_ == o.nr_, "hcat row mismatch");
    Mat r(R_, nr_, nc_ + o.nc_);
    for (int i = 0; i < nr_; ++i) {
        for (int j = 0; j < nc_; ++j) r.set(i, j, at(i, j));
        for (int j = 0; j < o.nc_; ++j) r.set(i, nc_ + j, o.at(i, j));
    }
    return r;
}

Mat Mat::vcat(const Mat& o) const {
    GALDEF_CHECK(nc_ == o.nc_, "vcat column mismatch");
    Mat r(R_, nr_ + o.nr_, nc_);
    for (int i = 0; i < nr_; ++i)
        for (int j = 0; j < nc_; ++j) r.set(i, j, at(i, j));
    for (int i = 0; i < o.nr_; ++i)
        for (int j = 0; j < nc_; ++j) r.set(nr_ + i, j, o.at(i, j));
    return r;
}

Mat Mat::submatrix(int r0, int c0, int rows, int cols) const {
    GALDEF_CHECK(r0 >= 0 && c0 >= 0 && r0 + rows <= nr_ && c0 + cols <= nc_,
                 "submatrix out of range");
    Mat r(R_, rows, cols);
    for (int i = 0; i < rows; ++i)
        for (int j = 0; j < cols; ++j) r.set(i, j, at(r0 + i, c0 + j));
    return r;
}

Mat Mat::residue() const {
    Ring k = R_.residue_field();
    return map(k, [&](const Elem& e) { return R_.residue(e); });
}

Mat Mat::lift_to(const Ring& S) const {
    GALDEF_CHECK(S.residue_field() == R_, "lift target has a different residue field");
    return map(S, [&](const Elem& e) { return S.lift_from_residue(e); });
}

Mat Mat::map(const Ring& S, const std::function<Elem(const Elem&)>& f) const {
    Mat r(S, nr_, nc_);
    for (int i = 0; i < nr_; ++i)
        for (int j = 0; j < nc_; ++j) r.set(i, j, f(at(i, j)));
    return r;
}

std::vector<Elem> Mat::flatten() const { return a_; }

Mat Mat::unflatten(const Ring& R, int rows, int cols, const std::vector<Elem>& v) {
    GALDEF_CHECK(int(v.size()) == rows * cols, "unflatten size mismatch");
    Mat m(R, rows, cols);
    for (int i = 0; i < rows; ++i)
        for (int j = 0; j < cols; ++j) m.set(i, j, v[size_t(i * cols + j)]);
    return m;
}

std::string Mat::to_string() const {
    std::ostringstream os;
    os << "[";
    for (int i = 0; i < nr_; ++i) {
        os << (i ? "; " : "");
        for (int j = 0; j < nc_; ++j) os << (j ? "," : "") << R_.to_string(at(i, j));
    }
    os << "]";
    return os.str();
}

std::optional<std::vector<Elem>> solve_field(const Mat& A, const std::vector<Elem>& b) {
    const Ring& R = A.ring();
    GALDEF_CHECK(R.is_field(), "solve_field needs field coefficients");
    GALDEF_CHECK(int(b.size()) == A.rows(), "rhs size mismatch");
    Mat aug = A.hcat(Mat::unflatten(R, A.rows(), 1, b));
    std::vector<int> pivots = echelonize(aug);
    for (size_t r = 0; r < pivots.size(); ++r)
        if (pivots[r] == A.cols()) return std::nullopt; // pivot in rhs column
    std::vector<Elem> x(size_t(A.cols()), R.zero());
    for (size_t r = 0; r < pivots.size(); ++r) x[size_t(pivots[r])] = aug.at(int(r), A.cols());
    return x;
}

std::vector<Elem> solve_local(const Mat& A, const std::vector<Elem>& b) {
    Mat inv = A.must_inverse();
    Mat x = inv.mul(Mat::unflatten(A.ring(), int(b.size()), 1, b));
    return x.flatten();
}

} // namespace galdef
