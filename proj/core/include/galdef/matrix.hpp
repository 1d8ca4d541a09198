#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "galdef/poly.hpp"
#include "galdef/ring.hpp"
#include "galdef/rng.hpp"

namespace galdef {

/// Dense matrix over a Ring. Row-major, value semantics.
class Mat {
public:
    Mat() = default;
    Mat(Ring R, int rows, int cols);

    static Mat identity(const Ring& R, int n);
    static Mat zero(const Ring& R, int rows, int cols) { return Mat(R, rows, cols); }
    static Mat from_ints(const Ring& R, const std::vector<std::vector<int64_t>>& rows);
    static Mat diag_blocks(const std::vector<Mat>& blocks);
    static Mat random(const Ring& R, int rows, int cols, Rng& rng);
    static Mat random_invertible(const Ring& R, int n, Rng& rng);

    const Ring& ring() const { return R_; }
    int rows() const { return nr_; }
    int cols() const { return nc_; }

    const Elem& at(int i, int j) const { return a_[size_t(i * nc_ + j)]; }
    void set(int i, int j, Elem v) { a_[size_t(i * nc_ + j)] = std::move(v); }

    Mat add(const Mat& o) const;
    Mat sub(const Mat& o) const;
    Mat neg() const;
    Mat mul(const Mat& o) const;
    Mat scale(const Elem& s) const;
    Mat transpose() const;
    Mat pow(int64_t e) const; // square matrices; e >= 0
    /// I + A + A^2 + ... + A^{e-1} by binary splitting.
    Mat power_sum(int64_t e) const;

    bool is_zero() const;
    bool is_identity() const;
    bool operator==(const Mat& o) const { return nr_ == o.nr_ && nc_ == o.nc_ && a_ == o.a_; }
    bool operator!=(const Mat& o) const { return !(*this == o); }

    /// Determinant over any commutative ring (subset DP; n <= ~10).
    Elem det() const;
    /// Characteristic polynomial det(xI - A) over any commutative ring.
    Poly char_poly() const;

    /// Inverse over a local ring (unit pivots); nullopt when not invertible.
    std::optional<Mat> inverse() const;
    Mat must_inverse() const;
    bool is_invertible() const { return inverse().has_value(); }

    // --- field-only linear algebra ---
    int rank() const;
    /// Basis of the right kernel, as columns of the returned matrix.
    Mat kernel_basis() const;
    /// Rows spanning { y : yA = 0 }.
    Mat left_kernel_rows() const;
    /// Columns forming a basis of the column space (unit-pivot selection;
    /// valid over local rings by reduction to the residue field).
    Mat column_space_basis() const;

    Mat hcat(const Mat& o) const;
    Mat vcat(const Mat& o) const;
    Mat submatrix(int r0, int c0, int rows, int cols) const;

    /// Entrywise reduction to the residue field.
    Mat residue() const;
    /// Entrywise lift into ring S (section of residue()).
    Mat lift_to(const Ring& S) const;
    Mat map(const Ring& S, const std::function<Elem(const Elem&)>& f) const;

    /// Column vector of length rows()*cols() listing entries row-major.
    std::vector<Elem> flatten() const;
    static Mat unflatten(const Ring& R, int rows, int cols, const std::vector<Elem>& v);

    std::string to_string() const;

private:
    Ring R_;
    int nr_ = 0, nc_ = 0;
    std::vector<Elem> a_;
};

/// Solve A x = b over a field; nullopt when inconsistent. Returns one solution.
std::optional<std::vector<Elem>> solve_field(const Mat& A, const std::vector<Elem>& b);

/// Solve A x = b over a local ring when A is square invertible.
std::vector<Elem> solve_local(const Mat& A, const std::vector<Elem>& b);

} // namespace galdef
