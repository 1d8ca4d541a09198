#include "galdef/nilpotent.hpp"

#include <numeric>
#include <sstream>

namespace galdef {

Partition::Partition(std::vector<int> p) : parts(std::move(p)) {
    for (size_t i = 0; i < parts.size(); ++i) {
        GALDEF_CHECK(parts[i] > 0, "partition parts must be positive");
        GALDEF_CHECK(i == 0 || parts[i - 1] >= parts[i], "partition must be nonincreasing");
    }
}

int Partition::total() const { return std::accumulate(parts.begin(), parts.end(), 0); }

std::string Partition::to_string() const {
    std::ostringstream os;
    os << "(";
    for (size_t i = 0; i < parts.size(); ++i) os << (i ? "," : "") << parts[i];
    os << ")";
    return os.str();
}

std::vector<Partition> Partition::all_of(int n) {
    std::vector<Partition> out;
    std::vector<int> cur;
    std::function<void(int, int)> rec = [&](int rem, int maxpart) {
        if (rem == 0) {
            out.emplace_back(cur);
            return;
        }
        for (int p = std::min(rem, maxpart); p >= 1; --p) {
            cur.push_back(p);
            rec(rem - p, p);
            cur.pop_back();
        }
    };
    rec(n, n);
    return out;
}

Mat jordan_nilpotent(const Ring& R, const Partition& type) {
    int n = type.total();
    Mat x(R, n, n);
    int off = 0;
    for (int part : type.parts) {
        for (int i = 0; i + 1 < part; ++i) x.set(off + i, off + i + 1, R.one());
        off += part;
    }
    return x;
}

bool is_nilpotent(const Mat& x) {
    GALDEF_CHECK(x.rows() == x.cols(), "nilpotency needs a square matrix");
    return x.pow(x.rows()).is_zero();
}

bool is_unipotent(const Mat& a) {
    GALDEF_CHECK(a.rows() == a.cols(), "unipotency needs a square matrix");
    return is_nilpotent(a.sub(Mat::identity(a.ring(), a.rows())));
}

Mat trunc_exp(const Mat& x) {
    const Ring& R = x.ring();
    int n = x.rows();
    GALDEF_CHECK(R.ell() >= n, "trunc_exp needs residue characteristic >= matrix size");
    GALDEF_CHECK(is_nilpotent(x), "trunc_exp needs a nilpotent input");
    Mat acc = Mat::identity(R, n);
    Mat term = Mat::identity(R, n);
    for (int k = 1; k < n; ++k) {
        term = term.mul(x).scale(R.must_inv(R.from_int(k)));
        acc = acc.add(term);
    }
    return acc;
}

Mat trunc_log(const Mat& a) {
    const Ring& R = a.ring();
    int n = a.rows();
    GALDEF_CHECK(R.ell() >= n, "trunc_log needs residue characteristic >= matrix size");
    Mat u = a.sub(Mat::identity(R, n));
    GALDEF_CHECK(is_nilpotent(u), "trunc_log needs a unipotent input");
    Mat acc = Mat::zero(R, n, n);
    Mat upow = Mat::identity(R, n);
    for (int k = 1; k < n; ++k) {
        upow = upow.mul(u);
        Elem c = R.must_inv(R.from_int(k));
        if (k % 2 == 0) c = R.neg(c);
        acc = acc.add(upow.scale(c));
    }
    return acc;
}

Partition jordan_partition(const Mat& x) {
    const Ring& R = x.ring();
    GALDEF_CHECK(R.is_field(), "jordan_partition needs field coefficients");
    GALDEF_CHECK(is_nilpotent(x), "jordan_partition needs a nilpotent input");
    int n = x.rows();
    // r[k] = rank(x^k); blocks of size >= k number r[k-1] - r[k]
    std::vector<int> r(size_t(n) + 2, 0);
    r[0] = n;
    Mat p = Mat::identity(R, n);
    for (int k = 1; k <= n + 1; ++k) {
        p = p.mul(x);
        r[size_t(k)] = p.rank();
    }
    std::vector<int> parts;
    for (int size = n; size >= 1; --size) {
        int ge_size = r[size_t(size - 1)] - r[size_t(size)];
        int ge_next = r[size_t(size)] - r[size_t(size + 1)];
        for (int c = 0; c < ge_size - ge_next; ++c) parts.push_back(size);
    }
    return Partition(parts);
}

Mat kernel_basis(const Mat& m) { return m.kernel_basis(); }

} // namespace galdef
