#pragma once

#include <vector>

#include "galdef/matrix.hpp"

namespace galdef {

/// Partition of n: nonincreasing positive parts summing to n.
struct Partition {
    std::vector<int> parts;

    Partition() = default;
    explicit Partition(std::vector<int> p);

    int total() const;
    bool operator==(const Partition& o) const { return parts == o.parts; }
    bool operator!=(const Partition& o) const { return parts != o.parts; }
    std::string to_string() const;

    static std::vector<Partition> all_of(int n);
};

/// Upper triangular Jordan nilpotent with block sizes given by the partition.
Mat jordan_nilpotent(const Ring& R, const Partition& type);

bool is_nilpotent(const Mat& x);
bool is_unipotent(const Mat& a);

/// 1 + X + ... + X^{n-1}/(n-1)! for nilpotent X; needs residue char l >= n.
Mat trunc_exp(const Mat& x);
/// Inverse of trunc_exp on unipotent matrices.
Mat trunc_log(const Mat& a);

/// Jordan type of a nilpotent matrix over a field, from the rank sequence.
Partition jordan_partition(const Mat& x);

/// Right-kernel basis columns of a matrix over a field.
Mat kernel_basis(const Mat& m);

} // namespace galdef
