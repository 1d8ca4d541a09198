#pragma once

#include <cstdint>
#include <vector>

#include "galdef/common.hpp"

namespace galdef {

/// Inputs of the auxiliary-prime and patching bookkeeping.
struct PatchingInput {
    int64_t b = 0;                        // number of auxiliary primes
    std::vector<int64_t> t_ell_degrees;   // [F_v^+ : Q_l] for v in T above l
    int64_t size_t_set = 0;               // |T|
    int64_t n = 0;                        // N
    int64_t deg_fplus = 0;                // [F^+ : Q]
    int mu_parity = 0;                    // mu mod 2

    void validate() const;
};

/// g = b - sum_v deg_v N(N-1)/2 - N [F^+:Q] (1 + (-1)^{mu+1-N})/2.
int64_t taylor_wiles_generators(const PatchingInput& in);

struct PatchingDims {
    int64_t dim_s_infinity = 0;
    int64_t dim_r_infinity = 0;
    bool parity_ok = false; // dim R >= dim S, equivalent to mu = N mod 2
};

PatchingDims patching_dimensions(const PatchingInput& in);

} // namespace galdef
