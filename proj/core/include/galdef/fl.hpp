#pragma once

#include <optional>
#include <string>
#include <vector>

#include "galdef/matrix.hpp"
#include "galdef/rng.hpp"

namespace galdef {

/// One embedding slot of a filtered Frobenius module: the standard flag on
/// R^N determined by the (nonincreasing) weight of each basis vector, plus the
/// divided Frobenius gr M_tau -> M_{tau sigma^{-1}} as an invertible matrix.
/// Over a non-field ring the matrix columns are the top divided powers
/// Phi^{w_j}(e_j); the lower ones are determined by Phi^i = l^{j-i} Phi^j.
struct FLTau {
    std::vector<int> weights;
    Mat frob;
};

/// Filtered Frobenius module with embeddings indexed by Z/f, sigma acting as
/// the +1 index shift and (when inert) the conjugation as the +f/2 shift.
struct FLModule {
    Ring R;
    int f = 0;
    int fplus = 0; // f/2 when inert, f when split
    bool inert = false;
    std::vector<FLTau> taus;

    int n() const { return taus.empty() ? 0 : taus[0].frob.rows(); }
    int cshift() const { return fplus; }
    int idx(int i) const { return ((i % f) + f) % f; }
};

/// Conjugate-duality pairing data: for each tau a perfect Gram matrix of
/// M_{tau^c} x M_tau -> R, with duality degree b.
struct FLPairing {
    int b = 0;
    std::vector<Mat> gram;
};

struct FLDiagnostics {
    bool ok = false;
    std::string detail;
};

FLDiagnostics fl_validate(const FLModule& m);
bool fl_is_regular(const FLModule& m);

/// sigma-twist: index shift by `power` steps; power = f/2 is the c-twist.
FLModule fl_twist(const FLModule& m, int power);

/// Dual with weights w -> b - w and Frobenius the inverse transpose in the
/// dual (weight-reversed) bases. Requires all weights in [0, b].
FLModule fl_dual(const FLModule& m, int b);

struct FLHomExt {
    int hom_mf = 0;  // ker(alpha)
    int fil0 = 0;    // filtration-preserving maps
    int hom_gr = 0;  // sigma-semilinear maps gr M1 -> M2
    int ext1 = 0;    // coker(alpha)
};

/// Dimensions in the four-term sequence
/// 0 -> Hom_MF -> Fil0Hom -> Hom_sigma(gr M1, M2) -> Ext1_MF -> 0.
FLHomExt fl_hom_ext(const FLModule& m1, const FLModule& m2);

/// Matrix of alpha(f) = f Phi - Phi gr(f) on all entry coordinates
/// (columns: entries of f_tau, tau-major row-major; rows likewise for the
/// outputs). Exposed for independent extension-counting oracles.
Mat fl_alpha_matrix(const FLModule& m1, const FLModule& m2);
/// Rows cutting out Fil0Hom inside all entry coordinates.
Mat fl_fil0_rows(const FLModule& m1, const FLModule& m2);

FLDiagnostics fl_pairing_check(const FLModule& m, const FLPairing& p);

struct FLTangent {
    int fil0_plus = 0;   // dim Fil0Hom^+        (inert: f+ N(N+1)/2)
    int homgr_plus = 0;  // dim Hom_sigma^+      (inert: f+ N^2)
    int h0 = 0;          // dim H^0(F_v^+, ad)
    int l = 0;           // dim L(D^FL)
    // the sign convention used for the duality-fixed subspaces, recorded in
    // case a downstream comparison needs the opposite one
    std::string sign_convention = "f_{tau^c} = -adjoint(f_tau)";
};

/// Tangent dimensions of the Fontaine-Laffaille deformation condition:
/// inert places use the duality-fixed subspaces cut out by the pairing;
/// split places drop the plus-condition.
FLTangent fl_tangent(const FLModule& m, const std::optional<FLPairing>& p, int b);

struct FLLifted {
    FLModule module;
    FLPairing pairing;
};

/// One infinitesimal lifting step k -> R (supported: R = k[eps] and
/// R = Z/l^2): adapted hyperbolic basis, entrywise Frobenius lift on a chosen
/// half of the embeddings, and the pairing-determined correction on the other
/// half. The result validates over R and reduces to the input.
FLLifted fl_lift(const FLModule& m, const FLPairing& p, const Ring& target);

/// Reduction of an R-object (and pairing) back to the residue field.
FLModule fl_reduce(const FLModule& m);
FLPairing fl_reduce_pairing(const FLModule& m, const FLPairing& p);

/// Apply a flag-preserving change of basis, one matrix per embedding; the
/// Frobenius picks up the weight-scaled matrix and the pairing transports
/// contravariantly. Validity is preserved.
void fl_change_basis(FLModule& m, FLPairing& p, const std::vector<Mat>& D);

/// Canonical conjugate self-dual family over a field: reversal Gram matrices
/// on every embedding, free Frobenius on a chosen half and the induced one on
/// the other half. weights_plus[i] are the (distinct, sorted decreasing)
/// weights at embedding i for i < f/2.
FLLifted make_selfdual_module(const Ring& k, int n, int f, int b,
                              const std::vector<std::vector<int>>& weights_plus, Rng& rng);

/// Split-place module with given weights per embedding and random Frobenius.
FLModule make_split_module(const Ring& k, int n, int f,
                           const std::vector<std::vector<int>>& weights, Rng& rng);

/// All strictly decreasing weight vectors of length n inside [0, b].
std::vector<std::vector<int>> regular_weight_patterns(int n, int b);

} // namespace galdef
