#pragma once

#include <optional>
#include <string>
#include <vector>

#include "galdef/nilpotent.hpp"
#include "galdef/presented.hpp"

namespace galdef {

/// Conjugate self-dual representation of the q-tame group <t, phi | phi t
/// phi^{-1} = t^q>: t maps to (A, 1), phi maps to (B, -chi(phi)) * c, with the
/// similitude character chi = eta^mu * cyc^c (eta(phi) = -1, cyc(phi) = q).
/// The pair must satisfy B tA^{-1} B^{-1} = A^q with A unipotent.
struct TameRep {
    int64_t q = 0;
    Mat A;
    Mat B;
    int mu_parity = 0;   // mu mod 2
    int64_t cyc_power = 0; // c

    const Ring& ring() const { return A.ring(); }
    int n() const { return A.rows(); }

    Elem chi_phi() const;       // chi(phi_q) = (-1)^mu * q^c
    GnElement at_t() const;     // (A, 1)
    GnElement at_phi() const;   // (B, -chi(phi)) * c
    GnElement at_phi_sq() const;
    /// GL-part of r(phi^2): the Frobenius of the index-two subgroup.
    Mat frobenius_sq() const;
};

struct TameDiagnostics {
    bool ok = false;
    std::string detail;
};

TameDiagnostics tame_rep_validate(const TameRep& r);

/// Presentation <t, phi | phi t phi^{-1} t^{-q}> with the images of r;
/// gamma = phi over the index-two subgroup generated by t and phi^2.
PresentedGroupHom tame_rep_to_presented(const TameRep& r);

/// A finite T_q-module: matrices for the actions of t and phi on k^d with
/// phi t phi^{-1} = t^q. Cohomology is computed from generator values subject
/// to the single relation-compatibility equation.
struct TameModule {
    int64_t q = 0;
    Mat t_act;
    Mat phi_act;

    const Ring& ring() const { return t_act.ring(); }
    int dim() const { return t_act.rows(); }
    void validate() const;
};

/// ad(r) restricted to the full tame group (subgroup_index 1) or to the
/// index-two subgroup generated by t and phi^2 (subgroup_index 2).
TameModule tame_ad_module(const TameRep& r, int subgroup_index);
TameModule tame_trivial_module(const Ring& k, int64_t q, int dim);

struct CohomologyDims {
    int h0 = 0;
    int z1 = 0;
    int b1 = 0;
    int h1 = 0;
};

CohomologyDims tame_cohomology(const TameModule& m);

/// Brute-force comparison oracle: dimensions of H^0 and H^1 of an explicit
/// finite quotient <t, phi | t^{l^a}, phi^d, phi t phi^{-1} t^{-q}>, computed
/// by enumerating all candidate generator values and walking the Cayley graph.
CohomologyDims tame_cohomology_bruteforce(const TameModule& m);

struct TangentReport {
    int dim_h0 = 0;
    int dim_h1 = 0;
    int dim_l1 = 0;
    int dim_l = 0;

    /// The dimension identity dim L^1 = N^2 + dim L - dim H^0.
    bool identity_holds(int n) const { return dim_l1 == n * n + dim_l - dim_h0; }
};

/// Tangent space of the minimally ramified deformation problem: cocycles whose
/// t-component is tangent to the conjugation orbit of log A.
TangentReport tangent_min(const TameRep& r);

struct LevelRaisingTangents {
    TangentReport mix;
    TangentReport ram;
    TangentReport unr;
    int dim_l1_unr_cap_ram = 0; // the two branches meet in codimension one
    // the convention actually used, recorded for the report
    int64_t norm_v = 0;          // q = ||v||
    int64_t norm_w = 0;          // ||w|| = q^2
    std::string frobenius = "phi_w = phi_q^2";
    std::vector<int64_t> pair;   // {q^{-N}, q^{-N+2}} mod l, as residues
};

/// Tangent spaces of the unramified / ramified / mixed level-raising problems
/// at an inert place, for an unramified residual representation whose
/// phi_w-eigenvalues contain {q^{-N}, q^{-N+2}} exactly once.
LevelRaisingTangents tangent_level_raising(const TameRep& r);

/// Unramified conjugate self-dual representation whose Frobenius at phi_w has
/// eigenvalues q^{-N}, q^{-N+2} on a 2-dimensional block and the similitude
/// value on the rest; the standard input for level raising. mu must be even
/// for the ramified direction to exist.
TameRep level_raising_rep(const Ring& k, int n, int64_t q, int mu_parity);

/// Block decomposition of a pair (rho_t, rho_phi) over an Artinian local ring
/// along pairwise coprime residual characteristic polynomials of rho_phi.
struct HenselBlocks {
    Mat basis_change;           // columns grouped block by block
    std::vector<int> block_sizes;
    std::vector<Mat> phi_blocks;
    std::vector<Mat> t_blocks;  // diagonal blocks of the transported rho_t
    bool t_off_diagonal_zero = false;
};

HenselBlocks hensel_decompose_rep(const Mat& rho_t, const Mat& rho_phi, int64_t q,
                                  const std::vector<Poly>& residual_char_polys,
                                  bool check_part_two);

/// Block matrix diag(A_m) with A_m antidiagonal (1, -q, ..., (-q)^{m-1}) from
/// bottom-left to top-right; satisfies B tX B^{-1} = -q X for the Jordan
/// nilpotent X of the partition.
Mat minimal_B0(const Partition& type, int64_t q, const Ring& R);

enum class PairsKind { GeneralLinear, Unitary };

struct PairsCount {
    uint64_t count = 0;
    std::vector<std::pair<Mat, Mat>> sample; // up to a few witnesses
};

/// Exhaustive count of pairs (A, B) over a small field with B A B^{-1} = A^q
/// (GeneralLinear) or B tA^{-1} B^{-1} = A^q (Unitary).
PairsCount enumerate_tame_pairs(const Ring& k, int n, int64_t q, PairsKind kind,
                                uint64_t budget = 10000000);

} // namespace galdef
