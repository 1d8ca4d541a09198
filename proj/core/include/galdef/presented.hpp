#pragma once

#include <string>
#include <vector>

#include "galdef/gn.hpp"

namespace galdef {

/// Word in the generators of a finitely presented group:
/// product of gen^exp syllables, left to right.
struct Word {
    std::vector<std::pair<int, int64_t>> syllables;

    static Word one() { return {}; }
    static Word gen(int i, int64_t e = 1) { return Word{{{i, e}}}; }
    Word then(const Word& w) const;
    Word inverse() const;
};

struct Presentation {
    std::vector<std::string> generator_names;
    std::vector<Word> relations;

    int num_generators() const { return int(generator_names.size()); }
};

/// Homomorphism from a finitely presented group into some G_N(R), given by
/// generator images.
struct PresentedGroupHom {
    Presentation pres;
    std::vector<GnElement> images;

    GnElement eval(const Word& w) const;
    /// Index of the first violated relation, or -1 when all hold.
    int first_violated_relation() const;
    bool relations_hold() const { return first_violated_relation() < 0; }
};

/// Data describing an index-two overgroup of the presented group Gamma:
/// a chosen gamma with gamma^2 in Gamma and the conjugation action of gamma
/// on the generators of Gamma, all written as words in Gamma's generators.
struct GammaExtension {
    std::vector<Word> conj; // conj[i] = gamma * x_i * gamma^{-1}
    Word gamma_sq;          // gamma^2
};

/// Character values on Gamma-tilde: one unit per Gamma generator plus the
/// value at gamma.
struct CharacterData {
    std::vector<Elem> on_generators;
    Elem at_gamma;

    Elem eval(const Ring& R, const Word& w) const;
};

/// Extend a GL_N-valued homomorphism rho on Gamma to a G_N-valued
/// homomorphism r on Gamma-tilde with r(gamma) = (B, mu_B * chi(gamma)) * c,
/// after verifying the two defining identities
///   rho^gamma = B (chi rho^dual) B^{-1}   and
///   B tB^{-1} = mu_B chi(gamma)^{-1} rho(gamma^2).
/// All relations of Gamma-tilde are checked on the result.
PresentedGroupHom extend_to_gn(const PresentedGroupHom& rho, const GammaExtension& ext,
                               const Mat& B, const CharacterData& chi, int mu_B);

/// Inverse direction: from a homomorphism r on Gamma-tilde (built by
/// extend_to_gn, gamma being the last generator), read off B from the c-coset
/// value r(gamma) and verify the duality identity on every Gamma generator.
/// Throws contract_error when r is not conjugate self-dual with the expected
/// shape.
Mat recover_duality_matrix(const PresentedGroupHom& r, const GammaExtension& ext);

} // namespace galdef
