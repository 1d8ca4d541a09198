#include "galdef/presented.hpp"

#include <sstream>

namespace galdef {

Word Word::then(const Word& w) const {
    Word r = *this;
    r.syllables.insert(r.syllables.end(), w.syllables.begin(), w.syllables.end());
    return r;
}

Word Word::inverse() const {
    Word r;
    for (size_t i = syllables.size(); i-- > 0;)
        r.syllables.push_back({syllables[i].first, -syllables[i].second});
    return r;
}

GnElement PresentedGroupHom::eval(const Word& w) const {
    GALDEF_CHECK(!images.empty(), "homomorphism without generator images");
    GnElement acc = gn_identity(images[0].ring(), images[0].n());
    for (const auto& [gen, exp] : w.syllables) {
        GALDEF_CHECK(gen >= 0 && gen < int(images.size()), "word references unknown generator");
        acc = gn_mul(acc, gn_pow(images[size_t(gen)], exp));
    }
    return acc;
}

int PresentedGroupHom::first_violated_relation() const {
    for (size_t i = 0; i < pres.relations.size(); ++i) {
        GnElement v = eval(pres.relations[i]);
        if (!(v.g.is_identity() && v.ring().is_one(v.mu) && !v.c)) return int(i);
    }
    return -1;
}

Elem CharacterData::eval(const Ring& R, const Word& w) const {
    Elem acc = R.one();
    for (const auto& [gen, exp] : w.syllables) {
        GALDEF_CHECK(gen >= 0 && gen < int(on_generators.size()),
                     "character word references unknown generator");
        acc = R.mul(acc, R.pow(on_generators[size_t(gen)], exp));
    }
    return acc;
}

PresentedGroupHom extend_to_gn(const PresentedGroupHom& rho, const GammaExtension& ext,
                               const Mat& B, const CharacterData& chi, int mu_B) {
    GALDEF_CHECK(mu_B == 1 || mu_B == -1, "mu_B must be +1 or -1");
    GALDEF_CHECK(!rho.images.empty(), "rho needs at least one generator image");
    const Ring& R = rho.images[0].ring();
    int n = rho.images[0].n();
    GALDEF_CHECK(B.rows() == n && B.cols() == n && B.ring() == R, "B has the wrong shape/ring");
    GALDEF_CHECK(B.is_invertible(), "B must be invertible");
    GALDEF_CHECK(int(ext.conj.size()) == rho.pres.num_generators(),
                 "extension data does not match the presentation");
    GALDEF_CHECK(int(chi.on_generators.size()) == rho.pres.num_generators(),
                 "character data does not match the presentation");
    for (const GnElement& im : rho.images)
        GALDEF_CHECK(!im.c, "rho must take values in the GL_N x GL_1 part");
    GALDEF_CHECK(rho.relations_hold(), "rho violates a relation of Gamma");

    Mat Binv = B.must_inverse();

    // identity 1: rho(gamma x gamma^{-1}) = B * chi(x) * t(rho(x))^{-1} * B^{-1}
    for (int i = 0; i < rho.pres.num_generators(); ++i) {
        Mat lhs = rho.eval(ext.conj[size_t(i)]).g;
        Mat dual = rho.images[size_t(i)].g.transpose().must_inverse()
                       .scale(chi.on_generators[size_t(i)]);
        Mat rhs = B.mul(dual).mul(Binv);
        if (lhs != rhs)
            throw input_error("conjugate self-duality fails on generator '" +
                              rho.pres.generator_names[size_t(i)] +
                              "': rho^gamma != B (chi rho^dual) B^{-1}");
    }

    // identity 2: B tB^{-1} = mu_B chi(gamma)^{-1} rho(gamma^2)
    {
        Mat lhs = B.mul(B.transpose().must_inverse());
        Elem factor = R.must_inv(chi.at_gamma);
        if (mu_B == -1) factor = R.neg(factor);
        Mat rhs = rho.eval(ext.gamma_sq).g.scale(factor);
        if (lhs != rhs)
            throw input_error("symmetry normalization fails: B tB^{-1} != mu_B chi(gamma)^{-1} rho(gamma^2)");
    }

    // assemble r on Gamma-tilde; gamma is the last generator
    PresentedGroupHom r;
    r.pres.generator_names = rho.pres.generator_names;
    r.pres.generator_names.push_back("gamma");
    int gi = rho.pres.num_generators();
    r.pres.relations = rho.pres.relations;
    for (int i = 0; i < rho.pres.num_generators(); ++i) {
        Word w = Word::gen(gi).then(Word::gen(i)).then(Word::gen(gi, -1))
                     .then(ext.conj[size_t(i)].inverse());
        r.pres.relations.push_back(w);
    }
    r.pres.relations.push_back(Word::gen(gi, 2).then(ext.gamma_sq.inverse()));

    for (int i = 0; i < rho.pres.num_generators(); ++i)
        r.images.push_back(gn_make(rho.images[size_t(i)].g, chi.on_generators[size_t(i)], false));
    Elem mu_gamma = chi.at_gamma;
    if (mu_B == -1) mu_gamma = R.neg(mu_gamma);
    r.images.push_back(gn_make(B, mu_gamma, true));

    int bad = r.first_violated_relation();
    GALDEF_ASSERT(bad < 0, "extended homomorphism violates a relation of Gamma-tilde");

    // the square of gamma lands where the construction promises
    GnElement sq = gn_pow(r.images[size_t(gi)], 2);
    GnElement expect = gn_make(rho.eval(ext.gamma_sq).g, chi.eval(R, ext.gamma_sq), false);
    GALDEF_ASSERT(sq == expect, "r(gamma^2) deviates from (rho(gamma^2), chi(gamma^2))");
    return r;
}

Mat recover_duality_matrix(const PresentedGroupHom& r, const GammaExtension& ext) {
    GALDEF_CHECK(!r.images.empty(), "empty homomorphism");
    int gi = r.pres.num_generators() - 1;
    const GnElement& at_gamma = r.images[size_t(gi)];
    if (!at_gamma.c)
        throw contract_error("r(gamma) does not lie in the c-coset");
    Mat B = at_gamma.g;
    Mat Binv = B.must_inverse();
    for (int i = 0; i < gi; ++i) {
        const GnElement& im = r.images[size_t(i)];
        if (im.c) throw contract_error("a Gamma generator maps outside GL_N x GL_1");
        Elem chi_x = gn_nu(im);
        Mat lhs = r.eval(ext.conj[size_t(i)]).g;
        Mat rhs = B.mul(im.g.transpose().must_inverse().scale(chi_x)).mul(Binv);
        if (lhs != rhs)
            throw contract_error("duality identity fails when recovering B on generator " +
                                 r.pres.generator_names[size_t(i)]);
    }
    return B;
}

} // namespace galdef
