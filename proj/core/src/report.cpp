#include "galdef/report.hpp"

#include <json.hpp>

namespace galdef {

using json = nlohmann::ordered_json;

namespace {

json elem_fragment(const Ring& R, const Elem& e) {
    switch (R.kind()) {
    case RingKind::PrimeField:
    case RingKind::IntegersMod:
        return json(e.c[0]);
    case RingKind::ExtField: {
        json a = json::array();
        for (int64_t c : e.c) a.push_back(c);
        return a;
    }
    case RingKind::DualNumbers: {
        Ring B = R.base();
        int h = B.dim();
        json a = json::array();
        a.push_back(elem_fragment(B, Elem{{e.c.begin(), e.c.begin() + h}}));
        a.push_back(elem_fragment(B, Elem{{e.c.begin() + h, e.c.end()}}));
        return a;
    }
    }
    return json();
}

json mat_fragment(const Mat& m) {
    json rows = json::array();
    for (int i = 0; i < m.rows(); ++i) {
        json row = json::array();
        for (int j = 0; j < m.cols(); ++j) row.push_back(elem_fragment(m.ring(), m.at(i, j)));
        rows.push_back(row);
    }
    return rows;
}

json sorted_elem_list(const Ring& R, std::vector<Elem> v) {
    std::sort(v.begin(), v.end());
    json a = json::array();
    for (const Elem& e : v) a.push_back(elem_fragment(R, e));
    return a;
}

} // namespace

std::string elem_json(const Ring& R, const Elem& e) { return elem_fragment(R, e).dump(); }

std::string mat_json(const Mat& m) { return mat_fragment(m).dump(); }

std::string gn_json(const GnElement& g) {
    json j;
    j["g"] = mat_fragment(g.g);
    j["mu"] = elem_fragment(g.ring(), g.mu);
    j["c"] = g.c ? 1 : 0;
    return j.dump();
}

std::string tangent_json(const std::string& problem, int n, int64_t q, int64_t ell,
                         const TangentReport& t) {
    json j;
    j["problem"] = problem;
    j["N"] = n;
    j["q"] = q;
    j["l"] = ell;
    j["dims"] = {{"h0", t.dim_h0}, {"h1", t.dim_h1}, {"l1", t.dim_l1}, {"l", t.dim_l}};
    return j.dump();
}

std::string satake_json(const SatakeParameter& p) {
    json j;
    j["kind"] = p.kind == SatakeParameter::Kind::Inert ? "inert" : "split";
    j["alpha"] = sorted_elem_list(p.L, p.alpha);
    if (p.kind == SatakeParameter::Kind::Split)
        j["alpha2"] = sorted_elem_list(p.L, p.alpha2);
    return j.dump();
}

std::string exclusion_json(const ExclusionReport& r) {
    json j;
    json places = json::array();
    for (const PlaceReport& pr : r.places) {
        json p;
        p["q"] = pr.q;
        p["splitting"] = splitting_name(pr.splitting);
        p["norm_w"] = pr.norm_w;
        p["reduction"] = reduction_name(pr.reduction);
        p["base_change_degree"] = pr.base_change_degree;
        if (pr.conservative) p["conservative"] = true;
        json reasons = json::array();
        for (const ReasonSet& rs : pr.reasons)
            reasons.push_back({{"tag", rs.tag}, {"primes", rs.primes}});
        p["reasons"] = reasons;
        places.push_back(p);
    }
    j["places"] = places;
    json globals = json::array();
    for (const ReasonSet& rs : r.global_reasons)
        globals.push_back({{"tag", rs.tag}, {"primes", rs.primes}});
    j["global"] = globals;
    j["excluded"] = r.all;
    j["certificate"] = r.certificate;
    j["similitude"] = r.similitude_readings;
    return j.dump();
}

std::string fl_tangent_json(const FLModule& m, const FLTangent& t) {
    json j;
    j["model"] = m.inert ? "inert" : "split";
    j["f"] = m.f;
    j["fplus"] = m.fplus;
    j["N"] = m.n();
    json weights = json::array();
    for (const FLTau& tau : m.taus) {
        std::vector<int> w = tau.weights;
        std::sort(w.begin(), w.end());
        weights.push_back(w);
    }
    j["weights"] = weights;
    j["dims"] = {{"fil0_hom_plus", t.fil0_plus},
                 {"hom_gr_plus", t.homgr_plus},
                 {"h0", t.h0},
                 {"l", t.l}};
    if (m.inert) j["sign_convention"] = t.sign_convention;
    return j.dump();
}

} // namespace galdef
