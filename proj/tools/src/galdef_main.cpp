// galdef: batch front end for the exact deformation-theory toolkit.
//
// Every subcommand writes one JSON report containing the inputs, the seed,
// the computed quantities and a verdict list. Exit codes: 0 all verdicts
// pass, 1 usage/input error, 2 a formula verdict failed, 3 internal error.

#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "galdef/fl.hpp"
#include "galdef/numerology.hpp"
#include "galdef/parallel.hpp"
#include "galdef/report.hpp"
#include "galdef/satake.hpp"
#include "galdef/screen.hpp"
#include "galdef/selftest.hpp"
#include "galdef/tame.hpp"

using json = nlohmann::ordered_json;
using namespace galdef;

namespace {

struct Verdict {
    std::string name;
    bool pass;
    std::string detail;
};

struct Output {
    std::string path;    // empty = stdout
    std::string format;  // "json" or "text"
    json report;
    std::vector<Verdict> verdicts;

    void add(const std::string& name, bool pass, const std::string& detail = "") {
        verdicts.push_back({name, pass, detail});
    }

    int finish() {
        bool all = true;
        json vlist = json::array();
        for (const Verdict& v : verdicts) {
            all = all && v.pass;
            json jv;
            jv["name"] = v.name;
            jv["pass"] = v.pass;
            if (!v.detail.empty()) jv["detail"] = v.detail;
            vlist.push_back(jv);
        }
        report["verdicts"] = vlist;
        report["all_pass"] = all;
        std::ostringstream body;
        if (format == "text") {
            body << "galdef " << report["subcommand"].get<std::string>() << " (seed "
                 << report["seed"] << ")\n";
            body << report.dump(2) << "\n";
        } else {
            body << report.dump(2) << "\n";
        }
        if (path.empty()) {
            std::cout << body.str();
        } else {
            std::ofstream out(path, std::ios::binary);
            out << body.str();
        }
        return all ? 0 : 2;
    }
};

std::vector<int64_t> parse_int_list(const std::string& s) {
    std::vector<int64_t> out;
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, ',')) {
        if (item.empty()) continue;
        out.push_back(std::stoll(item));
    }
    return out;
}

json tangent_to_json(const std::string& problem, int n, int64_t q, int64_t l,
                     const TangentReport& t) {
    return json::parse(tangent_json(problem, n, q, l, t));
}

// ---------------------------------------------------------------------------

int cmd_tame(Output& out, const std::string& problem, const std::vector<int64_t>& ns,
             const std::vector<int64_t>& qs, const std::vector<int64_t>& ells,
             const std::string& partition_str, int mu) {
    struct Point {
        int64_t n, q, ell;
    };
    std::vector<Point> grid;
    for (int64_t n : ns)
        for (int64_t q : qs)
            for (int64_t ell : ells) grid.push_back({n, q, ell});
    GALDEF_CHECK(!grid.empty(), "empty grid");
    if (problem == "min" && !partition_str.empty()) {
        // the partition is global input: validate before dispatching the grid
        std::vector<int> parts;
        for (int64_t v : parse_int_list(partition_str)) parts.push_back(int(v));
        Partition type(parts);
        for (int64_t n : ns)
            GALDEF_CHECK(type.total() == int(n), "partition does not sum to N");
    }

    std::vector<json> results(grid.size());
    std::vector<std::string> errors(grid.size());
    parallel_for(int(grid.size()), [&](int i) {
        const Point& pt = grid[size_t(i)];
        try {
            Ring k = Ring::prime_field(pt.ell);
            json entry;
            if (problem == "min") {
                Partition type = partition_str.empty()
                                     ? Partition(std::vector<int>(size_t(pt.n), 1))
                                     : Partition([&] {
                                           std::vector<int> parts;
                                           for (int64_t v : parse_int_list(partition_str))
                                               parts.push_back(int(v));
                                           return parts;
                                       }());
                TameRep r;
                r.q = pt.q;
                r.mu_parity = mu;
                r.cyc_power = 0;
                r.A = trunc_exp(jordan_nilpotent(k, type));
                r.B = minimal_B0(type, pt.q, k);
                TangentReport t = tangent_min(r);
                entry = tangent_to_json("min", int(pt.n), pt.q, pt.ell, t);
                entry["partition"] = type.to_string();
                entry["expected"] = {{"l_equals_h0", t.dim_l == t.dim_h0},
                                     {"identity", t.identity_holds(int(pt.n))}};
            } else {
                TameRep r = level_raising_rep(k, int(pt.n), pt.q, mu);
                LevelRaisingTangents lt = tangent_level_raising(r);
                json three = json::array();
                three.push_back(tangent_to_json("mix", int(pt.n), pt.q, pt.ell, lt.mix));
                three.push_back(tangent_to_json("ram", int(pt.n), pt.q, pt.ell, lt.ram));
                three.push_back(tangent_to_json("unr", int(pt.n), pt.q, pt.ell, lt.unr));
                entry["problems"] = three;
                entry["norm_v"] = lt.norm_v;
                entry["norm_w"] = lt.norm_w;
                entry["frobenius"] = lt.frobenius;
                entry["pair_mod_l"] = lt.pair;
                entry["expected"] = {
                    {"mix", lt.mix.dim_l1 == int(pt.n * pt.n) + 1},
                    {"ram", lt.ram.dim_l1 == int(pt.n * pt.n)},
                    {"unr", lt.unr.dim_l1 == int(pt.n * pt.n)},
                };
            }
            results[size_t(i)] = entry;
        } catch (const std::exception& ex) {
            errors[size_t(i)] = ex.what();
        }
    });

    json arr = json::array();
    bool formulas = true;
    for (size_t i = 0; i < grid.size(); ++i) {
        if (!errors[i].empty()) {
            json e;
            e["N"] = grid[i].n;
            e["q"] = grid[i].q;
            e["l"] = grid[i].ell;
            e["error"] = errors[i];
            arr.push_back(e);
            formulas = false;
            continue;
        }
        const json& entry = results[i];
        if (entry.contains("expected"))
            for (auto& [key, val] : entry["expected"].items()) formulas = formulas && val.get<bool>();
        arr.push_back(entry);
    }
    out.report["results"] = arr;
    out.add("tangent-dimension-formulas", formulas);
    return 0;
}

int cmd_fl(Output& out, uint64_t seed, const std::vector<int64_t>& fpluses,
           const std::vector<int64_t>& ns, const std::vector<int64_t>& ells, int b_flag,
           bool split) {
    struct Point {
        int64_t fplus, n, ell;
    };
    std::vector<Point> grid;
    for (int64_t fp : fpluses)
        for (int64_t n : ns)
            for (int64_t ell : ells) grid.push_back({fp, n, ell});
    std::vector<json> results(grid.size());
    std::vector<std::string> errors(grid.size());
    parallel_for(int(grid.size()), [&](int i) {
        const Point& pt = grid[size_t(i)];
        try {
            Ring k = Ring::prime_field(pt.ell);
            int b = b_flag >= 0 ? b_flag : int(pt.n) - 1;
            Rng rng(seed ^ (uint64_t(i) * 0x9e3779b97f4a7c15ULL));
            json entry;
            if (split) {
                std::vector<std::vector<int>> ws;
                auto pats = regular_weight_patterns(int(pt.n), b);
                for (int64_t t = 0; t < pt.fplus; ++t)
                    ws.push_back(pats[rng.below(pats.size())]);
                FLModule m = make_split_module(k, int(pt.n), int(pt.fplus), ws, rng);
                FLTangent t = fl_tangent(m, std::nullopt, b);
                entry = json::parse(fl_tangent_json(m, t));
                entry["expected"] = {
                    {"l_minus_h0",
                     t.l - t.h0 == int(pt.fplus * pt.n * (pt.n - 1) / 2)}};
            } else {
                auto pats = regular_weight_patterns(int(pt.n), b);
                std::vector<std::vector<int>> ws;
                for (int64_t t = 0; t < pt.fplus; ++t)
                    ws.push_back(pats[rng.below(pats.size())]);
                FLLifted obj = make_selfdual_module(k, int(pt.n), int(2 * pt.fplus), b, ws, rng);
                FLTangent t = fl_tangent(obj.module, obj.pairing, b);
                entry = json::parse(fl_tangent_json(obj.module, t));
                entry["expected"] = {
                    {"fil0_plus", t.fil0_plus == int(pt.fplus * pt.n * (pt.n + 1) / 2)},
                    {"homgr_plus", t.homgr_plus == int(pt.fplus * pt.n * pt.n)},
                    {"l_minus_h0", t.l - t.h0 == int(pt.fplus * pt.n * (pt.n - 1) / 2)}};
                fl_lift(obj.module, obj.pairing, Ring::dual_numbers(k));
                entry["lift_to_dual_numbers"] = "ok";
            }
            results[size_t(i)] = entry;
        } catch (const std::exception& ex) {
            errors[size_t(i)] = ex.what();
        }
    });
    json arr = json::array();
    bool formulas = true;
    for (size_t i = 0; i < grid.size(); ++i) {
        if (!errors[i].empty()) {
            json e;
            e["fplus"] = grid[i].fplus;
            e["N"] = grid[i].n;
            e["l"] = grid[i].ell;
            e["error"] = errors[i];
            arr.push_back(e);
            formulas = false;
            continue;
        }
        const json& entry = results[i];
        if (entry.contains("expected"))
            for (auto& [key, val] : entry["expected"].items()) formulas = formulas && val.get<bool>();
        arr.push_back(entry);
    }
    out.report["results"] = arr;
    out.add("fontaine-laffaille-dimension-formulas", formulas);
    return 0;
}

int cmd_satake(Output& out, const std::string& kind, int64_t ell, int deg,
               const std::string& alpha_str, const std::string& alpha2_str,
               const std::string& cochar_str) {
    Ring L = deg > 1 ? Ring::ext_field(ell, deg) : Ring::prime_field(ell);
    SatakeParameter p;
    p.L = L;
    p.kind = kind == "split" ? SatakeParameter::Kind::Split : SatakeParameter::Kind::Inert;
    for (int64_t v : parse_int_list(alpha_str)) p.alpha.push_back(L.from_int(v));
    if (p.kind == SatakeParameter::Kind::Split)
        for (int64_t v : parse_int_list(alpha2_str)) p.alpha2.push_back(L.from_int(v));
    UnitaryCheck uc = unitary_check(p);
    bool ms = unitary_multiset_criterion(p);
    out.report["parameter"] = json::parse(satake_json(p));
    out.report["unitary_polynomial_identity"] = uc.unitary;
    out.report["unitary_multiset_criterion"] = ms;
    if (uc.c.has_value()) out.report["split_constant"] = json::parse(elem_json(L, *uc.c));
    out.add("unitarity-criteria-agree", uc.unitary == ms);
    if (uc.unitary && !cochar_str.empty()) {
        Cocharacter x{parse_int_list(cochar_str)};
        auto ords = valid_orderings(p);
        GALDEF_CHECK(!ords.empty(), "no valid ordering: parameter not unitary enough");
        Elem v = weyl_orbit_value(p, ords[0], x);
        out.report["weyl_orbit_value"] = json::parse(elem_json(p.L, v));
        bool indep = true;
        for (const auto& o : ords) indep = indep && (weyl_orbit_value(p, o, x) == v);
        out.report["orderings_checked"] = ords.size();
        out.add("orbit-value-ordering-independent", indep);
    }
    return 0;
}

int cmd_screen(Output& out, const std::string& curve_str, int64_t cm_disc,
               const std::string& sigma_str, int n, int64_t counting_bound) {
    std::vector<int64_t> cs = parse_int_list(curve_str);
    GALDEF_CHECK(cs.size() == 5, "curve needs exactly a1,a2,a3,a4,a6");
    WeierstrassCurve e{cs[0], cs[1], cs[2], cs[3], cs[4]};
    ScreenConfig cfg;
    cfg.counting_bound = counting_bound;
    ExclusionReport rep = screen(e, cm_disc, parse_int_list(sigma_str), n, cfg);
    out.report["report"] = json::parse(exclusion_json(rep));
    // internal consistency: the final union equals the union of the parts
    std::set<int64_t> expect;
    for (const PlaceReport& pr : rep.places)
        for (const ReasonSet& rs : pr.reasons) expect.insert(rs.primes.begin(), rs.primes.end());
    for (const ReasonSet& rs : rep.global_reasons)
        expect.insert(rs.primes.begin(), rs.primes.end());
    out.add("union-equals-parts",
            std::vector<int64_t>(expect.begin(), expect.end()) == rep.all);
    return 0;
}

int cmd_numerology(Output& out, int64_t b, int64_t n, int64_t degF, const std::string& mu_parity,
                   const std::string& t_ell_str, int64_t size_t_flag) {
    PatchingInput in;
    in.b = b;
    in.n = n;
    in.deg_fplus = degF;
    for (int64_t d : parse_int_list(t_ell_str)) in.t_ell_degrees.push_back(d);
    in.size_t_set = size_t_flag >= 0 ? size_t_flag : int64_t(in.t_ell_degrees.size());
    in.mu_parity = mu_parity == "same" ? int(n % 2) : int((n + 1) % 2);
    int64_t g = taylor_wiles_generators(in);
    PatchingDims pd = patching_dimensions(in);
    out.report["inputs"] = {{"b", in.b},
                            {"T_ell_degrees", in.t_ell_degrees},
                            {"sizeT", in.size_t_set},
                            {"N", in.n},
                            {"deg_Fplus", in.deg_fplus},
                            {"mu_parity", in.mu_parity}};
    out.report["generators"] = g;
    out.report["dim_S_infinity"] = pd.dim_s_infinity;
    out.report["dim_R_infinity"] = pd.dim_r_infinity;
    out.report["parity_ok"] = pd.parity_ok;
    out.add("parity-verdict-matches-mu-N",
            pd.parity_ok == ((in.mu_parity % 2) == (n % 2)));
    int64_t lhs = pd.dim_r_infinity - pd.dim_s_infinity;
    int64_t sum = 0;
    for (int64_t d : in.t_ell_degrees) sum += d * (n * (n - 1) / 2);
    out.add("operations-consistent", lhs == g - b + sum);
    return 0;
}

int cmd_selftest(Output& out, uint64_t seed, int criterion) {
    std::vector<CriterionResult> rows =
        criterion > 0 ? std::vector<CriterionResult>{run_criterion(criterion, seed)}
                      : run_acceptance(seed);
    json arr = json::array();
    for (const CriterionResult& r : rows) {
        json jr;
        jr["criterion"] = r.index;
        jr["name"] = r.name;
        jr["pass"] = r.pass;
        jr["detail"] = r.detail;
        arr.push_back(jr);
        out.add("criterion-" + std::to_string(r.index) + ": " + r.name, r.pass, r.detail);
    }
    out.report["results"] = arr;
    return 0;
}

} // namespace

namespace {

// flat key=value configuration: each line contributes "--key value" unless
// the flag already appears on the command line (flags win)
std::vector<std::string> apply_config(int argc, char** argv) {
    std::vector<std::string> args(argv, argv + argc);
    std::string cfg_path;
    for (size_t i = 0; i + 1 < args.size(); ++i)
        if (args[i] == "--config") cfg_path = args[i + 1];
    if (cfg_path.empty()) return args;
    std::ifstream in(cfg_path);
    if (!in) throw galdef::input_error("cannot open config file " + cfg_path);
    std::string line;
    while (std::getline(in, line)) {
        if (line.empty() || line[0] == '#') continue;
        auto eq = line.find('=');
        if (eq == std::string::npos) continue;
        std::string key = "--" + line.substr(0, eq);
        std::string value = line.substr(eq + 1);
        bool present = false;
        for (const std::string& a : args) present = present || a == key;
        if (!present) {
            args.push_back(key);
            args.push_back(value);
        }
    }
    return args;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"galdef: exact verification toolkit for conjugate self-dual deformation theory"};
    app.require_subcommand(1);
    std::string config_path;
    app.add_option("--config", config_path, "flat key=value configuration file; flags win");

    uint64_t seed = 0;
    std::string out_path, format = "json";
    app.add_option("--seed", seed, "seed for randomized trials (recorded in the report)")
        ->capture_default_str();
    app.add_option("--out", out_path, "write the report to this path instead of stdout");
    app.add_option("--format", format, "json or text")->capture_default_str();

    // tame
    auto* tame = app.add_subcommand("tame", "tangent spaces of tame deformation problems");
    tame->fallthrough();
    std::string problem = "min", Ns = "2", Qs = "2", Ls = "7", partition;
    int mu = 0;
    tame->add_option("--problem", problem, "min | lr (mixed/ramified/unramified)")
        ->capture_default_str();
    tame->add_option("--N", Ns, "comma list of ranks")->capture_default_str();
    tame->add_option("--q", Qs, "comma list of residue sizes")->capture_default_str();
    tame->add_option("--l", Ls, "comma list of coefficient characteristics")
        ->capture_default_str();
    tame->add_option("--partition", partition, "unipotent class for min, e.g. 2,1");
    tame->add_option("--mu", mu, "similitude parity")->capture_default_str();

    // fl
    auto* fl = app.add_subcommand("fl", "Fontaine-Laffaille tangent dimensions and lifting");
    fl->fallthrough();
    std::string FPs = "1", FNs = "2", FLs = "5";
    int b_flag = -1;
    bool split = false;
    fl->add_option("--fplus", FPs, "comma list of [F_v^+ : Q_l]")->capture_default_str();
    fl->add_option("--N", FNs, "comma list of ranks")->capture_default_str();
    fl->add_option("--l", FLs, "comma list of characteristics")->capture_default_str();
    fl->add_option("--b", b_flag, "duality degree (default N-1)");
    fl->add_flag("--split", split, "use the split model (no pairing)");

    // satake
    auto* satake = app.add_subcommand("satake", "unitary Satake parameters");
    satake->fallthrough();
    std::string kind = "inert", alpha, alpha2, cochar;
    int64_t sl = 7;
    int sdeg = 1;
    satake->add_option("--kind", kind, "inert | split")->capture_default_str();
    satake->add_option("--l", sl, "field characteristic")->capture_default_str();
    satake->add_option("--deg", sdeg, "field extension degree")->capture_default_str();
    satake->add_option("--alpha", alpha, "comma list of entries")->required();
    satake->add_option("--alpha2", alpha2, "second multiset (split)");
    satake->add_option("--cochar", cochar, "cocharacter, e.g. 1,-1");

    // screen
    auto* screen_cmd = app.add_subcommand("screen", "elliptic-curve rigidity screener");
    screen_cmd->fallthrough();
    std::string curve, sigma;
    int64_t cm_disc = -4, counting_bound = 5000;
    int sn = 2;
    screen_cmd->add_option("--curve", curve, "a1,a2,a3,a4,a6")->required();
    screen_cmd->add_option("--cm-disc", cm_disc, "negative fundamental discriminant")->required();
    screen_cmd->add_option("--sigma", sigma, "comma list of primes in Sigma+")->required();
    screen_cmd->add_option("--N", sn, "rank of the symmetric power")->capture_default_str();
    screen_cmd->add_option("--counting-bound", counting_bound, "largest prime for point counts")
        ->capture_default_str();

    // numerology
    auto* num = app.add_subcommand("numerology", "auxiliary-prime and patching bookkeeping");
    num->fallthrough();
    int64_t nb = 0, nn = 2, ndegF = 1, nsizeT = -1;
    std::string mu_parity = "same", t_ell;
    num->add_option("--b", nb, "number of auxiliary primes")->required();
    num->add_option("--N", nn, "rank")->required();
    num->add_option("--degF", ndegF, "[F^+ : Q]")->required();
    num->add_option("--mu-parity", mu_parity, "same | diff (relative to N)")
        ->capture_default_str();
    num->add_option("--T-ell", t_ell, "comma list of l-adic local degrees in T");
    num->add_option("--sizeT", nsizeT, "|T| (default: number of l-adic entries)");

    // selftest
    auto* st = app.add_subcommand("selftest", "run the acceptance battery");
    st->fallthrough();
    int criterion = 0;
    st->add_option("--criterion", criterion, "run a single criterion (1-9)");

    try {
        std::vector<std::string> args = apply_config(argc, argv);
        std::vector<const char*> cargs;
        for (const std::string& a : args) cargs.push_back(a.c_str());
        app.parse(int(cargs.size()), cargs.data());
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 1;
    } catch (const galdef::input_error& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return 1;
    }

    Output out;
    out.path = out_path;
    out.format = format;
    out.report["tool"] = "galdef";
    out.report["subcommand"] = app.get_subcommands().front()->get_name();
    out.report["seed"] = seed;

    try {
        if (tame->parsed()) {
            out.report["config"] = {{"problem", problem}, {"N", Ns},         {"q", Qs},
                                    {"l", Ls},           {"partition", partition}, {"mu", mu}};
            cmd_tame(out, problem, parse_int_list(Ns), parse_int_list(Qs), parse_int_list(Ls),
                     partition, mu);
        } else if (fl->parsed()) {
            out.report["config"] = {{"fplus", FPs}, {"N", FNs}, {"l", FLs},
                                    {"b", b_flag},  {"split", split}};
            cmd_fl(out, seed, parse_int_list(FPs), parse_int_list(FNs), parse_int_list(FLs),
                   b_flag, split);
        } else if (satake->parsed()) {
            out.report["config"] = {{"kind", kind},     {"l", sl},         {"deg", sdeg},
                                    {"alpha", alpha},   {"alpha2", alpha2}, {"cochar", cochar}};
            cmd_satake(out, kind, sl, sdeg, alpha, alpha2, cochar);
        } else if (screen_cmd->parsed()) {
            out.report["config"] = {{"curve", curve},
                                    {"cm_disc", cm_disc},
                                    {"sigma", sigma},
                                    {"N", sn},
                                    {"counting_bound", counting_bound}};
            cmd_screen(out, curve, cm_disc, sigma, sn, counting_bound);
        } else if (num->parsed()) {
            cmd_numerology(out, nb, nn, ndegF, mu_parity, t_ell, nsizeT);
        } else if (st->parsed()) {
            out.report["config"] = {{"criterion", criterion}};
            cmd_selftest(out, seed, criterion);
        }
    } catch (const input_error& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return 1;
    } catch (const contract_error& e) {
        std::cerr << "formula verdict failed: " << e.what() << "\n";
        return 2;
    } catch (const internal_error& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 3;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return out.finish();
}
