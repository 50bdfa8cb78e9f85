// rtf - command line front end
#include "rtf/assembly.hpp"
#include "rtf/config.hpp"
#include "rtf/lattice.hpp"
#include "rtf/orbital_arch.hpp"
#include "rtf/orbital_local.hpp"
#include "rtf/spectral.hpp"
#include "rtf/verify.hpp"

#include "CLI11.hpp"

#include <cstdio>
#include <iostream>
#include <sstream>

using namespace rtf;

namespace {

std::pair<int, int> parse_range(const std::string& s) {
    auto dots = s.find("..");
    if (dots == std::string::npos) {
        int v = std::stoi(s);
        return {v, v};
    }
    int lo = std::stoi(s.substr(0, dots)), hi = std::stoi(s.substr(dots + 2));
    if (hi < lo) throw std::invalid_argument("empty range " + s);
    return {lo, hi};
}

std::vector<double> parse_list(const std::string& s) {
    std::vector<double> out;
    std::stringstream ss(s);
    std::string tok;
    while (std::getline(ss, tok, ',')) out.push_back(std::stod(tok));
    if (out.empty()) throw std::invalid_argument("empty list");
    return out;
}

json cplx(std::complex<double> z) { return json::array({z.real(), z.imag()}); }

std::string num(double x) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", x);
    return buf;
}

std::string csv_field(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string q = "\"";
    for (char c : s) q += c == '"' ? std::string("\"\"") : std::string(1, c);
    return q + "\"";
}

int check_eta(int eta) {
    if (eta != 1 && eta != -1) throw std::invalid_argument("--eta must be 1 or -1");
    return eta;
}

// ---- ntransform ----

int cmd_ntransform(const std::string& cfg_path, const std::string& fn, const std::string& ideal, bool plus) {
    AssemblyConfig cfg = load_config(cfg_path);
    Ideal n = cfg.ideal(ideal);
    ArithFn B;
    std::optional<FormalLog> closed;
    if (fn == "one") {
        B = ArithFn::constant(1);
        closed = plus ? FormalLog(n_plus_closed(n, 0)) : FormalLog(closed_power(n, 0));
    } else if (fn == "lognorm") {
        B = ArithFn::log_norm();
        if (!plus) closed = closed_log(n);
    } else if (fn.rfind("norm^", 0) == 0) {
        Rational t = parse_rational(fn.substr(5));
        if (t.get_den() == 1) B = ArithFn::norm_power(t.get_num().get_si());
        closed = plus ? FormalLog(n_plus_closed(n, t)) : FormalLog(closed_power(n, t));
    } else {
        throw std::invalid_argument("--fn must be one, norm^t or lognorm");
    }
    json out = {{"ideal", n.str()}, {"fn", fn}, {"transform", plus ? "N+" : "N"}};
    if (B.eval) {
        FormalLog v = plus ? n_plus(B, n) : n_transform(B, n);
        out["value"] = to_json(v);
        out["numeric"] = v.eval(cfg.symbol_values());
        if (closed) out["matches_closed_form"] = (v == *closed);
    }
    if (closed) out["closed_form"] = to_json(*closed);
    std::cout << out.dump(2) << "\n";
    return 0;
}

// ---- local-weights ----

int cmd_local_weights(const std::string& rep_s, int eta, int kmax) {
    json r = json::parse(rep_s);
    const int c = r.value("c", 0);
    const long q = r.value("q", 3L);
    const int chi = r.value("chi", 1);
    json out = {{"rep", r}, {"eta", eta}, {"rows", json::array()}};
    if (r.contains("a")) {
        // unit-circle Satake parameter: floating path only
        auto a = r.at("a").get<std::vector<double>>();
        LocalRep<double> rep{c, q, satake_Q({a.at(0), a.at(1)}, q), chi};
        out["Q"] = rep.Q;
        const double h = 1e-6;
        for (int k = 1; k <= kmax; ++k) {
            double rv = r_z_closed(rep, eta, k, 1.0);
            double fd = -(r_z_at(rep, eta, k, {0.5 + h, 0}) - r_z_at(rep, eta, k, {0.5 - h, 0})).real() /
                        (2 * h * std::log(double(q)));
            out["rows"].push_back({{"k", k},
                                   {"r", rv},
                                   {"r_sum", r_z_sum(rep, eta, k, 1.0)},
                                   {"partial_r", partial_r(rep, eta, k)},
                                   {"partial_r_fd", fd},
                                   {"w_factor", rv},
                                   {"dw_factor", -partial_r(rep, eta, k) * std::log(double(q))}});
        }
    } else {
        LocalRepData rep{c, q, r.contains("Q") ? rational_of(r.at("Q")) : Rational(0), chi};
        for (int k = 1; k <= kmax; ++k) {
            Rational rv = r_z_closed(rep, eta, k, Rational(1));
            Rational pr = partial_r(rep, eta, k);
            FormalLog dw = FormalLog::log_of(q, -pr);
            out["rows"].push_back({{"k", k},
                                   {"r", to_string(rv)},
                                   {"r_sum", to_string(r_z_sum(rep, eta, k, Rational(1)))},
                                   {"partial_r", to_string(pr)},
                                   {"w_factor", to_string(rv)},
                                   {"dw_factor", to_json(dw)}});
        }
    }
    std::cout << out.dump(2) << "\n";
    return 0;
}

// ---- moments ----

int cmd_moments(long q, int eta, const std::string& range) {
    auto [lo, hi] = parse_range(range);
    if (lo < 0) throw std::invalid_argument("moments need n >= 0");
    std::cout << "n,closed,quadrature,abs_err\n";
    for (int n = lo; n <= hi; ++n) {
        double c = st_moment_expected(q, eta, n), v = st_moment(q, eta, n);
        std::cout << n << "," << num(c) << "," << num(v) << "," << num(std::abs(c - v)) << "\n";
    }
    return 0;
}

// ---- local-tables ----

int cmd_local_tables(const std::string& place_s, int eta, const std::string& range, int ordn, int m) {
    json pl = json::parse(place_s);
    const long q = pl.at("q").get<long>();
    const Rational vol = pl.contains("vol") ? rational_of(pl.at("vol")) : Rational(1);
    const int f = pl.value("f", 1), d_v = pl.value("d", 0);
    const int eta_m1 = pl.value("eta_m1", 1), eta_bb1 = pl.value("eta_bb1", 1);
    auto [lo, hi] = parse_range(range);
    std::cout << "ordb,ordb1,W_unramified,W_unramified_oracle,delta_unramified,W_level,W_level_oracle,delta_level,"
                 "W_hecke_basis,W_hecke_ideal,hecke_basis_bound_shape,W_ramified,W_ramified_bound_shape\n";
    for (int o = lo; o <= hi; ++o) {
        LocalPoint b = LocalPoint::generic(o);
        FormalLog wu = W_unramified(b, q, eta, vol), wuo = W_unramified_oracle(b, q, eta, vol);
        FormalLog wl = W_level(b, ordn, q, eta, vol), wlo = W_level_oracle(b, ordn, q, eta, vol);
        ScaledLog hb = W_hecke_basis(m, b, q, eta, shell_iplus_oracle, vol);
        ScaledLog hi_ = W_hecke_ideal(m, b, q, eta, shell_iplus_oracle, vol);
        ScaledLog wr = W_ramified(b, f, q, eta_m1, eta_bb1, d_v);
        std::cout << b.ordb << "," << b.ordb1 << "," << num(wu.eval()) << "," << num(wuo.eval()) << ","
                  << num((wu - wuo).eval()) << "," << num(wl.eval()) << "," << num(wlo.eval()) << ","
                  << num((wl - wlo).eval()) << "," << num(hb.eval()) << "," << num(hi_.eval()) << ","
                  << num(W_hecke_bound_shape(m, b, q)) << "," << num(wr.eval()) << ","
                  << num(W_ramified_bound_shape(b, f, q)) << "\n";
    }
    return 0;
}

// ---- arch ----

int cmd_arch(int l, double b, const std::string& eps_s) {
    ArchChar eps;
    if (eps_s == "sgn" || eps_s == "sign") eps = ArchChar::Sign;
    else if (eps_s == "one" || eps_s == "triv" || eps_s == "1") eps = ArchChar::Trivial;
    else throw std::invalid_argument("--eps must be one or sgn");
    auto wp = w_plus(l, b);
    auto quad = w_plus_quad(l, b);
    json out = {{"l", l},
                {"b", b},
                {"eps", eps == ArchChar::Sign ? "sgn" : "one"},
                {"J", cplx(j_arch(l, b, eps))},
                {"J_plus", cplx(j_plus(l, b))},
                {"W_plus", cplx(wp)},
                {"W_eps", cplx(w_eps(l, b, eps))},
                {"W_plus_quadrature", cplx(quad.value)},
                {"oracle_delta", std::abs(wp - quad.value)},
                {"quadrature_error", quad.error}};
    std::cout << out.dump(2) << "\n";
    return 0;
}

// ---- lattice ----

int cmd_lattice(const std::string& field, const std::string& ideal, const std::string& base, const std::string& l_s,
                double R, double tol) {
    Field F = Field::parse(field);
    EmbeddedLattice L = embed_ideal(F, ideal), L0 = embed_ideal(F, base);
    std::vector<double> l = parse_list(l_s);
    if (int(l.size()) != F.degree()) throw std::invalid_argument("--l needs one weight per real place");
    ThetaValue th = theta(L, l, R, tol);
    LatticeAudit a = bound_audits(L, L0, l, R);
    json basis = json::array();
    for (int i = 0; i < L.d; ++i) basis.push_back(std::vector<double>(L.basis[i].begin(), L.basis[i].begin() + L.d));
    json out = {{"field", F.str()},
                {"ideal", ideal},
                {"norm", to_string(L.norm)},
                {"basis", basis},
                {"R", R},
                {"theta", th.value},
                {"tail", th.tail_bound},
                {"r", th.r},
                {"covol", th.covolume},
                {"audits",
                 {{"base", base},
                  {"r0", a.r0},
                  {"covol0", a.covol0},
                  {"theta_est_ratio", a.theta_est_ratio},
                  {"ball_bound_holds", a.ball_bound_holds},
                  {"ball_bound_rhs", a.ball_bound_rhs},
                  {"minkowski_lower", a.minkowski_lower},
                  {"norm_upper", a.norm_upper},
                  {"sandwich_holds", a.sandwich_holds}}}};
    std::cout << out.dump(2) << "\n";
    return 0;
}

// ---- main-terms ----

int cmd_main_terms(const std::string& cfg_path, const std::string& n_s, const std::string& a_s,
                   const std::string& fmt) {
    AssemblyConfig cfg = load_config(cfg_path);
    Ideal n = cfg.ideal(n_s), a = cfg.ideal(a_s);
    auto vals = cfg.symbol_values();
    SignClass sc = sign_class(n, cfg.eta);
    std::string kind = sc.in_plus ? "AL" : sc.in_minus ? "ADL" : "none";
    ScaledLog main, geom;
    std::optional<bool> identity;
    double degenerate = 0;
    if (sc.in_plus) {
        main = main_AL_exact(n, a, cfg);
    } else if (sc.in_minus) {
        main = main_ADL(n, a, cfg);
        GeomTransform g = geom_kernel_transform(n, a, cfg);
        geom = g.main;
        identity = (g.main == main);
        degenerate = g.degenerate.eval(vals);
    }
    const double mv = main.eval(vals);
    if (fmt == "json") {
        json out = {{"n", n.str()},
                    {"a", a.str()},
                    {"sign", sc.sign},
                    {"class", kind},
                    {"nu", to_string(nu_of_n(n))},
                    {"X", to_json(x_of_n(n))},
                    {"c_l", c_l(cfg.w)},
                    {"frak_c", frak_c(cfg.w, cfg.eta)},
                    {"main", to_json(main, vals)}};
        if (identity) {
            out["geometric"] = to_json(geom, vals);
            out["identity"] = *identity;
            out["degenerate"] = degenerate;
        }
        std::cout << out.dump(2) << "\n";
    } else if (fmt == "csv") {
        std::cout << "n,a,sign,class,nu,X,c_l,frak_c,main_exact,main_value,geometric_exact,identity,degenerate\n";
        std::cout << csv_field(n.str()) << "," << csv_field(a.str()) << "," << sc.sign << "," << kind << ","
                  << to_string(nu_of_n(n)) << "," << num(x_of_n(n).eval()) << "," << num(c_l(cfg.w)) << ","
                  << num(frak_c(cfg.w, cfg.eta)) << "," << csv_field(main.str()) << "," << num(mv) << ","
                  << csv_field(identity ? geom.str() : "") << ","
                  << (identity ? (*identity ? "true" : "false") : "") << "," << num(degenerate) << "\n";
    } else {
        throw std::invalid_argument("--out must be csv or json");
    }
    return identity.value_or(true) ? 0 : 1;
}

// ---- verify ----

int cmd_verify(const std::string& suite, std::uint64_t seed, int jobs) {
    auto res = run_suite(suite, seed, jobs);
    int failed = 0;
    for (auto& r : res) {
        std::string tag = r.criterion ? "[" + std::to_string(r.criterion) + "]" : "[-]";
        std::printf("%s %s %s (%.2fs) %s\n", tag.c_str(), r.pass ? "PASS" : "FAIL", r.name.c_str(), r.seconds,
                    r.detail.c_str());
        failed += !r.pass;
    }
    std::printf("%zu checks, %d failed\n", res.size(), failed);
    return failed ? 1 : 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"rtf: exact and numerical checks for relative trace formula main terms"};
    app.require_subcommand(1);

    std::string cfg_path, fn = "one", ideal;
    bool plus = false;
    auto* nt = app.add_subcommand("ntransform", "N-transform of an arithmetic function at an ideal");
    nt->add_option("--config", cfg_path, "config JSON")->required()->check(CLI::ExistingFile);
    nt->add_option("--fn", fn, "one | norm^t | lognorm");
    nt->add_option("--ideal", ideal, "ideal, e.g. p^2*q")->required();
    nt->add_flag("--plus", plus, "the unsigned N+ transform");

    std::string rep_s;
    int eta = -1, k = 4;
    auto* lw = app.add_subcommand("local-weights", "r, partial r and the local weight factors");
    lw->add_option("--rep", rep_s, R"(e.g. {"c":0,"Q":"1/3","q":3} or {"c":0,"a":[re,im]})")->required();
    lw->add_option("--eta", eta)->required();
    lw->add_option("--k", k)->check(CLI::Range(1, kMaxK));

    long q = 3;
    std::string range = "0..8";
    auto* mo = app.add_subcommand("moments", "Sato-Tate moments: closed form against quadrature");
    mo->add_option("--q", q)->required()->check(CLI::Range(2L, 1L << 30));
    mo->add_option("--eta", eta)->required();
    mo->add_option("--n", range, "lo..hi");

    std::string place_s;
    int ordn = 2, m = 2;
    auto* lt = app.add_subcommand("local-tables", "non-archimedean W tables with oracle deltas");
    lt->add_option("--place", place_s, R"({"q":3,"vol":"1","f":1,"d":0,"eta_m1":1,"eta_bb1":1})")->required();
    lt->add_option("--eta", eta)->required();
    lt->add_option("--ordb", range, "lo..hi")->required();
    lt->add_option("--ordn", ordn, "level exponent for W_level")->check(CLI::PositiveNumber);
    lt->add_option("--m", m, "index for the Hecke columns")->check(CLI::NonNegativeNumber);

    int l = 6;
    double b = -0.5;
    std::string eps_s = "sgn";
    auto* ar = app.add_subcommand("arch", "archimedean J and W values with the quadrature oracle");
    ar->add_option("--l", l)->required();
    ar->add_option("--b", b)->required();
    ar->add_option("--eps", eps_s, "one | sgn");

    std::string field = "Q", base = "O", l_s = "6";
    double R = 50, tol = -1;
    auto* la = app.add_subcommand("lattice", "theta sum of an embedded ideal with tail bound and audits");
    la->add_option("--field", field, "Q or Q(sqrt m)");
    la->add_option("--ideal", ideal, "O, N, a/b over Q; products of integers, sqrt, (x,y) otherwise")
        ->default_val("O");
    la->add_option("--base", base, "reference lattice for the audits")->default_val("O");
    la->add_option("--l", l_s, "weights, comma separated");
    la->add_option("--R", R)->check(CLI::PositiveNumber);
    la->add_option("--tol", tol, "fail (TailTooLarge) if the tail bound exceeds this");

    std::string n_s, a_s = "O", fmt = "json";
    auto* mt = app.add_subcommand("main-terms", "AL or ADL main term, and the geometric identity for I-");
    mt->add_option("--config", cfg_path)->required()->check(CLI::ExistingFile);
    mt->add_option("--n", n_s)->required();
    mt->add_option("--a", a_s);
    mt->add_option("--out", fmt)->check(CLI::IsMember({"csv", "json"}));

    std::string suite = "all";
    std::uint64_t seed = 20240601;
    int jobs = 1;
    auto* ve = app.add_subcommand("verify", "run invariant suites; nonzero exit on failure");
    ve->add_option("--suite", suite)->check(CLI::IsMember(suite_names()));
    ve->add_option("--seed", seed);
    ve->add_option("--jobs", jobs)->check(CLI::PositiveNumber);

    CLI11_PARSE(app, argc, argv);

    try {
        if (*nt) return cmd_ntransform(cfg_path, fn, ideal, plus);
        if (*lw) return cmd_local_weights(rep_s, check_eta(eta), k);
        if (*mo) return cmd_moments(q, check_eta(eta), range);
        if (*lt) return cmd_local_tables(place_s, check_eta(eta), range, ordn, m);
        if (*ar) return cmd_arch(l, b, eps_s);
        if (*la) return cmd_lattice(field, ideal, base, l_s, R, tol);
        if (*mt) return cmd_main_terms(cfg_path, n_s, a_s, fmt);
        if (*ve) return cmd_verify(suite, seed, jobs);
    } catch (const std::exception& e) {
        std::cerr << "rtf: " << e.what() << "\n";
        return 2;
    }
    return 0;
}
