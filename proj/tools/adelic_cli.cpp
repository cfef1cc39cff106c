// Batch front end: verification suites, zero/prime data management,
// machine-readable reports.
//
// Exit codes: 0 all passed, 2 numerical failure, 3 configuration error,
// 4 data integrity error.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <vector>

#include <CLI11.hpp>

#include "adelic/errors.hpp"
#include "adelic/fourier_local.hpp"
#include "adelic/global_verify.hpp"
#include "adelic/measures.hpp"
#include "adelic/spectral.hpp"
#include "adelic/trace_engine.hpp"
#include "adelic/weil_local.hpp"
#include "adelic/zeros.hpp"

namespace {

using namespace adelic;

constexpr int kExitPass = 0;
constexpr int kExitNumerical = 2;
constexpr int kExitConfig = 3;
constexpr int kExitIntegrity = 4;

std::string data_dir() {
    const char* env = std::getenv("ADELIC_DATA_DIR");
    return env ? std::string(env) : std::string("data");
}

void write_file(const std::string& path, const std::string& content) {
    std::ofstream out(path);
    if (!out) throw integrity_error("cannot write " + path);
    out << content;
}

struct LocalRow {
    long long p;
    double pv_one_o, expected_pv, vol_one_plus_p, expected_vol, unit_shell;
};

int run_verify_local(const std::vector<long long>& primes, double tol,
                     const std::string& json_path) {
    std::vector<LocalRow> rows;
    bool pass = true;
    std::string first_fail;
    for (const long long p : primes) {
        const auto place = measures::PlaceDesc::finite(p);
        LocalRow r{};
        r.p = p;
        r.pv_one_o =
            weil::pv_pairing_finite(place, bs::LevelFunction::xi(p, 0)).real();
        r.expected_pv = -place.ln_q() / (place.q() - 1.0);
        r.vol_one_plus_p =
            measures::vol_subgroup(place, measures::Subgroup::one_plus_p);
        r.expected_vol = place.ln_q() / (place.q() - 1.0);
        r.unit_shell =
            weil::weil_local_finite(place, bs::MultSeq::shell(p, 0)).real();
        rows.push_back(r);
        const bool ok = std::abs(r.pv_one_o - r.expected_pv) <= tol &&
                        std::abs(r.vol_one_plus_p - r.expected_vol) <= tol &&
                        std::abs(r.unit_shell) <= tol;
        if (!ok && pass) {
            pass = false;
            first_fail = "p = " + std::to_string(p);
        }
    }
    std::ostringstream js;
    js << "{\n  \"suite\": \"verify-local\",\n  \"rows\": [\n";
    for (std::size_t i = 0; i < rows.size(); ++i) {
        const auto& r = rows[i];
        js.precision(17);
        js << "    {\"p\": " << r.p << ", \"pv_pairing_one_O\": " << r.pv_one_o
           << ", \"expected\": " << r.expected_pv
           << ", \"vol_one_plus_P\": " << r.vol_one_plus_p
           << ", \"unit_shell_pv\": " << r.unit_shell << "}"
           << (i + 1 < rows.size() ? ",\n" : "\n");
        std::cout << "p = " << r.p << ": <P, 1_O> = " << r.pv_one_o
                  << " (expected " << r.expected_pv
                  << "), vol(1+P) = " << r.vol_one_plus_p
                  << ", unit-shell pv = " << r.unit_shell << "\n";
    }
    js << "  ],\n  \"pass\": " << (pass ? "true" : "false") << "\n}\n";
    if (!json_path.empty()) write_file(json_path, js.str());
    if (!pass) {
        std::cerr << "FAIL: first failing identity at " << first_fail << "\n";
        return kExitNumerical;
    }
    std::cout << "verify-local: PASS (" << rows.size() << " places, tol "
              << tol << ")\n";
    return kExitPass;
}

int run_verify_trace(std::size_t N, double U, double a, long long with_p,
                     double tol_commutator, double tol_local,
                     const std::string& suite) {
    const auto grid = trace::UGrid::make(U, N);
    const trace::CutoffPhi phi{a};
    weil::PVContext pv;
    bool pass = true;
    if (suite == "commutator" || suite == "both") {
        const struct {
            double u0_0, s0, u0_1, s1;
        } cases[] = {{0.0, 1.0, 0.0, 1.0},
                     {0.5, 0.8, -0.5, 0.8},
                     {1.0, 0.6, 0.3, 0.9},
                     {-1.2, 0.7, 0.8, 0.5},
                     {0.0, 1.2, 1.5, 0.6}};
        for (const auto& c : cases) {
            const auto f0 = arch::LogProfile::gauss(c.u0_0, c.s0);
            const auto f1 = arch::LogProfile::gauss(c.u0_1, c.s1);
            const auto r = trace::commutator_trace_check(grid, f0, f1, phi);
            std::cout << "commutator f0=(" << c.u0_0 << "," << c.s0
                      << ") f1=(" << c.u0_1 << "," << c.s1
                      << "): lhs = " << r.lhs << " rhs = " << r.rhs
                      << " residual = " << r.residual << "\n";
            pass &= r.residual <= tol_commutator;
        }
    }
    if (suite == "local" || suite == "both") {
        const auto S = with_p > 0 ? trace::PlaceSet::with_prime(with_p)
                                  : trace::PlaceSet::real_only();
        const struct {
            double u0, s;
        } cases[] = {{1.5, 0.4}, {0.0, 0.5}, {-0.8, 0.45}};
        for (const auto& c : cases) {
            const auto g = arch::LogProfile::gauss(c.u0, c.s);
            const auto r = trace::local_trace_check(grid, g, phi, S, pv);
            std::cout << "local trace g=(" << c.u0 << "," << c.s
                      << "): operator = " << r.operator_trace
                      << " weil = " << r.weil_sum << " tau = " << r.tau_route
                      << " residual = " << r.residual << "\n";
            pass &= r.residual <= tol_local && r.residual_tau <= tol_local;
        }
    }
    std::cout << "verify-trace: " << (pass ? "PASS" : "FAIL") << "\n";
    return pass ? kExitPass : kExitNumerical;
}

int run_verify_explicit(double u0, double sigma, std::size_t zero_count,
                        long long xmax, double tol,
                        const std::string& profile_file,
                        const std::string& zeros_file,
                        const std::string& csv_path,
                        const std::string& json_path) {
    const auto g = profile_file.empty()
                       ? arch::LogProfile::gauss(u0, sigma)
                       : arch::LogProfile::from_file(profile_file);
    global::ZeroTable zeros = zeros_file.empty()
                                  ? global::find_zeros(zero_count)
                                  : global::load_zeros(zeros_file);
    if (zeros.count() > zero_count) zeros.ordinates.resize(zero_count);
    const auto primes = global::sieve_primes(xmax);
    weil::PVContext pv;
    const auto rep = global::explicit_formula_check(g, zeros, primes, pv, tol);
    std::cout << "geometric = " << rep.geom.value()
              << " spectral = " << rep.spectral
              << " residual = " << rep.residual << " ("
              << (rep.pass ? "PASS" : "FAIL") << ")\n";
    if (!json_path.empty()) write_file(json_path, rep.to_json());
    if (!csv_path.empty()) {
        // plot data: residual vs zero count, plus per-term contributions
        std::ostringstream csv;
        csv << "zero_count,residual\n";
        for (std::size_t n = 0; n <= zeros.count(); n += 5) {
            global::ZeroTable head = zeros;
            head.ordinates.resize(n);
            const auto r =
                global::explicit_formula_check(g, head, primes, pv, tol);
            csv.precision(17);
            csv << n << ',' << r.residual << "\n";
        }
        csv << "\ngamma,term\n";
        for (const double gamma : zeros.ordinates) {
            csv.precision(17);
            csv << gamma << ','
                << 2.0 * g.laplace({0.5, gamma}).real() << "\n";
        }
        write_file(csv_path, csv.str());
    }
    return rep.pass ? kExitPass : kExitNumerical;
}

int run_poisson(const std::vector<double>& xs, double tol) {
    bool pass = true;
    for (int k = 0; k <= 4; ++k) {
        const auto f = arch::HermiteGaussian::basis(k);
        for (const double x : xs) {
            const double r = global::poisson_check(f, x);
            std::cout << "h" << k << " at x = " << x << ": residual = " << r
                      << "\n";
            pass &= r <= tol;
        }
    }
    std::cout << "poisson: " << (pass ? "PASS" : "FAIL") << "\n";
    return pass ? kExitPass : kExitNumerical;
}

int run_pnt(long long X, double smoothed_xi, double sigma) {
    const auto primes = global::sieve_primes(X);
    const auto r = global::pnt_check(X, primes);
    std::cout << "pi(" << X << ") = " << r.pi_x << ", ratio = " << r.ratio
              << "\n";
    for (const auto& [x, ratio] : r.series)
        std::cout << "  x = " << x << ": pi ln x / x = " << ratio << "\n";
    if (smoothed_xi > 0) {
        const auto f = arch::LogProfile::gauss(0.0, sigma);
        const auto s = global::smoothed_pnt_check(f, smoothed_xi);
        std::cout << "smoothed xi = " << smoothed_xi << ": lhs = " << s.lhs
                  << " rhs = " << s.rhs << " ratio = " << s.ratio << "\n";
    }
    return kExitPass;
}

int run_zeros(std::size_t count, const std::string& out,
              const std::string& check) {
    if (!check.empty()) {
        const auto t = global::load_zeros(check);
        std::cout << "loaded " << t.count() << " ordinates from " << check
                  << " (strictly increasing)\n";
        return kExitPass;
    }
    const auto t = global::find_zeros(count);
    for (std::size_t i = 0; i < t.count(); ++i) {
        std::cout.precision(12);
        std::cout << "gamma_" << (i + 1) << " = " << t.ordinates[i] << "\n";
    }
    if (!out.empty()) {
        global::save_zeros(t, out);
        std::cout << "wrote " << t.count() << " ordinates to " << out << "\n";
    }
    return kExitPass;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"adelic: numerical verification of the explicit formula,\n"
                 "local trace identities, and prime asymptotics over Q"};
    app.set_config("--config", "", "flat key=value configuration file");
    app.require_subcommand(1);

    // verify-local
    auto* vl = app.add_subcommand("verify-local",
                                  "exact finite-place identity suite");
    std::vector<long long> vl_primes{2, 3, 5, 7, 11};
    double vl_tol = 1e-12;
    std::string vl_json;
    vl->add_option("--p,--primes", vl_primes, "primes to test");
    vl->add_option("--tolerance", vl_tol, "pass tolerance");
    vl->add_option("--emit-json", vl_json, "write JSON report");

    // verify-trace
    auto* vt = app.add_subcommand("verify-trace",
                                  "commutator and local trace formula checks");
    std::size_t vt_n = 4096;
    double vt_u = 20.0, vt_a = 6.0;
    long long vt_p = 0;
    double vt_tolc = 1e-6, vt_toll = 1e-5;
    std::string vt_suite = "both";
    vt->add_option("--N", vt_n, "grid points (power of two)");
    vt->add_option("--U", vt_u, "grid half-width");
    vt->add_option("--a", vt_a, "cutoff transition half-width");
    vt->add_option("--with-p", vt_p, "include one finite place");
    vt->add_option("--tol-commutator", vt_tolc, "commutator residual bound");
    vt->add_option("--tol-local", vt_toll, "local trace residual bound");
    vt->add_option("--suite", vt_suite, "commutator | local | both");

    // verify-explicit
    auto* ve = app.add_subcommand("verify-explicit",
                                  "explicit formula at desk scale");
    double ve_u0 = 2.0, ve_sigma = 0.2, ve_tol = 1e-6;
    std::size_t ve_zeros = 100;
    long long ve_xmax = 10000;
    std::string ve_zf, ve_csv, ve_json, ve_profile;
    ve->add_option("--u0", ve_u0, "gaussian center in u = ln|x|");
    ve->add_option("--profile-file", ve_profile,
                   "two-column (u, value) sampled profile instead of the gaussian");
    ve->add_option("--sigma", ve_sigma, "gaussian width");
    ve->add_option("--zeros", ve_zeros, "number of zeros");
    ve->add_option("--xmax", ve_xmax, "prime power cutoff");
    ve->add_option("--tol", ve_tol, "pass tolerance");
    ve->add_option("--zeros-file", ve_zf, "load ordinates instead of computing");
    ve->add_option("--emit-csv", ve_csv, "write plot data CSV");
    ve->add_option("--emit-json", ve_json, "write JSON report");

    // poisson
    auto* po = app.add_subcommand("poisson", "poisson summation residuals");
    std::vector<double> po_x{0.3, 0.7, 1.0, 1.7, 3.0};
    double po_tol = 1e-12;
    po->add_option("--x", po_x, "dilation points");
    po->add_option("--tolerance", po_tol, "pass tolerance");

    // pnt
    auto* pn = app.add_subcommand("pnt", "prime counting asymptotics");
    long long pn_x = 1000000;
    double pn_xi = 0.0, pn_sigma = 0.3;
    pn->add_option("--x", pn_x, "counting bound");
    pn->add_option("--smoothed-xi", pn_xi, "also run the smoothed check");
    pn->add_option("--sigma", pn_sigma, "profile width for the smoothed check");

    // zeros
    auto* zr = app.add_subcommand("zeros", "find or validate zero ordinates");
    std::size_t zr_count = 10;
    std::string zr_out, zr_check;
    zr->add_option("--count", zr_count, "how many ordinates");
    zr->add_option("--out", zr_out, "write ordinates to file");
    zr->add_option("--check", zr_check, "validate an existing file");

    CLI11_PARSE(app, argc, argv);

    try {
        if (vl->parsed()) {
            if (vl_tol <= 0) throw config_error("tolerance must be > 0");
            return run_verify_local(vl_primes, vl_tol, vl_json);
        }
        if (vt->parsed()) {
            if (vt_suite != "both" && vt_suite != "commutator" &&
                vt_suite != "local")
                throw config_error("unknown suite: " + vt_suite);
            return run_verify_trace(vt_n, vt_u, vt_a, vt_p, vt_tolc, vt_toll,
                                    vt_suite);
        }
        if (ve->parsed()) {
            if (ve_tol <= 0) throw config_error("tolerance must be > 0");
            std::string zf = ve_zf;
            if (!zf.empty() && zf.find('/') == std::string::npos)
                zf = data_dir() + "/" + zf;
            return run_verify_explicit(ve_u0, ve_sigma, ve_zeros, ve_xmax,
                                       ve_tol, ve_profile, zf, ve_csv,
                                       ve_json);
        }
        if (po->parsed()) {
            if (po_tol <= 0) throw config_error("tolerance must be > 0");
            return run_poisson(po_x, po_tol);
        }
        if (pn->parsed()) return run_pnt(pn_x, pn_xi, pn_sigma);
        if (zr->parsed()) return run_zeros(zr_count, zr_out, zr_check);
    } catch (const config_error& e) {
        std::cerr << "configuration error: " << e.what() << "\n";
        return kExitConfig;
    } catch (const integrity_error& e) {
        std::cerr << "data integrity error: " << e.what() << "\n";
        return kExitIntegrity;
    } catch (const error& e) {
        std::cerr << "numerical error: " << e.what() << "\n";
        return kExitNumerical;
    }
    return kExitConfig;
}
