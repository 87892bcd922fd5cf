// Acceptance suite. Prints one PASS/FAIL line per criterion and exits
// nonzero if any criterion fails.
#include <chrono>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "gibbsod/algebraic.hpp"
#include "gibbsod/batch.hpp"
#include "gibbsod/classical.hpp"
#include "gibbsod/cli.hpp"
#include "gibbsod/elements.hpp"
#include "oracle.hpp"

using namespace gibbsod;
using oracle::max_abs_diff;
using oracle::rel;

namespace {

constexpr double kMu = 398600.4418;
constexpr int kTrials = 1000;

struct Outcome {
    bool pass;
    std::string detail;
};

std::string fmt(const char* f, auto... args) {
    char buf[256];
    std::snprintf(buf, sizeof buf, f, args...);
    return buf;
}

double rel_vec(const Vector3& got, const Vector3& want) {
    return std::max({rel(got.x, want.x), rel(got.y, want.y), rel(got.z, want.z)});
}

KeplerElements to_elements(const oracle::Orbit& o) { return {o.a, o.e, o.i, o.raan, o.argp}; }

// Every conic fitted by criteria 2 to 5, for criterion 6.
std::vector<AlgebraicSolution> g_fitted;

// Reference values for the worked example.
const Vector3 kN{2.2536e12, 3.9034e12, 1.6405e12};
const Vector3 kD{2.0032e8, 3.4697e8, 1.4582e8};
const Vector3 kS{-0.2889e8, 0.9579e8, -1.8824e8};
const Vector3 kPHat{0.8723, -0.3685, -0.3214};
const Vector3 kQHat{-0.1355, 0.4493, -0.8830};
const Vector3 kWHat{0.4698, 0.8138, 0.3420};

Outcome criterion1() {
    const auto& r = oracle::kExamplePositions;
    const GibbsIntermediates g = gibbs_intermediates(r[0], r[1], r[2]);
    const OrbitGeometry o = gibbs_geometry(g);
    const double nds = std::max({rel_vec(g.N, kN), rel_vec(g.D, kD), rel_vec(g.S, kS)});
    const double basis = std::max({max_abs_diff(*o.p_hat, kPHat), max_abs_diff(*o.q_hat, kQHat),
                                   max_abs_diff(o.w_hat, kWHat)});
    const double pe = std::max(rel(o.p, 11250.0), rel(o.e, 0.5));
    return {nds <= 1e-3 && basis <= 1e-3 && pe <= 1e-3,
            fmt("N,D,S max rel %.2e; basis max abs %.2e; p,e max rel %.2e", nds, basis, pe)};
}

Outcome criterion2() {
    const auto& r = oracle::kExamplePositions;
    const AlgebraicSolution s = solve_algebraic_detailed(r);
    g_fitted.push_back(s);
    const auto& pt = s.points;
    const double planar = std::max({rel(pt[0].x, 9607.1), std::abs(pt[0].y) / pt[0].r, rel(pt[1].x, -2249.9),
                                    rel(pt[1].y, 21727.0), rel(pt[2].x, -15685.0), rel(pt[2].y, 10387.0)});
    const auto& l = s.lines;
    const double lines = std::max({rel(l.u123.h1, 7.2795e12), rel(l.u123.h2, -6.5646e12), rel(l.u123.h3, -3.8482e8),
                                   rel(l.v123.h1, 9.419e12), rel(l.v123.h2, -2.8361e12), rel(l.v123.h3, -2.6162e8)});
    const double xyz =
        std::max({rel(s.conic.X, 1.5201e-5), rel(s.conic.Y, -4.1764e-5), rel(std::sqrt(s.conic.Zsq), 7.6980e-5)});
    const OrbitGeometry& o = s.orbit;
    const double result = std::max({max_abs_diff(*o.p_hat, kPHat), rel(o.a, 15000.0), rel(o.e, 0.5), rel(o.p, 11250.0)});
    return {planar <= 1e-3 && lines <= 1e-3 && xyz <= 1e-3 && result <= 1e-3,
            fmt("planar %.2e; u123,v123 %.2e; X,Y,Z %.2e; p_hat,a,e,p %.2e", planar, lines, xyz, result)};
}

Outcome criterion3() {
    std::mt19937_64 rng(1001);
    std::vector<oracle::Case> cases;
    std::vector<PositionTriple> triples;
    for (int k = 0; k < kTrials; ++k) {
        cases.push_back(oracle::random_elliptic(rng));
        triples.push_back(oracle::positions(cases.back()));
    }
    const auto alg = solve_batch(triples, Method::Algebraic);
    const auto cls = solve_batch(triples, Method::Classical);
    double shape = 0.0, basis = 0.0, vel = 0.0;
    int failures = 0;
    for (std::size_t k = 0; k < triples.size(); ++k) {
        if (!alg[k].ok() || !cls[k].ok() || !alg[k].orbit->p_hat || !cls[k].orbit->p_hat) {
            ++failures;
            continue;
        }
        const OrbitGeometry& a = *alg[k].orbit;
        const OrbitGeometry& b = *cls[k].orbit;
        shape = std::max({shape, rel(a.p, b.p), rel(a.e, b.e), rel(a.a, b.a)});
        basis = std::max({basis, max_abs_diff(*a.p_hat, *b.p_hat), max_abs_diff(*a.q_hat, *b.q_hat),
                          max_abs_diff(a.w_hat, b.w_hat)});
        const GibbsIntermediates g = gibbs_intermediates(triples[k][0], triples[k][1], triples[k][2]);
        for (std::size_t i = 0; i < 3; ++i) {
            const Vector3 want = velocity_at(to_elements(cases[k].orbit), cases[k].theta[i], kMu);
            vel = std::max(vel, norm(gibbs_velocity(g, triples[k][i], kMu) - want) / norm(want));
        }
        g_fitted.push_back(solve_algebraic_detailed(triples[k]));
    }
    return {failures == 0 && shape <= 1e-9 && basis <= 1e-9 && vel <= 1e-9,
            fmt("%d orbits, %d failures; p,e,a max rel %.2e; basis max abs %.2e; velocity max rel %.2e", kTrials,
                failures, shape, basis, vel)};
}

Outcome criterion4() {
    std::mt19937_64 rng(1002);
    double len = 0.0, ecc = 0.0, ang = 0.0;
    int failures = 0;
    for (int k = 0; k < kTrials; ++k) {
        const auto c = oracle::random_elliptic(rng);
        try {
            const AlgebraicSolution s = solve_algebraic_detailed(oracle::positions(c));
            const KeplerElements got = geometry_to_elements(s.orbit);
            len = std::max(len, rel(got.a, c.orbit.a));
            ecc = std::max(ecc, std::abs(got.e - c.orbit.e));
            ang = std::max({ang, oracle::angle_diff(got.i, c.orbit.i), oracle::angle_diff(got.raan, c.orbit.raan),
                            oracle::angle_diff(got.argp, c.orbit.argp)});
            g_fitted.push_back(s);
        } catch (const OdError&) {
            ++failures;
        }
    }
    double hyp = 0.0;
    for (int k = 0; k < kTrials; ++k) {
        const auto c = oracle::random_hyperbolic(rng);
        try {
            const AlgebraicSolution s = solve_algebraic_detailed(oracle::positions(c));
            hyp = std::max({hyp, rel(s.orbit.p, c.orbit.p()), rel(s.orbit.e, c.orbit.e)});
            g_fitted.push_back(s);
        } catch (const OdError&) {
            ++failures;
        }
    }
    return {failures == 0 && len <= 1e-8 && ecc <= 1e-8 && ang <= 1e-8 && hyp <= 1e-8,
            fmt("%d elliptic + %d hyperbolic, %d failures; a rel %.2e, e abs %.2e, angles %.2e rad; "
                "hyperbolic p,e rel %.2e",
                kTrials, kTrials, failures, len, ecc, ang, hyp)};
}

Outcome criterion5() {
    std::mt19937_64 rng(1003);
    int trials = 0, bad = 0, sign_mismatch = 0;
    for (int k = 0; k < 2 * kTrials; ++k) {
        const auto c = k % 2 ? oracle::random_hyperbolic(rng) : oracle::random_elliptic(rng);
        const auto r = oracle::positions(c);
        const AlgebraicSolution s = solve_algebraic_detailed(r);
        const auto& [p1, p2, p3] = s.points;
        const BranchDiagnostics d = branch_diagnostics(p1, p2, p3);
        ++trials;
        const bool ok = d.is_consistent(Candidate::U123xV123) && !d.is_consistent(Candidate::U456xV123) &&
                        !d.is_consistent(Candidate::U123xV456) && !d.is_consistent(Candidate::U456xV456);
        bad += !ok;
        sign_mismatch += !(d.k1 * d.k2 > 0.0);
        g_fitted.push_back(s);
    }
    return {trials >= 1000 && bad == 0 && sign_mismatch == 0,
            fmt("%d mixed triples; %d with a wrong candidate flagged; %d with K1, K2 of opposite sign", trials, bad,
                sign_mismatch)};
}

Outcome criterion6() {
    double residual = 0.0, leakage = 0.0;
    for (const auto& s : g_fitted) {
        const Matrix3 C = locus_matrix(s.conic);
        const double cn = frobenius_norm(C);
        for (const auto& p : s.points) {
            const Vector3 x = p.homogeneous();
            residual = std::max(residual, std::abs(quadratic_form(C, x)) / (dot(x, x) * cn));
        }
        const Matrix3 prod = C * envelope_matrix(s.conic);
        const double d = std::abs(prod(0, 0));
        for (int i = 0; i < 3; ++i)
            for (int j = 0; j < 3; ++j) leakage = std::max(leakage, std::abs(prod(i, j) - (i == j ? prod(0, 0) : 0.0)) / d);
    }
    return {!g_fitted.empty() && residual < 1e-9 && leakage < 1e-12,
            fmt("%zu fitted conics; max normalized residual %.2e; max identity leakage %.2e", g_fitted.size(),
                residual, leakage)};
}

// Adversarial inputs run through the command-line front end.
Outcome criterion7() {
    namespace fs = std::filesystem;
    const fs::path dir = fs::temp_directory_path() / "gibbsod_acceptance";
    fs::create_directories(dir);

    const Vector3 a{7000, 0, 0}, b{0, 8000, 0}, c{-9000, 100, 0};
    const Vector3 u = normalized(Vector3{1, 2, 3});
    const auto& ex = oracle::kExamplePositions;
    const Vector3 w = normalized(cross(ex[0], ex[1]));
    struct Case {
        const char* name;
        Vector3 r1, r2, r3;
        int want;
    };
    const std::vector<Case> corpus{
        {"radial line", a, 2.0 * a, 3.0 * a, 3},
        {"radial line through focus", a, -1.0 * a, 2.5 * a, 3},
        {"skew radial line", 7000 * u, 9000 * u, 42000 * u, 3},
        {"affine line off focus", {7000, -5000, 0}, {7000, 0, 0}, {7000, 9000, 0}, 3},
        {"affine line in 3-D", {7000, 0, 100}, {8000, 1000, 600}, {10000, 3000, 1600}, 3},
        {"affine line, large scale", {7e8, -5e8, 0}, {7e8, 0, 0}, {7e8, 9e8, 0}, 3},
        {"affine line, small scale", {7e-3, -5e-3, 0}, {7e-3, 0, 0}, {7e-3, 9e-3, 0}, 3},
        {"parallel r1, r2", a, 1.5 * a, b, 3},
        {"antiparallel r1, r2", a, -2.0 * a, b, 3},
        {"r1 at focus", {0, 0, 0}, b, c, 3},
        {"r1 == r2", a, a, b, 5},
        {"r2 == r3", a, b, b, 5},
        {"r1 == r3", a, b, a, 5},
        {"all equal", a, a, a, 5},
        {"near duplicate", a, b, b + Vector3{1e-7, 0, 0}, 5},
        {"example with r3 := r1", ex[0], ex[1], ex[0], 5},
        {"r3 10 km off plane", a, b, c + Vector3{0, 0, 10}, 4},
        {"r3 far off plane", a, b, {0, 0, 9000}, 4},
        {"r3 slightly off plane", a, b, c + Vector3{0, 0, 0.2}, 4},
        {"example, r3 1 km off plane", ex[0], ex[1], ex[2] + w, 4},
        {"example, r3 1 km below plane", ex[0], ex[1], ex[2] - w, 4},
        {"example, r3 rotated out of plane", ex[0], ex[1], ex[2] + 0.01 * norm(ex[2]) * w, 4},
        {"random triple", {7100, 300, -200}, {-1000, 7600, 900}, {-3000, -4000, 6000}, 4},
    };

    int wrong = 0, nan_text = 0, partial = 0;
    std::string first_wrong;
    for (std::size_t k = 0; k < corpus.size(); ++k) {
        const fs::path path = dir / ("case" + std::to_string(k) + ".json");
        {
            std::ofstream f(path);
            cli::SolveRequest req;
            req.positions = {corpus[k].r1, corpus[k].r2, corpus[k].r3};
            f << cli::request_text(req, cli::InputFormat::Json);
        }
        for (const char* cmd : {"solve", "compare"}) {
            const std::string p = path.string();
            const char* argv[] = {"gibbsod", cmd, "--input", p.c_str()};
            std::ostringstream out, err;
            const int code = cli::run(4, argv, out, err);
            if (code != corpus[k].want) {
                ++wrong;
                if (first_wrong.empty()) first_wrong = fmt(" (first: %s gave %d)", corpus[k].name, code);
            }
            const std::string all = out.str() + err.str();
            if (all.find("nan") != std::string::npos || all.find("inf") != std::string::npos) ++nan_text;
            partial += !out.str().empty();
        }
    }
    fs::remove_all(dir);
    return {corpus.size() >= 20 && wrong == 0 && nan_text == 0 && partial == 0,
            fmt("%zu cases x 2 commands; %d wrong exit codes%s; %d outputs with NaN/inf; %d partial reports",
                corpus.size(), wrong, first_wrong.c_str(), nan_text, partial)};
}

}  // namespace

int main() {
    struct Criterion {
        int id;
        const char* title;
        std::function<Outcome()> run;
        double budget_s;
    };
    const std::vector<Criterion> criteria{
        {1, "worked example, classical path", criterion1, 1.0},
        {2, "worked example, algebraic path", criterion2, 1.0},
        {3, "cross-method equivalence", criterion3, 30.0},
        {4, "oracle round trip", criterion4, 0.0},
        {5, "branch selection", criterion5, 0.0},
        {6, "conic residual invariant", criterion6, 0.0},
        {7, "degenerate-input behavior", criterion7, 0.0},
    };
    int failed = 0;
    for (const auto& c : criteria) {
        const auto t0 = std::chrono::steady_clock::now();
        Outcome o;
        try {
            o = c.run();
        } catch (const std::exception& e) {
            o = {false, std::string("unexpected exception: ") + e.what()};
        }
        const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        if (c.budget_s > 0.0 && secs >= c.budget_s) {
            o.pass = false;
            o.detail += fmt("; over the %.0f s budget", c.budget_s);
        }
        failed += !o.pass;
        std::printf("%s  criterion %d  %s: %s [%.3f s]\n", o.pass ? "PASS" : "FAIL", c.id, c.title, o.detail.c_str(),
                    secs);
    }
    std::printf("%d of %zu criteria passed\n", static_cast<int>(criteria.size()) - failed, criteria.size());
    return failed == 0 ? 0 : 1;
}
