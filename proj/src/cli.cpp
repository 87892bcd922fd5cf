#include <fstream>
#include <iostream>
#include <numbers>
#include <sstream>

#include "CLI11.hpp"
#include "gibbsod/cli.hpp"
#include "gibbsod/error.hpp"

namespace gibbsod::cli {

namespace {

constexpr const char* kExitCodes =
    "Exit codes:\n"
    "  0  success\n"
    "  2  input error (unreadable or malformed file, bad flag, invalid elements)\n"
    "  3  collinear positions\n"
    "  4  positions not coplanar\n"
    "  5  degenerate fit (duplicate points, lines without a finite intersection)\n"
    "  6  invalid conic (no orbit with the focus at the origin passes through the points)\n";

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw OdError(ErrorCode::InputError, "cannot open " + path);
    std::ostringstream s;
    s << in.rdbuf();
    return s.str();
}

void write_output(const std::string& path, const std::string& text, std::ostream& out) {
    if (path.empty() || path == "-") {
        out << text;
        return;
    }
    std::ofstream f(path, std::ios::binary);
    if (!f) throw OdError(ErrorCode::InputError, "cannot write " + path);
    f << text;
}

InputFormat to_format(const std::string& name) {
    return name == "csv" ? InputFormat::Csv : InputFormat::Json;
}

double rad(double deg) { return deg * std::numbers::pi / 180.0; }

struct SolveFlags {
    std::string input;
    std::string format = "json";
    std::optional<double> mu;
    std::string method;
    std::optional<double> coplanarity_tol;
    bool pretty = false;
    bool diagnostics = false;
};

struct ElementFlags {
    std::optional<double> a_km;
    double e = 0.0;
    double i_deg = 0.0;
    double raan_deg = 0.0;
    double argp_deg = 0.0;

    KeplerElements elements() const {
        KeplerElements k{*a_km, e, rad(i_deg), rad(raan_deg), rad(argp_deg)};
        validate(k);
        return k;
    }
};

void add_request_flags(CLI::App* cmd, SolveFlags& f, bool with_method) {
    cmd->add_option("--input", f.input, "Request file (JSON object, JSON array for a batch, or CSV)")->required();
    cmd->add_option("--format", f.format, "Input format")->check(CLI::IsMember({"json", "csv"}));
    cmd->add_option("--mu", f.mu, "Gravitational parameter [km^3/s^2], default 398600.4418")
        ->check(CLI::PositiveNumber);
    if (with_method) {
        cmd->add_option("--method", f.method, "Solver")->check(CLI::IsMember({"algebraic", "gibbs", "both"}));
    }
    cmd->add_option("--coplanarity-tol", f.coplanarity_tol, "Bound on |w . r_hat| for coplanar inputs")
        ->check(CLI::PositiveNumber);
}

void add_element_flags(CLI::App* cmd, ElementFlags& f) {
    cmd->add_option("--a-km", f.a_km, "Semi-major axis [km], negative for hyperbolas");
    cmd->add_option("--e", f.e, "Eccentricity")->check(CLI::NonNegativeNumber);
    cmd->add_option("--i-deg", f.i_deg, "Inclination [deg]")->check(CLI::Range(0.0, 180.0));
    cmd->add_option("--raan-deg", f.raan_deg, "Right ascension of the ascending node [deg]");
    cmd->add_option("--argp-deg", f.argp_deg, "Argument of periapsis [deg]");
}

std::vector<SolveRequest> load_requests(const SolveFlags& f, std::optional<MethodChoice> forced) {
    RequestOverrides o;
    o.mu = f.mu;
    o.coplanarity_tol = f.coplanarity_tol;
    o.method = forced ? forced : parse_method(f.method);
    return parse_requests(read_file(f.input), to_format(f.format), o);
}

int solve_command(const SolveFlags& f, std::optional<MethodChoice> forced, bool diagnostics, std::ostream& out,
                  std::ostream& err) {
    const auto requests = load_requests(f, forced);
    const auto reports = run_batch(requests, diagnostics);
    int status = 0;
    for (const auto& r : reports) {
        if (!r.ok()) {
            status = exit_code(*r.error);
            break;
        }
    }
    if (reports.size() == 1) {
        const auto& r = reports.front();
        if (!r.ok()) {
            err << error_json(*r.error, r.error_message);
            return status;
        }
        out << (f.pretty ? report_pretty(r, diagnostics) : report_json(r, diagnostics));
        return 0;
    }
    if (f.pretty) {
        for (std::size_t k = 0; k < reports.size(); ++k) {
            out << (k ? "\n" : "") << "# record " << k + 1 << "\n" << report_pretty(reports[k], diagnostics);
        }
    } else {
        out << batch_json(reports, diagnostics);
    }
    return status;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"Orbit determination from three position vectors (Gibbs problem)", "gibbsod"};
    app.footer(kExitCodes);
    app.require_subcommand(1);

    SolveFlags solve_flags;
    auto* solve = app.add_subcommand("solve", "Determine the orbit through three positions");
    add_request_flags(solve, solve_flags, true);
    solve->add_flag("--pretty", solve_flags.pretty, "Human-readable table (angles in degrees)");
    solve->add_flag("--diagnostics", solve_flags.diagnostics, "Include intermediate quantities");

    SolveFlags compare_flags;
    auto* compare = app.add_subcommand("compare", "Run both solvers and dump all diagnostics");
    add_request_flags(compare, compare_flags, false);
    compare->add_flag("--pretty", compare_flags.pretty, "Human-readable table (angles in degrees)");
    compare->add_flag("--diagnostics", compare_flags.diagnostics, "Accepted for symmetry; always on");

    ElementFlags gen_el;
    std::vector<double> anomalies_deg;
    std::optional<double> gen_mu;
    std::string gen_format = "json";
    std::string gen_output;
    auto* generate = app.add_subcommand("generate", "Write a request file with positions sampled from elements");
    add_element_flags(generate, gen_el);
    generate->get_option("--a-km")->required();
    generate->add_option("--anomalies-deg", anomalies_deg, "Three true anomalies [deg], comma separated")
        ->required()
        ->expected(3)
        ->delimiter(',');
    generate->add_option("--mu", gen_mu, "Gravitational parameter to record in the file, default 398600.4418")->check(CLI::PositiveNumber);
    generate->add_option("--format", gen_format, "Output format")->check(CLI::IsMember({"json", "csv"}));
    generate->add_option("--output", gen_output, "Output path, default stdout");

    SolveFlags locus_flags;
    ElementFlags locus_el;
    int samples = 0;
    std::string locus_output;
    auto* locus = app.add_subcommand("locus", "Sample the orbit for plotting (CSV)");
    locus->add_option("--input", locus_flags.input, "Request file; its three positions are appended as the last rows");
    locus->add_option("--format", locus_flags.format, "Input format")->check(CLI::IsMember({"json", "csv"}));
    locus->add_option("--method", locus_flags.method, "Solver used for --input")
        ->check(CLI::IsMember({"algebraic", "gibbs", "both"}));
    locus->add_option("--coplanarity-tol", locus_flags.coplanarity_tol, "Bound on |w . r_hat|")
        ->check(CLI::PositiveNumber);
    add_element_flags(locus, locus_el);
    locus->add_option("--samples", samples, "Number of orbit samples (>= 2)")->required();
    locus->add_option("--output", locus_output, "Output path, default stdout");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e, out, err);
    } catch (const CLI::ParseError& e) {
        app.exit(e, out, err);
        return exit_code(ErrorCode::InputError);
    }

    try {
        if (*solve) {
            return solve_command(solve_flags, std::nullopt, solve_flags.diagnostics, out, err);
        }
        if (*compare) {
            return solve_command(compare_flags, MethodChoice::Both, true, out, err);
        }
        if (*generate) {
            const KeplerElements k = gen_el.elements();
            SolveRequest req;
            if (gen_mu) req.mu = gen_mu;
            for (std::size_t i = 0; i < 3; ++i) req.positions[i] = position_at(k, rad(anomalies_deg[i]));
            write_output(gen_output, request_text(req, to_format(gen_format)), out);
            return 0;
        }
        if (*locus) {
            if (locus_flags.input.empty() == !locus_el.a_km.has_value()) {
                throw OdError(ErrorCode::InputError, "locus needs exactly one of --input or --a-km");
            }
            if (samples < 2) throw OdError(ErrorCode::InputError, "--samples must be at least 2");
            std::vector<LocusSample> rows;
            if (locus_el.a_km) {
                rows = sample_locus(elements_to_geometry(locus_el.elements()), samples);
            } else {
                const auto requests = load_requests(locus_flags, std::nullopt);
                if (requests.size() != 1) throw OdError(ErrorCode::InputError, "locus takes a single request");
                const SolveRequest& req = requests.front();
                const auto& r = req.positions;
                const OrbitGeometry g = req.method == MethodChoice::Gibbs
                                            ? solve_classical(r[0], r[1], r[2], req.options)
                                            : solve_algebraic(r[0], r[1], r[2], req.options);
                rows = sample_locus(g, samples);
                const OrbitGeometry full = with_full_basis(g);
                for (const auto& p : r) rows.push_back({locus_anomaly(full, p), p});
            }
            write_output(locus_output, locus_csv(rows), out);
            return 0;
        }
    } catch (const OdError& e) {
        err << error_json(e.code(), e.what());
        return exit_code(e.code());
    }
    return 0;
}

}  // namespace gibbsod::cli
