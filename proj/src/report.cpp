#include <algorithm>
#include <charconv>
#include <cstdio>
#include <numbers>
#include <sstream>

#include "gibbsod/cli.hpp"
#include "gibbsod/error.hpp"
#include "json.hpp"

namespace gibbsod::cli {

using ordered_json = nlohmann::ordered_json;

namespace {

[[noreturn]] void input_error(const std::string& what) { throw OdError(ErrorCode::InputError, what); }

// ---------------------------------------------------------------- parsing

Vector3 parse_vector(const nlohmann::json& j) {
    if (!j.is_array() || j.size() != 3) input_error("each position must be an array of 3 numbers");
    std::array<double, 3> c{};
    for (std::size_t k = 0; k < 3; ++k) {
        if (!j[k].is_number()) input_error("position components must be numbers");
        c[k] = j[k].get<double>();
        if (!std::isfinite(c[k])) input_error("position components must be finite");
    }
    return {c[0], c[1], c[2]};
}

double parse_positive(const nlohmann::json& j, const char* name) {
    if (!j.is_number()) input_error(std::string(name) + " must be a number");
    const double v = j.get<double>();
    if (!(v > 0.0) || !std::isfinite(v)) input_error(std::string(name) + " must be positive");
    return v;
}

SolveRequest parse_request_object(const nlohmann::json& j) {
    if (!j.is_object()) input_error("request must be a JSON object");
    SolveRequest req;
    const auto pos = j.find("positions");
    if (pos == j.end()) input_error("missing \"positions\"");
    if (!pos->is_array() || pos->size() != 3) input_error("\"positions\" must hold exactly 3 vectors");
    for (std::size_t i = 0; i < 3; ++i) req.positions[i] = parse_vector((*pos)[i]);

    if (const auto mu = j.find("mu"); mu != j.end()) {
        if (mu->is_null()) {
            req.mu.reset();
        } else {
            req.mu = parse_positive(*mu, "mu");
        }
    }
    if (const auto m = j.find("method"); m != j.end()) {
        if (!m->is_string()) input_error("\"method\" must be a string");
        const auto parsed = parse_method(m->get<std::string>());
        if (!parsed) input_error("unknown method \"" + m->get<std::string>() + "\"");
        req.method = *parsed;
    }
    if (const auto tol = j.find("coplanarity_tol"); tol != j.end()) {
        req.options.coplanarity_tol = parse_positive(*tol, "coplanarity_tol");
    }
    return req;
}

std::string_view trim(std::string_view s) {
    const auto b = s.find_first_not_of(" \t\r");
    if (b == std::string_view::npos) return {};
    const auto e = s.find_last_not_of(" \t\r");
    return s.substr(b, e - b + 1);
}

std::optional<double> parse_double(std::string_view s) {
    s = trim(s);
    if (!s.empty() && s.front() == '+') s.remove_prefix(1);
    double v = 0.0;
    const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc{} || ptr != s.data() + s.size() || s.empty()) return std::nullopt;
    return v;
}

std::vector<std::string_view> split(std::string_view s, char sep) {
    std::vector<std::string_view> out;
    std::size_t start = 0;
    while (true) {
        const auto at = s.find(sep, start);
        out.push_back(s.substr(start, at == std::string_view::npos ? std::string_view::npos : at - start));
        if (at == std::string_view::npos) break;
        start = at + 1;
    }
    return out;
}

SolveRequest parse_csv(std::string_view text) {
    SolveRequest req;
    std::size_t rows = 0;
    bool header_allowed = true;
    for (std::string_view line : split(text, '\n')) {
        line = trim(line);
        if (line.empty() || line.front() == '#') continue;
        const auto cells = split(line, ',');
        const bool numeric = cells.size() == 3 &&
                             std::all_of(cells.begin(), cells.end(), [](auto c) { return parse_double(c); });
        if (!numeric) {
            if (header_allowed) {
                header_allowed = false;
                continue;
            }
            input_error("CSV rows must be three comma-separated numbers: x,y,z");
        }
        header_allowed = false;
        if (rows == 3) input_error("CSV input must contain exactly 3 rows");
        Vector3 p{*parse_double(cells[0]), *parse_double(cells[1]), *parse_double(cells[2])};
        if (!p.is_finite()) input_error("position components must be finite");
        req.positions[rows++] = p;
    }
    if (rows != 3) input_error("CSV input must contain exactly 3 rows");
    return req;
}

void apply(SolveRequest& req, const RequestOverrides& o) {
    if (o.mu) req.mu = *o.mu;
    if (o.method) req.method = *o.method;
    if (o.coplanarity_tol) req.options.coplanarity_tol = *o.coplanarity_tol;
}

// ---------------------------------------------------------------- solving

double rel_diff(double x, double y, double floor) {
    if (std::isinf(x) && std::isinf(y) && (x > 0) == (y > 0)) return 0.0;
    return std::abs(x - y) / std::max({std::abs(x), std::abs(y), floor});
}

double discrepancy(const OrbitGeometry& a, const OrbitGeometry& b) {
    double d = std::max({rel_diff(a.p, b.p, 1e-300), rel_diff(a.e, b.e, 1.0), rel_diff(a.a, b.a, 1e-300)});
    if (a.p_hat && b.p_hat) d = std::max(d, std::abs(1.0 - dot(*a.p_hat, *b.p_hat)));
    return d;
}

MethodReport method_report(const OrbitGeometry& g, const PositionTriple& r, const std::optional<double>& mu,
                           bool classical, const GibbsIntermediates* gi) {
    MethodReport m;
    m.geometry = g;
    m.elements = geometry_to_elements(g);
    if (mu) {
        std::array<Vector3, 3> v;
        for (std::size_t i = 0; i < 3; ++i) {
            v[i] = classical ? gibbs_velocity(*gi, r[i], *mu) : velocity_from_geometry(g, r[i], *mu);
        }
        m.velocities = v;
    }
    return m;
}

// ---------------------------------------------------------------- emitting

void emit(const ordered_json& j, std::string& out, int depth) {
    const std::string pad(static_cast<std::size_t>(2 * (depth + 1)), ' ');
    const std::string close_pad(static_cast<std::size_t>(2 * depth), ' ');
    switch (j.type()) {
        case ordered_json::value_t::number_float:
            out += format_number(j.get<double>());
            return;
        case ordered_json::value_t::array: {
            if (j.empty()) {
                out += "[]";
                return;
            }
            const bool flat = std::all_of(j.begin(), j.end(), [](const auto& e) { return e.is_primitive(); });
            if (flat) {
                out += '[';
                for (std::size_t k = 0; k < j.size(); ++k) {
                    if (k) out += ", ";
                    emit(j[k], out, depth + 1);
                }
                out += ']';
                return;
            }
            out += "[\n";
            for (std::size_t k = 0; k < j.size(); ++k) {
                out += pad;
                emit(j[k], out, depth + 1);
                out += k + 1 < j.size() ? ",\n" : "\n";
            }
            out += close_pad + "]";
            return;
        }
        case ordered_json::value_t::object: {
            if (j.empty()) {
                out += "{}";
                return;
            }
            out += "{\n";
            std::size_t k = 0;
            for (const auto& [key, value] : j.items()) {
                out += pad + ordered_json(key).dump() + ": ";
                emit(value, out, depth + 1);
                out += ++k < j.size() ? ",\n" : "\n";
            }
            out += close_pad + "}";
            return;
        }
        default:
            out += j.dump();
    }
}

std::string dump(const ordered_json& j) {
    std::string out;
    emit(j, out, 0);
    out += '\n';
    return out;
}

ordered_json num(double v) {
    if (!std::isfinite(v)) return nullptr;
    return v;
}

ordered_json vec(const Vector3& v) { return ordered_json::array({num(v.x), num(v.y), num(v.z)}); }

ordered_json vec(const std::optional<Vector3>& v) { return v ? vec(*v) : ordered_json(nullptr); }

ordered_json hom(const Homogeneous& h) { return vec(h.vec()); }

ordered_json geometry_json(const OrbitGeometry& g) {
    ordered_json j = ordered_json::object();
    j["p_hat"] = vec(g.p_hat);
    j["q_hat"] = vec(g.q_hat);
    j["w_hat"] = vec(g.w_hat);
    j["p_km"] = num(g.p);
    j["e"] = num(g.e);
    j["a_km"] = num(g.a);
    return j;
}

ordered_json elements_json(const KeplerElements& k) {
    ordered_json j = ordered_json::object();
    j["a_km"] = num(k.a);
    j["e"] = num(k.e);
    j["i_rad"] = num(k.i);
    j["raan_rad"] = num(k.raan);
    j["argp_rad"] = num(k.argp);
    return j;
}

ordered_json method_json(const MethodReport& m) {
    ordered_json j = ordered_json::object();
    j["geometry"] = geometry_json(m.geometry);
    j["elements"] = elements_json(m.elements);
    if (m.velocities) {
        j["velocities_km_s"] = ordered_json::array({vec((*m.velocities)[0]), vec((*m.velocities)[1]),
                                                    vec((*m.velocities)[2])});
    } else {
        j["velocities_km_s"] = nullptr;
    }
    return j;
}

ordered_json report_object(const SolveReport& r, bool diagnostics) {
    ordered_json j = ordered_json::object();
    if (!r.ok()) {
        j["status"] = "error";
        j["code"] = std::string(error_name(*r.error));
        j["exit_code"] = exit_code(*r.error);
        j["message"] = r.error_message;
        return j;
    }
    j["status"] = "ok";
    j["method"] = std::string(method_name(r.request.method));
    j["mu_km3_s2"] = r.request.mu ? num(*r.request.mu) : ordered_json(nullptr);
    j["positions_km"] = ordered_json::array(
        {vec(r.request.positions[0]), vec(r.request.positions[1]), vec(r.request.positions[2])});

    if (r.algebraic) {
        ordered_json a = method_json(*r.algebraic);
        ordered_json c = ordered_json::object();
        c["X_per_km"] = num(r.conic->X);
        c["Y_per_km"] = num(r.conic->Y);
        c["Zsq_per_km2"] = num(r.conic->Zsq);
        a["conic"] = c;
        if (diagnostics && r.planar_points && r.lines && r.branch) {
            ordered_json d = ordered_json::object();
            ordered_json pts = ordered_json::array();
            for (const auto& p : *r.planar_points) pts.push_back(ordered_json::array({num(p.x), num(p.y), num(p.r)}));
            d["planar_points_xyr_km"] = pts;
            d["u123"] = hom(r.lines->u123);
            d["u456"] = hom(r.lines->u456);
            d["v123"] = hom(r.lines->v123);
            d["v456"] = hom(r.lines->v456);
            d["K1"] = num(r.branch->k1);
            d["K2"] = num(r.branch->k2);
            d["K3"] = num(r.branch->k3);
            d["K_flip3"] = num(r.branch->k_flip3);
            d["K_flip23"] = num(r.branch->k_flip23);
            ordered_json flags = ordered_json::object();
            flags["u123xv123"] = r.branch->consistent[0];
            flags["u456xv123"] = r.branch->consistent[1];
            flags["u123xv456"] = r.branch->consistent[2];
            flags["u456xv456"] = r.branch->consistent[3];
            d["branch_consistent"] = flags;
            ordered_json res = ordered_json::array();
            for (const auto& p : *r.planar_points) res.push_back(num(normalized_residual(*r.conic, p.x, p.y)));
            d["normalized_residuals"] = res;
            a["diagnostics"] = d;
        }
        j["algebraic"] = a;
    }
    if (r.gibbs) {
        ordered_json g = method_json(*r.gibbs);
        if (diagnostics && r.intermediates) {
            ordered_json d = ordered_json::object();
            d["N_km3"] = vec(r.intermediates->N);
            d["D_km2"] = vec(r.intermediates->D);
            d["S_km2"] = vec(r.intermediates->S);
            g["diagnostics"] = d;
        }
        j["gibbs"] = g;
    }
    if (r.max_relative_discrepancy) {
        ordered_json x = ordered_json::object();
        x["max_relative_discrepancy"] = num(*r.max_relative_discrepancy);
        j["cross_method"] = x;
    }
    return j;
}

std::string fmt(const char* f, double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, f, v);
    return buf;
}

std::string vec_text(const std::optional<Vector3>& v) {
    if (!v) return "(absent)";
    return fmt("%12.6f", v->x) + " " + fmt("%12.6f", v->y) + " " + fmt("%12.6f", v->z);
}

double deg(double rad) { return rad * 180.0 / std::numbers::pi; }

void pretty_method(std::ostringstream& s, const char* title, const MethodReport& m) {
    const auto& g = m.geometry;
    const auto& k = m.elements;
    s << title << "\n";
    s << "  p_hat            " << vec_text(g.p_hat) << "\n";
    s << "  q_hat            " << vec_text(g.q_hat) << "\n";
    s << "  w_hat            " << vec_text(g.w_hat) << "\n";
    s << "  p       [km]     " << fmt("%.6f", g.p) << "\n";
    s << "  e                " << fmt("%.9f", g.e) << "\n";
    s << "  a       [km]     " << (std::isfinite(g.a) ? fmt("%.6f", g.a) : std::string("inf")) << "\n";
    s << "  i       [deg]    " << fmt("%.6f", deg(k.i)) << "\n";
    s << "  raan    [deg]    " << fmt("%.6f", deg(k.raan)) << "\n";
    s << "  argp    [deg]    " << fmt("%.6f", deg(k.argp)) << "\n";
    if (m.velocities) {
        for (std::size_t i = 0; i < 3; ++i) {
            s << "  v" << i + 1 << "      [km/s]   " << vec_text((*m.velocities)[i]) << "\n";
        }
    }
}

}  // namespace

// ---------------------------------------------------------------- public

std::optional<MethodChoice> parse_method(std::string_view name) {
    if (name == "algebraic") return MethodChoice::Algebraic;
    if (name == "gibbs") return MethodChoice::Gibbs;
    if (name == "both") return MethodChoice::Both;
    return std::nullopt;
}

std::string_view method_name(MethodChoice m) {
    switch (m) {
        case MethodChoice::Algebraic: return "algebraic";
        case MethodChoice::Gibbs: return "gibbs";
        case MethodChoice::Both: return "both";
    }
    return "both";
}

std::string format_number(double v) {
    if (!std::isfinite(v)) return "null";
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

std::vector<SolveRequest> parse_requests(std::string_view text, InputFormat format,
                                         const RequestOverrides& overrides) {
    std::vector<SolveRequest> out;
    if (format == InputFormat::Csv) {
        out.push_back(parse_csv(text));
    } else {
        nlohmann::json j;
        try {
            j = nlohmann::json::parse(text);
        } catch (const nlohmann::json::exception& e) {
            input_error(std::string("malformed JSON: ") + e.what());
        }
        if (j.is_array()) {
            if (j.empty()) input_error("batch input is empty");
            for (const auto& item : j) out.push_back(parse_request_object(item));
        } else {
            out.push_back(parse_request_object(j));
        }
    }
    for (auto& r : out) apply(r, overrides);
    return out;
}

SolveReport run_solve(const SolveRequest& request, bool diagnostics) {
    SolveReport rep;
    rep.request = request;
    const auto& r = request.positions;
    try {
        if (request.method != MethodChoice::Gibbs) {
            const AlgebraicSolution sol = solve_algebraic_detailed(r, request.options);
            rep.algebraic = method_report(sol.orbit, r, request.mu, false, nullptr);
            rep.conic = sol.conic;
            if (diagnostics) {
                rep.planar_points = sol.points;
                rep.lines = sol.lines;
                rep.branch = branch_diagnostics(sol.points[0], sol.points[1], sol.points[2]);
            }
        }
        if (request.method != MethodChoice::Algebraic) {
            const GibbsIntermediates gi = gibbs_intermediates(r[0], r[1], r[2], request.options);
            rep.gibbs = method_report(gibbs_geometry(gi), r, request.mu, true, &gi);
            if (diagnostics) rep.intermediates = gi;
        }
        if (rep.algebraic && rep.gibbs) {
            rep.max_relative_discrepancy = discrepancy(rep.algebraic->geometry, rep.gibbs->geometry);
        }
    } catch (const OdError& e) {
        SolveReport failed;
        failed.request = request;
        failed.error = e.code();
        failed.error_message = e.what();
        return failed;
    }
    return rep;
}

std::vector<SolveReport> run_batch(const std::vector<SolveRequest>& requests, bool diagnostics) {
    std::vector<SolveReport> out(requests.size());
    const auto n = static_cast<std::ptrdiff_t>(requests.size());
#pragma omp parallel for schedule(dynamic) if (n > 1)
    for (std::ptrdiff_t k = 0; k < n; ++k) {
        out[static_cast<std::size_t>(k)] = run_solve(requests[static_cast<std::size_t>(k)], diagnostics);
    }
    return out;
}

std::string report_json(const SolveReport& report, bool diagnostics) {
    return dump(report_object(report, diagnostics));
}

std::string batch_json(const std::vector<SolveReport>& reports, bool diagnostics) {
    ordered_json arr = ordered_json::array();
    for (const auto& r : reports) arr.push_back(report_object(r, diagnostics));
    return dump(arr);
}

std::string error_json(ErrorCode code, std::string_view message) {
    ordered_json j = ordered_json::object();
    j["status"] = "error";
    j["code"] = std::string(error_name(code));
    j["exit_code"] = exit_code(code);
    j["message"] = std::string(message);
    return dump(j);
}

std::string report_pretty(const SolveReport& report, bool diagnostics) {
    std::ostringstream s;
    if (!report.ok()) {
        s << "error: " << error_name(*report.error) << " (exit " << exit_code(*report.error)
          << "): " << report.error_message << "\n";
        return s.str();
    }
    s << "method: " << method_name(report.request.method) << "\n";
    for (std::size_t i = 0; i < 3; ++i) {
        s << "r" << i + 1 << " [km]          " << vec_text(report.request.positions[i]) << "\n";
    }
    if (report.algebraic) {
        pretty_method(s, "algebraic", *report.algebraic);
        s << "  X [1/km]         " << fmt("%.10e", report.conic->X) << "\n";
        s << "  Y [1/km]         " << fmt("%.10e", report.conic->Y) << "\n";
        s << "  Z^2 [1/km^2]     " << fmt("%.10e", report.conic->Zsq) << "\n";
        if (diagnostics && report.branch) {
            const auto& b = *report.branch;
            s << "  K1 K2 K3         " << fmt("%.6e", b.k1) << " " << fmt("%.6e", b.k2) << " "
              << fmt("%.6e", b.k3) << "\n";
            s << "  consistent       u123xv123=" << b.consistent[0] << " u456xv123=" << b.consistent[1]
              << " u123xv456=" << b.consistent[2] << " u456xv456=" << b.consistent[3] << "\n";
        }
    }
    if (report.gibbs) {
        pretty_method(s, "gibbs", *report.gibbs);
        if (diagnostics && report.intermediates) {
            s << "  N [km^3]         " << vec_text(report.intermediates->N) << "\n";
            s << "  D [km^2]         " << vec_text(report.intermediates->D) << "\n";
            s << "  S [km^2]         " << vec_text(report.intermediates->S) << "\n";
        }
    }
    if (report.max_relative_discrepancy) {
        s << "max relative discrepancy  " << fmt("%.3e", *report.max_relative_discrepancy) << "\n";
    }
    return s.str();
}

std::string request_text(const SolveRequest& request, InputFormat format) {
    if (format == InputFormat::Csv) {
        std::string out = "x_km,y_km,z_km\n";
        for (const auto& p : request.positions) {
            out += format_number(p.x) + "," + format_number(p.y) + "," + format_number(p.z) + "\n";
        }
        return out;
    }
    ordered_json j = ordered_json::object();
    j["mu"] = request.mu ? num(*request.mu) : ordered_json(nullptr);
    j["positions"] = ordered_json::array(
        {vec(request.positions[0]), vec(request.positions[1]), vec(request.positions[2])});
    j["method"] = std::string(method_name(request.method));
    return dump(j);
}

OrbitGeometry with_full_basis(const OrbitGeometry& g) {
    if (g.p_hat && g.q_hat) return g;
    KeplerElements k = geometry_to_elements(g);
    k.e = 0.0;
    k.a = g.p;
    const OrbitGeometry basis = elements_to_geometry(k);
    OrbitGeometry out = g;
    out.p_hat = basis.p_hat;
    out.q_hat = cross(g.w_hat, *basis.p_hat);
    return out;
}

double locus_anomaly(const OrbitGeometry& full, const Vector3& r) {
    const double theta = std::atan2(dot(*full.q_hat, r), dot(*full.p_hat, r));
    return full.e < 1.0 ? wrap_two_pi(theta) : theta;
}

std::vector<LocusSample> sample_locus(const OrbitGeometry& g, int n_samples) {
    if (n_samples < 2) input_error("locus needs at least 2 samples");
    if (!(g.p > 0.0) || !std::isfinite(g.p) || !(g.e >= 0.0)) input_error("orbit geometry is not valid");
    const OrbitGeometry full = with_full_basis(g);
    const auto n = static_cast<std::size_t>(n_samples);

    std::vector<LocusSample> out(n);
    const bool closed = full.e < 1.0;
    const double limit = 0.95 * max_true_anomaly(std::max(full.e, 1.0));
    for (std::size_t k = 0; k < n; ++k) {
        const double t = static_cast<double>(k);
        const double theta = closed ? 2.0 * std::numbers::pi * t / static_cast<double>(n)
                                    : -limit + 2.0 * limit * t / static_cast<double>(n - 1);
        const double r = full.p / (1.0 + full.e * std::cos(theta));
        out[k] = {theta, r * (std::cos(theta) * *full.p_hat + std::sin(theta) * *full.q_hat)};
    }
    return out;
}

std::string locus_csv(const std::vector<LocusSample>& samples) {
    std::string out = "theta_rad,x_km,y_km,z_km\n";
    for (const auto& s : samples) {
        out += format_number(s.theta) + "," + format_number(s.position.x) + "," + format_number(s.position.y) +
               "," + format_number(s.position.z) + "\n";
    }
    return out;
}

}  // namespace gibbsod::cli
