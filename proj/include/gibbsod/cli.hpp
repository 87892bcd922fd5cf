// Command-line front end: request parsing, report assembly and the
// solve / compare / generate / locus subcommands.
#pragma once

#include <array>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "gibbsod/algebraic.hpp"
#include "gibbsod/classical.hpp"
#include "gibbsod/elements.hpp"
#include "gibbsod/error.hpp"
#include "gibbsod/orbit.hpp"

namespace gibbsod::cli {

inline constexpr double kEarthMu = 398600.4418;  // km³/s²

enum class MethodChoice { Algebraic, Gibbs, Both };

std::optional<MethodChoice> parse_method(std::string_view name);
std::string_view method_name(MethodChoice m);

struct SolveRequest {
    PositionTriple positions{};
    std::optional<double> mu = kEarthMu;  ///< empty: velocities suppressed
    MethodChoice method = MethodChoice::Both;
    SolveOptions options{};
};

/// Optional per-invocation overrides applied on top of what a file says.
struct RequestOverrides {
    std::optional<double> mu;
    std::optional<MethodChoice> method;
    std::optional<double> coplanarity_tol;
};

enum class InputFormat { Json, Csv };

/// Parses one request object, or an array of them (batch). Throws OdError
/// with InputError on malformed text.
std::vector<SolveRequest> parse_requests(std::string_view text, InputFormat format,
                                         const RequestOverrides& overrides = {});

struct MethodReport {
    OrbitGeometry geometry;
    KeplerElements elements;
    std::optional<std::array<Vector3, 3>> velocities;  ///< km/s
};

struct SolveReport {
    SolveRequest request;
    std::optional<ErrorCode> error;
    std::string error_message;

    std::optional<MethodReport> algebraic;
    std::optional<FocusConic> conic;
    std::optional<std::array<PlanarPoint, 3>> planar_points;
    std::optional<LinePair> lines;
    std::optional<BranchDiagnostics> branch;

    std::optional<MethodReport> gibbs;
    std::optional<GibbsIntermediates> intermediates;

    /// Largest of the relative p, e and a differences and 1 - p̂·p̂′
    /// between the two methods; present when both ran.
    std::optional<double> max_relative_discrepancy;

    bool ok() const { return !error.has_value(); }
};

/// Runs the requested solver(s). Never throws for solver failures; the first
/// error is recorded in the report instead.
SolveReport run_solve(const SolveRequest& request, bool diagnostics);

/// Runs each request, in parallel when there are several. Order is preserved.
std::vector<SolveReport> run_batch(const std::vector<SolveRequest>& requests, bool diagnostics);

/// JSON with a fixed key order and 17 significant digits per number.
std::string report_json(const SolveReport& report, bool diagnostics);
std::string batch_json(const std::vector<SolveReport>& reports, bool diagnostics);
std::string error_json(ErrorCode code, std::string_view message);

/// Human-readable table; angles in degrees.
std::string report_pretty(const SolveReport& report, bool diagnostics);

/// A request file holding the given positions, JSON or CSV.
std::string request_text(const SolveRequest& request, InputFormat format);

/// Samples the orbit for plotting. Elliptic orbits cover [0, 2π); open orbits
/// cover the interior of the physical branch. Throws InputError for n < 2.
struct LocusSample {
    double theta = 0.0;
    Vector3 position;
};
std::vector<LocusSample> sample_locus(const OrbitGeometry& g, int n_samples);

/// Complete perifocal basis for g, filling in p̂ and q̂ for circular orbits
/// by the node convention of geometry_to_elements.
OrbitGeometry with_full_basis(const OrbitGeometry& g);

/// True anomaly in the sampling convention of sample_locus.
double locus_anomaly(const OrbitGeometry& full, const Vector3& r);

std::string locus_csv(const std::vector<LocusSample>& samples);

/// %.17g, or "null" when not finite.
std::string format_number(double v);

/// Entry point shared by the gibbsod executable and the tests.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace gibbsod::cli
