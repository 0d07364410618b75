// Command-line front end: sampling, slicing, lattice and regime reports,
// PDE residual verification, and direct ODE integration, exported as
// deterministic CSV or JSON.

#include "nslab/closed_form.hpp"
#include "nslab/ode.hpp"
#include "nslab/pressure_expr.hpp"
#include "nslab/residual.hpp"
#include "nslab/sampling.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>

using namespace nslab;
using ordered_json = nlohmann::ordered_json;

namespace {

constexpr int kExitBadArgs = 2;
constexpr int kExitRuntime = 3;

std::string fmt(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

Complex parse_complex(const std::string& s) {
    const size_t comma = s.find(',');
    try {
        if (comma == std::string::npos) return Complex(std::stod(s), 0.0);
        return Complex(std::stod(s.substr(0, comma)),
                       std::stod(s.substr(comma + 1)));
    } catch (const std::exception&) {
        throw CLI::ValidationError("expected 're' or 're,im', got '" + s + "'");
    }
}

struct Range {
    double lo, hi;
    int n;
    std::vector<double> values() const {
        std::vector<double> out;
        for (int i = 0; i < n; ++i)
            out.push_back(n == 1 ? lo : lo + i * (hi - lo) / (n - 1));
        return out;
    }
};

Range parse_range(const std::string& s) {
    double lo, hi;
    int n;
    char c1, c2;
    std::istringstream is(s);
    if (!(is >> lo >> c1 >> hi >> c2 >> n) || c1 != ':' || c2 != ':' || n < 1)
        throw CLI::ValidationError("expected 'min:max:n', got '" + s + "'");
    return {lo, hi, n};
}

Window parse_window(const std::string& s) {
    const size_t comma = s.find(',');
    auto pair = [](const std::string& part) {
        double lo, hi;
        char c;
        std::istringstream is(part);
        if (!(is >> lo >> c >> hi) || c != ':')
            throw CLI::ValidationError("expected 'lo:hi', got '" + part + "'");
        return std::pair<double, double>{lo, hi};
    };
    if (comma == std::string::npos)
        throw CLI::ValidationError(
            "expected 'remin:remax,immin:immax', got '" + s + "'");
    const auto re = pair(s.substr(0, comma));
    const auto im = pair(s.substr(comma + 1));
    return {re.first, re.second, im.first, im.second};
}

GridSpec parse_grid(const std::string& s) {
    const size_t comma = s.find(',');
    if (comma == std::string::npos)
        throw CLI::ValidationError(
            "expected 'tmin:tmax:nt,xmin:xmax:nx', got '" + s + "'");
    const Range t = parse_range(s.substr(0, comma));
    const Range x = parse_range(s.substr(comma + 1));
    GridSpec g{t.lo, t.hi, x.lo, x.hi, t.n, x.n};
    if (!g.valid()) throw CLI::ValidationError("invalid grid '" + s + "'");
    return g;
}

std::vector<Complex> parse_path(const std::string& s) {
    std::vector<Complex> out;
    std::stringstream ss(s);
    std::string part;
    while (std::getline(ss, part, ';'))
        if (!part.empty()) out.push_back(parse_complex(part));
    if (out.size() < 2)
        throw CLI::ValidationError("path needs >= 2 're,im' waypoints");
    return out;
}

// writes to --out or stdout
void emit(const std::string& out_path, const std::string& payload) {
    if (out_path.empty()) {
        std::cout << payload;
        return;
    }
    std::ofstream f(out_path, std::ios::binary);
    if (!f) throw std::runtime_error("cannot open output file: " + out_path);
    f << payload;
    if (!f) throw std::runtime_error("write failure: " + out_path);
}

struct CommonArgs {
    std::string C = "0,0";
    std::string C2 = "0,0";
    std::string format = "csv";
    std::string out;
    SolutionParams params() const {
        return {parse_complex(C), parse_complex(C2)};
    }
};

void add_common(CLI::App* cmd, CommonArgs& a, bool with_format = true) {
    cmd->add_option("--C", a.C, "shift constant, 're,im'");
    cmd->add_option("--C2", a.C2, "velocity offset, 're,im'");
    if (with_format)
        cmd->add_option("--format", a.format, "csv or json")
            ->check(CLI::IsMember({"csv", "json"}));
    cmd->add_option("--out", a.out, "output path (default stdout)");
}

std::string samples_payload(const std::vector<FieldSample>& samples,
                            const RunMetadata& meta, const std::string& format) {
    std::ostringstream os;
    if (format == "json")
        export_json(meta, samples, os);
    else
        export_csv(samples, os);
    return os.str();
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"space-time holomorphic Navier-Stokes laboratory"};
    app.set_help_flag("--help", "print help");
    app.require_subcommand(1);

    // --- eval ---
    CommonArgs eval_args;
    double eval_t = 0.0, eval_x = 0.0;
    CLI::App* eval_cmd = app.add_subcommand("eval", "closed form at one point");
    add_common(eval_cmd, eval_args);
    eval_cmd->add_option("--t", eval_t, "time coordinate");
    eval_cmd->add_option("--x", eval_x, "space coordinate");

    // --- sample ---
    CommonArgs sample_args;
    std::string sample_grid_spec = "0:1:11,-3:3:61";
    CLI::App* sample_cmd = app.add_subcommand("sample", "grid of field samples");
    add_common(sample_cmd, sample_args);
    sample_cmd->add_option("--grid", sample_grid_spec,
                           "tmin:tmax:nt,xmin:xmax:nx");

    // --- slice ---
    CommonArgs slice_args;
    std::string slice_axis = "time";
    double slice_at = 0.0;
    std::string slice_range = "0:2:21";
    CLI::App* slice_cmd =
        app.add_subcommand("slice", "time or space slice of the fields");
    add_common(slice_cmd, slice_args);
    slice_cmd->add_option("--axis", slice_axis, "time or space")
        ->check(CLI::IsMember({"time", "space"}));
    slice_cmd->add_option("--at", slice_at,
                          "fixed x (time slice) or fixed t (space slice)");
    slice_cmd->add_option("--range", slice_range, "min:max:n along the slice");

    // --- lattice ---
    CommonArgs lattice_args;
    std::string window_spec = "-10:10,-10:10";
    CLI::App* lattice_cmd =
        app.add_subcommand("lattice", "zeros and poles in a window");
    add_common(lattice_cmd, lattice_args);
    lattice_cmd->add_option("--window", window_spec,
                            "remin:remax,immin:immax (open rectangle)");

    // --- classify ---
    CommonArgs classify_args;
    CLI::App* classify_cmd = app.add_subcommand("classify", "regime report");
    add_common(classify_cmd, classify_args, false);

    // --- verify ---
    CommonArgs verify_args;
    std::string verify_grid_spec = "0.5:2:50,-3:3:50";
    std::string verify_pressure = "inv_v";
    std::string verify_field = "closed";
    double verify_h = 1e-4;
    double verify_tol = 1e-12;
    CLI::App* verify_cmd =
        app.add_subcommand("verify", "finite-difference PDE residual suite");
    verify_cmd->set_help_flag("--help", "print help");  // frees --h
    add_common(verify_cmd, verify_args);
    verify_cmd->add_option("--grid", verify_grid_spec,
                           "tmin:tmax:nt,xmin:xmax:nx");
    verify_cmd->add_option("--h", verify_h, "finite-difference step");
    verify_cmd->add_option("--pressure", verify_pressure,
                           "built-in name or rational spec in v");
    verify_cmd->add_option("--field", verify_field,
                           "closed (closed form) or ode (continued field)")
        ->check(CLI::IsMember({"closed", "ode"}));
    verify_cmd->add_option("--tol", verify_tol,
                           "integrator rel tolerance for --field ode");

    // --- integrate ---
    std::string int_pressure = "inv_v";
    std::string int_C = "0,0";
    std::string int_C_int = "0,0";
    std::string int_v_start;
    std::string int_path_spec;
    std::string int_out;
    double int_tol = 1e-10;
    CLI::App* int_cmd =
        app.add_subcommand("integrate", "integrate the reduced complex ODE");
    int_cmd->add_option("--pressure", int_pressure,
                        "built-in name or rational spec in v");
    int_cmd->add_option("--C", int_C,
                        "closed-form shift used when --v-start is omitted");
    int_cmd->add_option("--C-int", int_C_int, "first-integral constant");
    int_cmd->add_option("--v-start", int_v_start,
                        "'re,im'; default: closed form at the first waypoint");
    int_cmd->add_option("--path", int_path_spec, "waypoints 're,im;re,im;...'")
        ->required();
    int_cmd->add_option("--tol", int_tol, "relative tolerance");
    int_cmd->add_option("--out", int_out, "output path (default stdout)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? 0 : kExitBadArgs;
    }

    try {
        if (*eval_cmd) {
            const auto samples = time_slice(eval_args.params(), eval_x, {eval_t});
            emit(eval_args.out,
                 samples_payload(samples, {eval_args.params(), std::nullopt},
                                 eval_args.format));
        } else if (*sample_cmd) {
            const GridSpec grid = parse_grid(sample_grid_spec);
            emit(sample_args.out,
                 samples_payload(sample_grid(sample_args.params(), grid),
                                 {sample_args.params(), grid},
                                 sample_args.format));
        } else if (*slice_cmd) {
            const Range r = parse_range(slice_range);
            const SolutionParams params = slice_args.params();
            const auto samples =
                slice_axis == "time"
                    ? time_slice(params, slice_at, r.values())
                    : space_slice(params, slice_at, r.values());
            emit(slice_args.out,
                 samples_payload(samples, {params, std::nullopt},
                                 slice_args.format));
        } else if (*lattice_cmd) {
            const Window w = parse_window(window_spec);
            const auto pts = enumerate_lattice(lattice_args.params(), w);
            std::ostringstream os;
            if (lattice_args.format == "json") {
                ordered_json j;
                ordered_json arr = ordered_json::array();
                for (const LatticePoint& p : pts)
                    arr.push_back({{"re", p.location.real()},
                                   {"im", p.location.imag()},
                                   {"k", p.index},
                                   {"kind", p.kind == LatticeKind::Zero
                                                ? "zero"
                                                : "pole"}});
                j["points"] = std::move(arr);
                os << j.dump(2) << '\n';
            } else {
                os << "re,im,k,kind\n";
                for (const LatticePoint& p : pts)
                    os << fmt(p.location.real()) << ',' << fmt(p.location.imag())
                       << ',' << p.index << ','
                       << (p.kind == LatticeKind::Zero ? "zero" : "pole")
                       << '\n';
            }
            emit(lattice_args.out, os.str());
        } else if (*classify_cmd) {
            const SolutionParams params = classify_args.params();
            const Regime r = classify_regime(params);
            ordered_json j;
            j["params"] = {{"C", {params.C.real(), params.C.imag()}},
                           {"C2", {params.C2.real(), params.C2.imag()}}};
            j["regime"] = to_string(r.tag);
            if (r.first_blowup_time) j["first_blowup_time"] = *r.first_blowup_time;
            emit(classify_args.out, j.dump(2) + "\n");
        } else if (*verify_cmd) {
            const GridSpec grid = parse_grid(verify_grid_spec);
            const SolutionParams params = verify_args.params();
            const PressureLaw law = resolve_pressure_law(verify_pressure);
            VerifyResult result;
            if (verify_field == "ode") {
                const Complex anchor =
                    eval_v(Complex(grid.x_min, grid.t_min), params).value;
                const GridField field(law, 0.0, params.C2, grid, anchor,
                                      verify_tol);
                const ScalarField v = [&](double t, double x) {
                    return EvalResult{field.v_at(t, x), PointStatus::Regular};
                };
                const ScalarField u = [&](double t, double x) {
                    return EvalResult{field.u_at(t, x), PointStatus::Regular};
                };
                result = verify_grid_fields(v, u, law, grid, verify_h);
            } else {
                result = verify_grid(params, law, grid, verify_h);
            }
            std::ostringstream os;
            if (verify_args.format == "json")
                export_json({params, grid}, result, os);
            else
                export_csv(result.reports, os);
            emit(verify_args.out, os.str());
        } else if (*int_cmd) {
            OdeProblem prob;
            prob.law = resolve_pressure_law(int_pressure);
            prob.C_int = parse_complex(int_C_int);
            prob.path = parse_path(int_path_spec);
            prob.v_start =
                int_v_start.empty()
                    ? eval_v(prob.path.front(),
                             {parse_complex(int_C), Complex(0, 0)})
                          .value
                    : parse_complex(int_v_start);
            const Trajectory t =
                integrate_path(prob, int_tol, std::max(1e-14, int_tol * 1e-2));
            std::ostringstream os;
            os << "z_re,z_im,v_re,v_im\n";
            for (const TrajectoryNode& n : t.nodes)
                os << fmt(n.z.real()) << ',' << fmt(n.z.imag()) << ','
                   << fmt(n.v.real()) << ',' << fmt(n.v.imag()) << '\n';
            emit(int_out, os.str());
            if (t.stop != StopReason::Completed) {
                const char* why =
                    t.stop == StopReason::PoleEncounter  ? "pole encounter"
                    : t.stop == StopReason::StepUnderflow ? "step underflow"
                                                          : "singular pressure";
                std::cerr << "integration aborted: " << why << "\n";
                return kExitRuntime;
            }
        }
    } catch (const CLI::ValidationError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitBadArgs;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitRuntime;
    }
    return 0;
}
