#include "nslab/sampling.hpp"

#include "nslab/closed_form.hpp"

#include <json.hpp>

#include <cstdio>
#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace nslab {

namespace {

std::string fmt(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

FieldSample sample_at(double t, double x, const SolutionParams& params,
                      const EvalOptions& opt) {
    const Complex z(x, t);
    const EvalResult v = eval_v(z, params, opt);
    const EvalResult u = eval_u(z, params, opt);
    return {t, x, v.value, u.value, v.status};
}

PointStatus status_from_string(const std::string& s) {
    if (s == "regular") return PointStatus::Regular;
    if (s == "near_pole") return PointStatus::NearPole;
    if (s == "pole") return PointStatus::Pole;
    if (s == "near_volume_zero") return PointStatus::NearVolumeZero;
    throw std::invalid_argument("unknown status: " + s);
}

}  // namespace

std::vector<FieldSample> sample_grid(const SolutionParams& params,
                                     const GridSpec& grid,
                                     const EvalOptions& opt) {
    if (!grid.valid()) throw std::invalid_argument("sample_grid: invalid grid");
    std::vector<FieldSample> out;
    out.reserve((size_t)grid.nt * grid.nx);
    for (int i = 0; i < grid.nt; ++i)
        for (int j = 0; j < grid.nx; ++j)
            out.push_back(sample_at(grid.t_at(i), grid.x_at(j), params, opt));
    return out;
}

std::vector<FieldSample> time_slice(const SolutionParams& params, double x,
                                    const std::vector<double>& t_values,
                                    const EvalOptions& opt) {
    std::vector<FieldSample> out;
    out.reserve(t_values.size());
    for (double t : t_values) out.push_back(sample_at(t, x, params, opt));
    return out;
}

std::vector<FieldSample> space_slice(const SolutionParams& params, double t,
                                     const std::vector<double>& x_values,
                                     const EvalOptions& opt) {
    std::vector<FieldSample> out;
    out.reserve(x_values.size());
    for (double x : x_values) out.push_back(sample_at(t, x, params, opt));
    return out;
}

void export_csv(const std::vector<FieldSample>& samples, std::ostream& out) {
    out << "t,x,v_re,v_im,u_re,u_im,status\n";
    for (const FieldSample& s : samples) {
        out << fmt(s.t) << ',' << fmt(s.x) << ',';
        if (s.status == PointStatus::Pole) {
            out << ",,,";
        } else {
            out << fmt(s.v.real()) << ',' << fmt(s.v.imag()) << ','
                << fmt(s.u.real()) << ',' << fmt(s.u.imag());
        }
        out << ',' << to_string(s.status) << '\n';
    }
}

void export_csv(const std::vector<ResidualReport>& reports, std::ostream& out) {
    out << "t,x,h,r_cr,r_mass,r_momentum,status\n";
    for (const ResidualReport& r : reports) {
        out << fmt(r.t) << ',' << fmt(r.x) << ',' << fmt(r.h) << ','
            << fmt(r.r_cr) << ',' << fmt(r.r_mass) << ',' << fmt(r.r_momentum)
            << ',' << to_string(r.status) << '\n';
    }
}

namespace {

using ordered_json = nlohmann::ordered_json;

ordered_json meta_json(const RunMetadata& meta) {
    ordered_json j;
    j["params"] = {{"C", {meta.params.C.real(), meta.params.C.imag()}},
                   {"C2", {meta.params.C2.real(), meta.params.C2.imag()}}};
    j["regime"] = to_string(classify_regime(meta.params).tag);
    if (meta.grid) {
        j["grid"] = {{"t_min", meta.grid->t_min}, {"t_max", meta.grid->t_max},
                     {"x_min", meta.grid->x_min}, {"x_max", meta.grid->x_max},
                     {"nt", meta.grid->nt},       {"nx", meta.grid->nx}};
    }
    return j;
}

}  // namespace

void export_json(const RunMetadata& meta,
                 const std::vector<FieldSample>& samples, std::ostream& out) {
    ordered_json j = meta_json(meta);
    ordered_json arr = ordered_json::array();
    long poles = 0;
    for (const FieldSample& s : samples) {
        ordered_json e;
        e["t"] = s.t;
        e["x"] = s.x;
        if (s.status == PointStatus::Pole) {
            e["v"] = nullptr;
            e["u"] = nullptr;
            poles++;
        } else {
            e["v"] = {s.v.real(), s.v.imag()};
            e["u"] = {s.u.real(), s.u.imag()};
        }
        e["status"] = to_string(s.status);
        arr.push_back(std::move(e));
    }
    j["samples"] = std::move(arr);
    j["summary"] = {{"count", samples.size()}, {"poles", poles}};
    out << j.dump(2) << '\n';
}

void export_json(const RunMetadata& meta, const VerifyResult& result,
                 std::ostream& out) {
    ordered_json j = meta_json(meta);
    ordered_json arr = ordered_json::array();
    for (const ResidualReport& r : result.reports) {
        ordered_json e;
        e["t"] = r.t;
        e["x"] = r.x;
        e["h"] = r.h;
        e["r_cr"] = r.r_cr;
        e["r_mass"] = r.r_mass;
        e["r_momentum"] = r.r_momentum;
        e["status"] = to_string(r.status);
        arr.push_back(std::move(e));
    }
    j["samples"] = std::move(arr);
    j["summary"] = {{"max_cr", result.summary.max_cr},
                    {"max_mass", result.summary.max_mass},
                    {"max_momentum", result.summary.max_momentum},
                    {"pole_skipped", result.summary.pole_skipped},
                    {"failed_skipped", result.summary.failed_skipped}};
    out << j.dump(2) << '\n';
}

std::vector<FieldSample> parse_csv_samples(std::istream& in) {
    std::vector<FieldSample> out;
    std::string line;
    if (!std::getline(in, line) || line != "t,x,v_re,v_im,u_re,u_im,status")
        throw std::invalid_argument("parse_csv_samples: bad header");
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        std::vector<std::string> cells;
        std::stringstream ss(line);
        std::string cell;
        while (std::getline(ss, cell, ',')) cells.push_back(cell);
        while (cells.size() < 7) cells.emplace_back();
        FieldSample s{};
        s.t = std::stod(cells[0]);
        s.x = std::stod(cells[1]);
        s.status = status_from_string(cells[6]);
        if (s.status == PointStatus::Pole) {
            const double nan = std::numeric_limits<double>::quiet_NaN();
            s.v = {nan, nan};
            s.u = {nan, nan};
        } else {
            s.v = {std::stod(cells[2]), std::stod(cells[3])};
            s.u = {std::stod(cells[4]), std::stod(cells[5])};
        }
        out.push_back(s);
    }
    return out;
}

}  // namespace nslab
