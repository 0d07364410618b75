#pragma once

#include "nslab/residual.hpp"
#include "nslab/types.hpp"

#include <iosfwd>

namespace nslab {

struct FieldSample {
    double t, x;
    Complex v, u;
    PointStatus status;
};

/// Closed-form v, u at z = x + i t for every node, row-major in (t, x).
/// Pole nodes carry status Pole; their values are not meaningful.
std::vector<FieldSample> sample_grid(const SolutionParams& params,
                                     const GridSpec& grid,
                                     const EvalOptions& opt = {});

/// Samples along the vertical line z = x + i t over the given t values.
std::vector<FieldSample> time_slice(const SolutionParams& params, double x,
                                    const std::vector<double>& t_values,
                                    const EvalOptions& opt = {});

/// Samples along the horizontal line at fixed t over the given x values.
std::vector<FieldSample> space_slice(const SolutionParams& params, double t,
                                     const std::vector<double>& x_values,
                                     const EvalOptions& opt = {});

// CSV: header t,x,v_re,v_im,u_re,u_im,status; 17 significant digits;
// pole rows leave the value fields empty.  Byte-deterministic.
void export_csv(const std::vector<FieldSample>& samples, std::ostream& out);
void export_csv(const std::vector<ResidualReport>& reports, std::ostream& out);

struct RunMetadata {
    SolutionParams params;
    std::optional<GridSpec> grid;
};

void export_json(const RunMetadata& meta,
                 const std::vector<FieldSample>& samples, std::ostream& out);
void export_json(const RunMetadata& meta, const VerifyResult& result,
                 std::ostream& out);

/// Inverse of export_csv for samples (used by round-trip checks).
std::vector<FieldSample> parse_csv_samples(std::istream& in);

}  // namespace nslab
