#pragma once

#include <array>
#include <filesystem>
#include <iosfwd>
#include <map>
#include <string>
#include <vector>

#include "gembench/evaluation.hpp"
#include "gembench/harness.hpp"

namespace gembench {

/// Column order of results.csv.
const std::vector<std::string>& results_columns();

/// Quotes a field containing a comma, quote or newline.
std::string csv_field(const std::string& value);

/// Numbers are written in shortest round-trip form, so read_results_csv(write) is exact.
void write_results_csv(const std::vector<RunRecord>& records, std::ostream& out);
std::vector<RunRecord> read_results_csv(std::istream& in);
std::vector<RunRecord> read_results_csv(const std::filesystem::path& path);

void write_failures_csv(const std::vector<TaskFailure>& failures, std::ostream& out);
std::vector<TaskFailure> read_failures_csv(const std::filesystem::path& path);

struct MeanStd {
  double mean = 0.0;
  double stddev = 0.0;  ///< sample standard deviation (n - 1), 0 for one value
};

/// GFS of one method and metric across trials.
struct GfsSummary {
  MeanStd micro;
  MeanStd macro;
  std::map<std::string, MeanStd> per_domain;
  std::size_t dimension = 0;
};

/// One Table-2-style table. dimension == 0 marks the best-over-dimension table, where each
/// summary carries the dimension it was taken from.
struct GfsTable {
  std::size_t dimension = 0;
  std::vector<std::string> methods;  ///< record order
  std::vector<std::string> domains;  ///< sorted
  std::map<std::pair<std::string, eval::Metric>, GfsSummary> cells;
};

/// One table per dimension (ascending) followed by the best-over-dimension table.
/// GFS is computed per trial index and summarized as mean and sample std.
/// Throws ValidationError on an empty record set.
std::vector<GfsTable> build_gfs_tables(const std::vector<RunRecord>& records);

/// Trial-averaged GFS report of the records at one dimension.
eval::GfsReport gfs_report_for_dimension(const std::vector<RunRecord>& records, std::size_t dimension);

std::string gfs_report_text(const std::vector<RunRecord>& records, std::size_t failed_tasks);

struct PlotOptions {
  std::vector<std::size_t> size_bins{256, 512, 1024};
  std::vector<double> degree_bins{3.0, 4.0, 5.0};
  std::array<double, 2> density_range{3.0, 5.0};
};

struct PlotRow {
  std::size_t dimension = 0;
  double mean = 0.0;
  double stddev = 0.0;
};

/// One line of a figure panel: panel is "size-<bin>" or "degree-<bin>".
struct PlotSeries {
  std::string domain;
  std::string panel;
  std::string method;
  std::vector<PlotRow> rows;  ///< ascending dimension
};

/// Size panels keep graphs whose average degree lies in density_range, binned by the
/// nearest size; degree panels pool all sizes, binned by the nearest degree.
std::vector<PlotSeries> plot_series(const std::vector<RunRecord>& records, eval::Metric metric,
                                    const PlotOptions& options);

/// Writes out_dir/<domain>__<panel>__<method>.csv with header dimension,mean,std. Returns
/// the files written.
std::vector<std::filesystem::path> write_plot_series(const std::vector<PlotSeries>& series,
                                                     const std::filesystem::path& out_dir);

}  // namespace gembench
