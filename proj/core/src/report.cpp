#include "gembench/report.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <istream>
#include <ostream>
#include <set>

#include <fmt/format.h>

#include "gembench/error.hpp"

namespace gembench {
namespace {

std::vector<std::string> split_csv_line(const std::string& line) {
  std::vector<std::string> fields;
  std::string cur;
  bool quoted = false;
  for (std::size_t i = 0; i < line.size(); ++i) {
    const char c = line[i];
    if (quoted) {
      if (c == '"' && i + 1 < line.size() && line[i + 1] == '"') {
        cur += '"';
        ++i;
      } else if (c == '"') {
        quoted = false;
      } else {
        cur += c;
      }
    } else if (c == '"') {
      quoted = true;
    } else if (c == ',') {
      fields.push_back(std::move(cur));
      cur.clear();
    } else {
      cur += c;
    }
  }
  fields.push_back(std::move(cur));
  return fields;
}

template <typename T>
T parse_number(const std::string& text, std::size_t line) {
  T value{};
  const auto* end = text.data() + text.size();
  const auto res = std::from_chars(text.data(), end, value);
  if (res.ec != std::errc() || res.ptr != end) throw ParseError("bad number '" + text + "'", line);
  return value;
}

MeanStd mean_std(const std::vector<double>& xs) {
  MeanStd out;
  if (xs.empty()) return out;
  for (double x : xs) out.mean += x;
  out.mean /= static_cast<double>(xs.size());
  double var = 0.0;
  for (double x : xs) var += (x - out.mean) * (x - out.mean);
  // Sample standard deviation; a single value has spread 0.
  if (xs.size() > 1) out.stddev = std::sqrt(var / static_cast<double>(xs.size() - 1));
  return out;
}

std::vector<eval::MetricValue> metric_values(const RunRecord& r) {
  return {{r.graph, r.method, r.dimension, r.trial_seed, eval::Metric::map, r.map},
          {r.graph, r.method, r.dimension, r.trial_seed, eval::Metric::p_at_k, r.p_at_k}};
}

std::vector<eval::BaselineValue> baseline_values(const RunRecord& r) {
  return {{r.graph, r.trial_seed, eval::Metric::map, r.random_map},
          {r.graph, r.trial_seed, eval::Metric::p_at_k, r.random_p_at_k}};
}

std::size_t nearest_bin(double x, const std::vector<double>& bins) {
  std::size_t best = 0;
  for (std::size_t i = 1; i < bins.size(); ++i) {
    if (std::abs(x - bins[i]) < std::abs(x - bins[best])) best = i;
  }
  return best;
}

std::string bin_label(double v) { return fmt::format("{}", v); }

}  // namespace

const std::vector<std::string>& results_columns() {
  static const std::vector<std::string> columns{
      "graph",       "domain",   "n",           "m",        "density",      "avg_degree",    "method",
      "dimension",   "trial",    "trial_seed",  "task_seed", "hide_fraction", "hidden_edges", "candidates",
      "map_mode",    "map",      "random_map",  "map_alt",  "p_at_k",       "k",             "random_p_at_k",
      "params"};
  return columns;
}

std::string csv_field(const std::string& value) {
  if (value.find_first_of(",\"\n") == std::string::npos) return value;
  std::string out = "\"";
  for (char c : value) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

void write_results_csv(const std::vector<RunRecord>& records, std::ostream& out) {
  const auto& cols = results_columns();
  for (std::size_t i = 0; i < cols.size(); ++i) out << (i ? "," : "") << cols[i];
  out << '\n';
  for (const auto& r : records) {
    out << fmt::format("{},{},{},{},{},{},{},{},{},{},{},{},{},{},{},{},{},{},{},{},{},{}\n", csv_field(r.graph),
                       csv_field(r.domain), r.n, r.m, r.density, r.avg_degree, csv_field(r.method), r.dimension,
                       r.trial, r.trial_seed, r.task_seed, r.hide_fraction, r.hidden_edges, r.candidates, r.map_mode,
                       r.map, r.random_map, r.map_alt, r.p_at_k, r.k, r.random_p_at_k, csv_field(r.params));
  }
}

std::vector<RunRecord> read_results_csv(std::istream& in) {
  std::string line;
  if (!std::getline(in, line)) throw ParseError("results table is empty", 1);
  if (split_csv_line(line) != results_columns()) throw ParseError("unexpected results header", 1);
  std::vector<RunRecord> records;
  std::size_t line_no = 1;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.empty()) continue;
    const auto f = split_csv_line(line);
    if (f.size() != results_columns().size()) throw ParseError("wrong field count", line_no);
    RunRecord r;
    std::size_t i = 0;
    r.graph = f[i++];
    r.domain = f[i++];
    r.n = parse_number<std::size_t>(f[i++], line_no);
    r.m = parse_number<std::size_t>(f[i++], line_no);
    r.density = parse_number<double>(f[i++], line_no);
    r.avg_degree = parse_number<double>(f[i++], line_no);
    r.method = f[i++];
    r.dimension = parse_number<std::size_t>(f[i++], line_no);
    r.trial = parse_number<std::size_t>(f[i++], line_no);
    r.trial_seed = parse_number<std::uint64_t>(f[i++], line_no);
    r.task_seed = parse_number<std::uint64_t>(f[i++], line_no);
    r.hide_fraction = parse_number<double>(f[i++], line_no);
    r.hidden_edges = parse_number<std::size_t>(f[i++], line_no);
    r.candidates = parse_number<std::size_t>(f[i++], line_no);
    r.map_mode = f[i++];
    r.map = parse_number<double>(f[i++], line_no);
    r.random_map = parse_number<double>(f[i++], line_no);
    r.map_alt = parse_number<double>(f[i++], line_no);
    r.p_at_k = parse_number<double>(f[i++], line_no);
    r.k = parse_number<std::size_t>(f[i++], line_no);
    r.random_p_at_k = parse_number<double>(f[i++], line_no);
    r.params = f[i++];
    records.push_back(std::move(r));
  }
  return records;
}

std::vector<RunRecord> read_results_csv(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open " + path.string());
  return read_results_csv(in);
}

void write_failures_csv(const std::vector<TaskFailure>& failures, std::ostream& out) {
  out << "graph,method,dimension,trial,error\n";
  for (const auto& f : failures) {
    out << fmt::format("{},{},{},{},{}\n", csv_field(f.graph), csv_field(f.method), f.dimension, f.trial,
                       csv_field(f.error));
  }
}

std::vector<TaskFailure> read_failures_csv(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open " + path.string());
  std::string line;
  std::getline(in, line);
  std::vector<TaskFailure> out;
  std::size_t line_no = 1;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.empty()) continue;
    const auto f = split_csv_line(line);
    if (f.size() != 5) throw ParseError("wrong field count in failures table", line_no);
    out.push_back({f[0], f[1], parse_number<std::size_t>(f[2], line_no), parse_number<std::size_t>(f[3], line_no), f[4]});
  }
  return out;
}

eval::GfsReport gfs_report_for_dimension(const std::vector<RunRecord>& records, std::size_t dimension) {
  std::vector<eval::MetricValue> values;
  std::vector<eval::BaselineValue> baselines;
  std::map<std::string, std::string> domains;
  for (const auto& r : records) {
    if (r.dimension != dimension) continue;
    for (auto& v : metric_values(r)) values.push_back(std::move(v));
    for (auto& b : baseline_values(r)) baselines.push_back(std::move(b));
    domains[r.graph] = r.domain;
  }
  return eval::gfs_scores(values, baselines, domains);
}

std::vector<GfsTable> build_gfs_tables(const std::vector<RunRecord>& records) {
  if (records.empty()) throw ValidationError("no records to report");
  std::vector<std::string> methods;
  std::set<std::string> domain_set;
  std::set<std::size_t> dims;
  std::set<std::size_t> trials;
  std::map<std::string, std::string> graph_domains;
  for (const auto& r : records) {
    if (std::find(methods.begin(), methods.end(), r.method) == methods.end()) methods.push_back(r.method);
    domain_set.insert(r.domain);
    dims.insert(r.dimension);
    trials.insert(r.trial);
    graph_domains[r.graph] = r.domain;
  }
  const std::vector<std::string> domains(domain_set.begin(), domain_set.end());

  std::vector<GfsTable> tables;
  for (auto dim : dims) {
    GfsTable table;
    table.dimension = dim;
    table.methods = methods;
    table.domains = domains;
    // (method, metric) -> per-trial micro / macro / per-domain values
    struct Samples {
      std::vector<double> micro, macro;
      std::map<std::string, std::vector<double>> domain;
    };
    std::map<std::pair<std::string, eval::Metric>, Samples> samples;
    for (auto t : trials) {
      std::vector<eval::MetricValue> values;
      std::vector<eval::BaselineValue> baselines;
      for (const auto& r : records) {
        if (r.dimension != dim || r.trial != t) continue;
        for (auto& v : metric_values(r)) values.push_back(std::move(v));
        for (auto& b : baseline_values(r)) baselines.push_back(std::move(b));
      }
      if (values.empty()) continue;
      for (const auto& [key, cell] : eval::gfs_scores(values, baselines, graph_domains)) {
        auto& s = samples[key];
        s.micro.push_back(cell.micro);
        s.macro.push_back(cell.macro);
        for (const auto& [d, v] : cell.per_domain) s.domain[d].push_back(v);
      }
    }
    for (const auto& [key, s] : samples) {
      GfsSummary summary;
      summary.dimension = dim;
      summary.micro = mean_std(s.micro);
      summary.macro = mean_std(s.macro);
      for (const auto& [d, v] : s.domain) summary.per_domain[d] = mean_std(v);
      table.cells[key] = summary;
    }
    tables.push_back(std::move(table));
  }

  GfsTable best;
  best.methods = methods;
  best.domains = domains;
  for (const auto& table : tables) {
    for (const auto& [key, summary] : table.cells) {
      auto it = best.cells.find(key);
      if (it == best.cells.end() || summary.micro.mean > it->second.micro.mean) best.cells[key] = summary;
    }
  }
  tables.push_back(std::move(best));
  return tables;
}

std::string gfs_report_text(const std::vector<RunRecord>& records, std::size_t failed_tasks) {
  const auto tables = build_gfs_tables(records);
  std::string text;
  text += "GFS scores: metric ratio to the random predictor, mean ± std over trials\n";
  text += fmt::format("records: {}\nexcluded failed tasks: {}\n", records.size(), failed_tasks);

  const std::size_t k = records.front().k;
  const std::vector<std::pair<eval::Metric, std::string>> metrics{{eval::Metric::map, "MAP"},
                                                                  {eval::Metric::p_at_k, fmt::format("P@{}", k)}};
  for (const auto& table : tables) {
    text += table.dimension ? fmt::format("\n== dimension {} ==\n", table.dimension)
                            : std::string("\n== best over dimensions ==\n");
    std::vector<std::string> header{"method"};
    std::vector<std::string> groups{"micro", "macro"};
    groups.insert(groups.end(), table.domains.begin(), table.domains.end());
    for (const auto& g : groups) {
      for (const auto& [metric, label] : metrics) header.push_back(g + " " + label);
    }
    if (!table.dimension) header.push_back("dimension (MAP, " + metrics[1].second + ")");

    std::vector<std::vector<std::string>> rows{header};
    for (const auto& method : table.methods) {
      std::vector<std::string> row{method};
      auto cell = [&](eval::Metric metric) -> const GfsSummary* {
        const auto it = table.cells.find({method, metric});
        return it == table.cells.end() ? nullptr : &it->second;
      };
      auto fmt_ms = [](const MeanStd& v) { return fmt::format("{:.4f} ± {:.4f}", v.mean, v.stddev); };
      for (const auto& g : groups) {
        for (const auto& [metric, label] : metrics) {
          const auto* c = cell(metric);
          if (!c) {
            row.emplace_back("-");
          } else if (g == "micro") {
            row.push_back(fmt_ms(c->micro));
          } else if (g == "macro") {
            row.push_back(fmt_ms(c->macro));
          } else {
            const auto it = c->per_domain.find(g);
            row.push_back(it == c->per_domain.end() ? "-" : fmt_ms(it->second));
          }
        }
      }
      if (!table.dimension) {
        const auto* a = cell(eval::Metric::map);
        const auto* b = cell(eval::Metric::p_at_k);
        row.push_back(fmt::format("{}, {}", a ? std::to_string(a->dimension) : "-", b ? std::to_string(b->dimension) : "-"));
      }
      rows.push_back(std::move(row));
    }
    // Column widths count code points so the ± sign aligns.
    auto width = [](const std::string& s) {
      return static_cast<std::size_t>(std::count_if(s.begin(), s.end(), [](char c) { return (c & 0xC0) != 0x80; }));
    };
    std::vector<std::size_t> widths(header.size(), 0);
    for (const auto& row : rows) {
      for (std::size_t i = 0; i < row.size(); ++i) widths[i] = std::max(widths[i], width(row[i]));
    }
    for (const auto& row : rows) {
      std::string line;
      for (std::size_t i = 0; i < row.size(); ++i) {
        if (i) line += " | ";
        line += row[i];
        if (i + 1 < row.size()) line += std::string(widths[i] - width(row[i]), ' ');
      }
      text += line + "\n";
    }
  }
  return text;
}

std::vector<PlotSeries> plot_series(const std::vector<RunRecord>& records, eval::Metric metric,
                                    const PlotOptions& options) {
  std::vector<double> size_bins(options.size_bins.begin(), options.size_bins.end());
  // (domain, panel, method) -> dimension -> values
  std::map<std::tuple<std::string, std::string, std::string>, std::map<std::size_t, std::vector<double>>> cells;
  for (const auto& r : records) {
    const double value = metric == eval::Metric::map ? r.map : r.p_at_k;
    if (!size_bins.empty() && r.avg_degree >= options.density_range[0] && r.avg_degree <= options.density_range[1]) {
      const auto b = nearest_bin(static_cast<double>(r.n), size_bins);
      cells[{r.domain, "size-" + bin_label(size_bins[b]), r.method}][r.dimension].push_back(value);
    }
    if (!options.degree_bins.empty()) {
      const auto b = nearest_bin(r.avg_degree, options.degree_bins);
      cells[{r.domain, "degree-" + bin_label(options.degree_bins[b]), r.method}][r.dimension].push_back(value);
    }
  }
  std::vector<PlotSeries> out;
  for (const auto& [key, by_dim] : cells) {
    PlotSeries s{std::get<0>(key), std::get<1>(key), std::get<2>(key), {}};
    for (const auto& [dim, values] : by_dim) {
      const auto ms = mean_std(values);
      s.rows.push_back({dim, ms.mean, ms.stddev});
    }
    out.push_back(std::move(s));
  }
  return out;
}

std::vector<std::filesystem::path> write_plot_series(const std::vector<PlotSeries>& series,
                                                     const std::filesystem::path& out_dir) {
  std::filesystem::create_directories(out_dir);
  std::vector<std::filesystem::path> written;
  for (const auto& s : series) {
    const auto path = out_dir / (s.domain + "__" + s.panel + "__" + s.method + ".csv");
    std::ofstream out(path);
    if (!out) throw IoError("cannot write " + path.string());
    out << "dimension,mean,std\n";
    for (const auto& row : s.rows) out << fmt::format("{},{},{}\n", row.dimension, row.mean, row.stddev);
    written.push_back(path);
  }
  return written;
}

}  // namespace gembench
