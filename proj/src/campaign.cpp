#include "ppsm2m/campaign.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <map>
#include <mutex>
#include <set>
#include <sstream>
#include <stdexcept>
#include <thread>

#include "ppsm2m/metrics.hpp"
#include "ppsm2m/problems.hpp"
#include "ppsm2m/record_io.hpp"
#include "ppsm2m/stats.hpp"
#include "ppsm2m/text_io.hpp"

namespace ppsm2m {

namespace {

constexpr std::string_view kRecordMagic = "# ppsm2m-run-record";
constexpr std::string_view kSummaryMagic = "# ppsm2m-summary";

[[noreturn]] void fail_at(const std::string& source, std::size_t line, const std::string& message) {
    throw std::runtime_error(source + ":" + std::to_string(line) + ": " + message);
}

std::vector<std::string> split_list(std::string_view value) {
    std::string s(value);
    std::replace(s.begin(), s.end(), ',', ' ');
    std::vector<std::string> out;
    for (auto tok : split_tokens(s)) out.emplace_back(tok);
    return out;
}

double to_double(const KeyValueFile::Entry& e, const std::string& source) {
    try {
        return parse_double(e.value);
    } catch (const std::exception&) {
        fail_at(source, e.line, "key '" + e.key + "' needs a number, got '" + e.value + "'");
    }
}

std::size_t to_size(const KeyValueFile::Entry& e, const std::string& source) {
    try {
        return static_cast<std::size_t>(parse_unsigned(e.value));
    } catch (const std::exception&) {
        fail_at(source, e.line, "key '" + e.key + "' needs a non-negative integer, got '" + e.value + "'");
    }
}

bool to_bool(const KeyValueFile::Entry& e, const std::string& source) {
    if (e.value == "1" || e.value == "true") return true;
    if (e.value == "0" || e.value == "false") return false;
    fail_at(source, e.line, "key '" + e.key + "' needs 0/1/true/false, got '" + e.value + "'");
}

std::string join(const std::vector<std::string>& parts) {
    std::string out;
    for (std::size_t i = 0; i < parts.size(); ++i) {
        if (i) out.push_back(' ');
        out.append(parts[i]);
    }
    return out;
}

}  // namespace

RunConfig CampaignConfig::run_config(const std::string& problem, Algorithm algorithm,
                                     std::size_t run_index) const {
    RunConfig rc = tunables;
    rc.problem = problem;
    rc.algorithm = algorithm;
    rc.seed = base_seed + run_index;
    return rc;
}

bool operator==(const CampaignConfig& a, const CampaignConfig& b) {
    const RunConfig& x = a.tunables;
    const RunConfig& y = b.tunables;
    return a.problems == b.problems && a.algorithms == b.algorithms && a.runs == b.runs &&
           a.base_seed == b.base_seed && a.out_dir == b.out_dir &&
           x.population == y.population && x.subregions == y.subregions &&
           x.max_generations == y.max_generations && x.eps_dominance == y.eps_dominance &&
           x.tau == y.tau && x.alpha == y.alpha && x.cp == y.cp && x.tc == y.tc &&
           x.tc_from_switch == y.tc_from_switch && x.theta_fraction == y.theta_fraction &&
           x.seed_eps_from_quantile == y.seed_eps_from_quantile && x.window == y.window &&
           x.switch_threshold == y.switch_threshold && x.bounds_delta == y.bounds_delta &&
           x.operators.eta_crossover == y.operators.eta_crossover &&
           x.operators.eta_mutation == y.operators.eta_mutation &&
           x.operators.p_crossover == y.operators.p_crossover &&
           x.operators.p_mutation == y.operators.p_mutation;
}

CampaignConfig parse_campaign_config(std::istream& in, const std::string& source_name) {
    KeyValueFile kv = parse_key_values(in, source_name);
    CampaignConfig c;
    bool saw_problems = false;
    bool saw_algorithms = false;
    for (const KeyValueFile::Entry& e : kv.entries) {
        RunConfig& t = c.tunables;
        if (e.key == "problems") {
            c.problems = split_list(e.value);
            saw_problems = true;
        } else if (e.key == "algorithms") {
            for (const std::string& name : split_list(e.value)) {
                try {
                    c.algorithms.push_back(parse_algorithm(name));
                } catch (const std::exception& ex) {
                    fail_at(source_name, e.line, ex.what());
                }
            }
            saw_algorithms = true;
        } else if (e.key == "runs") {
            c.runs = to_size(e, source_name);
        } else if (e.key == "base_seed") {
            c.base_seed = to_size(e, source_name);
        } else if (e.key == "out_dir") {
            c.out_dir = e.value;
        } else if (e.key == "population") {
            t.population = to_size(e, source_name);
        } else if (e.key == "subregions") {
            t.subregions = to_size(e, source_name);
        } else if (e.key == "max_generations") {
            t.max_generations = to_size(e, source_name);
        } else if (e.key == "eps_dominance") {
            t.eps_dominance = to_double(e, source_name);
        } else if (e.key == "tau") {
            t.tau = to_double(e, source_name);
        } else if (e.key == "alpha") {
            t.alpha = to_double(e, source_name);
        } else if (e.key == "cp") {
            t.cp = to_double(e, source_name);
        } else if (e.key == "tc") {
            t.tc = to_size(e, source_name);
        } else if (e.key == "tc_from_switch") {
            t.tc_from_switch = to_bool(e, source_name);
        } else if (e.key == "theta_fraction") {
            t.theta_fraction = to_double(e, source_name);
        } else if (e.key == "seed_eps_from_quantile") {
            t.seed_eps_from_quantile = to_bool(e, source_name);
        } else if (e.key == "window") {
            t.window = to_size(e, source_name);
        } else if (e.key == "switch_threshold") {
            t.switch_threshold = to_double(e, source_name);
        } else if (e.key == "bounds_delta") {
            t.bounds_delta = to_double(e, source_name);
        } else if (e.key == "eta_crossover") {
            t.operators.eta_crossover = to_double(e, source_name);
        } else if (e.key == "eta_mutation") {
            t.operators.eta_mutation = to_double(e, source_name);
        } else if (e.key == "p_crossover") {
            t.operators.p_crossover = to_double(e, source_name);
        } else if (e.key == "p_mutation") {
            t.operators.p_mutation = to_double(e, source_name);
        } else {
            fail_at(source_name, e.line, "unknown key '" + e.key + "'");
        }
    }
    if (!saw_problems || c.problems.empty())
        throw std::runtime_error(source_name + ": campaign needs a non-empty 'problems' list");
    if (!saw_algorithms || c.algorithms.empty())
        throw std::runtime_error(source_name + ": campaign needs a non-empty 'algorithms' list");
    if (c.runs == 0) throw std::runtime_error(source_name + ": 'runs' must be at least 1");
    return c;
}

CampaignConfig load_campaign_config(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open campaign config: " + path.string());
    return parse_campaign_config(in, path.filename().string());
}

std::string serialize_campaign_config(const CampaignConfig& c) {
    const RunConfig& t = c.tunables;
    std::string out;
    auto kv = [&out](std::string_view key, std::string_view value) {
        out.append(key);
        out.append(" = ");
        out.append(value);
        out.push_back('\n');
    };
    kv("problems", join(c.problems));
    std::vector<std::string> algos;
    for (Algorithm a : c.algorithms) algos.push_back(algorithm_name(a));
    kv("algorithms", join(algos));
    kv("runs", std::to_string(c.runs));
    kv("base_seed", std::to_string(c.base_seed));
    if (!c.out_dir.empty()) kv("out_dir", c.out_dir);
    kv("population", std::to_string(t.population));
    kv("subregions", std::to_string(t.subregions));
    kv("max_generations", std::to_string(t.max_generations));
    kv("eps_dominance", format_double(t.eps_dominance));
    kv("tau", format_double(t.tau));
    kv("alpha", format_double(t.alpha));
    kv("cp", format_double(t.cp));
    kv("tc", std::to_string(t.tc));
    kv("tc_from_switch", t.tc_from_switch ? "1" : "0");
    kv("theta_fraction", format_double(t.theta_fraction));
    kv("seed_eps_from_quantile", t.seed_eps_from_quantile ? "1" : "0");
    kv("window", std::to_string(t.window));
    kv("switch_threshold", format_double(t.switch_threshold));
    kv("bounds_delta", format_double(t.bounds_delta));
    kv("eta_crossover", format_double(t.operators.eta_crossover));
    kv("eta_mutation", format_double(t.operators.eta_mutation));
    kv("p_crossover", format_double(t.operators.p_crossover));
    kv("p_mutation", format_double(t.operators.p_mutation));
    return out;
}

std::filesystem::path resolve_out_dir(const CampaignConfig& config, const std::string& cli_out) {
    if (!cli_out.empty()) return cli_out;
    if (!config.out_dir.empty()) return config.out_dir;
    if (const char* env = std::getenv("PPSM2M_OUT_ROOT"); env && *env) return env;
    return ".";
}

std::string record_filename(const std::string& problem, Algorithm algorithm, std::uint64_t seed) {
    return problem + "_" + algorithm_name(algorithm) + "_seed" + std::to_string(seed) + ".run";
}

std::vector<std::filesystem::path> cmd_run(const CampaignConfig& config,
                                           const std::filesystem::path& out_dir,
                                           std::size_t workers) {
    struct Job {
        RunConfig rc;
        std::filesystem::path path;
    };
    std::vector<Job> jobs;
    for (const std::string& name : config.problems) {
        const Problem& problem = find_problem(name);
        for (Algorithm a : config.algorithms) {
            for (std::size_t i = 0; i < config.runs; ++i) {
                RunConfig rc = config.run_config(name, a, i);
                rc.validate(problem.num_objectives);
                jobs.push_back({std::move(rc), out_dir / record_filename(name, a, rc.seed)});
            }
        }
    }
    std::filesystem::create_directories(out_dir);

    std::atomic<std::size_t> next{0};
    std::atomic<bool> stop{false};
    std::mutex error_mutex;
    std::exception_ptr first_error;
    auto work = [&] {
        while (!stop.load(std::memory_order_relaxed)) {
            std::size_t i = next.fetch_add(1);
            if (i >= jobs.size()) return;
            try {
                RunRecord rec = run_algorithm(jobs[i].rc);
                write_file_atomic(jobs[i].path, serialize_run_record(rec));
            } catch (...) {
                std::lock_guard<std::mutex> lock(error_mutex);
                if (!first_error) first_error = std::current_exception();
                stop.store(true, std::memory_order_relaxed);
            }
        }
    };

    std::size_t n = std::clamp<std::size_t>(workers, 1, std::max<std::size_t>(jobs.size(), 1));
    if (n <= 1) {
        work();
    } else {
        std::vector<std::thread> pool;
        pool.reserve(n);
        for (std::size_t i = 0; i < n; ++i) pool.emplace_back(work);
        for (std::thread& th : pool) th.join();
    }
    if (first_error) std::rethrow_exception(first_error);

    std::vector<std::filesystem::path> paths;
    paths.reserve(jobs.size());
    for (const Job& j : jobs) paths.push_back(j.path);
    return paths;
}

namespace {

struct CellStats {
    std::size_t runs = 0;
    std::vector<double> igd_values;
    std::vector<double> hv_values;
};

void mean_std(const std::vector<double>& v, double& mean, double& sd) {
    mean = 0.0;
    sd = 0.0;
    if (v.empty()) return;
    for (double x : v) mean += x;
    mean /= static_cast<double>(v.size());
    if (v.size() < 2) return;
    double acc = 0.0;
    for (double x : v) acc += (x - mean) * (x - mean);
    sd = std::sqrt(acc / static_cast<double>(v.size() - 1));
}

std::string metric_cell(bool available, double value) {
    return available ? format_double(value) : std::string("na");
}

// Best reference resolution the problem can provide: genuinely sparse
// fronts (disconnected arcs, isolated points) ship fewer than 1000
// points and are served whole.
std::vector<Vec> reference_points(const Problem& problem) {
    for (std::size_t density : {std::size_t{1000}, std::size_t{100}}) {
        try {
            return pf_reference_set(problem, density).points;
        } catch (const std::exception&) {
        }
    }
    return {};
}

}  // namespace

Summary summarize_records(const std::vector<RunRecord>& records) {
    if (records.empty()) throw std::runtime_error("no run records to summarize");

    std::set<std::string> problem_set;
    std::vector<std::string> algorithms;
    for (const RunRecord& r : records) problem_set.insert(r.config.problem);
    for (Algorithm a : {Algorithm::PpsM2m, Algorithm::Nsga2Cdp, Algorithm::M2mCdp}) {
        for (const RunRecord& r : records)
            if (r.config.algorithm == a) {
                algorithms.push_back(algorithm_name(a));
                break;
            }
    }

    // Per-problem reference data; a failed load marks the whole column na.
    std::map<std::string, std::pair<std::vector<Vec>, Vec>> reference;
    for (const std::string& name : problem_set) {
        try {
            std::vector<Vec> points = reference_points(find_problem(name));
            if (points.empty()) continue;
            Vec ref_point = hv_reference_point(points);
            reference.emplace(name, std::make_pair(std::move(points), std::move(ref_point)));
        } catch (const std::exception&) {
        }
    }

    std::map<std::pair<std::string, std::string>, CellStats> cells;
    for (const RunRecord& r : records) {
        CellStats& cell = cells[{r.config.problem, algorithm_name(r.config.algorithm)}];
        ++cell.runs;
        auto ref = reference.find(r.config.problem);
        if (ref == reference.end() || r.final_front.empty()) continue;
        std::vector<Vec> attained;
        attained.reserve(r.final_front.size());
        for (const Individual& ind : r.final_front) attained.push_back(ind.f);
        cell.igd_values.push_back(igd(attained, ref->second.first));
        cell.hv_values.push_back(hv(attained, ref->second.second));
    }

    Summary summary;
    summary.problems.assign(problem_set.begin(), problem_set.end());
    summary.algorithms = algorithms;
    for (const std::string& problem : summary.problems) {
        for (const std::string& algorithm : summary.algorithms) {
            auto it = cells.find({problem, algorithm});
            if (it == cells.end()) continue;
            SummaryRow row;
            row.problem = problem;
            row.algorithm = algorithm;
            row.runs = it->second.runs;
            row.has_metrics = !it->second.igd_values.empty();
            if (row.has_metrics) {
                mean_std(it->second.igd_values, row.igd_mean, row.igd_std);
                mean_std(it->second.hv_values, row.hv_mean, row.hv_std);
            }
            summary.rows.push_back(std::move(row));
        }
    }

    // Friedman ranks need a complete matrix over >= 2 problems and
    // >= 2 algorithms.
    bool complete = summary.problems.size() >= 2 && summary.algorithms.size() >= 2 &&
                    summary.rows.size() == summary.problems.size() * summary.algorithms.size();
    for (const SummaryRow& row : summary.rows) complete = complete && row.has_metrics;
    if (complete) {
        std::vector<std::vector<double>> igd_matrix;
        std::vector<std::vector<double>> hv_matrix;
        std::size_t a_count = summary.algorithms.size();
        for (std::size_t p = 0; p < summary.problems.size(); ++p) {
            std::vector<double> igd_row;
            std::vector<double> hv_row;
            for (std::size_t a = 0; a < a_count; ++a) {
                const SummaryRow& row = summary.rows[p * a_count + a];
                igd_row.push_back(row.igd_mean);
                hv_row.push_back(row.hv_mean);
            }
            igd_matrix.push_back(std::move(igd_row));
            hv_matrix.push_back(std::move(hv_row));
        }
        summary.friedman_available = true;
        summary.igd_mean_ranks = friedman_mean_ranks(igd_matrix, true);
        summary.hv_mean_ranks = friedman_mean_ranks(hv_matrix, false);
    }
    return summary;
}

std::string serialize_summary(const Summary& summary) {
    std::string out;
    out.append(kSummaryMagic);
    out.push_back('\n');
    out.append("# problem algorithm runs igd_mean igd_std hv_mean hv_std\n");
    for (const SummaryRow& row : summary.rows) {
        out.append(row.problem);
        out.push_back(' ');
        out.append(row.algorithm);
        out.push_back(' ');
        out.append(std::to_string(row.runs));
        out.push_back(' ');
        out.append(metric_cell(row.has_metrics, row.igd_mean));
        out.push_back(' ');
        out.append(metric_cell(row.has_metrics, row.igd_std));
        out.push_back(' ');
        out.append(metric_cell(row.has_metrics, row.hv_mean));
        out.push_back(' ');
        out.append(metric_cell(row.has_metrics, row.hv_std));
        out.push_back('\n');
    }
    if (summary.friedman_available) {
        out.append("[friedman]\n");
        out.append("# metric algorithm mean_rank\n");
        for (std::size_t a = 0; a < summary.algorithms.size(); ++a) {
            out.append("igd ");
            out.append(summary.algorithms[a]);
            out.push_back(' ');
            out.append(format_double(summary.igd_mean_ranks[a]));
            out.push_back('\n');
        }
        for (std::size_t a = 0; a < summary.algorithms.size(); ++a) {
            out.append("hv ");
            out.append(summary.algorithms[a]);
            out.push_back(' ');
            out.append(format_double(summary.hv_mean_ranks[a]));
            out.push_back('\n');
        }
    }
    return out;
}

Summary parse_summary(std::istream& in, const std::string& source_name) {
    Summary summary;
    std::string line;
    std::size_t lineno = 0;
    bool friedman = false;
    std::set<std::string> seen_problems;
    std::set<std::string> seen_algorithms;
    while (std::getline(in, line)) {
        ++lineno;
        std::string_view body = trim(line);
        if (body.empty() || body.front() == '#') continue;
        if (body == "[friedman]") {
            friedman = true;
            summary.friedman_available = true;
            continue;
        }
        auto tokens = split_tokens(body);
        if (!friedman) {
            if (tokens.size() != 7) fail_at(source_name, lineno, "summary row needs 7 columns");
            SummaryRow row;
            row.problem = std::string(tokens[0]);
            row.algorithm = std::string(tokens[1]);
            row.runs = static_cast<std::size_t>(parse_unsigned(tokens[2]));
            row.has_metrics = tokens[3] != "na";
            if (row.has_metrics) {
                row.igd_mean = parse_double(tokens[3]);
                row.igd_std = parse_double(tokens[4]);
                row.hv_mean = parse_double(tokens[5]);
                row.hv_std = parse_double(tokens[6]);
            }
            if (seen_problems.insert(row.problem).second) summary.problems.push_back(row.problem);
            if (seen_algorithms.insert(row.algorithm).second)
                summary.algorithms.push_back(row.algorithm);
            summary.rows.push_back(std::move(row));
        } else {
            if (tokens.size() != 3) fail_at(source_name, lineno, "rank row needs 3 columns");
            std::size_t index = summary.algorithms.size();
            for (std::size_t a = 0; a < summary.algorithms.size(); ++a)
                if (summary.algorithms[a] == tokens[1]) index = a;
            if (index == summary.algorithms.size())
                fail_at(source_name, lineno, "rank row names unknown algorithm");
            auto& ranks = tokens[0] == "igd" ? summary.igd_mean_ranks : summary.hv_mean_ranks;
            ranks.resize(summary.algorithms.size(), 0.0);
            ranks[index] = parse_double(tokens[2]);
        }
    }
    if (summary.rows.empty()) throw std::runtime_error(source_name + ": empty summary");
    return summary;
}

Summary cmd_summarize(const std::filesystem::path& dir, const std::filesystem::path& out_path) {
    std::vector<std::filesystem::path> files;
    for (const auto& entry : std::filesystem::directory_iterator(dir))
        if (entry.is_regular_file() && entry.path().extension() == ".run")
            files.push_back(entry.path());
    if (files.empty()) throw std::runtime_error("no .run record files in " + dir.string());
    std::sort(files.begin(), files.end());
    std::vector<RunRecord> records;
    records.reserve(files.size());
    for (const auto& f : files) records.push_back(load_run_record(f));
    Summary summary = summarize_records(records);
    write_file_atomic(out_path, serialize_summary(summary));
    return summary;
}

namespace {

struct PlotSeries {
    std::string label;
    std::string color;
    double radius = 0.0;  // > 0 draws circles, 0 draws a polyline
    std::vector<std::pair<double, double>> points;
};

std::string svg_number(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.2f", v);
    return buf;
}

std::string label_number(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.6g", v);
    return buf;
}

std::string render_svg(const std::string& title, const std::string& x_label,
                       const std::string& y_label, const std::vector<PlotSeries>& series,
                       const std::vector<double>& vlines) {
    constexpr double kWidth = 720.0;
    constexpr double kHeight = 540.0;
    constexpr double kLeft = 80.0;
    constexpr double kRight = 700.0;
    constexpr double kTop = 48.0;
    constexpr double kBottom = 496.0;

    double xmin = 0.0, xmax = 1.0, ymin = 0.0, ymax = 1.0;
    bool first = true;
    for (const PlotSeries& s : series)
        for (auto [x, y] : s.points) {
            if (first) {
                xmin = xmax = x;
                ymin = ymax = y;
                first = false;
            } else {
                xmin = std::min(xmin, x);
                xmax = std::max(xmax, x);
                ymin = std::min(ymin, y);
                ymax = std::max(ymax, y);
            }
        }
    if (xmax - xmin < 1e-12) {
        xmin -= 0.5;
        xmax += 0.5;
    }
    if (ymax - ymin < 1e-12) {
        ymin -= 0.5;
        ymax += 0.5;
    }
    double xpad = 0.04 * (xmax - xmin);
    double ypad = 0.04 * (ymax - ymin);
    xmin -= xpad;
    xmax += xpad;
    ymin -= ypad;
    ymax += ypad;
    auto px = [&](double x) { return kLeft + (x - xmin) / (xmax - xmin) * (kRight - kLeft); };
    auto py = [&](double y) { return kBottom - (y - ymin) / (ymax - ymin) * (kBottom - kTop); };

    std::string out;
    out.append("<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" + svg_number(kWidth) +
               "\" height=\"" + svg_number(kHeight) + "\">\n");
    out.append("<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n");
    out.append("<rect x=\"" + svg_number(kLeft) + "\" y=\"" + svg_number(kTop) + "\" width=\"" +
               svg_number(kRight - kLeft) + "\" height=\"" + svg_number(kBottom - kTop) +
               "\" fill=\"none\" stroke=\"black\"/>\n");
    out.append("<text x=\"" + svg_number((kLeft + kRight) / 2) +
               "\" y=\"24\" text-anchor=\"middle\" font-size=\"16\">" + title + "</text>\n");
    out.append("<text x=\"" + svg_number((kLeft + kRight) / 2) + "\" y=\"" +
               svg_number(kBottom + 34) + "\" text-anchor=\"middle\" font-size=\"13\">" + x_label +
               "</text>\n");
    out.append("<text x=\"18\" y=\"" + svg_number((kTop + kBottom) / 2) +
               "\" text-anchor=\"middle\" font-size=\"13\" transform=\"rotate(-90 18 " +
               svg_number((kTop + kBottom) / 2) + ")\">" + y_label + "</text>\n");
    out.append("<text x=\"" + svg_number(kLeft) + "\" y=\"" + svg_number(kBottom + 16) +
               "\" font-size=\"11\">" + label_number(xmin) + "</text>\n");
    out.append("<text x=\"" + svg_number(kRight) + "\" y=\"" + svg_number(kBottom + 16) +
               "\" text-anchor=\"end\" font-size=\"11\">" + label_number(xmax) + "</text>\n");
    out.append("<text x=\"" + svg_number(kLeft - 6) + "\" y=\"" + svg_number(kBottom) +
               "\" text-anchor=\"end\" font-size=\"11\">" + label_number(ymin) + "</text>\n");
    out.append("<text x=\"" + svg_number(kLeft - 6) + "\" y=\"" + svg_number(kTop + 4) +
               "\" text-anchor=\"end\" font-size=\"11\">" + label_number(ymax) + "</text>\n");

    for (double x : vlines) {
        if (x < xmin || x > xmax) continue;
        out.append("<line x1=\"" + svg_number(px(x)) + "\" y1=\"" + svg_number(kTop) + "\" x2=\"" +
                   svg_number(px(x)) + "\" y2=\"" + svg_number(kBottom) +
                   "\" stroke=\"#888888\" stroke-dasharray=\"4 3\"/>\n");
    }

    double legend_y = kTop + 16;
    for (const PlotSeries& s : series) {
        if (s.radius > 0.0) {
            for (auto [x, y] : s.points)
                out.append("<circle cx=\"" + svg_number(px(x)) + "\" cy=\"" + svg_number(py(y)) +
                           "\" r=\"" + svg_number(s.radius) + "\" fill=\"" + s.color + "\"/>\n");
        } else if (!s.points.empty()) {
            out.append("<polyline fill=\"none\" stroke=\"" + s.color + "\" points=\"");
            for (std::size_t i = 0; i < s.points.size(); ++i) {
                if (i) out.push_back(' ');
                out.append(svg_number(px(s.points[i].first)) + "," +
                           svg_number(py(s.points[i].second)));
            }
            out.append("\"/>\n");
        }
        out.append("<rect x=\"" + svg_number(kRight - 180) + "\" y=\"" + svg_number(legend_y - 9) +
                   "\" width=\"10\" height=\"10\" fill=\"" + s.color + "\"/>\n");
        out.append("<text x=\"" + svg_number(kRight - 165) + "\" y=\"" + svg_number(legend_y) +
                   "\" font-size=\"12\">" + s.label + "</text>\n");
        legend_y += 16;
    }
    out.append("</svg>\n");
    return out;
}

std::vector<std::pair<double, double>> objective_pairs(const std::vector<Vec>& points) {
    std::vector<std::pair<double, double>> out;
    out.reserve(points.size());
    for (const Vec& p : points) out.emplace_back(p[0], p[1]);
    return out;
}

std::string points_file(const std::vector<Vec>& points) {
    std::string out;
    for (const Vec& p : points) {
        for (std::size_t i = 0; i < p.size(); ++i) {
            if (i) out.push_back(' ');
            out.append(format_double(p[i]));
        }
        out.push_back('\n');
    }
    return out;
}

std::vector<std::filesystem::path> plot_record(const RunRecord& record, const std::string& stem,
                                               const std::filesystem::path& out_dir) {
    std::vector<std::filesystem::path> written;
    std::vector<Vec> attained;
    for (const Individual& ind : record.final_front) attained.push_back(ind.f);
    std::vector<Vec> reference;
    try {
        reference = reference_points(find_problem(record.config.problem));
    } catch (const std::exception&) {
    }
    std::size_t m = !attained.empty()   ? attained.front().size()
                    : !reference.empty() ? reference.front().size()
                                          : 0;

    if (m == 2) {
        std::vector<PlotSeries> series;
        if (!reference.empty())
            series.push_back({"reference front", "#bbbbbb", 1.5, objective_pairs(reference)});
        series.push_back({"final front", "#1f77b4", 3.0, objective_pairs(attained)});
        std::filesystem::path path = out_dir / (stem + "_front.svg");
        write_file_atomic(path, render_svg(record.config.problem + " / " +
                                               algorithm_name(record.config.algorithm),
                                           "f1", "f2", series, {}));
        written.push_back(path);
    } else if (m == 3) {
        std::filesystem::path front_path = out_dir / (stem + "_front.dat");
        write_file_atomic(front_path, points_file(attained));
        written.push_back(front_path);
        if (!reference.empty()) {
            std::filesystem::path ref_path = out_dir / (stem + "_reference.dat");
            write_file_atomic(ref_path, points_file(reference));
            written.push_back(ref_path);
        }
    }

    double eps0 = 0.0;
    for (const TraceRow& row : record.trace) eps0 = std::max(eps0, row.eps_level);
    PlotSeries eps{"eps(k)" + (eps0 > 0.0 ? " / " + label_number(eps0) : std::string()),
                   "#d62728", 0.0, {}};
    PlotSeries rate{"min(r_k, 1)", "#1f77b4", 0.0, {}};
    PlotSeries feas{"feasible ratio", "#2ca02c", 0.0, {}};
    for (const TraceRow& row : record.trace) {
        double g = static_cast<double>(row.gen);
        eps.points.emplace_back(g, eps0 > 0.0 ? row.eps_level / eps0 : 0.0);
        rate.points.emplace_back(g, std::min(row.change_rate, 1.0));
        feas.points.emplace_back(g, row.feasible_ratio);
    }
    std::vector<double> vlines;
    if (record.switch_generation != kNoSwitch)
        vlines.push_back(static_cast<double>(record.switch_generation));
    std::filesystem::path trace_path = out_dir / (stem + "_trace.svg");
    write_file_atomic(trace_path,
                      render_svg(record.config.problem + " / " +
                                     algorithm_name(record.config.algorithm) + " trace",
                                 "generation", "level", {eps, rate, feas}, vlines));
    written.push_back(trace_path);
    return written;
}

std::vector<std::filesystem::path> plot_summary(const Summary& summary, const std::string& stem,
                                                const std::filesystem::path& out_dir) {
    std::string out;
    out.append("# problem algorithm igd_mean\n");
    for (const SummaryRow& row : summary.rows) {
        out.append(row.problem);
        out.push_back(' ');
        out.append(row.algorithm);
        out.push_back(' ');
        out.append(metric_cell(row.has_metrics, row.igd_mean));
        out.push_back('\n');
    }
    std::filesystem::path path = out_dir / (stem + "_igd_bars.dat");
    write_file_atomic(path, out);
    return {path};
}

}  // namespace

std::vector<std::filesystem::path> cmd_plot(const std::filesystem::path& input,
                                            const std::filesystem::path& out_dir) {
    std::ifstream probe(input);
    if (!probe) throw std::runtime_error("cannot open plot input: " + input.string());
    std::string first_line;
    std::getline(probe, first_line);
    probe.close();

    std::filesystem::create_directories(out_dir);
    std::string stem = input.stem().string();
    std::ifstream in(input);
    if (trim(first_line) == kRecordMagic)
        return plot_record(parse_run_record(in, input.filename().string()), stem, out_dir);
    if (trim(first_line) == kSummaryMagic)
        return plot_summary(parse_summary(in, input.filename().string()), stem, out_dir);
    throw std::runtime_error(input.string() + ": neither a run record nor a summary file");
}

}  // namespace ppsm2m
