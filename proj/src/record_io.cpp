#include "ppsm2m/record_io.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>

#include "ppsm2m/text_io.hpp"

namespace ppsm2m {

namespace {

constexpr std::string_view kRecordMagic = "# ppsm2m-run-record";

[[noreturn]] void fail(const std::string& source, std::size_t line, const std::string& message) {
    throw std::runtime_error(source + ":" + std::to_string(line) + ": " + message);
}

void append_kv(std::string& out, std::string_view key, std::string_view value) {
    out.append(key);
    out.append(" = ");
    out.append(value);
    out.push_back('\n');
}

void append_vec(std::string& out, const Vec& v) {
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) out.push_back(' ');
        out.append(format_double(v[i]));
    }
}

void append_individual(std::string& out, const Individual& ind) {
    append_vec(out, ind.x);
    out.append(" | ");
    append_vec(out, ind.f);
    out.append(" | ");
    out.append(format_double(ind.violation));
    out.push_back('\n');
}

Individual parse_individual(std::string_view body, const std::string& source, std::size_t line) {
    Individual ind;
    std::size_t p1 = body.find('|');
    std::size_t p2 = body.rfind('|');
    if (p1 == std::string_view::npos || p2 == p1)
        fail(source, line, "individual row needs two '|' separators");
    for (auto tok : split_tokens(body.substr(0, p1))) ind.x.push_back(parse_double(tok));
    for (auto tok : split_tokens(body.substr(p1 + 1, p2 - p1 - 1))) ind.f.push_back(parse_double(tok));
    auto tail = split_tokens(body.substr(p2 + 1));
    if (tail.size() != 1) fail(source, line, "individual row needs exactly one violation value");
    ind.violation = parse_double(tail[0]);
    return ind;
}

}  // namespace

const KeyValueFile::Entry* KeyValueFile::find(std::string_view key) const {
    for (const Entry& e : entries)
        if (e.key == key) return &e;
    return nullptr;
}

KeyValueFile parse_key_values(std::istream& in, const std::string& source_name,
                              std::size_t* line_counter, bool stop_at_section) {
    KeyValueFile kv;
    std::string line;
    std::size_t lineno = line_counter ? *line_counter : 0;
    while (true) {
        std::streampos before = in.tellg();
        if (!std::getline(in, line)) break;
        ++lineno;
        std::string_view body = trim(line);
        if (body.empty() || body.front() == '#') continue;
        if (body.front() == '[') {
            if (stop_at_section) {
                in.seekg(before);
                --lineno;
                break;
            }
            fail(source_name, lineno, "unexpected section header '" + std::string(body) + "'");
        }
        std::size_t eq = body.find('=');
        if (eq == std::string_view::npos)
            fail(source_name, lineno, "expected 'key = value', got '" + std::string(body) + "'");
        std::string key(trim(body.substr(0, eq)));
        std::string value(trim(body.substr(eq + 1)));
        if (key.empty()) fail(source_name, lineno, "empty key");
        if (kv.find(key)) fail(source_name, lineno, "duplicate key '" + key + "'");
        kv.entries.push_back({std::move(key), std::move(value), lineno});
    }
    if (line_counter) *line_counter = lineno;
    return kv;
}

std::string serialize_run_record(const RunRecord& record) {
    const RunConfig& c = record.config;
    std::string out;
    out.reserve(1 << 16);
    out.append(kRecordMagic);
    out.push_back('\n');
    append_kv(out, "algorithm", algorithm_name(c.algorithm));
    append_kv(out, "problem", c.problem);
    append_kv(out, "seed", std::to_string(c.seed));
    append_kv(out, "population", std::to_string(c.population));
    append_kv(out, "subregions", std::to_string(c.subregions));
    append_kv(out, "max_generations", std::to_string(c.max_generations));
    append_kv(out, "eps_dominance", format_double(c.eps_dominance));
    append_kv(out, "tau", format_double(c.tau));
    append_kv(out, "alpha", format_double(c.alpha));
    append_kv(out, "cp", format_double(c.cp));
    append_kv(out, "tc", std::to_string(c.tc));
    append_kv(out, "tc_from_switch", c.tc_from_switch ? "1" : "0");
    append_kv(out, "theta_fraction", format_double(c.theta_fraction));
    append_kv(out, "seed_eps_from_quantile", c.seed_eps_from_quantile ? "1" : "0");
    append_kv(out, "window", std::to_string(c.window));
    append_kv(out, "switch_threshold", format_double(c.switch_threshold));
    append_kv(out, "bounds_delta", format_double(c.bounds_delta));
    append_kv(out, "eta_crossover", format_double(c.operators.eta_crossover));
    append_kv(out, "eta_mutation", format_double(c.operators.eta_mutation));
    append_kv(out, "p_crossover", format_double(c.operators.p_crossover));
    append_kv(out, "p_mutation", format_double(c.operators.p_mutation));
    append_kv(out, "build", record.build);
    append_kv(out, "evaluations", std::to_string(record.evaluations));
    append_kv(out, "switch_generation",
              record.switch_generation == kNoSwitch ? "none"
                                                    : std::to_string(record.switch_generation));
    out.append("[trace]\n");
    out.append("# gen stage r_k eps rf\n");
    for (const TraceRow& row : record.trace) {
        out.append(std::to_string(row.gen));
        out.append(row.push_stage ? " push " : " pull ");
        out.append(format_double(row.change_rate));
        out.push_back(' ');
        out.append(format_double(row.eps_level));
        out.push_back(' ');
        out.append(format_double(row.feasible_ratio));
        out.push_back('\n');
    }
    out.append("[final_population]\n");
    out.append("# x | f | phi\n");
    for (const Individual& ind : record.final_population) append_individual(out, ind);
    out.append("[final_front]\n");
    out.append("# x | f | phi\n");
    for (const Individual& ind : record.final_front) append_individual(out, ind);
    return out;
}

RunRecord parse_run_record(std::istream& in, const std::string& source_name) {
    std::size_t lineno = 0;
    KeyValueFile header = parse_key_values(in, source_name, &lineno, true);

    auto need = [&](std::string_view key) -> const std::string& {
        const KeyValueFile::Entry* e = header.find(key);
        if (!e) fail(source_name, 1, "missing header key '" + std::string(key) + "'");
        return e->value;
    };

    RunRecord rec;
    RunConfig& c = rec.config;
    c.algorithm = parse_algorithm(need("algorithm"));
    c.problem = need("problem");
    c.seed = parse_unsigned(need("seed"));
    c.population = parse_unsigned(need("population"));
    c.subregions = parse_unsigned(need("subregions"));
    c.max_generations = parse_unsigned(need("max_generations"));
    c.eps_dominance = parse_double(need("eps_dominance"));
    c.tau = parse_double(need("tau"));
    c.alpha = parse_double(need("alpha"));
    c.cp = parse_double(need("cp"));
    c.tc = parse_unsigned(need("tc"));
    c.tc_from_switch = need("tc_from_switch") == "1";
    c.theta_fraction = parse_double(need("theta_fraction"));
    c.seed_eps_from_quantile = need("seed_eps_from_quantile") == "1";
    c.window = parse_unsigned(need("window"));
    c.switch_threshold = parse_double(need("switch_threshold"));
    c.bounds_delta = parse_double(need("bounds_delta"));
    c.operators.eta_crossover = parse_double(need("eta_crossover"));
    c.operators.eta_mutation = parse_double(need("eta_mutation"));
    c.operators.p_crossover = parse_double(need("p_crossover"));
    c.operators.p_mutation = parse_double(need("p_mutation"));
    rec.build = need("build");
    rec.evaluations = parse_unsigned(need("evaluations"));
    rec.switch_generation =
        need("switch_generation") == "none" ? kNoSwitch : parse_unsigned(need("switch_generation"));

    std::string line;
    enum class Section { None, Trace, Population, Front } section = Section::None;
    while (std::getline(in, line)) {
        ++lineno;
        std::string_view body = trim(line);
        if (body.empty() || body.front() == '#') continue;
        if (body == "[trace]") {
            section = Section::Trace;
            continue;
        }
        if (body == "[final_population]") {
            section = Section::Population;
            continue;
        }
        if (body == "[final_front]") {
            section = Section::Front;
            continue;
        }
        switch (section) {
        case Section::Trace: {
            auto tokens = split_tokens(body);
            if (tokens.size() != 5) fail(source_name, lineno, "trace row needs 5 fields");
            TraceRow row;
            row.gen = parse_unsigned(tokens[0]);
            if (tokens[1] == "push")
                row.push_stage = true;
            else if (tokens[1] == "pull")
                row.push_stage = false;
            else
                fail(source_name, lineno, "trace stage must be push or pull");
            row.change_rate = parse_double(tokens[2]);
            row.eps_level = parse_double(tokens[3]);
            row.feasible_ratio = parse_double(tokens[4]);
            rec.trace.push_back(row);
            break;
        }
        case Section::Population:
            rec.final_population.push_back(parse_individual(body, source_name, lineno));
            break;
        case Section::Front:
            rec.final_front.push_back(parse_individual(body, source_name, lineno));
            break;
        case Section::None:
            fail(source_name, lineno, "content before any section");
        }
    }
    return rec;
}

RunRecord load_run_record(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open run record: " + path.string());
    return parse_run_record(in, path.filename().string());
}

void write_file_atomic(const std::filesystem::path& path, std::string_view content) {
    std::filesystem::path tmp = path;
    tmp += ".tmp";
    {
        std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
        if (!out) throw std::runtime_error("cannot open for writing: " + tmp.string());
        out.write(content.data(), static_cast<std::streamsize>(content.size()));
        if (!out) throw std::runtime_error("write failed: " + tmp.string());
    }
    std::filesystem::rename(tmp, path);
}

}  // namespace ppsm2m
