#include "ppsm2m/problems.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <map>
#include <mutex>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include "ppsm2m/text_io.hpp"

#ifndef PPSM2M_DATA_DIR
#define PPSM2M_DATA_DIR ""
#endif

namespace ppsm2m {

namespace {

std::vector<Vec> spec_front_segment(double lo, double hi, std::size_t count) {
    std::vector<Vec> pts;
    pts.reserve(count);
    for (std::size_t i = 0; i < count; ++i) {
        double t = count == 1 ? lo : lo + (hi - lo) * static_cast<double>(i) / static_cast<double>(count - 1);
        pts.push_back({t, 1.0 - t});
    }
    return pts;
}

std::vector<Vec> spec_cmop1_front(std::size_t density) {
    const double gap = std::sqrt(0.02);
    std::size_t left = (density + 1) / 2;
    std::size_t right = density - left;
    std::vector<Vec> pts = spec_front_segment(0.0, 0.5 - gap, std::max<std::size_t>(left, 2));
    std::vector<Vec> tail = spec_front_segment(0.5 + gap, 1.0, std::max<std::size_t>(right, 2));
    pts.insert(pts.end(), tail.begin(), tail.end());
    return pts;
}

Evaluation spec_objectives(const Vec& x) {
    Evaluation ev;
    ev.objectives = {x[0] + x[1], 1.0 - x[0] + x[1]};
    return ev;
}

struct Registry {
    std::vector<Problem> problems;
    std::map<std::string, std::size_t> index;
    std::map<std::string, ReferenceFront::Source> sources;

    void add(Problem p, ReferenceFront::Source source) {
        p.validate();
        sources[p.name] = source;
        index[p.name] = problems.size();
        problems.push_back(std::move(p));
    }
};

const Registry& registry() {
    static const Registry reg = [] {
        Registry r;
        r.add(make_spec_cmop0(), ReferenceFront::Source::Analytic);
        r.add(make_spec_cmop1(), ReferenceFront::Source::Analytic);
        for (int id = 1; id <= 14; ++id) r.add(make_lircmop(id), ReferenceFront::Source::File);
        return r;
    }();
    return reg;
}

const std::vector<Vec>& cached_front_file(const std::string& name) {
    static std::mutex mu;
    static std::map<std::string, std::vector<Vec>> cache;
    std::scoped_lock lock(mu);
    auto it = cache.find(name);
    if (it != cache.end()) return it->second;
    std::filesystem::path path = data_directory() / (name + ".front");
    ReferenceFront front = load_reference_front(path);
    return cache.emplace(name, std::move(front.points)).first->second;
}

}  // namespace

Individual evaluate(const Problem& problem, Vec x) {
    if (x.size() != problem.dimension)
        throw std::invalid_argument("evaluate: decision vector length does not match " + problem.name);
    for (std::size_t i = 0; i < x.size(); ++i) {
        if (x[i] < problem.bounds[i].first || x[i] > problem.bounds[i].second)
            throw std::invalid_argument("evaluate: variable " + std::to_string(i + 1) +
                                        " outside bounds for " + problem.name);
    }
    Evaluation ev = problem.evaluator(x);
    Individual ind;
    ind.violation = overall_violation(ev.inequalities, ev.equalities, problem.equality_tolerance);
    ind.f = std::move(ev.objectives);
    ind.x = std::move(x);
    return ind;
}

ReferenceFront pf_reference_set(const Problem& problem, std::size_t density) {
    if (!problem.pf_reference)
        throw std::invalid_argument("pf_reference_set: no reference front registered for " + problem.name);
    ReferenceFront front;
    front.points = problem.pf_reference(density);
    auto it = registry().sources.find(problem.name);
    front.source = it == registry().sources.end() ? ReferenceFront::Source::Analytic : it->second;
    return front;
}

ReferenceFront load_reference_front(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open reference front file: " + path.string());
    ReferenceFront front;
    front.source = ReferenceFront::Source::File;
    std::string line;
    std::size_t width = 0;
    while (std::getline(in, line)) {
        std::string_view body = trim(line);
        if (body.empty() || body.front() == '#') continue;
        auto tokens = split_tokens(body);
        Vec point;
        point.reserve(tokens.size());
        for (auto tok : tokens) point.push_back(parse_double(tok));
        if (width == 0) width = point.size();
        if (point.size() != width)
            throw std::runtime_error("ragged row in reference front file: " + path.string());
        front.points.push_back(std::move(point));
    }
    if (front.points.empty())
        throw std::runtime_error("reference front file has no points: " + path.string());
    return front;
}

void write_reference_front(std::ostream& os, const ReferenceFront& front) {
    for (const Vec& p : front.points) {
        for (std::size_t i = 0; i < p.size(); ++i) {
            if (i) os << ' ';
            os << format_double(p[i]);
        }
        os << '\n';
    }
}

const Problem& find_problem(const std::string& name) {
    const Registry& reg = registry();
    auto it = reg.index.find(name);
    if (it == reg.index.end()) {
        std::ostringstream msg;
        msg << "unknown problem '" << name << "'; known problems:";
        for (const auto& n : problem_names()) msg << ' ' << n;
        throw std::invalid_argument(msg.str());
    }
    return reg.problems[it->second];
}

std::vector<std::string> problem_names() {
    std::vector<std::string> names;
    for (const Problem& p : registry().problems) names.push_back(p.name);
    return names;
}

std::filesystem::path data_directory() {
    if (const char* env = std::getenv("PPSM2M_DATA_DIR"); env && *env) return env;
    return PPSM2M_DATA_DIR;
}

Problem make_spec_cmop0() {
    Problem p;
    p.name = "SPEC-CMOP0";
    p.num_objectives = 2;
    p.dimension = 2;
    p.bounds = {{0.0, 1.0}, {0.0, 1.0}};
    p.evaluator = [](const Vec& x) { return spec_objectives(x); };
    p.pf_reference = [](std::size_t density) {
        return spec_front_segment(0.0, 1.0, std::max<std::size_t>(density, 2));
    };
    return p;
}

Problem make_spec_cmop1() {
    Problem p = make_spec_cmop0();
    p.name = "SPEC-CMOP1";
    p.num_inequalities = 1;
    p.evaluator = [](const Vec& x) {
        Evaluation ev = spec_objectives(x);
        double d1 = ev.objectives[0] - 0.5;
        double d2 = ev.objectives[1] - 0.5;
        ev.inequalities = {d1 * d1 + d2 * d2 - 0.04};
        return ev;
    };
    p.pf_reference = [](std::size_t density) { return spec_cmop1_front(density); };
    return p;
}

// Shipped front files are loaded lazily and shared; requesting more
// points than a file holds is an error rather than an interpolation.
std::function<std::vector<Vec>(std::size_t)> file_front_loader(std::string name) {
    return [name = std::move(name)](std::size_t density) {
        const std::vector<Vec>& pts = cached_front_file(name);
        if (pts.size() < density)
            throw std::invalid_argument("reference front for " + name + " holds " +
                                        std::to_string(pts.size()) + " points, fewer than requested");
        return pts;
    };
}

}  // namespace ppsm2m
