#ifndef PPSM2M_PROBLEMS_HPP
#define PPSM2M_PROBLEMS_HPP

#include <filesystem>
#include <functional>
#include <iosfwd>
#include <string>
#include <vector>

#include "ppsm2m/core.hpp"

namespace ppsm2m {

/// A representative sample of a problem's true constrained front.
struct ReferenceFront {
    enum class Source { Analytic, File };
    std::vector<Vec> points;
    Source source = Source::Analytic;
};

/// Evaluate x on the problem: objectives plus overall violation.
/// Throws when x is outside the box (callers clip first).
Individual evaluate(const Problem& problem, Vec x);

/// At least `density` points spread along the constrained true front.
/// Throws when the problem has no registered front source.
ReferenceFront pf_reference_set(const Problem& problem, std::size_t density);

/// Plaintext front file: one objective vector per line, whitespace
/// separated, '#' comments allowed.
ReferenceFront load_reference_front(const std::filesystem::path& path);
void write_reference_front(std::ostream& os, const ReferenceFront& front);

/// Registered benchmark lookup; throws with the list of known names on
/// a miss. Names: SPEC-CMOP0, SPEC-CMOP1, LIR-CMOP1 .. LIR-CMOP14.
const Problem& find_problem(const std::string& name);
std::vector<std::string> problem_names();

/// Directory holding the shipped reference-front files. Overridable
/// via the PPSM2M_DATA_DIR environment variable.
std::filesystem::path data_directory();

/// Synthetic two-variable instances with closed-form fronts.
/// SPEC-CMOP1: f1 = x1+x2, f2 = 1-x1+x2 on [0,1]^2, with the disc of
/// radius 0.2 around (0.5, 0.5) in objective space infeasible, which
/// cuts a gap into the line f1+f2 = 1. SPEC-CMOP0 drops the disc.
Problem make_spec_cmop0();
Problem make_spec_cmop1();

/// The LIR-CMOP benchmark suite (two objectives for 1-12, three for
/// 13-14; 30 variables in [0,1]).
Problem make_lircmop(int id);

/// Densely sampled true front of a LIR-CMOP, computed from the
/// problem's objective-space feasibility geometry. Used to produce the
/// shipped front files; slow, not meant for per-run use.
std::vector<Vec> generate_lircmop_front(int id, std::size_t target_points);

/// pf_reference generator backed by <data_directory()>/<name>.front.
std::function<std::vector<Vec>(std::size_t)> file_front_loader(std::string name);

}  // namespace ppsm2m

#endif  // PPSM2M_PROBLEMS_HPP
