// Regenerates the shipped LIR-CMOP reference-front files from the
// problems' objective-space feasibility geometry. Slow by design; the
// library only reads the generated files.
#include <cstdio>
#include <exception>
#include <filesystem>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "ppsm2m/problems.hpp"
#include "ppsm2m/record_io.hpp"

int main(int argc, char** argv) {
    CLI::App app{"Generate benchmark reference-front files"};
    std::string out_dir = "data/fronts";
    std::size_t points = 5000;
    int only = 0;
    app.add_option("--out", out_dir, "output directory");
    app.add_option("--points", points, "target points per front");
    app.add_option("--id", only, "only this problem id (1-14)");
    CLI11_PARSE(app, argc, argv);

    try {
        std::filesystem::create_directories(out_dir);
        for (int id = 1; id <= 14; ++id) {
            if (only != 0 && id != only) continue;
            ppsm2m::ReferenceFront front;
            front.points = ppsm2m::generate_lircmop_front(id, points);
            std::ostringstream body;
            ppsm2m::write_reference_front(body, front);
            std::string name = "LIR-CMOP" + std::to_string(id) + ".front";
            std::filesystem::path path = std::filesystem::path(out_dir) / name;
            ppsm2m::write_file_atomic(path, body.str());
            std::printf("%s: %zu points\n", path.string().c_str(), front.points.size());
        }
    } catch (const std::exception& ex) {
        std::fprintf(stderr, "error: %s\n", ex.what());
        return 1;
    }
    return 0;
}
