#ifndef PPSM2M_RECORD_IO_HPP
#define PPSM2M_RECORD_IO_HPP

#include <filesystem>
#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include "ppsm2m/engine.hpp"

namespace ppsm2m {

/// Ordered key = value entries of a flat config/record header.
/// Carries line numbers for diagnostics.
struct KeyValueFile {
    struct Entry {
        std::string key;
        std::string value;
        std::size_t line = 0;
    };
    std::vector<Entry> entries;

    const Entry* find(std::string_view key) const;
};

/// Parse "key = value" lines; '#' starts a comment, blank lines are
/// skipped. Duplicate keys are errors. `stop_at_section` makes the
/// parser stop (without consuming) at a "[section]" line.
KeyValueFile parse_key_values(std::istream& in, const std::string& source_name,
                              std::size_t* line_counter = nullptr, bool stop_at_section = false);

/// Full textual form of a run record. No timestamps: identical runs
/// serialize to identical bytes.
std::string serialize_run_record(const RunRecord& record);
RunRecord parse_run_record(std::istream& in, const std::string& source_name);
RunRecord load_run_record(const std::filesystem::path& path);

/// Write-temp-then-rename in the destination directory.
void write_file_atomic(const std::filesystem::path& path, std::string_view content);

}  // namespace ppsm2m

#endif  // PPSM2M_RECORD_IO_HPP
