#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace jcd {

/// One sweep record. `rwa` is "on"/"off" (empty where not applicable);
/// `kind` is empty for data rows, "min"/"max" for located extrema, or a
/// bound label in bounds tables.
struct SweepRow {
    double alpha_sq = 0.0;
    double gt = 0.0;
    double omega_over_g = 0.0;
    std::string rwa;
    double objective = 0.0;
    std::string kind;

    bool operator==(const SweepRow&) const = default;
};

/// Shortest round-trip decimal form, locale-independent.
std::string format_double(double v);

/// Header row plus one line per record, columns
/// alpha_sq,gt,omega_over_g,rwa,objective,kind.
void write_csv(std::ostream& os, const std::vector<SweepRow>& rows);
void write_csv_file(const std::string& path, const std::vector<SweepRow>& rows);

/// Inverse of write_csv; throws ConfigError on malformed input.
std::vector<SweepRow> read_csv(std::istream& is);
std::vector<SweepRow> read_csv_file(const std::string& path);

} // namespace jcd
