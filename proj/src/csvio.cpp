#include "jcd/csvio.hpp"

#include <charconv>
#include <fstream>
#include <ostream>
#include <sstream>

#include "jcd/errors.hpp"

namespace jcd {

std::string format_double(double v) {
    char buf[64];
    const auto res = std::to_chars(buf, buf + sizeof(buf), v);
    return std::string(buf, res.ptr);
}

namespace {

constexpr const char* kHeader = "alpha_sq,gt,omega_over_g,rwa,objective,kind";

double parse_double(const std::string& tok, const char* col) {
    double v{};
    const char* first = tok.data();
    const char* last = tok.data() + tok.size();
    const auto res = std::from_chars(first, last, v);
    if (res.ec != std::errc{} || res.ptr != last)
        throw ConfigError(std::string("csv: bad numeric field in column ") + col);
    return v;
}

std::vector<std::string> split_line(const std::string& line) {
    std::vector<std::string> out;
    std::size_t start = 0;
    while (true) {
        const std::size_t pos = line.find(',', start);
        if (pos == std::string::npos) {
            out.push_back(line.substr(start));
            break;
        }
        out.push_back(line.substr(start, pos - start));
        start = pos + 1;
    }
    return out;
}

} // namespace

void write_csv(std::ostream& os, const std::vector<SweepRow>& rows) {
    os << kHeader << '\n';
    for (const SweepRow& r : rows) {
        os << format_double(r.alpha_sq) << ',' << format_double(r.gt) << ','
           << format_double(r.omega_over_g) << ',' << r.rwa << ','
           << format_double(r.objective) << ',' << r.kind << '\n';
    }
}

void write_csv_file(const std::string& path, const std::vector<SweepRow>& rows) {
    std::ofstream os(path, std::ios::binary);
    if (!os) throw ConfigError("csv: cannot open for writing: " + path);
    write_csv(os, rows);
    if (!os.good()) throw ConfigError("csv: write failed: " + path);
}

std::vector<SweepRow> read_csv(std::istream& is) {
    std::string line;
    if (!std::getline(is, line) || line != kHeader)
        throw ConfigError("csv: missing or unexpected header");
    std::vector<SweepRow> rows;
    while (std::getline(is, line)) {
        if (line.empty()) continue;
        const auto tok = split_line(line);
        if (tok.size() != 6) throw ConfigError("csv: expected 6 columns");
        SweepRow r;
        r.alpha_sq = parse_double(tok[0], "alpha_sq");
        r.gt = parse_double(tok[1], "gt");
        r.omega_over_g = parse_double(tok[2], "omega_over_g");
        r.rwa = tok[3];
        r.objective = parse_double(tok[4], "objective");
        r.kind = tok[5];
        rows.push_back(std::move(r));
    }
    return rows;
}

std::vector<SweepRow> read_csv_file(const std::string& path) {
    std::ifstream is(path, std::ios::binary);
    if (!is) throw ConfigError("csv: cannot open for reading: " + path);
    return read_csv(is);
}

} // namespace jcd
