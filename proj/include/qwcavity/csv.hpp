#ifndef QWCAVITY_CSV_HPP
#define QWCAVITY_CSV_HPP

#include <charconv>
#include <cmath>
#include <cstddef>
#include <filesystem>
#include <fstream>
#include <optional>
#include <sstream>
#include <string>
#include <string_view>
#include <system_error>
#include <vector>

#include "errors.hpp"

namespace qwcavity {

/// Shortest decimal that round-trips to the same double; dot radix, locale
/// independent.
inline std::string format_number(double v) {
    char buf[64];
    const auto res = std::to_chars(buf, buf + sizeof buf, v);
    return std::string(buf, res.ptr);
}

/// Parses the whole token as a double. Leading/trailing blanks are not allowed.
inline std::optional<double> parse_number(std::string_view s) {
    if (!s.empty() && s.front() == '+') s.remove_prefix(1);
    double v = 0.0;
    const auto res = std::from_chars(s.data(), s.data() + s.size(), v);
    if (s.empty() || res.ec != std::errc{} || res.ptr != s.data() + s.size()) return std::nullopt;
    return v;
}

inline std::string_view trim(std::string_view s) {
    const auto first = s.find_first_not_of(" \t\r");
    if (first == std::string_view::npos) return {};
    const auto last = s.find_last_not_of(" \t\r");
    return s.substr(first, last - first + 1);
}

inline std::vector<std::string> split(std::string_view s, char sep) {
    std::vector<std::string> out;
    std::size_t start = 0;
    while (true) {
        const auto pos = s.find(sep, start);
        out.emplace_back(s.substr(start, pos == std::string_view::npos ? std::string_view::npos : pos - start));
        if (pos == std::string_view::npos) break;
        start = pos + 1;
    }
    return out;
}

/// Accumulates comma-separated rows; every row ends with '\n'.
class CsvWriter {
public:
    explicit CsvWriter(const std::vector<std::string>& header) { row(header); }

    void row(const std::vector<std::string>& cells) {
        for (std::size_t k = 0; k < cells.size(); ++k) {
            if (k) out_ << ',';
            out_ << cells[k];
        }
        out_ << '\n';
    }

    void numbers(std::initializer_list<double> values) {
        std::vector<std::string> cells;
        for (double v : values) cells.push_back(format_number(v));
        row(cells);
    }

    std::string str() const { return out_.str(); }

    void save(const std::filesystem::path& path) const {
        std::ofstream f(path, std::ios::binary | std::ios::trunc);
        if (!f) throw IoError("cannot open " + path.string() + " for writing");
        const std::string s = out_.str();
        f.write(s.data(), static_cast<std::streamsize>(s.size()));
        if (!f) throw IoError("failed writing " + path.string());
    }

private:
    std::ostringstream out_;
};

struct CsvTable {
    std::vector<std::string> header;
    std::vector<std::vector<std::string>> rows;

    std::optional<std::size_t> column(std::string_view name) const {
        for (std::size_t k = 0; k < header.size(); ++k)
            if (header[k] == name) return k;
        return std::nullopt;
    }

    /// Numeric column; empty or unparsable cells become NaN.
    std::vector<double> numeric(std::string_view name) const {
        const auto col = column(name);
        if (!col) throw InputError("csv has no column '" + std::string(name) + "'");
        std::vector<double> v;
        v.reserve(rows.size());
        for (const auto& r : rows) {
            const auto x = *col < r.size() ? parse_number(r[*col]) : std::nullopt;
            v.push_back(x.value_or(std::nan("")));
        }
        return v;
    }
};

inline CsvTable parse_csv(std::string_view text) {
    CsvTable table;
    bool first = true;
    for (const auto& line : split(text, '\n')) {
        std::string_view l = line;
        if (!l.empty() && l.back() == '\r') l.remove_suffix(1);
        if (l.empty()) continue;
        if (first) {
            table.header = split(l, ',');
            first = false;
        } else {
            table.rows.push_back(split(l, ','));
        }
    }
    if (first) throw InputError("csv input is empty");
    return table;
}

inline std::string read_file(const std::filesystem::path& path) {
    std::ifstream f(path, std::ios::binary);
    if (!f) throw IoError("cannot open " + path.string() + " for reading");
    std::ostringstream ss;
    ss << f.rdbuf();
    return ss.str();
}

inline CsvTable read_csv(const std::filesystem::path& path) { return parse_csv(read_file(path)); }

} // namespace qwcavity

#endif
