#include "casim/io.hpp"

#include <charconv>
#include <cstdio>
#include <fstream>
#include <sstream>

#include "casim/errors.hpp"

namespace casim {

std::string format_double(double v) {
    char buf[64];
    const auto res = std::to_chars(buf, buf + sizeof(buf), v,
                                   std::chars_format::general, 17);
    return std::string(buf, res.ptr);
}

std::uint64_t fnv1a64(std::string_view bytes) {
    std::uint64_t h = 14695981039346656037ull;
    for (const char c : bytes) {
        h ^= static_cast<unsigned char>(c);
        h *= 1099511628211ull;
    }
    return h;
}

std::string fnv1a64_hex(std::string_view bytes) {
    char buf[17];
    std::snprintf(buf, sizeof(buf), "%016llx",
                  static_cast<unsigned long long>(fnv1a64(bytes)));
    return std::string(buf);
}

std::string CsvTable::serialize() const {
    std::ostringstream out;
    for (const auto& [k, v] : meta) out << "# " << k << ": " << v << "\n";
    if (!columns.empty()) {
        for (std::size_t i = 0; i < columns.size(); ++i)
            out << (i ? "," : "") << columns[i];
        out << "\n";
    }
    for (const auto& row : rows) {
        for (std::size_t i = 0; i < row.size(); ++i)
            out << (i ? "," : "") << format_double(row[i]);
        out << "\n";
    }
    return out.str();
}

CsvTable parse_csv(const std::string& text) {
    CsvTable t;
    std::istringstream in(text);
    std::string line;
    bool header_done = false;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty()) continue;
        if (line[0] == '#') {
            std::string body = line.substr(1);
            if (!body.empty() && body[0] == ' ') body.erase(0, 1);
            const auto pos = body.find(": ");
            if (pos == std::string::npos)
                t.meta.emplace_back(body, "");
            else
                t.meta.emplace_back(body.substr(0, pos), body.substr(pos + 2));
            continue;
        }
        // numeric row or column-header row
        std::vector<double> row;
        std::vector<std::string> cells;
        std::istringstream ss(line);
        std::string cell;
        bool numeric = true;
        while (std::getline(ss, cell, ',')) {
            cells.push_back(cell);
            double v = 0.0;
            const auto res = std::from_chars(cell.data(), cell.data() + cell.size(), v);
            if (res.ec != std::errc() || res.ptr != cell.data() + cell.size())
                numeric = false;
            row.push_back(v);
        }
        if (!numeric) {
            if (header_done || !t.rows.empty())
                throw FormatError("csv: non-numeric row at line " + std::to_string(lineno));
            t.columns = cells;
            header_done = true;
        } else {
            t.rows.push_back(std::move(row));
        }
    }
    return t;
}

void write_text_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw FormatError("cannot open '" + path + "' for writing");
    out << content;
    if (!out) throw FormatError("write failed for '" + path + "'");
}

std::string read_text_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw FormatError("cannot open '" + path + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

std::string dump_json(const nlohmann::json& j) { return j.dump(2) + "\n"; }

std::string emit_csv_with_sidecar(const std::string& stem, const CsvTable& table,
                                  nlohmann::json sidecar) {
    const std::string csv = table.serialize();
    const std::string hash = fnv1a64_hex(csv);
    sidecar["csv_fnv1a64"] = hash;
    write_text_file(stem + ".csv", csv);
    write_text_file(stem + ".json", dump_json(sidecar));
    return hash;
}

}  // namespace casim
