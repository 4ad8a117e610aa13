#include "l2boost/csv.hpp"

#include <charconv>
#include <cstdio>
#include <fstream>
#include <sstream>

namespace l2boost {

namespace {

std::vector<std::string> split_fields(const std::string& line) {
    std::vector<std::string> out;
    std::string cur;
    for (char ch : line) {
        if (ch == ',') {
            out.push_back(cur);
            cur.clear();
        } else if (ch != '\r') {
            cur.push_back(ch);
        }
    }
    out.push_back(cur);
    return out;
}

std::string trim(const std::string& s) {
    size_t a = s.find_first_not_of(" \t");
    if (a == std::string::npos) return "";
    size_t b = s.find_last_not_of(" \t");
    return s.substr(a, b - a + 1);
}

} // namespace

int CsvTable::column(const std::string& name) const {
    for (size_t j = 0; j < header.size(); ++j)
        if (header[j] == name) return static_cast<int>(j);
    return -1;
}

double CsvTable::number(int i, int j) const {
    const std::string t = trim(rows.at(i).at(j));
    double v = 0.0;
    auto [ptr, ec] = std::from_chars(t.data(), t.data() + t.size(), v);
    if (ec != std::errc() || ptr != t.data() + t.size())
        throw ValidationError("cannot parse numeric field '" + rows[i][j] + "' at data row " +
                              std::to_string(i + 1) + ", column " + std::to_string(j + 1));
    return v;
}

CsvTable parse_csv(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    CsvTable t;
    while (std::getline(in, line)) {
        if (line.empty() || line[0] == '#') continue;
        auto fields = split_fields(line);
        if (t.header.empty()) {
            for (auto& f : fields) t.header.push_back(trim(f));
            continue;
        }
        if (fields.size() != t.header.size())
            throw ValidationError("row " + std::to_string(t.rows.size() + 1) + " has " +
                                  std::to_string(fields.size()) + " fields, header has " +
                                  std::to_string(t.header.size()));
        t.rows.push_back(std::move(fields));
    }
    if (t.header.empty()) throw ValidationError("CSV has no header row");
    return t;
}

CsvTable read_csv(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ValidationError("cannot open '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_csv(buf.str());
}

void write_csv(const std::string& path, const CsvTable& table,
               const std::vector<std::string>& comment_lines) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw ValidationError("cannot write '" + path + "'");
    for (const auto& c : comment_lines) out << "# " << c << "\n";
    for (size_t j = 0; j < table.header.size(); ++j)
        out << table.header[j] << (j + 1 < table.header.size() ? "," : "\n");
    for (const auto& row : table.rows)
        for (size_t j = 0; j < row.size(); ++j) out << row[j] << (j + 1 < row.size() ? "," : "\n");
}

Dataset read_dataset_csv(const std::string& path, const std::string& response_column) {
    const CsvTable t = read_csv(path);
    const int yc = t.column(response_column);
    if (yc < 0) throw ValidationError("response column '" + response_column + "' not found");
    const int n = t.nrow();
    const int p = t.ncol() - 1;
    if (p < 1) throw ValidationError("no predictor columns");
    Matrix x(n, p);
    Vector y(n);
    std::vector<std::string> names;
    for (int j = 0, k = 0; j < t.ncol(); ++j) {
        if (j == yc) continue;
        for (int i = 0; i < n; ++i) x(i, k) = t.number(i, j);
        names.push_back(t.header[j]);
        ++k;
    }
    for (int i = 0; i < n; ++i) y[i] = t.number(i, yc);
    return make_dataset(std::move(x), std::move(y), std::move(names));
}

std::string format_double(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

} // namespace l2boost
