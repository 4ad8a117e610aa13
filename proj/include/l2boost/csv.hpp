#ifndef L2BOOST_CSV_HPP
#define L2BOOST_CSV_HPP

#include <string>
#include <vector>

#include "l2boost/data.hpp"

namespace l2boost {

/// Comma-separated table with a header row; cells are kept verbatim so
/// mixed text/numeric files round-trip bit-exactly. Lines starting with
/// '#' are comments and are skipped on read.
struct CsvTable {
    std::vector<std::string> header;
    std::vector<std::vector<std::string>> rows;

    int nrow() const { return static_cast<int>(rows.size()); }
    int ncol() const { return static_cast<int>(header.size()); }
    int column(const std::string& name) const;  // -1 when absent
    double number(int i, int j) const;          // parses the cell or throws
};

CsvTable parse_csv(const std::string& text);
CsvTable read_csv(const std::string& path);
void write_csv(const std::string& path, const CsvTable& table,
               const std::vector<std::string>& comment_lines = {});

/// First row is the header; the named column becomes the response, all
/// remaining columns are predictors (order preserved).
Dataset read_dataset_csv(const std::string& path, const std::string& response_column);

/// Enough digits to round-trip the exact double through parsing.
std::string format_double(double v);

} // namespace l2boost

#endif
