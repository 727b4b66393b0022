#include "csv.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <istream>
#include <optional>
#include <ostream>
#include <string_view>
#include <vector>

#include <fmt/format.h>

namespace kerndict::io {

namespace {

std::string_view trim(std::string_view s) {
    const auto first = s.find_first_not_of(" \t\r");
    if (first == std::string_view::npos) {
        return {};
    }
    const auto last = s.find_last_not_of(" \t\r");
    return s.substr(first, last - first + 1);
}

std::optional<double> parse_number(std::string_view field) {
    field = trim(field);
    if (!field.empty() && field.front() == '+') {
        field.remove_prefix(1);
    }
    double value = 0.0;
    const auto* end = field.data() + field.size();
    const auto [ptr, ec] = std::from_chars(field.data(), end, value);
    if (field.empty() || ec != std::errc() || ptr != end) {
        return std::nullopt;
    }
    return value;
}

std::vector<std::string_view> split(std::string_view line) {
    std::vector<std::string_view> fields;
    std::size_t start = 0;
    while (true) {
        const auto comma = line.find(',', start);
        fields.push_back(line.substr(start, comma == std::string_view::npos ? std::string_view::npos : comma - start));
        if (comma == std::string_view::npos) {
            return fields;
        }
        start = comma + 1;
    }
}

}  // namespace

CsvTable parse_csv(std::istream& in, const std::string& source) {
    CsvTable table;
    std::vector<std::vector<double>> rows;
    std::string line;
    std::size_t line_no = 0;
    std::size_t width = 0;
    bool first_content = true;
    while (std::getline(in, line)) {
        ++line_no;
        std::string_view view = line;
        if (line_no == 1 && view.starts_with("\xEF\xBB\xBF")) {
            view.remove_prefix(3);
        }
        if (trim(view).empty()) {
            continue;
        }
        const auto fields = split(view);
        std::vector<double> row;
        row.reserve(fields.size());
        bool numeric = true;
        for (const auto field : fields) {
            const auto value = parse_number(field);
            if (!value) {
                numeric = false;
                break;
            }
            row.push_back(*value);
        }
        if (!numeric) {
            if (first_content) {
                table.had_header = true;
                first_content = false;
                continue;
            }
            throw ParseError(source, line_no, "non-numeric field");
        }
        first_content = false;
        if (width == 0) {
            width = row.size();
        } else if (row.size() != width) {
            throw ParseError(source, line_no,
                             fmt::format("expected {} fields, found {}", width, row.size()));
        }
        for (double v : row) {
            if (!std::isfinite(v)) {
                throw ParseError(source, line_no, "non-finite value");
            }
        }
        rows.push_back(std::move(row));
    }
    if (rows.empty()) {
        throw ParseError(source, 0, "no data rows");
    }
    table.rows.resize(static_cast<Eigen::Index>(rows.size()), static_cast<Eigen::Index>(width));
    for (std::size_t i = 0; i < rows.size(); ++i) {
        for (std::size_t j = 0; j < width; ++j) {
            table.rows(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) = rows[i][j];
        }
    }
    return table;
}

CsvTable read_csv(const std::string& path) {
    std::ifstream in(path);
    if (!in) {
        throw IoError("cannot read '" + path + "'");
    }
    return parse_csv(in, path);
}

void write_csv(std::ostream& out, const MatrixXd& matrix) {
    for (Eigen::Index i = 0; i < matrix.rows(); ++i) {
        for (Eigen::Index j = 0; j < matrix.cols(); ++j) {
            out << (j ? "," : "") << fmt::format("{}", matrix(i, j));
        }
        out << '\n';
    }
}

void write_csv(const std::string& path, const MatrixXd& matrix) {
    std::ofstream out(path);
    if (!out) {
        throw IoError("cannot write '" + path + "'");
    }
    write_csv(out, matrix);
}

}  // namespace kerndict::io
