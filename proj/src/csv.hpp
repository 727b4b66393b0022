#ifndef KERNDICT_CSV_HPP
#define KERNDICT_CSV_HPP

#include <iosfwd>
#include <string>

#include "kerndict/error.hpp"
#include "kerndict/gram.hpp"

namespace kerndict::io {

/// Malformed input; `line` is 1-based, 0 when not tied to a line.
class ParseError : public Error {
public:
    ParseError(const std::string& source, std::size_t line, const std::string& message)
        : Error(source + (line ? ":" + std::to_string(line) : std::string()) + ": " + message), line_(line) {}

    std::size_t line() const { return line_; }

private:
    std::size_t line_;
};

/// Input or output file that cannot be opened.
class IoError : public Error {
public:
    using Error::Error;
};

struct CsvTable {
    MatrixXd rows;
    bool had_header = false;
};

/**
 * Comma-separated reals, one point per line, '.' decimal separator.
 * A first line that does not parse as numbers is taken as a header. Blank
 * lines are skipped; ragged rows are rejected with their line number.
 */
CsvTable parse_csv(std::istream& in, const std::string& source = "<input>");
CsvTable read_csv(const std::string& path);

/// Writes one row per line with round-trip precision.
void write_csv(std::ostream& out, const MatrixXd& matrix);
void write_csv(const std::string& path, const MatrixXd& matrix);

}  // namespace kerndict::io

#endif  // KERNDICT_CSV_HPP
