#include "gaugeqed/csv.hpp"

#include <charconv>
#include <cmath>

namespace gaugeqed {

std::string format_sig12(double value) {
    if (value == 0.0) return "0";  // normalize -0
    char buf[40];
    const auto res = std::to_chars(buf, buf + sizeof(buf), value,
                                   std::chars_format::general, 12);
    return std::string(buf, res.ptr);
}

void CsvWriter::header(const std::vector<std::string>& columns) { emit(columns); }

void CsvWriter::row(const std::vector<std::string>& cells) { emit(cells); }

void CsvWriter::numeric_row(const std::vector<double>& values) {
    std::vector<std::string> cells;
    cells.reserve(values.size());
    for (double v : values) cells.push_back(format_sig12(v));
    emit(cells);
}

void CsvWriter::emit(const std::vector<std::string>& cells) {
    for (size_t i = 0; i < cells.size(); ++i) {
        if (i > 0) out_ << ',';
        out_ << cells[i];
    }
    out_ << '\n';
}

}  // namespace gaugeqed
