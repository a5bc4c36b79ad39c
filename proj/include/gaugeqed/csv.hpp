#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace gaugeqed {

/// Locale-independent shortest representation truncated to 12 significant
/// digits. Identical input bits give identical text.
std::string format_sig12(double value);

// Deterministic CSV emitter: UTF-8, comma separators, LF line endings,
// header row first.
class CsvWriter {
  public:
    explicit CsvWriter(std::ostream& out) : out_(out) {}
    void header(const std::vector<std::string>& columns);
    void row(const std::vector<std::string>& cells);
    void numeric_row(const std::vector<double>& values);

  private:
    void emit(const std::vector<std::string>& cells);
    std::ostream& out_;
};

}  // namespace gaugeqed
