#pragma once

#include <json.hpp>

#include <initializer_list>
#include <string>
#include <string_view>
#include <vector>

namespace radiant {

inline constexpr int kSchemaVersion = 1;
inline constexpr const char* kToolVersion = "radiant 1.0.0";

/// Shortest decimal that round-trips to the same double. NaN/inf are
/// rejected; nothing in the output formats may be non-finite.
std::string format_double(double v);

/// CSV writer for the fixed dialect: comma separators, '#'-prefixed
/// comment lines, LF endings, doubles in shortest round-trip form.
class CsvWriter {
  public:
    void comment(const std::string& text);
    void row(const std::vector<std::string>& cells);

    /// Convenience: formats doubles, passes strings through.
    struct Cell {
        std::string text;
        Cell(double v) : text(format_double(v)) {}
        Cell(int v) : text(std::to_string(v)) {}
        Cell(const char* s) : text(s) {}
        Cell(std::string s) : text(std::move(s)) {}
        Cell(std::string_view s) : text(s) {}
    };
    void row(std::initializer_list<Cell> cells);

    const std::string& str() const { return buf_; }

  private:
    std::string buf_;
};

/// Envelope every JSON record shares: schema version, tool version and an
/// echo of the validated inputs next to the payload.
nlohmann::json make_record(const nlohmann::json& inputs, const nlohmann::json& payload);

/// Writes to the path, or to stdout when path is empty. Always LF, no
/// trailing spaces; JSON is dumped with 2-space indent plus final newline.
void write_output(const std::string& path, const std::string& contents);
std::string dump_record(const nlohmann::json& record);

}  // namespace radiant
