#include "radiant/output.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <iostream>
#include <stdexcept>
#include <vector>

namespace radiant {

std::string format_double(double v) {
    if (!std::isfinite(v)) throw std::invalid_argument("format_double: non-finite value");
    if (v == 0.0) v = 0.0;  // normalize -0
    char buf[32];
    const auto res = std::to_chars(buf, buf + sizeof(buf), v);
    return std::string(buf, res.ptr);
}

void CsvWriter::comment(const std::string& text) {
    buf_ += "# ";
    buf_ += text;
    buf_ += '\n';
}

void CsvWriter::row(const std::vector<std::string>& cells) {
    for (std::size_t i = 0; i < cells.size(); ++i) {
        if (i) buf_ += ',';
        buf_ += cells[i];
    }
    buf_ += '\n';
}

void CsvWriter::row(std::initializer_list<Cell> cells) {
    bool first = true;
    for (const auto& c : cells) {
        if (!first) buf_ += ',';
        buf_ += c.text;
        first = false;
    }
    buf_ += '\n';
}

nlohmann::json make_record(const nlohmann::json& inputs, const nlohmann::json& payload) {
    return nlohmann::json{{"schema_version", kSchemaVersion},
                          {"tool", kToolVersion},
                          {"inputs", inputs},
                          {"payload", payload}};
}

std::string dump_record(const nlohmann::json& record) {
    return record.dump(2) + "\n";
}

void write_output(const std::string& path, const std::string& contents) {
    if (path.empty()) {
        std::cout << contents;
        return;
    }
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot open output file: " + path);
    out << contents;
}

}  // namespace radiant
