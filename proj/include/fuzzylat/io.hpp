#pragma once

#include <filesystem>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

#include "json.hpp"

#include "fuzzylat/frame.hpp"
#include "fuzzylat/order.hpp"
#include "fuzzylat/report.hpp"

// Matrix documents on disk.
//
// JSON: {"elements": [labels], "mu": [[grades], ...], optional "name",
// "description", "source"}. CSV: header row of labels (first cell is a
// free-form corner), then one row per element starting with its label.
// Blank CSV cells read as 0. Grades are written with the fewest digits that
// read back to the same double.

namespace fuzzylat::io {

enum class Format { Json, Csv };

Format parse_format(std::string_view name);
Format format_from_path(const std::filesystem::path& path);

/// Malformed input. row/col are 0-based matrix positions when known, else -1.
class LoadError : public std::runtime_error {
public:
    LoadError(const std::string& what, long row = -1, long col = -1)
        : std::runtime_error(what), row_(row), col_(col) {}
    long row() const noexcept { return row_; }
    long col() const noexcept { return col_; }

private:
    long row_;
    long col_;
};

struct Metadata {
    std::string name;
    std::string description;
    std::string source;
};

struct MatrixDocument {
    Frame frame;
    Metadata metadata;
};

MatrixDocument parse_json(std::string_view text);
Frame parse_csv(std::string_view text);

MatrixDocument load_document(const std::filesystem::path& path,
                             std::optional<Format> format = std::nullopt);
Frame load(const std::filesystem::path& path, std::optional<Format> format = std::nullopt);

std::string format_grade(double g);
std::string to_json(const Frame& frame, const Metadata& metadata = {});
std::string to_csv(const Frame& frame);
std::string emit(const Frame& frame, Format format, const Metadata& metadata = {});
void save(const Frame& frame, const std::filesystem::path& path,
          std::optional<Format> format = std::nullopt, const Metadata& metadata = {});

/// Label equality plus entrywise |a - b| <= tol. tol = 0 demands exact equality.
/// Checks: "labels" (witness: index) and "grades" (witness: row, col), in
/// row-major order so the first grade witness is the first differing cell.
CheckReport compare(const Frame& a, const Frame& b, double tol = 1e-9,
                    std::size_t limit = kDefaultWitnessLimit);

/// Reports as JSON. When `frame` is given, witness indices are also rendered
/// as labels under "labels".
nlohmann::json report_json(const LawReport& report, const Frame* frame = nullptr);
nlohmann::json report_json(const CheckReport& report, const Frame* frame = nullptr);
nlohmann::json cert_error_json(const LatticeCertError& error, const Frame& frame);

std::string read_file(const std::filesystem::path& path);
void write_file(const std::filesystem::path& path, std::string_view text);

}  // namespace fuzzylat::io
