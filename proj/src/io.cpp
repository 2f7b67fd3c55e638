#include "fuzzylat/io.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <sstream>
#include <system_error>
#include <vector>

namespace fuzzylat::io {

namespace {

std::string where(long row, long col) {
    return " at row " + std::to_string(row) + ", column " + std::to_string(col);
}

std::string_view trim(std::string_view s) {
    while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
    while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) {
        s.remove_suffix(1);
    }
    return s;
}

std::vector<std::string_view> split(std::string_view line, char sep) {
    std::vector<std::string_view> out;
    std::size_t start = 0;
    while (true) {
        const auto pos = line.find(sep, start);
        out.push_back(trim(line.substr(start, pos == std::string_view::npos ? pos : pos - start)));
        if (pos == std::string_view::npos) break;
        start = pos + 1;
    }
    return out;
}

// Locale-independent decimal parse of a grade cell.
double parse_grade(std::string_view text, long row, long col) {
    if (text.empty()) return 0.0;
    if (text.front() == '+') text.remove_prefix(1);
    double v = 0;
    const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
    if (ec != std::errc() || ptr != text.data() + text.size() || !std::isfinite(v)) {
        throw LoadError("not a number '" + std::string(text) + "'" + where(row, col), row, col);
    }
    if (!is_grade(v)) {
        throw LoadError("grade " + std::string(text) + " outside [0,1]" + where(row, col), row,
                        col);
    }
    return v;
}

void check_labels(const std::vector<std::string>& labels) {
    for (std::size_t i = 0; i < labels.size(); ++i) {
        if (labels[i].empty()) {
            throw LoadError("empty element label at position " + std::to_string(i), -1,
                            static_cast<long>(i));
        }
        for (std::size_t j = 0; j < i; ++j) {
            if (labels[i] == labels[j]) {
                throw LoadError("duplicate element label '" + labels[i] + "' at positions " +
                                    std::to_string(j) + " and " + std::to_string(i),
                                -1, static_cast<long>(i));
            }
        }
    }
}

}  // namespace

Format parse_format(std::string_view name) {
    if (name == "json") return Format::Json;
    if (name == "csv") return Format::Csv;
    throw std::invalid_argument("unknown format '" + std::string(name) + "'");
}

Format format_from_path(const std::filesystem::path& path) {
    auto ext = path.extension().string();
    for (auto& c : ext) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
    if (ext == ".csv") return Format::Csv;
    return Format::Json;
}

MatrixDocument parse_json(std::string_view text) {
    nlohmann::json doc;
    try {
        doc = nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw LoadError(std::string("malformed JSON: ") + e.what());
    }
    if (!doc.is_object()) throw LoadError("matrix document must be a JSON object");
    if (!doc.contains("elements") || !doc["elements"].is_array()) {
        throw LoadError("missing \"elements\" array");
    }
    if (!doc.contains("mu") || !doc["mu"].is_array()) throw LoadError("missing \"mu\" array");

    std::vector<std::string> labels;
    for (const auto& e : doc["elements"]) {
        if (!e.is_string()) throw LoadError("element labels must be strings");
        labels.push_back(e.get<std::string>());
    }
    if (labels.empty()) throw LoadError("no elements");
    check_labels(labels);

    const auto n = static_cast<long>(labels.size());
    const auto& rows = doc["mu"];
    if (static_cast<long>(rows.size()) != n) {
        throw LoadError("mu has " + std::to_string(rows.size()) + " rows, expected " +
                            std::to_string(n),
                        static_cast<long>(rows.size()), -1);
    }
    GradeMatrix<double> mu(n, n);
    for (long i = 0; i < n; ++i) {
        const auto& row = rows[static_cast<std::size_t>(i)];
        if (!row.is_array() || static_cast<long>(row.size()) != n) {
            throw LoadError("row " + std::to_string(i) + " does not have " + std::to_string(n) +
                                " entries",
                            i, -1);
        }
        for (long j = 0; j < n; ++j) {
            const auto& cell = row[static_cast<std::size_t>(j)];
            if (!cell.is_number()) throw LoadError("non-numeric grade" + where(i, j), i, j);
            const double v = cell.get<double>();
            if (!is_grade(v)) {
                throw LoadError("grade " + cell.dump() + " outside [0,1]" + where(i, j), i, j);
            }
            mu(i, j) = v;
        }
    }

    Metadata meta;
    auto text_field = [&](const char* key, std::string& out) {
        if (doc.contains(key) && doc[key].is_string()) out = doc[key].get<std::string>();
    };
    text_field("name", meta.name);
    text_field("description", meta.description);
    text_field("source", meta.source);
    return MatrixDocument{Frame(std::move(labels), std::move(mu)), std::move(meta)};
}

Frame parse_csv(std::string_view text) {
    std::vector<std::string_view> lines;
    for (std::string_view rest = text; !rest.empty();) {
        const auto pos = rest.find('\n');
        const auto line = trim(rest.substr(0, pos));
        if (!line.empty()) lines.push_back(line);
        if (pos == std::string_view::npos) break;
        rest.remove_prefix(pos + 1);
    }
    if (lines.empty()) throw LoadError("empty CSV document");

    const auto header = split(lines.front(), ',');
    std::vector<std::string> labels;
    for (std::size_t k = 1; k < header.size(); ++k) labels.emplace_back(header[k]);
    if (labels.empty()) throw LoadError("CSV header names no elements");
    check_labels(labels);

    const auto n = static_cast<long>(labels.size());
    if (static_cast<long>(lines.size()) - 1 != n) {
        throw LoadError("CSV has " + std::to_string(lines.size() - 1) + " rows, expected " +
                            std::to_string(n),
                        static_cast<long>(lines.size()) - 1, -1);
    }
    GradeMatrix<double> mu(n, n);
    for (long i = 0; i < n; ++i) {
        const auto cells = split(lines[static_cast<std::size_t>(i) + 1], ',');
        if (static_cast<long>(cells.size()) != n + 1) {
            throw LoadError("row " + std::to_string(i) + " has " +
                                std::to_string(cells.size() - 1) + " grades, expected " +
                                std::to_string(n),
                            i, -1);
        }
        if (cells.front() != labels[static_cast<std::size_t>(i)]) {
            throw LoadError("row label '" + std::string(cells.front()) + "' does not match '" +
                                labels[static_cast<std::size_t>(i)] + "'",
                            i, -1);
        }
        for (long j = 0; j < n; ++j) {
            mu(i, j) = parse_grade(cells[static_cast<std::size_t>(j) + 1], i, j);
        }
    }
    return Frame(std::move(labels), std::move(mu));
}

std::string read_file(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw LoadError("cannot read '" + path.string() + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void write_file(const std::filesystem::path& path, std::string_view text) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot write '" + path.string() + "'");
    out << text;
}

MatrixDocument load_document(const std::filesystem::path& path, std::optional<Format> format) {
    const auto text = read_file(path);
    if (format.value_or(format_from_path(path)) == Format::Csv) {
        return MatrixDocument{parse_csv(text), {}};
    }
    return parse_json(text);
}

Frame load(const std::filesystem::path& path, std::optional<Format> format) {
    return load_document(path, format).frame;
}

std::string format_grade(double g) {
    char buf[64];
    const auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, g);
    if (ec != std::errc()) throw std::runtime_error("cannot format grade");
    return std::string(buf, ptr);
}

std::string to_json(const Frame& frame, const Metadata& metadata) {
    std::string out = "{\n";
    auto field = [&](const char* key, const std::string& value) {
        if (!value.empty()) {
            out += "  \"" + std::string(key) + "\": " + nlohmann::json(value).dump() + ",\n";
        }
    };
    field("name", metadata.name);
    field("description", metadata.description);
    field("source", metadata.source);
    out += "  \"elements\": " + nlohmann::json(frame.elements()).dump() + ",\n";
    out += "  \"mu\": [\n";
    for (Index i = 0; i < frame.size(); ++i) {
        out += "    [";
        for (Index j = 0; j < frame.size(); ++j) {
            if (j > 0) out += ", ";
            out += format_grade(frame(i, j));
        }
        out += i + 1 < frame.size() ? "],\n" : "]\n";
    }
    out += "  ]\n}\n";
    return out;
}

std::string to_csv(const Frame& frame) {
    std::string out = "mu";
    for (const auto& l : frame.elements()) out += "," + l;
    out += "\n";
    for (Index i = 0; i < frame.size(); ++i) {
        out += frame.label(i);
        for (Index j = 0; j < frame.size(); ++j) out += "," + format_grade(frame(i, j));
        out += "\n";
    }
    return out;
}

std::string emit(const Frame& frame, Format format, const Metadata& metadata) {
    return format == Format::Csv ? to_csv(frame) : to_json(frame, metadata);
}

void save(const Frame& frame, const std::filesystem::path& path, std::optional<Format> format,
          const Metadata& metadata) {
    write_file(path, emit(frame, format.value_or(format_from_path(path)), metadata));
}

CheckReport compare(const Frame& a, const Frame& b, double tol, std::size_t limit) {
    if (a.size() != b.size()) {
        throw std::invalid_argument("cannot compare frames of size " + std::to_string(a.size()) +
                                    " and " + std::to_string(b.size()));
    }
    LawReport labels{"labels", {}}, grades{"grades", {}};
    for (Index i = 0; i < a.size(); ++i) {
        if (a.label(i) != b.label(i)) labels.add("label", {i}, limit);
    }
    for (Index i = 0; i < a.size(); ++i) {
        for (Index j = 0; j < a.size(); ++j) {
            const double d = std::abs(a(i, j) - b(i, j));
            if (tol == 0 ? a(i, j) != b(i, j) : d > tol) grades.add("|a-b|<=tol", {i, j}, limit);
        }
    }
    CheckReport r{"compare", {std::move(labels), std::move(grades)}, {}};
    r.notes.push_back("tolerance " + format_grade(tol));
    return r;
}

nlohmann::json report_json(const LawReport& report, const Frame* frame) {
    nlohmann::json j;
    j["law"] = report.law;
    j["holds"] = report.holds();
    if (report.truncated) j["truncated"] = true;
    auto ws = nlohmann::json::array();
    for (const auto& w : report.witnesses) {
        nlohmann::json wj{{"condition", w.condition}, {"elements", w.elements}};
        if (frame) {
            auto labels = nlohmann::json::array();
            for (Index e : w.elements) {
                labels.push_back(e >= 0 && e < frame->size() ? frame->label(e) : std::string());
            }
            wj["labels"] = std::move(labels);
        }
        ws.push_back(std::move(wj));
    }
    j["witnesses"] = std::move(ws);
    return j;
}

nlohmann::json report_json(const CheckReport& report, const Frame* frame) {
    nlohmann::json j;
    j["subject"] = report.subject;
    j["passed"] = report.passed();
    auto checks = nlohmann::json::array();
    for (const auto& c : report.checks) checks.push_back(report_json(c, frame));
    j["checks"] = std::move(checks);
    if (!report.notes.empty()) j["notes"] = report.notes;
    return j;
}

nlohmann::json cert_error_json(const LatticeCertError& error, const Frame& frame) {
    nlohmann::json j{{"kind", to_string(error.kind)},
                     {"message", error.message()},
                     {"elements", error.detail}};
    if (!error.axiom.empty()) j["axiom"] = error.axiom;
    auto labels = nlohmann::json::array();
    for (Index e : error.detail) labels.push_back(frame.label(e));
    j["labels"] = std::move(labels);
    return j;
}

}  // namespace fuzzylat::io
