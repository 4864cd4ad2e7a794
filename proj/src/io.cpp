#include "harris/io.hpp"

#include <cmath>
#include <charconv>
#include <filesystem>
#include <fstream>
#include <sstream>

#include <nlohmann/json.hpp>

#include "harris/demo_chains.hpp"

namespace harris {

namespace {

using nlohmann::json;

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ParseError(path + ": cannot open file");
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

double parse_number(std::string_view text, const std::string& path, std::size_t line,
                    std::size_t col) {
    // Trim surrounding whitespace; std::from_chars wants a bare number.
    std::size_t begin = text.find_first_not_of(" \t\r");
    std::size_t end = text.find_last_not_of(" \t\r");
    if (begin == std::string_view::npos)
        throw ParseError(path + ":" + std::to_string(line) + ":" + std::to_string(col) +
                         ": empty field");
    text = text.substr(begin, end - begin + 1);
    double value = 0.0;
    const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
    if (ec != std::errc{} || ptr != text.data() + text.size() || !std::isfinite(value))
        throw ParseError(path + ":" + std::to_string(line) + ":" + std::to_string(col) +
                         ": '" + std::string(text) + "' is not a finite number");
    return value;
}

std::vector<std::vector<double>> parse_csv_rows(const std::string& content,
                                                const std::string& path) {
    std::vector<std::vector<double>> rows;
    std::istringstream stream(content);
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(stream, line)) {
        ++lineno;
        if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
        std::vector<double> row;
        std::size_t start = 0;
        std::size_t col = 0;
        while (true) {
            ++col;
            const std::size_t comma = line.find(',', start);
            const std::string_view field =
                std::string_view(line).substr(start, comma == std::string::npos
                                                         ? std::string::npos
                                                         : comma - start);
            row.push_back(parse_number(field, path, lineno, col));
            if (comma == std::string::npos) break;
            start = comma + 1;
        }
        rows.push_back(std::move(row));
    }
    if (rows.empty()) throw ParseError(path + ": no data rows");
    return rows;
}

double max_row_deviation(const std::vector<std::vector<double>>& rows) {
    double dev = 0.0;
    for (const auto& row : rows) {
        double sum = 0.0;
        for (double x : row) sum += x;
        dev = std::max(dev, std::abs(sum - 1.0));
    }
    return dev;
}

ChainInput make_input(std::string source, std::vector<std::vector<double>> rows,
                      std::optional<std::vector<double>> v,
                      std::vector<std::string> labels) {
    const std::size_t n = rows.size();
    for (std::size_t i = 0; i < n; ++i)
        if (rows[i].size() != n)
            throw ParseError(source + ": row " + std::to_string(i + 1) + " has " +
                             std::to_string(rows[i].size()) + " fields, expected " +
                             std::to_string(n));
    const double dev = max_row_deviation(rows);
    std::optional<LyapunovWeight> weight;
    if (v) {
        if (v->size() != n)
            throw ParseError(source + ": v has " + std::to_string(v->size()) +
                             " entries, expected " + std::to_string(n));
        weight.emplace(std::move(*v));
    }
    return ChainInput{std::move(source), StateSpace(n, std::move(labels)),
                      Kernel(rows), std::move(weight), dev};
}

} // namespace

ChainInput load_kernel_csv(const std::string& path) {
    return make_input(path, parse_csv_rows(read_file(path), path), std::nullopt, {});
}

ChainInput load_kernel_json(const std::string& path) {
    json doc;
    try {
        doc = json::parse(read_file(path));
    } catch (const json::parse_error& e) {
        throw ParseError(path + ": " + e.what());
    }
    try {
        if (!doc.is_object()) throw ParseError(path + ": top level must be an object");
        const auto n = doc.at("n").get<std::size_t>();
        auto rows = doc.at("rows").get<std::vector<std::vector<double>>>();
        if (rows.size() != n)
            throw ParseError(path + ": 'rows' has " + std::to_string(rows.size()) +
                             " rows, expected n = " + std::to_string(n));
        std::optional<std::vector<double>> v;
        if (doc.contains("v")) v = doc.at("v").get<std::vector<double>>();
        std::vector<std::string> labels;
        if (doc.contains("labels")) labels = doc.at("labels").get<std::vector<std::string>>();
        return make_input(path, std::move(rows), std::move(v), std::move(labels));
    } catch (const json::exception& e) {
        throw ParseError(path + ": " + e.what());
    }
}

ChainInput load_chain(const std::string& spec) {
    if (spec.rfind("demo:", 0) == 0) {
        NamedExample ex = demo_by_name(spec.substr(5));
        return ChainInput{spec, std::move(ex.space), std::move(ex.kernel),
                          std::move(ex.v), 0.0};
    }
    if (spec.size() > 5 && spec.substr(spec.size() - 5) == ".json") return load_kernel_json(spec);
    return load_kernel_csv(spec);
}

std::vector<double> load_numbers(const std::string& path) {
    const std::string content = read_file(path);
    std::vector<double> values;
    std::istringstream stream(content);
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(stream, line)) {
        ++lineno;
        if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
        std::size_t start = 0;
        std::size_t col = 0;
        while (true) {
            ++col;
            const std::size_t comma = line.find(',', start);
            const std::string_view field =
                std::string_view(line).substr(start, comma == std::string::npos
                                                         ? std::string::npos
                                                         : comma - start);
            values.push_back(parse_number(field, path, lineno, col));
            if (comma == std::string::npos) break;
            start = comma + 1;
        }
    }
    if (values.empty()) throw ParseError(path + ": no values");
    return values;
}

LyapunovWeight load_weight(const std::string& path_or_inline, std::size_t n) {
    std::vector<double> values;
    if (std::filesystem::exists(path_or_inline)) {
        values = load_numbers(path_or_inline);
    } else {
        // Inline comma-separated list; anything unparseable is reported as a
        // missing file since that is the more likely intent.
        try {
            std::size_t start = 0;
            std::size_t col = 0;
            while (true) {
                ++col;
                const std::size_t comma = path_or_inline.find(',', start);
                const std::string_view field =
                    std::string_view(path_or_inline)
                        .substr(start, comma == std::string::npos ? std::string::npos
                                                                  : comma - start);
                values.push_back(parse_number(field, "<inline>", 1, col));
                if (comma == std::string::npos) break;
                start = comma + 1;
            }
        } catch (const ParseError&) {
            throw ParseError("'" + path_or_inline +
                             "' is neither an existing file nor an inline vector");
        }
    }
    if (values.size() != n)
        throw ParseError("V has " + std::to_string(values.size()) + " entries, expected " +
                         std::to_string(n));
    return LyapunovWeight(std::move(values));
}

Measure load_start_measure(const std::string& spec, std::size_t n) {
    if (spec == "uniform") return Measure::uniform(n);
    if (spec.rfind("delta:", 0) == 0) {
        std::size_t at = 0;
        const std::string_view digits = std::string_view(spec).substr(6);
        const auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), at);
        if (ec != std::errc{} || ptr != digits.data() + digits.size())
            throw ParseError("'" + spec + "': expected delta:<state index>");
        if (at >= n) throw ParseError("'" + spec + "': state index out of range");
        return Measure::dirac(n, at);
    }
    std::vector<double> values = load_numbers(spec);
    if (values.size() != n)
        throw ParseError(spec + ": mu0 has " + std::to_string(values.size()) +
                         " entries, expected " + std::to_string(n));
    return Measure(std::move(values));
}

} // namespace harris
