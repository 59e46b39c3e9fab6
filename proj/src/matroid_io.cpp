#include "matsplit/matroid_io.hpp"

#include <algorithm>
#include <sstream>

#include "matsplit/errors.hpp"

namespace matsplit {

namespace {

struct Line {
    int number = 0;
    std::string text;
};

std::vector<Line> significant_lines(const std::string& text) {
    std::vector<Line> out;
    std::istringstream in(text);
    std::string raw;
    int number = 0;
    while (std::getline(in, raw)) {
        ++number;
        const std::size_t hash = raw.find('#');
        if (hash != std::string::npos) raw.erase(hash);
        const std::size_t first = raw.find_first_not_of(" \t\r");
        if (first == std::string::npos) continue;
        const std::size_t last = raw.find_last_not_of(" \t\r");
        out.push_back(Line{number, raw.substr(first, last - first + 1)});
    }
    return out;
}

[[noreturn]] void fail_parse(int line, const std::string& what) {
    throw ParseError("line " + std::to_string(line) + ": " + what);
}

std::vector<std::string> tokens_of(const std::string& text) {
    std::istringstream in(text);
    std::vector<std::string> out;
    std::string tok;
    while (in >> tok) out.push_back(tok);
    return out;
}

int parse_int(const std::string& tok, int line, const std::string& what) {
    std::size_t used = 0;
    int value = 0;
    try {
        value = std::stoi(tok, &used);
    } catch (const std::exception&) {
        fail_parse(line, what + ": '" + tok + "' is not an integer");
    }
    if (used != tok.size()) fail_parse(line, what + ": '" + tok + "' is not an integer");
    return value;
}

}  // namespace

MatroidFile parse_matroid_file(const std::string& text) {
    const std::vector<Line> lines = significant_lines(text);
    std::size_t at = 0;
    auto next = [&](const std::string& expected) -> const Line& {
        if (at >= lines.size()) {
            throw ParseError("unexpected end of file, expected " + expected);
        }
        return lines[at++];
    };

    MatroidFile file;
    {
        const Line& line = next("'matroid <name>'");
        std::vector<std::string> toks = tokens_of(line.text);
        if (toks.size() != 2 || toks[0] != "matroid") {
            fail_parse(line.number, "expected 'matroid <name>'");
        }
        file.name = toks[1];
    }
    {
        const Line& line = next("'field <p>'");
        std::vector<std::string> toks = tokens_of(line.text);
        if (toks.size() != 2 || toks[0] != "field") fail_parse(line.number, "expected 'field <p>'");
        file.p = parse_int(toks[1], line.number, "field order");
        if (!is_prime(file.p)) {
            throw ValidationError("line " + std::to_string(line.number) + ": field order " +
                                  std::to_string(file.p) + " is not prime");
        }
    }
    {
        const Line& line = next("'elements ...'");
        std::vector<std::string> toks = tokens_of(line.text);
        if (toks.empty() || toks[0] != "elements") fail_parse(line.number, "expected 'elements ...'");
        for (std::size_t i = 1; i < toks.size(); ++i) {
            const int label = parse_int(toks[i], line.number, "element label");
            if (label <= 0) {
                throw ValidationError("line " + std::to_string(line.number) +
                                      ": element labels must be positive, got " + toks[i]);
            }
            if (!file.labels.empty() && label <= file.labels.back()) {
                throw ValidationError("line " + std::to_string(line.number) +
                                      ": element labels must be strictly ascending");
            }
            file.labels.push_back(label);
        }
    }
    {
        const Line& line = next("'matrix'");
        if (line.text != "matrix") fail_parse(line.number, "expected 'matrix'");
    }
    std::vector<std::vector<int>> rows;
    for (;;) {
        const Line& line = next("a matrix row or 'end'");
        if (line.text == "end") break;
        std::vector<std::string> toks = tokens_of(line.text);
        if (toks.size() != file.labels.size()) {
            fail_parse(line.number, "expected " + std::to_string(file.labels.size()) +
                                        " entries, got " + std::to_string(toks.size()));
        }
        std::vector<int> row;
        row.reserve(toks.size());
        for (const std::string& tok : toks) {
            const int v = parse_int(tok, line.number, "matrix entry");
            if (v < 0 || v >= file.p) {
                throw ValidationError("line " + std::to_string(line.number) + ": entry " + tok +
                                      " is outside [0," + std::to_string(file.p) +
                                      "); entries are not reduced implicitly");
            }
            row.push_back(v);
        }
        rows.push_back(std::move(row));
    }
    if (at != lines.size()) {
        fail_parse(lines[at].number, "unexpected content after 'end'");
    }
    file.entries.resize(static_cast<int>(rows.size()), static_cast<int>(file.labels.size()));
    for (std::size_t i = 0; i < rows.size(); ++i) {
        for (std::size_t j = 0; j < rows[i].size(); ++j) {
            file.entries(static_cast<int>(i), static_cast<int>(j)) = rows[i][j];
        }
    }
    return file;
}

VectorMatroid to_matroid(const MatroidFile& file) {
    return VectorMatroid(LabeledMatrix(PrimeField(file.p), file.entries, file.labels));
}

std::string format_matroid(const std::string& name, const VectorMatroid& m) {
    // Emit columns in ascending label order regardless of internal order.
    const std::vector<int>& sorted = m.ground().labels();
    std::vector<int> cols;
    cols.reserve(sorted.size());
    for (int label : sorted) cols.push_back(m.matrix().column_index(label));

    std::string out = "matroid " + name + "\n";
    out += "field " + std::to_string(m.field().order()) + "\n";
    out += "elements";
    for (int label : sorted) out += " " + std::to_string(label);
    out += "\nmatrix\n";
    for (int i = 0; i < m.matrix().rows(); ++i) {
        for (std::size_t j = 0; j < cols.size(); ++j) {
            if (j) out += ' ';
            out += std::to_string(m.matrix().entries()(i, cols[j]));
        }
        out += '\n';
    }
    out += "end\n";
    return out;
}

}  // namespace matsplit
