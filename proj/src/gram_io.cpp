#include "tamelat/gram_io.hpp"

#include <fstream>
#include <istream>
#include <ostream>
#include <regex>
#include <sstream>
#include <vector>

namespace tamelat {
namespace {

const std::regex kIntegerToken(R"([+-]?[0-9]+)");

std::vector<std::string> data_lines(std::istream& in) {
    std::vector<std::string> lines;
    std::string line;
    while (std::getline(in, line)) {
        const auto first = line.find_first_not_of(" \t\r");
        if (first == std::string::npos || line[first] == '#') {
            continue;
        }
        lines.push_back(line);
    }
    return lines;
}

std::vector<Integer> parse_integers(const std::string& line, std::size_t line_no) {
    std::istringstream tokens(line);
    std::vector<Integer> values;
    std::string token;
    while (tokens >> token) {
        if (!std::regex_match(token, kIntegerToken)) {
            throw ParseError("data line " + std::to_string(line_no) + ": '" + token + "' is not an integer");
        }
        values.emplace_back(token[0] == '+' ? token.substr(1) : token);
    }
    return values;
}

}  // namespace

GramMatrix read_gram(std::istream& in) {
    const std::vector<std::string> lines = data_lines(in);
    if (lines.empty()) {
        throw ParseError("empty Gram file");
    }
    const std::vector<Integer> header = parse_integers(lines[0], 1);
    if (header.size() != 1 || header[0] < 1 || !header[0].fits_ulong_p()) {
        throw ParseError("first data line must hold a single positive dimension");
    }
    const std::size_t n = header[0].get_ui();
    if (lines.size() != n + 1) {
        throw ParseError("expected " + std::to_string(n) + " matrix rows, found " + std::to_string(lines.size() - 1));
    }
    IntMatrix entries(n, n);
    for (std::size_t i = 0; i < n; ++i) {
        const std::vector<Integer> row = parse_integers(lines[i + 1], i + 2);
        if (row.size() != n) {
            throw ParseError("row " + std::to_string(i + 1) + " has " + std::to_string(row.size()) + " entries, expected " +
                             std::to_string(n));
        }
        for (std::size_t j = 0; j < n; ++j) {
            entries(i, j) = row[j];
        }
    }
    return GramMatrix(std::move(entries));
}

GramMatrix read_gram_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) {
        throw ParseError("cannot open Gram file '" + path + "'");
    }
    return read_gram(in);
}

void write_gram(std::ostream& out, const GramMatrix& gram, const std::string& comment) {
    if (!comment.empty()) {
        out << "# " << comment << '\n';
    }
    out << gram.dim() << '\n';
    for (std::size_t i = 0; i < gram.dim(); ++i) {
        for (std::size_t j = 0; j < gram.dim(); ++j) {
            out << (j ? " " : "") << gram(i, j).get_str();
        }
        out << '\n';
    }
}

}  // namespace tamelat
