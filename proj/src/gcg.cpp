#include "grlab/gcg.hpp"

#include <fstream>
#include <sstream>

namespace grlab {

namespace {

struct LineReader {
    std::istringstream in;
    int line_no = 0;

    explicit LineReader(const std::string& text) : in(text) {}

    // next non-comment line; false at end of input
    bool next(std::string& out) {
        std::string line;
        while (std::getline(in, line)) {
            ++line_no;
            if (!line.empty() && line.back() == '\r') line.pop_back();
            if (!line.empty() && line[0] == '#') continue;
            out = line;
            return true;
        }
        return false;
    }
};

std::vector<long> parse_ints(const std::string& line, int line_no) {
    std::vector<long> out;
    std::istringstream ss(line);
    std::string tok;
    while (ss >> tok) {
        try {
            std::size_t pos = 0;
            out.push_back(std::stol(tok, &pos));
            if (pos != tok.size()) throw std::invalid_argument(tok);
        } catch (const std::exception&) {
            throw GcgError(line_no, "malformed integer '" + tok + "'");
        }
    }
    return out;
}

}  // namespace

ColoredCompleteGraph decode_gcg(const std::string& text) {
    LineReader rd(text);
    std::string line;
    if (!rd.next(line)) throw GcgError(rd.line_no, "missing header");
    auto header = parse_ints(line, rd.line_no);
    if (header.size() != 2) throw GcgError(rd.line_no, "header must be 'n k'");
    long n = header[0], k = header[1];
    if (n < 1 || n > 100000) throw GcgError(rd.line_no, "vertex count out of range");
    if (k < 1 || k > 65535) throw GcgError(rd.line_no, "color count out of range");

    GraphBuilder b(static_cast<int>(n), static_cast<int>(k));
    for (int u = 0; u + 1 < n; ++u) {
        if (!rd.next(line))
            throw GcgError(rd.line_no, "missing row for vertex " + std::to_string(u));
        auto row = parse_ints(line, rd.line_no);
        long expect = n - 1 - u;
        if (static_cast<long>(row.size()) < expect)
            throw GcgError(rd.line_no, "row " + std::to_string(u) + " has " +
                                           std::to_string(row.size()) + " colors, expected " +
                                           std::to_string(expect));
        if (static_cast<long>(row.size()) > expect)
            throw GcgError(rd.line_no, "row " + std::to_string(u) +
                                           ": duplicate assignment (extra entries)");
        for (long j = 0; j < expect; ++j) {
            long c = row[j];
            if (c < 1 || c > k)
                throw GcgError(rd.line_no, "color " + std::to_string(c) +
                                               " out of range 1.." + std::to_string(k));
            b.set_color(u, static_cast<int>(u + 1 + j), static_cast<ColorId>(c));
        }
    }
    if (rd.next(line) && !line.empty())
        throw GcgError(rd.line_no, "trailing content after last row");
    return b.build();
}

std::string encode_gcg(const ColoredCompleteGraph& g) {
    std::string out;
    out += std::to_string(g.order()) + " " + std::to_string(g.color_count()) + "\n";
    for (int u = 0; u + 1 < g.order(); ++u) {
        for (int v = u + 1; v < g.order(); ++v) {
            if (v > u + 1) out += ' ';
            out += std::to_string(g.color(u, v));
        }
        out += '\n';
    }
    return out;
}

ColoredCompleteGraph read_gcg_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Error("cannot open '" + path + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return decode_gcg(ss.str());
}

void write_gcg_file(const std::string& path, const ColoredCompleteGraph& g,
                    const std::vector<std::string>& comments) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw Error("cannot write '" + path + "'");
    for (const auto& c : comments) out << "# " << c << "\n";
    out << encode_gcg(g);
}

}  // namespace grlab
