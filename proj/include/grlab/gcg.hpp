#pragma once

#include <string>
#include <vector>

#include "grlab/colored_graph.hpp"

namespace grlab {

// .gcg text format: optional '#' comment lines; header "n k"; then n-1
// data lines, line u holding the colors c(u,u+1) ... c(u,n-1) separated by
// single spaces. UTF-8, LF endings.

class GcgError : public Error {
public:
    GcgError(int line, const std::string& what)
        : Error("gcg line " + std::to_string(line) + ": " + what), line_(line) {}
    int line() const { return line_; }

private:
    int line_;
};

ColoredCompleteGraph decode_gcg(const std::string& text);

// deterministic canonical text: fixed ordering, no comments, no trailing
// whitespace
std::string encode_gcg(const ColoredCompleteGraph& g);

ColoredCompleteGraph read_gcg_file(const std::string& path);

// comments, if any, are emitted as '#' lines ahead of the canonical body
void write_gcg_file(const std::string& path, const ColoredCompleteGraph& g,
                    const std::vector<std::string>& comments = {});

}  // namespace grlab
