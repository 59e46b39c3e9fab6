#pragma once

#include <string>

#include "matsplit/matroid.hpp"

namespace matsplit {

// Parsed form of the line-oriented matroid file format:
//
//   matroid <name>
//   field <p>
//   elements <l1> <l2> ... <lc>     (strictly ascending positive integers)
//   matrix
//   <c space-separated integers in [0,p)>   (r rows)
//   end
//
// '#' starts a comment, blank lines are ignored.
struct MatroidFile {
    std::string name;
    int p = 0;
    std::vector<int> labels;
    GfMatrix entries;
};

// Throws ParseError (with the offending line number) on malformed structure
// and ValidationError on rule violations: non-prime field order, duplicate or
// unordered labels, entries outside [0, p). Entries are never reduced.
MatroidFile parse_matroid_file(const std::string& text);

VectorMatroid to_matroid(const MatroidFile& file);

// Canonical formatting: single spaces, rows in original order, columns in
// ascending label order, terminated by "end\n". parse(format(m)) returns a
// matrix-equal matroid.
std::string format_matroid(const std::string& name, const VectorMatroid& m);

}  // namespace matsplit
