#ifndef SSET_IO_HPP
#define SSET_IO_HPP

#include "sset/lifting.hpp"

namespace sset {

// Syntax error with position; semantic errors are plain Error with the
// violated invariant in the message.
struct ParseError : Error {
    ParseError(const std::string& what, int line, int col)
        : Error(what + " at line " + std::to_string(line) + ", column " + std::to_string(col)),
          line(line),
          col(col) {}
    int line, col;
};

// Canonical serialization: sorted object keys, ids sorted within each
// dimension, two-space indentation, trailing newline.  parse(serialize(x))
// is the identity and canonical files round-trip byte-for-byte.
std::string serialize(const Presentation& p);
Presentation parse_presentation(const std::string& text, const std::string& context = "");

Presentation load_presentation(const std::string& path);
void store_presentation(const Presentation& p, const std::string& path);

// Map files reference their end presentations by path (relative to the map
// file's directory).
SimplicialMap load_map(const std::string& path);

// Square files name four map files: i, p, top, bottom.
LiftingSquare load_square(const std::string& path);

// The corpus as canonical files, one per entry, named <entry>.json.
void dump_corpus(const std::string& directory);

}  // namespace sset

#endif
