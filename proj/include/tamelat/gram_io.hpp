#pragma once

#include <iosfwd>
#include <string>

#include "tamelat/lattice.hpp"

namespace tamelat {

// Gram file format: the first data line holds N, the next N lines hold N
// whitespace-separated integers each. Lines starting with '#' are comments;
// blank lines are ignored. Only decimal integers are accepted.

GramMatrix read_gram(std::istream& in);
GramMatrix read_gram_file(const std::string& path);

void write_gram(std::ostream& out, const GramMatrix& gram, const std::string& comment = {});

}  // namespace tamelat
