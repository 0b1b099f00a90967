#pragma once

#include <iosfwd>
#include <string>

#include "polyprod/simplicial_complex.hpp"

namespace polyprod {

// Text format:
//   m=<int>
//   facets=<comma-separated vertex lists>     e.g. facets=1 2,2 3,3 4,1 4
//   void=true                                 (optional)
// A leading '{' switches to JSON: {"m":4,"facets":[[1,2],[2,3]],"void":false}.
SimplicialComplex parse_complex(const std::string& text);
SimplicialComplex load_complex(const std::string& path);

// Two-complex pair file (X then A), separated by a blank line or "---".
PairSequence::Pair parse_pair(const std::string& text);
PairSequence::Pair load_pair(const std::string& path);

std::string complex_to_text(const SimplicialComplex& k);
std::string complex_to_json(const SimplicialComplex& k);

}  // namespace polyprod
