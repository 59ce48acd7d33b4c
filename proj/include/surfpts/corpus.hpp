#pragma once

#include "surfpts/integer.hpp"

#include <istream>
#include <vector>

namespace surfpts {

/// One "q:c4,c3,c2,c1,c0" line of a corpus file.
struct CorpusEntry {
  Integer q;
  std::vector<Integer> coefficients;  // descending
  int line = 0;
};

/// Blank lines and '#' comments are skipped. Throws Errc::parse_error with
/// the offending line number.
std::vector<CorpusEntry> parse_corpus(std::istream& in);

}  // namespace surfpts
