#include "surfpts/corpus.hpp"

#include "surfpts/error.hpp"
#include "surfpts/polynomial.hpp"

#include <cctype>
#include <string>

namespace surfpts {

std::vector<CorpusEntry> parse_corpus(std::istream& in) {
  std::vector<CorpusEntry> out;
  std::string raw;
  int number = 0;
  while (std::getline(in, raw)) {
    ++number;
    std::string_view line = raw;
    if (const auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    while (!line.empty() && std::isspace(static_cast<unsigned char>(line.front()))) line.remove_prefix(1);
    while (!line.empty() && std::isspace(static_cast<unsigned char>(line.back()))) line.remove_suffix(1);
    if (line.empty()) continue;
    const auto colon = line.find(':');
    if (colon == std::string_view::npos) fail(Errc::parse_error, "corpus line " + std::to_string(number) + ": missing ':'");
    auto q = Integer::parse(line.substr(0, colon));
    if (!q) fail(Errc::parse_error, "corpus line " + std::to_string(number) + ": bad q");
    try {
      out.push_back({*q, parse_coefficients(line.substr(colon + 1)), number});
    } catch (const Error& e) {
      fail(Errc::parse_error, "corpus line " + std::to_string(number) + ": " + e.what());
    }
  }
  return out;
}

}  // namespace surfpts
