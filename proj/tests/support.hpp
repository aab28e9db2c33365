#pragma once

#include "torelli/rep_theory.hpp"

#include <fstream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

namespace support {

inline const torelli::RepDefinition& jones() {
  static const torelli::RepDefinition rep = torelli::build_rep(1, -4, 5);
  return rep;
}

inline std::string data_path(const std::string& name) { return std::string(TORELLI_DATA_DIR) + "/" + name; }

inline std::vector<std::string> catalog_lines(const std::string& name = "torelli_catalog.txt") {
  std::ifstream in(data_path(name));
  std::stringstream ss;
  ss << in.rdbuf();
  return torelli::read_catalog_lines(ss.str());
}

inline std::vector<torelli::MCGWord> catalog_words() {
  std::vector<torelli::MCGWord> out;
  for (const auto& line : catalog_lines()) out.push_back(torelli::parse_word(line));
  return out;
}

inline torelli::MCGWord random_word(std::mt19937_64& rng, int max_length) {
  std::uniform_int_distribution<int> len(0, max_length), gen(1, 5), sign(0, 1);
  std::vector<torelli::Letter> letters;
  const int n = len(rng);
  for (int k = 0; k < n; ++k) letters.push_back({gen(rng), sign(rng) ? 1L : -1L});
  return torelli::MCGWord(letters);
}

inline torelli::MCGWord x(int i) {
  return torelli::MCGWord::generator(i) * torelli::MCGWord::generator(i + 1);
}

inline torelli::MCGWord twist(int i) { return x(i).power(6); }

}  // namespace support
