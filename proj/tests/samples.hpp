#pragma once

#include <string>
#include <vector>

#include "qk/corpus.hpp"

namespace samples {

// Small instance of every corpus builder.
inline std::vector<qk::CorpusEntry> corpus() {
  using namespace qk;
  std::vector<CorpusEntry> out;
  for (std::size_t m = 1; m <= 3; ++m) out.push_back(exterior(m));
  out.push_back(example1(2, 2));
  out.push_back(example1(1, 3));
  out.push_back(example2(1, 1, 2));
  out.push_back(example3(2));
  out.push_back(example4(2));
  out.push_back(preprojective(parse_quiver_spec("A:2")));
  out.push_back(preprojective(parse_quiver_spec("A:3")));
  out.push_back(trivial_extension_dual(parse_quiver_spec("star:4")));
  out.push_back(trivial_extension_dual(parse_quiver_spec("zigzag:3")));
  out.push_back(path_algebra(parse_quiver_spec("A:2")));
  out.push_back(radical_square_zero(parse_quiver_spec("loops:2")));
  out.push_back(loop_cubed());
  return out;
}

} // namespace samples
