#include "doob/graph.hpp"

#include <algorithm>

namespace doob {

std::vector<uint64_t> ball(const GraphSpec& s, uint64_t x) {
  std::vector<uint64_t> out;
  out.reserve(static_cast<size_t>(degree(s)) + 1);
  out.push_back(x);
  for_each_neighbor(s, x, [&](uint64_t u) { out.push_back(u); });
  std::sort(out.begin(), out.end());
  return out;
}

} // namespace doob
