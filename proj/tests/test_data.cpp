// The artifacts shipped in data/ must stay valid: each stem is a partition
// of its graph into 16 one-perfect codes.
#include <string>

#include "doctest.h"
#include "doob/eqpart.hpp"
#include "doob/io.hpp"

using namespace doob;

#ifndef DOOB_SOURCE_DIR
#error "DOOB_SOURCE_DIR must be defined by the build"
#endif

namespace {

void check_partition_files(const GraphSpec& spec, const std::string& stem) {
  std::vector<Code> cosets;
  for (int i = 0; i < 16; ++i) {
    std::string path = std::string(DOOB_SOURCE_DIR) + "/data/" + stem + "." +
                       std::to_string(i) + ".code1";
    CAPTURE(path);
    Code c = read_code1(path);
    REQUIRE(c.spec == spec);
    CHECK(c.size() == num_vertices(spec) / 16); // ball size 16 at diameter 5
    CHECK(is_mu_fold_perfect(c, 1));
    cosets.push_back(std::move(c));
  }
  CHECK(cosets[0].contains(0));
  for (size_t i = 0; i < cosets.size(); ++i)
    for (size_t j = i + 1; j < cosets.size(); ++j)
      CHECK(cosets[i].disjoint_with(cosets[j]));
}

} // namespace

TEST_CASE("shipped D(2,1) coset partition is valid") {
  check_partition_files(GraphSpec{2, 1}, "d21_coset");
}

TEST_CASE("shipped D(1,3) coset partition is valid") {
  check_partition_files(GraphSpec{1, 3}, "d13_coset");
}
