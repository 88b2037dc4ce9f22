#pragma once

#include <array>
#include <cstdint>
#include <iosfwd>
#include <string>

#include "delsarte/int_matrix.hpp"

namespace delsarte {

// Seeded experiment over random kernels diag(d1,d2,d3) * M' with M'
// unimodular, mirroring the random search behind the published tables.
struct BatchConfig {
    std::uint64_t seed = 0;
    long count = 1;
    std::array<long, 3> diag{1, 1, 1};
    long bound = 3;  // coefficient range of the elementary row operations
    std::string out_path;
};

// Writes one report per line (JSONL, LF-terminated) plus a final summary
// line.  Identical configurations produce byte-identical output.
void batch_run(const BatchConfig& config, std::ostream& out);

// Deterministic unimodular matrix: a product of `ops` elementary operations
// drawn from the given generator state.
class UnimodularSampler {
  public:
    explicit UnimodularSampler(std::uint64_t seed) : state_(seed) {}
    IntMatrix next(long bound, int ops = 12);

  private:
    std::uint64_t next_word();
    long below(long n);  // uniform-ish in [0, n)
    std::uint64_t state_;
};

}  // namespace delsarte
