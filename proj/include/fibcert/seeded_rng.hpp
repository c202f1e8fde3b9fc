#pragma once

// Deterministic seeded randomness for property trials and certificate
// sampling.  Draws come straight off a mersenne twister (whose output
// sequence is pinned by the standard), so identical seeds give identical
// trials on every platform.

#include <cstdint>
#include <random>

#include "fibcert/exactq.hpp"

namespace fib {

class SeededRng {
 public:
  explicit SeededRng(uint64_t seed) : eng_(seed) {}

  uint64_t next() { return eng_(); }

  long uniform(long lo, long hi) {  // inclusive bounds
    return lo + static_cast<long>(next() % static_cast<uint64_t>(hi - lo + 1));
  }

  /// Bounded-height rational: numerator in [-height, height],
  /// denominator in [1, height].
  Rat rational(long height) {
    Rat q(uniform(-height, height), uniform(1, height));
    q.canonicalize();
    return q;
  }

  Vec vector(int dim, long height) {
    Vec v(dim);
    for (int i = 0; i < dim; ++i) v[i] = rational(height);
    return v;
  }

  Vec nonzero_vector(int dim, long height) {
    for (;;) {
      Vec v = vector(dim, height);
      if (!vec_is_zero(v)) return v;
    }
  }

 private:
  std::mt19937_64 eng_;
};

}  // namespace fib
