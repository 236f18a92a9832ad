// Evaluates the moment map at a few Haar points of SU(3) and SO(3) and checks
// each value against the Weyl polytope of X.

#include <cstdio>

#include "crownlab/crownlab.hpp"

int main() {
  using namespace crownlab;
  const CartanVector x{0.5, 0.1, -0.6};
  const WeylPolytope poly(x);

  for (GroupCase c : {GroupCase::complex, GroupCase::real_split}) {
    std::printf("%s case, X = (0.5, 0.1, -0.6)\n", to_string(c).c_str());
    for (std::uint64_t i = 0; i < 5; ++i) {
      const ComplexMatrix k = sample_group(c, 3, stream_seed(7, i));
      const HoroResult r = continued_log_a(k, x, c);
      std::printf("  phi = (% .6f, % .6f, % .6f)  margin %.4f  steps %d\n", r.phi[0], r.phi[1],
                  r.phi[2], majorization_margin(r.phi, poly), r.steps_used);
    }
  }

  // Weyl lifts hit the vertices exactly.
  for (const auto& w : weyl_group(3)) {
    const CartanVector p = moment_map(w.complex_lift(), x, GroupCase::complex);
    const CartanVector v = w.apply(x);
    std::printf("vertex (% .3f, % .3f, % .3f)  error %.2e\n", v[0], v[1], v[2], max_abs_diff(p, v));
  }
  return 0;
}
