// Exhaustive comparison of components_pair with the 2x2-minors gcd for d <= 4, entries in
// [-6, 6]. At d = 4 both normals are taken sign-normalized (a and -a are the same subtorus),
// which keeps the sweep near 2 * 10^8 pairs; d = 2, 3 run over every sign.

#include "support.hpp"

#include "torusarr/intersection.hpp"
#include "torusarr/lattice.hpp"

#include <iostream>
#include <vector>

using namespace torusarr;

namespace {

bool sign_normalized(const IntVec& v) {
  for (const Int& x : v)
    if (x != 0)
      return x > 0;
  return false;
}

} // namespace

int main() {
  long mismatches = 0;
  for (std::size_t d = 2; d <= 4; ++d) {
    std::vector<IntVec> prim;
    testing::for_each_vector(d, -6, 6, [&](const IntVec& v) {
      if (lattice::gcd_vec(v) == 1 && (d < 4 || sign_normalized(v)))
        prim.push_back(v);
    });
    long pairs = 0;
    for (const IntVec& a : prim)
      for (const IntVec& b : prim) {
        Int want = lattice::minors2_gcd(a, b);
        if (want == 0)
          continue;
        ++pairs;
        if (intersection::components_pair(a, b) != want && ++mismatches <= 10)
          std::cout << "mismatch a=" << to_string(a) << " b=" << to_string(b) << '\n';
      }
    std::cout << "d=" << d << ": " << prim.size() << " normals, " << pairs << " pairs\n";
  }
  std::cout << mismatches << " mismatches\n";
  return mismatches == 0 ? 0 : 1;
}
