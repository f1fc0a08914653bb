#include "doob/gf.hpp"

namespace doob {

bool label_additivity_check() {
  for (int a1 = 0; a1 < 4; ++a1)
    for (int b1 = 0; b1 < 4; ++b1)
      for (int a2 = 0; a2 < 4; ++a2)
        for (int b2 = 0; b2 < 4; ++b2) {
          int lhs = shrikhande_label((a1 + a2) & 3, (b1 + b2) & 3);
          int rhs = gf4_add(shrikhande_label(a1, b1), shrikhande_label(a2, b2));
          if (lhs != rhs) return false;
        }
  return true;
}

} // namespace doob
