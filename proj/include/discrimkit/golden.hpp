// Copyright 2026 The discrimkit developers
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <cmath>
#include <utility>

namespace discrimkit {

template <typename Scalar>
struct ScalarMinimum {
  Scalar x;
  Scalar value;
};

// Golden-section search for the minimum of a convex function on [a, b].
// Stops once the bracket is narrower than xtol; also checks the endpoints,
// which matters when the infimum sits on the boundary.
template <typename Scalar, typename F>
ScalarMinimum<Scalar> golden_section_minimize(F&& f, Scalar a, Scalar b,
                                              Scalar xtol) {
  static const Scalar invphi = (std::sqrt(Scalar(5)) - Scalar(1)) / Scalar(2);
  const Scalar fa = f(a);
  const Scalar fb = f(b);
  Scalar lo = a, hi = b;
  Scalar c = hi - invphi * (hi - lo);
  Scalar d = lo + invphi * (hi - lo);
  Scalar fc = f(c);
  Scalar fd = f(d);
  while (hi - lo > xtol) {
    if (fc < fd) {
      hi = d;
      d = c;
      fd = fc;
      c = hi - invphi * (hi - lo);
      fc = f(c);
    } else {
      lo = c;
      c = d;
      fc = fd;
      d = lo + invphi * (hi - lo);
      fd = f(d);
    }
  }
  const Scalar mid = (lo + hi) / Scalar(2);
  ScalarMinimum<Scalar> best{mid, f(mid)};
  if (fa < best.value) best = {a, fa};
  if (fb < best.value) best = {b, fb};
  return best;
}

}  // namespace discrimkit
