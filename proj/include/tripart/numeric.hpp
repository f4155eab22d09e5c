// Copyright 2026 The tripart Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef TRIPART_NUMERIC_HPP
#define TRIPART_NUMERIC_HPP

#include <numbers>
#include <stdexcept>

namespace tripart {

inline constexpr double kPi = std::numbers::pi;

/// n choose k as a double; exact while the result fits in 53 bits.
inline double binomial(int n, int k) {
  if (k < 0 || n < 0 || k > n) throw std::invalid_argument("binomial arguments out of range");
  if (k > n - k) k = n - k;
  double r = 1.0;
  for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

}  // namespace tripart

#endif  // TRIPART_NUMERIC_HPP
