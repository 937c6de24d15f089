// Copyright 2026 The trigsip Authors.
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

#include <Eigen/Core>

#include "trigsip/problem_model.hpp"

namespace trigsip::testing {

// min x subject to -x <= -1 for all t, optimum 1.
inline SipInstance toy_instance() {
  Eigen::VectorXd c(1);
  c << 1.0;
  return SipInstance("toy", c,
                     {[](double) { return -1.0; }, [](double) { return -1.0; }});
}

inline Eigen::VectorXd unit(int n, int i) {
  Eigen::VectorXd e = Eigen::VectorXd::Zero(n);
  e(i) = 1.0;
  return e;
}

}  // namespace trigsip::testing
