/*
 * Copyright 2026 The bilink authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */
#pragma once

#include "bilink/detail/pair_scan.hpp"
#include "bilink/local.hpp"

namespace bilink::detail {

/// Maps the scan accumulators to one index value.  U = deg(x)+deg(y): the
/// partitions are disjoint, so the neighbourhood union size is the raw
/// degree sum.  e(x) = deg(x) - |cn_right| and e(y) = deg(y) - |cn_left|
/// (the seed's neighbours that are not CNs of the pair).
inline double index_value(IndexKind kind, const PairAccum& f) {
  const double cn = static_cast<double>(f.cn_left) + f.cn_right;
  const double lcl = static_cast<double>(f.lcl);
  const double uni = static_cast<double>(f.deg_x) + f.deg_y;
  switch (kind) {
    case IndexKind::CN: return cn;
    case IndexKind::JC: return uni > 0 ? cn / uni : 0.0;
    case IndexKind::AA: return f.aa;
    case IndexKind::RA: return f.ra;
    case IndexKind::PA: return static_cast<double>(f.deg_x) * f.deg_y;
    case IndexKind::LCL: return lcl;
    case IndexKind::CAR: return cn * lcl;
    case IndexKind::CJC: return uni > 0 ? cn * lcl / uni : 0.0;
    case IndexKind::CAA: return f.caa;
    case IndexKind::CRA: return f.cra;
    case IndexKind::CPA: {
      const double ex = static_cast<double>(f.deg_x) - f.cn_right;
      const double ey = static_cast<double>(f.deg_y) - f.cn_left;
      const double car = cn * lcl;
      return ex * ey + ex * car + ey * car + car * car;
    }
  }
  return 0.0;
}

}  // namespace bilink::detail
