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
#include "bilink/method.hpp"

#include <algorithm>

#include "bilink/detail/index_value.hpp"
#include "bilink/detail/pair_scan.hpp"
#include "bilink/rng.hpp"

namespace bilink {

std::string_view method_name(Method m) {
  switch (m) {
    case Method::Cn: return "cn";
    case Method::Jc: return "jc";
    case Method::Aa: return "aa";
    case Method::Ra: return "ra";
    case Method::Pa: return "pa";
    case Method::Lcl: return "lcl";
    case Method::Car: return "car";
    case Method::Cjc: return "cjc";
    case Method::Caa: return "caa";
    case Method::Cra: return "cra";
    case Method::Cpa: return "cpa";
    case Method::Nbi: return "nbi";
    case Method::Jac: return "jac";
    case Method::Cos: return "cos";
    case Method::Euc: return "euc";
    case Method::Pea: return "pea";
    case Method::Random: return "random";
  }
  return "?";
}

std::string_view method_class_name(MethodClass c) {
  switch (c) {
    case MethodClass::LcpBased: return "lcp";
    case MethodClass::Classical: return "classical";
    case MethodClass::Projection: return "projection";
    case MethodClass::Random: return "random";
  }
  return "?";
}

std::optional<Method> parse_method(std::string_view name) {
  std::string lower(name);
  std::transform(lower.begin(), lower.end(), lower.begin(),
                 [](unsigned char c) { return std::tolower(c); });
  for (Method m : kAllMethods) {
    if (lower == method_name(m)) return m;
  }
  return std::nullopt;
}

MethodClass method_class(Method m) {
  switch (m) {
    case Method::Car:
    case Method::Cjc:
    case Method::Caa:
    case Method::Cra:
    case Method::Cpa:
    case Method::Lcl:
      return MethodClass::LcpBased;
    case Method::Cn:
    case Method::Jc:
    case Method::Aa:
    case Method::Ra:
    case Method::Pa:
      return MethodClass::Classical;
    case Method::Nbi:
    case Method::Jac:
    case Method::Cos:
    case Method::Euc:
    case Method::Pea:
      return MethodClass::Projection;
    case Method::Random:
      return MethodClass::Random;
  }
  return MethodClass::Random;
}

std::string known_method_names() {
  std::string out;
  for (Method m : kAllMethods) {
    if (!out.empty()) out += ", ";
    out += method_name(m);
  }
  return out;
}

std::optional<IndexKind> method_index_kind(Method m) {
  switch (m) {
    case Method::Cn: return IndexKind::CN;
    case Method::Jc: return IndexKind::JC;
    case Method::Aa: return IndexKind::AA;
    case Method::Ra: return IndexKind::RA;
    case Method::Pa: return IndexKind::PA;
    case Method::Lcl: return IndexKind::LCL;
    case Method::Car: return IndexKind::CAR;
    case Method::Cjc: return IndexKind::CJC;
    case Method::Caa: return IndexKind::CAA;
    case Method::Cra: return IndexKind::CRA;
    case Method::Cpa: return IndexKind::CPA;
    default: return std::nullopt;
  }
}

std::vector<std::vector<double>> score_methods(const BipartiteGraph& g,
                                               std::span<const Edge> pairs,
                                               std::span<const Method> methods,
                                               uint64_t random_seed,
                                               int threads) {
  for (const Edge& e : pairs) {
    if (e.left >= g.n_left() || e.right >= g.n_right()) {
      throw InvalidArgument("score_methods: pair out of range");
    }
  }
  std::vector<std::vector<double>> out(methods.size());
  for (auto& v : out) v.resize(pairs.size());

  bool wants_local = false, wants_nbi = false, wants_sims = false;
  for (Method m : methods) {
    if (method_index_kind(m)) wants_local = true;
    else if (m == Method::Nbi) wants_nbi = true;
    else if (m == Method::Random) continue;
    else wants_sims = true;
  }

  auto fill = [&](const detail::PairAccum& f, size_t i) {
    for (size_t mi = 0; mi < methods.size(); ++mi) {
      const Method m = methods[mi];
      if (auto kind = method_index_kind(m)) {
        out[mi][i] = detail::index_value(*kind, f);
      } else {
        switch (m) {
          case Method::Nbi: out[mi][i] = f.nbi; break;
          case Method::Jac: out[mi][i] = f.jac; break;
          case Method::Cos: out[mi][i] = f.cos; break;
          case Method::Euc: out[mi][i] = f.euc; break;
          case Method::Pea: out[mi][i] = f.pea; break;
          case Method::Random:
            out[mi][i] = unit_double(mix64(random_seed ^ (kGolden * (i + 1))));
            break;
          default: break;
        }
      }
    }
  };

  // The scan parts are compile-time template flags; dispatch on the union
  // of what the requested methods need.
  const unsigned parts = (wants_local ? detail::kScanLocal : 0) |
                         (wants_nbi ? detail::kScanNbi : 0) |
                         (wants_sims ? detail::kScanSims : 0);
  switch (parts) {
    case 0: {
      // Only the random baseline: no graph scan required.
      for (size_t i = 0; i < pairs.size(); ++i) {
        detail::PairAccum f;
        fill(f, i);
      }
      break;
    }
    case 1: detail::scan_pairs<1>(g, pairs, fill, threads); break;
    case 2: detail::scan_pairs<2>(g, pairs, fill, threads); break;
    case 3: detail::scan_pairs<3>(g, pairs, fill, threads); break;
    case 4: detail::scan_pairs<4>(g, pairs, fill, threads); break;
    case 5: detail::scan_pairs<5>(g, pairs, fill, threads); break;
    case 6: detail::scan_pairs<6>(g, pairs, fill, threads); break;
    default: detail::scan_pairs<7>(g, pairs, fill, threads); break;
  }
  return out;
}

}  // namespace bilink
