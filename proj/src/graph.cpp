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
#include "bilink/graph.hpp"

#include <algorithm>
#include <cassert>
#include <fstream>
#include <istream>
#include <ostream>
#include <unordered_map>

#include "bilink/rng.hpp"

namespace bilink {

BipartiteGraph BipartiteGraph::from_edges(uint32_t n_left, uint32_t n_right,
                                          std::vector<Edge> edges,
                                          LabelTable labels) {
  for (const Edge& e : edges) {
    if (e.left >= n_left || e.right >= n_right) {
      throw InvalidArgument("edge (" + std::to_string(e.left) + "," +
                            std::to_string(e.right) + ") out of range for " +
                            std::to_string(n_left) + "x" +
                            std::to_string(n_right) + " graph");
    }
  }
  if (!labels.empty() &&
      (labels.left.size() != n_left || labels.right.size() != n_right)) {
    throw InvalidArgument("label table size does not match node counts");
  }

  std::sort(edges.begin(), edges.end());
  edges.erase(std::unique(edges.begin(), edges.end()), edges.end());

  BipartiteGraph g;
  g.n_left_ = n_left;
  g.n_right_ = n_right;
  g.m_ = edges.size();
  g.labels_ = std::move(labels);

  g.left_off_.assign(n_left + 1, 0);
  g.right_off_.assign(n_right + 1, 0);
  for (const Edge& e : edges) {
    ++g.left_off_[e.left + 1];
    ++g.right_off_[e.right + 1];
  }
  for (uint32_t i = 0; i < n_left; ++i) g.left_off_[i + 1] += g.left_off_[i];
  for (uint32_t j = 0; j < n_right; ++j) g.right_off_[j + 1] += g.right_off_[j];

  g.left_adj_.resize(g.m_);
  g.right_adj_.resize(g.m_);
  std::vector<uint64_t> rpos(g.right_off_.begin(), g.right_off_.end() - 1);
  uint64_t lpos = 0;
  for (const Edge& e : edges) {
    g.left_adj_[lpos++] = e.right;         // edges sorted by (left,right):
    g.right_adj_[rpos[e.right]++] = e.left;  // both fills end up sorted
  }
  return g;
}

uint32_t BipartiteGraph::degree(NodeRef v) const {
  if (v.side == Side::Left) {
    if (v.index >= n_left_) throw InvalidArgument("left index out of range");
    return left_degree(v.index);
  }
  if (v.index >= n_right_) throw InvalidArgument("right index out of range");
  return right_degree(v.index);
}

bool BipartiteGraph::has_edge(uint32_t left, uint32_t right) const {
  if (left >= n_left_ || right >= n_right_) {
    throw InvalidArgument("has_edge: node index out of range");
  }
  if (left_degree(left) <= right_degree(right)) {
    auto adj = left_neighbors(left);
    return std::binary_search(adj.begin(), adj.end(), right);
  }
  auto adj = right_neighbors(right);
  return std::binary_search(adj.begin(), adj.end(), left);
}

std::vector<Edge> BipartiteGraph::edges() const {
  std::vector<Edge> out;
  out.reserve(m_);
  for (uint32_t x = 0; x < n_left_; ++x) {
    for (uint32_t y : left_neighbors(x)) out.push_back({x, y});
  }
  return out;
}

uint64_t BipartiteGraph::checksum() const {
  uint64_t h = fnv1a64(static_cast<uint64_t>(n_left_));
  h = fnv1a64(static_cast<uint64_t>(n_right_), h);
  for (uint32_t x = 0; x < n_left_; ++x) {
    for (uint32_t y : left_neighbors(x)) {
      h = fnv1a64((static_cast<uint64_t>(x) << 32) | y, h);
    }
  }
  return h;
}

std::string BipartiteGraph::left_label(uint32_t i) const {
  return labels_.left.empty() ? std::to_string(i) : labels_.left[i];
}

std::string BipartiteGraph::right_label(uint32_t j) const {
  return labels_.right.empty() ? std::to_string(j) : labels_.right[j];
}

EdgeSet::EdgeSet(std::vector<Edge> pairs) : pairs_(std::move(pairs)) {
  std::sort(pairs_.begin(), pairs_.end());
  pairs_.erase(std::unique(pairs_.begin(), pairs_.end()), pairs_.end());
}

bool EdgeSet::contains(Edge e) const {
  return std::binary_search(pairs_.begin(), pairs_.end(), e);
}

namespace {

void split_fields(const std::string& line, char delim,
                  std::vector<std::string>& out) {
  out.clear();
  size_t start = 0;
  while (true) {
    size_t pos = line.find(delim, start);
    if (pos == std::string::npos) {
      out.push_back(line.substr(start));
      return;
    }
    out.push_back(line.substr(start, pos - start));
    start = pos + 1;
  }
}

}  // namespace

ParseResult parse_edge_list(std::istream& in, const ParseOptions& opts) {
  IngestReport rep;
  std::unordered_map<std::string, uint32_t> left_ids, right_ids;
  LabelTable labels;
  std::vector<Edge> edges;
  std::vector<std::string> fields;

  std::string line;
  bool header_pending = opts.skip_header;
  uint64_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    ++rep.lines_read;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    if (!opts.comment_prefix.empty() &&
        line.rfind(opts.comment_prefix, 0) == 0) {
      continue;
    }
    if (header_pending) {
      header_pending = false;
      continue;
    }
    split_fields(line, opts.delimiter, fields);
    if (fields.size() < 2 || fields[0].empty() || fields[1].empty()) {
      throw ParseError("expected two non-empty columns, got '" + line + "'",
                       lineno);
    }
    if (fields.size() > 2) ++rep.extra_column_records;
    ++rep.records;

    auto intern = [](std::unordered_map<std::string, uint32_t>& ids,
                     std::vector<std::string>& names,
                     const std::string& label) {
      auto [it, inserted] = ids.emplace(label, static_cast<uint32_t>(names.size()));
      if (inserted) names.push_back(label);
      return it->second;
    };
    const uint32_t l = intern(left_ids, labels.left, fields[0]);
    const uint32_t r = intern(right_ids, labels.right, fields[1]);
    edges.push_back({l, r});
  }
  if (rep.records == 0) {
    throw Error("empty input: no edge records found");
  }

  const size_t raw = edges.size();
  std::sort(edges.begin(), edges.end());
  edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
  rep.duplicates_dropped = raw - edges.size();
  rep.n_left = static_cast<uint32_t>(labels.left.size());
  rep.n_right = static_cast<uint32_t>(labels.right.size());
  rep.edges = edges.size();

  ParseResult result;
  result.graph = BipartiteGraph::from_edges(rep.n_left, rep.n_right,
                                            std::move(edges), std::move(labels));
  result.report = rep;
  return result;
}

ParseResult parse_edge_list_file(const std::filesystem::path& path,
                                 const ParseOptions& opts) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open " + path.string());
  return parse_edge_list(in, opts);
}

void write_edge_list(std::ostream& out, const BipartiteGraph& g) {
  for (uint32_t x = 0; x < g.n_left(); ++x) {
    for (uint32_t y : g.left_neighbors(x)) {
      out << g.left_label(x) << '\t' << g.right_label(y) << '\n';
    }
  }
}

BipartiteGraph remove_edges(const BipartiteGraph& g, const EdgeSet& removed) {
  for (const Edge& e : removed) {
    if (e.left >= g.n_left() || e.right >= g.n_right() ||
        !g.has_edge(e.left, e.right)) {
      throw InvalidArgument("remove_edges: edge (" + std::to_string(e.left) +
                            "," + std::to_string(e.right) +
                            ") not present in graph");
    }
  }
  std::vector<Edge> kept;
  kept.reserve(g.edge_count() - removed.size());
  for (uint32_t x = 0; x < g.n_left(); ++x) {
    for (uint32_t y : g.left_neighbors(x)) {
      if (!removed.contains({x, y})) kept.push_back({x, y});
    }
  }
  LabelTable labels = g.labels();
  return BipartiteGraph::from_edges(g.n_left(), g.n_right(), std::move(kept),
                                    std::move(labels));
}

std::vector<Edge> candidate_pairs(const BipartiteGraph& g) {
  const uint64_t total =
      static_cast<uint64_t>(g.n_left()) * g.n_right() - g.edge_count();
  std::vector<Edge> out;
  out.reserve(total);
  for_each_candidate(g, [&](Edge e) { out.push_back(e); });
  assert(out.size() == total);
  return out;
}

}  // namespace bilink
