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

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <span>
#include <string>
#include <vector>

#include "bilink/error.hpp"

namespace bilink {

enum class Side : uint8_t { Left, Right };

/// Identifies a node by partition and dense per-partition index.
struct NodeRef {
  Side side;
  uint32_t index;

  friend bool operator==(const NodeRef&, const NodeRef&) = default;
};

/// A cross-partition edge as a (left index, right index) pair.
struct Edge {
  uint32_t left;
  uint32_t right;

  friend auto operator<=>(const Edge&, const Edge&) = default;
};

/// Optional raw labels, indexed by dense id per partition.
struct LabelTable {
  std::vector<std::string> left;
  std::vector<std::string> right;

  bool empty() const { return left.empty() && right.empty(); }
};

/// Immutable sparse bipartite topology.  Adjacency is stored CSR-style on
/// both sides, strictly increasing and duplicate-free, so neighbourhood
/// intersections can run as merges or stamp lookups.  Safe to share across
/// threads once constructed.
class BipartiteGraph {
 public:
  BipartiteGraph() = default;

  /// Builds a graph from (left,right) pairs.  Duplicate pairs are collapsed;
  /// out-of-range endpoints throw InvalidArgument.
  static BipartiteGraph from_edges(uint32_t n_left, uint32_t n_right,
                                   std::vector<Edge> edges,
                                   LabelTable labels = {});

  uint32_t n_left() const { return n_left_; }
  uint32_t n_right() const { return n_right_; }
  uint64_t edge_count() const { return m_; }

  /// Sorted right indices adjacent to left node i.
  std::span<const uint32_t> left_neighbors(uint32_t i) const {
    return {left_adj_.data() + left_off_[i],
            left_adj_.data() + left_off_[i + 1]};
  }

  /// Sorted left indices adjacent to right node j.
  std::span<const uint32_t> right_neighbors(uint32_t j) const {
    return {right_adj_.data() + right_off_[j],
            right_adj_.data() + right_off_[j + 1]};
  }

  uint32_t left_degree(uint32_t i) const {
    return static_cast<uint32_t>(left_off_[i + 1] - left_off_[i]);
  }
  uint32_t right_degree(uint32_t j) const {
    return static_cast<uint32_t>(right_off_[j + 1] - right_off_[j]);
  }

  /// Degree of a node given by partition reference; throws on bad index.
  uint32_t degree(NodeRef v) const;

  /// Membership test via binary search in the shorter adjacency list.
  bool has_edge(uint32_t left, uint32_t right) const;

  /// Canonical (lexicographically sorted) edge list.
  std::vector<Edge> edges() const;

  /// FNV-1a digest of the topology (sizes plus adjacency stream); used to
  /// key caches and stamp outputs.
  uint64_t checksum() const;

  const LabelTable& labels() const { return labels_; }
  std::string left_label(uint32_t i) const;
  std::string right_label(uint32_t j) const;

 private:
  uint32_t n_left_ = 0;
  uint32_t n_right_ = 0;
  uint64_t m_ = 0;
  std::vector<uint64_t> left_off_{0};
  std::vector<uint64_t> right_off_{0};
  std::vector<uint32_t> left_adj_;
  std::vector<uint32_t> right_adj_;
  LabelTable labels_;
};

/// Canonically sorted, duplicate-free set of edges (removal bookkeeping).
class EdgeSet {
 public:
  EdgeSet() = default;
  explicit EdgeSet(std::vector<Edge> pairs);

  const std::vector<Edge>& pairs() const { return pairs_; }
  size_t size() const { return pairs_.size(); }
  bool empty() const { return pairs_.empty(); }
  bool contains(Edge e) const;

  auto begin() const { return pairs_.begin(); }
  auto end() const { return pairs_.end(); }

 private:
  std::vector<Edge> pairs_;
};

struct ParseOptions {
  char delimiter = '\t';
  std::string comment_prefix = "#";
  bool skip_header = false;
};

/// What ingestion saw; `extra_column_records` is the "ignored with a
/// warning" count for rows carrying more than two columns.
struct IngestReport {
  uint64_t lines_read = 0;
  uint64_t records = 0;
  uint64_t duplicates_dropped = 0;
  uint64_t extra_column_records = 0;
  uint32_t n_left = 0;
  uint32_t n_right = 0;
  uint64_t edges = 0;
};

struct ParseResult {
  BipartiteGraph graph;
  IngestReport report;
};

/// Reads "left_label <delim> right_label [<delim> ignored...]" records.
/// Dense ids are assigned in first-appearance order per partition and
/// duplicate records collapse to one edge.  Throws ParseError (with line
/// number) on malformed records and Error on empty input.
ParseResult parse_edge_list(std::istream& in, const ParseOptions& opts = {});
ParseResult parse_edge_list_file(const std::filesystem::path& path,
                                 const ParseOptions& opts = {});

/// Canonical serialization: one "left<TAB>right" line per edge in
/// lexicographic order, labels when present, decimal indices otherwise.
void write_edge_list(std::ostream& out, const BipartiteGraph& g);

/// New graph with the given edges removed; node counts are preserved and
/// isolated nodes are retained.  Throws InvalidArgument if any edge is
/// absent.
BipartiteGraph remove_edges(const BipartiteGraph& g, const EdgeSet& removed);

/// All non-adjacent (left,right) pairs in lexicographic order; together
/// with edges() this partitions the full n_left x n_right grid.
std::vector<Edge> candidate_pairs(const BipartiteGraph& g);

/// Streaming variant of candidate_pairs.
template <typename Fn>
void for_each_candidate(const BipartiteGraph& g, Fn&& fn) {
  for (uint32_t x = 0; x < g.n_left(); ++x) {
    auto adj = g.left_neighbors(x);
    size_t k = 0;
    for (uint32_t y = 0; y < g.n_right(); ++y) {
      if (k < adj.size() && adj[k] == y) {
        ++k;
        continue;
      }
      fn(Edge{x, y});
    }
  }
}

}  // namespace bilink
