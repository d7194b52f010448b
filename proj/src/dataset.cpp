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
#include "bilink/dataset.hpp"

#include <curl/curl.h>
#include <openssl/evp.h>

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <mutex>
#include <sstream>
#include <unordered_map>
#include <unordered_set>

#include <nlohmann/json.hpp>

#include "bilink/version.hpp"

namespace bilink {

namespace fs = std::filesystem;
using nlohmann::json;

const std::vector<DatasetSpec>& dataset_registry() {
  static const std::vector<DatasetSpec> registry = {
      {"movielens100k",
       {"movielens", "ml100k", "ml-100k"},
       {"https://files.grouplens.org/datasets/movielens/ml-100k/u.data",
        "http://files.grouplens.org/datasets/movielens/ml-100k/u.data"},
       1682, 943, 100000,
       "movies", "users",
       "MovieLens 100k ratings treated as unweighted user-movie edges."},
      {"gpcr",
       {"gpcreceptors", "gpc-receptors", "gpc_receptors"},
       {"http://web.kuicr.kyoto-u.ac.jp/supp/yoshi/drugtarget/"
        "bind_orfhsa_drug_gpcr.txt"},
       223, 95, 635,
       "drugs", "targets",
       "Drugs binding G-protein coupled receptors."},
      {"ionchannels",
       {"ionchannel", "ion-channels", "ion_channels", "ic"},
       {"http://web.kuicr.kyoto-u.ac.jp/supp/yoshi/drugtarget/"
        "bind_orfhsa_drug_ic.txt"},
       210, 204, 1476,
       "drugs", "targets",
       "Drugs binding ion channel proteins."},
      {"enzymes",
       {"enzyme", "e"},
       {"http://web.kuicr.kyoto-u.ac.jp/supp/yoshi/drugtarget/"
        "bind_orfhsa_drug_e.txt"},
       445, 664, 2926,
       "drugs", "targets",
       "Drugs binding enzyme proteins."},
      {"aid",
       {},
       {},
       151, 34, 1889,
       "", "",
       "International aid organizations connected to development issues. "
       "No stable public mirror is registered; obtain the raw edge list "
       "and import it with --from-file."},
      {"ipums",
       {},
       {},
       267, 513, 18088,
       "", "",
       "Industries connected to the education fields of the people they "
       "employ. No stable public mirror is registered; obtain the raw edge "
       "list and import it with --from-file."},
  };
  return registry;
}

namespace {

std::string normalize_name(const std::string& name) {
  std::string out;
  for (char c : name) {
    if (c == '-' || c == '_' || c == ' ') continue;
    out += static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  }
  return out;
}

size_t curl_write_cb(char* ptr, size_t size, size_t nmemb, void* userdata) {
  auto* out = static_cast<std::ofstream*>(userdata);
  out->write(ptr, static_cast<std::streamsize>(size * nmemb));
  return out->good() ? size * nmemb : 0;
}

void download(const std::string& url, const fs::path& dest) {
  static std::once_flag curl_once;
  std::call_once(curl_once, [] { curl_global_init(CURL_GLOBAL_DEFAULT); });

  std::ofstream out(dest, std::ios::binary | std::ios::trunc);
  if (!out) throw IoError("cannot write " + dest.string());

  CURL* curl = curl_easy_init();
  if (!curl) throw IoError("curl initialization failed");
  curl_easy_setopt(curl, CURLOPT_URL, url.c_str());
  curl_easy_setopt(curl, CURLOPT_WRITEFUNCTION, curl_write_cb);
  curl_easy_setopt(curl, CURLOPT_WRITEDATA, &out);
  curl_easy_setopt(curl, CURLOPT_FOLLOWLOCATION, 1L);
  curl_easy_setopt(curl, CURLOPT_FAILONERROR, 1L);
  curl_easy_setopt(curl, CURLOPT_CONNECTTIMEOUT, 20L);
  curl_easy_setopt(curl, CURLOPT_TIMEOUT, 600L);
  curl_easy_setopt(curl, CURLOPT_USERAGENT, "bilink/0.1");
  const CURLcode rc = curl_easy_perform(curl);
  curl_easy_cleanup(curl);
  out.close();
  if (rc != CURLE_OK) {
    std::error_code ec;
    fs::remove(dest, ec);
    throw IoError("download failed for " + url + ": " +
                  curl_easy_strerror(rc));
  }
}

// Raw interaction files are whitespace-separated label pairs (extra
// columns, e.g. ratings and timestamps, are ignored).
std::vector<std::pair<std::string, std::string>> read_raw_pairs(
    const fs::path& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open " + path.string());
  std::vector<std::pair<std::string, std::string>> out;
  std::string line;
  uint64_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty() || line[0] == '#') continue;
    std::istringstream ss(line);
    std::string a, b;
    if (!(ss >> a >> b)) {
      throw ParseError("expected two whitespace-separated labels", lineno);
    }
    out.emplace_back(std::move(a), std::move(b));
  }
  if (out.empty()) throw Error("empty dataset file: " + path.string());
  return out;
}

uint32_t distinct_count(
    const std::vector<std::pair<std::string, std::string>>& pairs,
    bool second) {
  std::unordered_set<std::string> seen;
  for (const auto& [a, b] : pairs) seen.insert(second ? b : a);
  return static_cast<uint32_t>(seen.size());
}

json read_descriptor(const fs::path& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open descriptor " + path.string());
  json j;
  in >> j;
  return j;
}

}  // namespace

std::string sha256_file(const fs::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open " + path.string());
  EVP_MD_CTX* ctx = EVP_MD_CTX_new();
  if (!ctx) throw Error("EVP_MD_CTX_new failed");
  EVP_DigestInit_ex(ctx, EVP_sha256(), nullptr);
  char buf[1 << 16];
  while (in) {
    in.read(buf, sizeof(buf));
    EVP_DigestUpdate(ctx, buf, static_cast<size_t>(in.gcount()));
  }
  unsigned char digest[EVP_MAX_MD_SIZE];
  unsigned int len = 0;
  EVP_DigestFinal_ex(ctx, digest, &len);
  EVP_MD_CTX_free(ctx);
  std::string hex;
  hex.reserve(2 * len);
  for (unsigned int i = 0; i < len; ++i) {
    char b[3];
    std::snprintf(b, sizeof(b), "%02x", digest[i]);
    hex += b;
  }
  return hex;
}

const DatasetSpec& resolve_dataset(const std::string& name) {
  const std::string needle = normalize_name(name);
  for (const DatasetSpec& spec : dataset_registry()) {
    if (normalize_name(spec.name) == needle) return spec;
    for (const std::string& alias : spec.aliases) {
      if (normalize_name(alias) == needle) return spec;
    }
  }
  std::string known;
  for (const DatasetSpec& spec : dataset_registry()) {
    if (!known.empty()) known += ", ";
    known += spec.name;
  }
  throw InvalidArgument("unknown dataset '" + name +
                        "'; known datasets: " + known);
}

fs::path fetch_dataset(const std::string& name, const fs::path& dest_dir,
                       const fs::path& import_file) {
  const DatasetSpec& spec = resolve_dataset(name);
  fs::create_directories(dest_dir);
  const fs::path canonical = dest_dir / (spec.name + ".tsv");
  const fs::path descriptor_path = dest_dir / (spec.name + ".json");

  if (fs::exists(canonical) && fs::exists(descriptor_path)) {
    const json desc = read_descriptor(descriptor_path);
    const std::string expect = desc.value("sha256", "");
    const std::string actual = sha256_file(canonical);
    if (actual != expect) {
      throw Error("cached dataset " + canonical.string() +
                  " fails its checksum (expected " + expect + ", got " +
                  actual + "); delete it to refetch");
    }
    return canonical;
  }

  fs::path raw;
  std::string source;
  fs::path tmp_download;
  if (!import_file.empty()) {
    raw = import_file;
    source = "import:" + import_file.string();
  } else if (spec.urls.empty()) {
    throw Error("dataset '" + spec.name + "' has no registered mirror. " +
                spec.note);
  } else {
    tmp_download = dest_dir / (spec.name + ".raw.tmp");
    std::string errors;
    bool ok = false;
    for (const std::string& url : spec.urls) {
      try {
        download(url, tmp_download);
        source = url;
        ok = true;
        break;
      } catch (const IoError& e) {
        errors += std::string("\n  ") + e.what();
      }
    }
    if (!ok) {
      throw IoError("could not download dataset '" + spec.name + "':" +
                    errors);
    }
    raw = tmp_download;
  }

  auto pairs = read_raw_pairs(raw);
  const uint32_t d_first = distinct_count(pairs, false);
  const uint32_t d_second = distinct_count(pairs, true);
  bool swap;
  if (d_first == spec.n_left && d_second == spec.n_right) {
    swap = false;
  } else if (d_first == spec.n_right && d_second == spec.n_left) {
    swap = true;
  } else {
    throw Error("dataset '" + spec.name + "': raw file has " +
                std::to_string(d_first) + "x" + std::to_string(d_second) +
                " distinct labels, expected " + std::to_string(spec.n_left) +
                "x" + std::to_string(spec.n_right) +
                " in either orientation");
  }
  if (swap) {
    for (auto& pr : pairs) std::swap(pr.first, pr.second);
  }

  // Dense ids in first-appearance order, duplicates collapsed.
  std::unordered_map<std::string, uint32_t> lid, rid;
  LabelTable labels;
  std::vector<Edge> edges;
  edges.reserve(pairs.size());
  for (const auto& [l, r] : pairs) {
    const auto [li, lnew] = lid.emplace(l, static_cast<uint32_t>(labels.left.size()));
    if (lnew) labels.left.push_back(l);
    const auto [ri, rnew] = rid.emplace(r, static_cast<uint32_t>(labels.right.size()));
    if (rnew) labels.right.push_back(r);
    edges.push_back({li->second, ri->second});
  }
  BipartiteGraph g = BipartiteGraph::from_edges(
      spec.n_left, spec.n_right, std::move(edges), std::move(labels));
  if (g.edge_count() != spec.edges) {
    throw Error("dataset '" + spec.name + "': got " +
                std::to_string(g.edge_count()) + " unique edges, expected " +
                std::to_string(spec.edges));
  }

  {
    std::ofstream out(canonical, std::ios::trunc);
    if (!out) throw IoError("cannot write " + canonical.string());
    write_edge_list(out, g);
  }
  if (!tmp_download.empty()) {
    std::error_code ec;
    fs::remove(tmp_download, ec);
  }

  json desc;
  desc["name"] = spec.name;
  desc["n_left"] = g.n_left();
  desc["n_right"] = g.n_right();
  desc["edges"] = g.edge_count();
  desc["sha256"] = sha256_file(canonical);
  desc["source"] = source;
  desc["left"] = spec.left_desc.empty()
                     ? "partition with " + std::to_string(spec.n_left) + " nodes"
                     : spec.left_desc;
  desc["right"] = spec.right_desc.empty()
                      ? "partition with " + std::to_string(spec.n_right) + " nodes"
                      : spec.right_desc;
  desc["columns_swapped_from_source"] = swap;
  desc["tool"] = std::string(kToolName) + " " + kVersion;
  std::ofstream dout(descriptor_path, std::ios::trunc);
  if (!dout) throw IoError("cannot write " + descriptor_path.string());
  dout << desc.dump(2) << '\n';
  return canonical;
}

}  // namespace bilink
