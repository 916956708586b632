// Copyright 2026 The lambdad Authors.
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

#include "lambdad/corpus.hpp"

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <map>
#include <set>
#include <sstream>

#ifndef LAMBDAD_CORPUS_DIR
#define LAMBDAD_CORPUS_DIR "corpus"
#endif

namespace fs = std::filesystem;

namespace lambdad {

namespace {

std::string trim(const std::string& s) {
  auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return "";
  auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

std::vector<std::string> words(const std::string& s) {
  std::istringstream in(s);
  std::vector<std::string> out;
  for (std::string w; in >> w;) out.push_back(w);
  return out;
}

std::string slurp(const std::string& file) {
  std::ifstream in(file, std::ios::binary);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace

Manifest parseManifest(const std::string& text, const std::string& baseDir) {
  Manifest m;
  m.baseDir = baseDir;
  std::istringstream in(text);
  std::string line;
  int lineNo = 0;
  bool sawVersion = false;
  std::set<std::string> seen;
  auto bad = [&](const std::string& msg) {
    throw CorpusError("ManifestSyntax", "manifest line " + std::to_string(lineNo) + ": " + msg);
  };
  while (std::getline(in, line)) {
    ++lineNo;
    auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    line = trim(line);
    if (line.empty()) continue;
    if (!sawVersion) {
      auto w = words(line);
      if (w.size() != 2 || w[0] != "version") bad("expected 'version 1'");
      if (w[1] != "1") bad("unsupported manifest version " + w[1]);
      sawVersion = true;
      continue;
    }
    auto colon = line.find(':');
    if (colon == std::string::npos || line.back() != ';') bad("expected 'path : deps ;'");
    ManifestEntry e;
    e.path = trim(line.substr(0, colon));
    if (e.path.empty() || words(e.path).size() != 1) bad("expected one script path");
    e.deps = words(line.substr(colon + 1, line.size() - colon - 2));
    if (!seen.insert(e.path).second) bad("duplicate entry '" + e.path + "'");
    m.entries.push_back(std::move(e));
  }
  if (!sawVersion) throw CorpusError("ManifestSyntax", "manifest has no version line");
  return m;
}

Manifest readManifest(const std::string& path) {
  if (!fs::exists(path)) throw CorpusError("MissingScript", "manifest not found: " + path);
  return parseManifest(slurp(path), fs::path(path).parent_path().string());
}

std::string printManifest(const Manifest& m) {
  std::string out = "version " + std::to_string(m.version) + "\n";
  for (const auto& e : m.entries) {
    out += e.path + " :";
    for (const auto& d : e.deps) out += " " + d;
    out += " ;\n";
  }
  return out;
}

std::vector<std::string> loadOrder(const Manifest& m) {
  std::map<std::string, std::size_t> index;
  for (std::size_t i = 0; i < m.entries.size(); ++i) index[m.entries[i].path] = i;
  std::vector<std::size_t> pending(m.entries.size(), 0);
  std::vector<std::vector<std::size_t>> users(m.entries.size());
  for (std::size_t i = 0; i < m.entries.size(); ++i) {
    for (const auto& d : m.entries[i].deps) {
      auto it = index.find(d);
      if (it == index.end())
        throw CorpusError("MissingScript",
                          "'" + m.entries[i].path + "' depends on unlisted script '" + d + "'");
      ++pending[i];
      users[it->second].push_back(i);
    }
  }
  std::set<std::size_t> ready;
  for (std::size_t i = 0; i < pending.size(); ++i)
    if (pending[i] == 0) ready.insert(i);
  std::vector<std::string> out;
  while (!ready.empty()) {
    std::size_t i = *ready.begin();
    ready.erase(ready.begin());
    out.push_back(m.entries[i].path);
    for (std::size_t u : users[i])
      if (--pending[u] == 0) ready.insert(u);
  }
  if (out.size() != m.entries.size()) {
    std::string stuck;
    for (std::size_t i = 0; i < pending.size(); ++i)
      if (pending[i] > 0) stuck += (stuck.empty() ? "" : ", ") + m.entries[i].path;
    throw CorpusError("CyclicDependency", "dependency cycle among: " + stuck);
  }
  return out;
}

std::vector<LoadedScript> loadCorpus(const Manifest& m) {
  std::vector<LoadedScript> out;
  for (const auto& p : loadOrder(m)) {
    LoadedScript s;
    s.path = p;
    s.file = (fs::path(m.baseDir) / p).string();
    if (!fs::exists(s.file)) throw CorpusError("MissingScript", "script not found: " + s.file);
    s.text = slurp(s.file);
    s.script = parseScript(s.text, p);
    out.push_back(std::move(s));
  }
  return out;
}

std::vector<LoadedScript> loadCorpus(const std::string& manifestPath) {
  return loadCorpus(readManifest(manifestPath));
}

bool CorpusReport::ok() const {
  return std::all_of(scripts.begin(), scripts.end(), [](const ScriptResult& r) { return r.ok(); });
}

std::size_t CorpusReport::failures() const {
  std::size_t n = 0;
  for (const auto& s : scripts) n += s.failures();
  return n;
}

const ExportRow* CorpusReport::find(const std::string& name) const {
  for (const auto& e : exports)
    if (e.name == name) return &e;
  return nullptr;
}

CorpusReport checkCorpus(const std::vector<LoadedScript>& scripts, const CheckOptions& opts,
                         Session session) {
  CorpusReport rep;
  rep.session = std::move(session);
  for (const auto& s : scripts) {
    ScriptResult r = checkScript(rep.session, s.script, opts);
    for (const auto& item : r.items) {
      if ((item.kind != ItemKind::Def && item.kind != ItemKind::Prim) || item.anchor.empty())
        continue;
      rep.exports.push_back(ExportRow{s.path, item.name, item.anchor, item.ok, item.code,
                                      item.message, item.type, item.detail});
    }
    rep.scripts.push_back(std::move(r));
  }
  return rep;
}

const std::vector<std::string>& requiredExports() {
  static const std::vector<std::string> names = {
      // logic
      "bot", "neg", "and-in", "and-el1", "and-el2", "or-in1", "or-in2", "or-el", "bi-impl", "all",
      "ex-in", "ex-el", "exc-thrd", "doub-neg",
      // sets
      "ps", "element",
      // equality
      "eq", "eq-refl", "eq-subs", "eq-cong", "eq-sym", "eq-trans",
      // relations
      "br", "incl", "ex-eq", "ext-axiom", "id", "conv", "union", "inter", "comp", "prod-term",
      "rel-equal",
      // operations
      "conv-conv", "conv-prod", "conv-cap", "conv-cup", "comp-cup-right", "comp-cup-left",
      "comp-cap-right", "comp-cap-left", "comp-assoc",
      // properties
      "refl", "sym", "antisym", "trans", "equiv-relation", "part-ord", "refl-criterion",
      "sym-criterion1", "sym-criterion", "antisym-criterion", "trans-criterion", "id-unique",
      "conv-refl", "conv-sym", "conv-antisym", "conv-trans", "cap-refl", "cap-sym", "cap-antisym",
      "cap-trans", "cup-refl", "cup-sym", "comp-conv-sym", "comp-refl", "comp-sym",
      // special relations
      "class", "partition", "equiv-conv", "equiv-cap", "equiv-partition", "partition-equiv",
      "part-ord-conv", "part-ord-cap", "subset-part-ord", "lt", "least", "well-ord",
      "transfinite-induction"};
  return names;
}

std::string defaultManifestPath() { return std::string(LAMBDAD_CORPUS_DIR) + "/manifest"; }

}  // namespace lambdad
