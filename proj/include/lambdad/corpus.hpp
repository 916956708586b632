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

// The checked library: a manifest of .ld scripts with dependencies, loaded
// in dependency order and checked into one session.
//
// Manifest format (version 1):
//
//   version 1
//   logic.ld : ;
//   classical.ld : logic.ld ;
//
// Paths are relative to the manifest's directory. `#` starts a comment.

#ifndef LAMBDAD_CORPUS_HPP
#define LAMBDAD_CORPUS_HPP

#include <stdexcept>
#include <string>
#include <vector>

#include "lambdad/check.hpp"
#include "lambdad/surface.hpp"

namespace lambdad {

// MissingScript, CyclicDependency, ManifestSyntax.
class CorpusError : public std::runtime_error {
 public:
  CorpusError(std::string code, const std::string& message)
      : std::runtime_error(message), code_(std::move(code)) {}
  const std::string& code() const { return code_; }

 private:
  std::string code_;
};

struct ManifestEntry {
  std::string path;
  std::vector<std::string> deps;
};

struct Manifest {
  int version = 1;
  std::string baseDir;
  std::vector<ManifestEntry> entries;
};

Manifest parseManifest(const std::string& text, const std::string& baseDir = ".");
Manifest readManifest(const std::string& path);
std::string printManifest(const Manifest& m);

// Entry order respecting dependencies; ties keep manifest order.
std::vector<std::string> loadOrder(const Manifest& m);

struct LoadedScript {
  std::string path;  // as written in the manifest
  std::string file;  // resolved on disk
  std::string text;
  SurfaceScript script;
};

// Throws CorpusError, or ParseError for a script that does not parse.
std::vector<LoadedScript> loadCorpus(const Manifest& m);
std::vector<LoadedScript> loadCorpus(const std::string& manifestPath);

// One row per anchored def/prim.
struct ExportRow {
  std::string script;
  std::string name;
  std::string anchor;
  bool ok = false;
  std::string code;
  std::string message;
  std::string type;
  std::string detail;
};

struct CorpusReport {
  std::vector<ScriptResult> scripts;
  std::vector<ExportRow> exports;
  Session session;

  bool ok() const;
  std::size_t failures() const;  // failed items of any kind
  const ExportRow* find(const std::string& name) const;
};

CorpusReport checkCorpus(const std::vector<LoadedScript>& scripts, const CheckOptions& opts = {},
                         Session session = {});

// Names the corpus must export, in reading order.
const std::vector<std::string>& requiredExports();

// The bundled corpus (set at build time).
std::string defaultManifestPath();

}  // namespace lambdad

#endif  // LAMBDAD_CORPUS_HPP
