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

// lambdad: check scripts, run the oracle registry, export LaTeX.
//
// Exit codes: 0 all pass, 1 check/verification failure, 2 parse or
// manifest error (or bad arguments), 3 internal error.

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "lambdad/check.hpp"
#include "lambdad/corpus.hpp"
#include "lambdad/export.hpp"
#include "lambdad/oracle.hpp"

namespace fs = std::filesystem;
using namespace lambdad;

namespace {

struct RunConfig {
  std::vector<std::string> paths;
  std::string manifest;
  bool trace = false;
  int maxErrors = 0;
  bool bare = false;
  // oracle
  int maxN = 3;
  std::uint64_t seed = 0;
  std::uint64_t samples = 100000;
  bool json = false;
  // export
  bool checkedOnly = false;
  bool standalone = false;
  bool pretty = false;
  int maxDepth = 32;
  int wrap = 100;
  std::string output;
};

std::string slurp(const std::string& file) {
  std::ifstream in(file, std::ios::binary);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void printDetail(const std::string& detail) {
  std::istringstream in(detail);
  for (std::string line; std::getline(in, line);) std::printf("      %s\n", line.c_str());
}

void printRow(const std::string& verdict, const std::string& script, const ItemResult& r) {
  std::printf("%-5s %-14s %-26s %-10s ", verdict.c_str(), script.c_str(), r.name.c_str(),
              r.anchor.c_str());
  if (r.ok)
    std::printf("%s\n", r.type.c_str());
  else
    std::printf("%s:%d:%d %s: %s\n", script.c_str(), r.pos.line, r.pos.column, r.code.c_str(),
                r.message.c_str());
  if (!r.ok && !r.detail.empty()) printDetail(r.detail);
}

int reportLoadError(const std::exception_ptr& ep) {
  try {
    std::rethrow_exception(ep);
  } catch (const ParseError& e) {
    std::fprintf(stderr, "error: %s:%d:%d: %s: %s\n", e.path().c_str(), e.pos().line,
                 e.pos().column, e.code().c_str(), e.what());
  } catch (const CorpusError& e) {
    std::fprintf(stderr, "error: %s: %s\n", e.code().c_str(), e.what());
  }
  return 2;
}

LoadedScript loadFile(const std::string& p) {
  if (!fs::exists(p)) throw CorpusError("MissingScript", "script not found: " + p);
  LoadedScript s;
  s.path = p;
  s.file = p;
  s.text = slurp(p);
  s.script = parseScript(s.text, p);
  return s;
}

std::string manifestOf(const RunConfig& cfg) {
  return cfg.manifest.empty() ? defaultManifestPath() : cfg.manifest;
}

int runCheck(const RunConfig& cfg) {
  CheckOptions opts;
  if (cfg.trace)
    opts.onItem = [](const ItemResult& r) {
      std::fprintf(stderr, "[trace] %s %s %s\n", r.ok ? "ok  " : "fail", toString(r.kind),
                   r.name.c_str());
    };

  std::vector<LoadedScript> scripts;
  std::size_t preludeCount = 0;
  bool userScripts = !cfg.paths.empty();
  try {
    if (!userScripts || !cfg.bare) scripts = loadCorpus(manifestOf(cfg));
    preludeCount = userScripts ? scripts.size() : 0;
    for (const auto& p : cfg.paths) scripts.push_back(loadFile(p));
  } catch (const ParseError&) {
    return reportLoadError(std::current_exception());
  } catch (const CorpusError&) {
    return reportLoadError(std::current_exception());
  }

  std::size_t failures = 0, shownFailures = 0, rows = 0;
  Session session;
  for (std::size_t i = 0; i < scripts.size(); ++i) {
    ScriptResult r = checkScript(session, scripts[i].script, opts);
    bool report = i >= preludeCount;
    for (const auto& item : r.items) {
      bool exported = (item.kind == ItemKind::Def || item.kind == ItemKind::Prim) &&
                      (!item.anchor.empty() || userScripts);
      bool shown = exported || (userScripts && item.kind == ItemKind::Check) || !item.ok;
      if (!shown || (!report && item.ok)) continue;
      if (!item.ok && cfg.maxErrors > 0 && shownFailures >= static_cast<std::size_t>(cfg.maxErrors))
        continue;
      if (!item.ok) ++shownFailures;
      ++rows;
      printRow(item.ok ? "PASS" : "FAIL", scripts[i].path, item);
    }
    failures += r.failures();
  }
  std::printf("%zu scripts, %zu rows, %zu failures\n", scripts.size(), rows, failures);
  return failures == 0 ? 0 : 1;
}

int runOracle(const RunConfig& cfg) {
  oracle::OracleOptions opts;
  opts.maxN = cfg.maxN;
  opts.seed = cfg.seed;
  opts.sampleBudget = cfg.samples;
  std::vector<std::string> ids = cfg.paths.empty() ? oracle::theoremIds() : cfg.paths;
  std::vector<oracle::TheoremReport> reports;
  try {
    for (const auto& id : ids) reports.push_back(oracle::verifyTheorem(id, opts));
  } catch (const oracle::OracleError& e) {
    std::fprintf(stderr, "error: %s: %s\n", e.code().c_str(), e.what());
    return 2;
  }
  std::size_t failed = 0;
  for (const auto& r : reports) failed += !r.holds();
  if (cfg.json) {
    std::printf("%s\n", oracle::reportJson(reports).c_str());
    return failed == 0 ? 0 : 1;
  }
  std::printf("maxN %d, seed %llu, sample budget %llu (~ marks sampled sizes)\n", opts.maxN,
              static_cast<unsigned long long>(opts.seed),
              static_cast<unsigned long long>(opts.sampleBudget));
  for (const auto& r : reports) std::printf("%s\n", oracle::reportLine(r).c_str());
  if (cfg.paths.empty()) {
    if (auto w = oracle::strictnessWitness(std::min(opts.maxN, 3)))
      std::printf("4.3.7 is strict: R=%s P=%s Q=%s at (%d,%d)\n", toString(w->r).c_str(),
                  toString(w->p).c_str(), toString(w->q).c_str(), w->point.first,
                  w->point.second);
  }
  std::printf("%zu theorems, %zu failed\n", reports.size(), failed);
  return failed == 0 ? 0 : 1;
}

// Scripts given to `export`: corpus members by manifest path, or files.
int runExport(const RunConfig& cfg) {
  std::vector<LoadedScript> corpus;
  std::vector<std::pair<LoadedScript, std::size_t>> targets;  // script, corpus prefix length
  try {
    if (!cfg.bare) corpus = loadCorpus(manifestOf(cfg));
    for (const auto& p : cfg.paths) {
      std::size_t k = 0;
      while (k < corpus.size() && corpus[k].path != p) ++k;
      if (k < corpus.size())
        targets.emplace_back(corpus[k], k);
      else
        targets.emplace_back(loadFile(p), corpus.size());
    }
  } catch (const ParseError&) {
    return reportLoadError(std::current_exception());
  } catch (const CorpusError&) {
    return reportLoadError(std::current_exception());
  }

  ExportOptions opts;
  opts.maxDepth = cfg.maxDepth;
  opts.wrapColumn = cfg.wrap;
  std::string out;
  for (const auto& [target, prefix] : targets) {
    try {
      if (cfg.checkedOnly) {
        Session session;
        for (std::size_t k = 0; k < prefix; ++k) checkScript(session, corpus[k].script);
        out += exportChecked(session, target.script, opts);
        continue;
      }
      NotationTable table;
      for (std::size_t k = 0; k < prefix; ++k)
        for (const auto& it : corpus[k].script.items)
          if (it.kind == ItemKind::Notation) table.bind(it.name, it.mode, it.target, it.pos);
      out += cfg.pretty ? prettyScript(target.script, table)
                        : exportLatex(target.script, table, opts);
    } catch (const ExportError& e) {
      std::fprintf(stderr, "error: %s: %s: %s\n", target.path.c_str(), e.code().c_str(), e.what());
      return 1;
    } catch (const NotationError& e) {
      std::fprintf(stderr, "error: %s:%d:%d: %s: %s\n", target.path.c_str(), e.pos().line,
                   e.pos().column, e.code().c_str(), e.what());
      return 1;
    }
  }
  if (cfg.standalone && !cfg.pretty) out = standaloneDocument(out);
  if (cfg.output.empty() || cfg.output == "-") {
    std::fwrite(out.data(), 1, out.size(), stdout);
  } else {
    std::ofstream f(cfg.output, std::ios::binary);
    if (!f) {
      std::fprintf(stderr, "error: cannot write %s\n", cfg.output.c_str());
      return 3;
    }
    f << out;
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"lambdad: a checker for the calculus of constructions with definitions"};
  app.require_subcommand(1);
  RunConfig cfg;

  auto* check = app.add_subcommand("check", "check scripts (the bundled corpus when none given)");
  check->add_option("paths", cfg.paths, "scripts to check after the corpus");
  check->add_option("--manifest", cfg.manifest, "corpus manifest");
  check->add_flag("--trace", cfg.trace, "print every item as it is checked");
  check->add_option("--max-errors,--maxErrors", cfg.maxErrors, "stop reporting after N failures");
  check->add_flag("--bare", cfg.bare, "do not load the corpus before the given scripts");

  auto* orc = app.add_subcommand("oracle", "verify theorem statements on finite carriers");
  orc->add_option("ids", cfg.paths, "theorem ids (default: the whole registry)");
  orc->add_option("--maxN,--max-n", cfg.maxN, "largest carrier size (1..6)")->capture_default_str();
  orc->add_option("--seed", cfg.seed, "sampling seed")->capture_default_str();
  orc->add_option("--samples,--sample-budget", cfg.samples, "instances per sampled size")
      ->capture_default_str();
  orc->add_flag("--json", cfg.json, "machine-readable report");

  auto* exp = app.add_subcommand("export", "render scripts as flag derivations in LaTeX");
  exp->add_option("paths", cfg.paths, "corpus script names or files")->required();
  exp->add_option("--manifest", cfg.manifest, "corpus manifest");
  exp->add_option("-o,--output", cfg.output, "output file (default: standard output)");
  exp->add_flag("--standalone", cfg.standalone, "wrap in a minimal LaTeX document");
  exp->add_flag("--checked-only,--checkedOnly", cfg.checkedOnly, "refuse scripts that do not check");
  exp->add_flag("--pretty", cfg.pretty, "plain re-sugared script text instead of LaTeX");
  exp->add_option("--max-depth", cfg.maxDepth, "deepest flag nesting rendered")->capture_default_str();
  exp->add_option("--wrap", cfg.wrap, "column at which long ascriptions wrap")->capture_default_str();
  exp->add_flag("--bare", cfg.bare, "do not load the corpus notations");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? 0 : 2;
  }
  try {
    if (*check) return runCheck(cfg);
    if (*orc) return runOracle(cfg);
    if (*exp) return runExport(cfg);
  } catch (const std::exception& e) {
    std::fprintf(stderr, "internal error: %s\n", e.what());
    return 3;
  }
  return 3;
}
