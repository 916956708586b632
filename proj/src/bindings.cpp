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

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "lambdad/corpus.hpp"
#include "lambdad/export.hpp"
#include "lambdad/oracle.hpp"

namespace py = pybind11;
using namespace pybind11::literals;
using namespace lambdad;

namespace {

py::dict itemDict(const ItemResult& r) {
  return py::dict("name"_a = r.name, "global"_a = r.global, "kind"_a = toString(r.kind),
                  "anchor"_a = r.anchor, "line"_a = r.pos.line, "ok"_a = r.ok, "code"_a = r.code,
                  "message"_a = r.message, "type"_a = r.type);
}

py::list relations(const std::vector<oracle::FiniteRelation>& rs) {
  py::list out;
  for (const auto& r : rs) out.append(py::make_tuple(r.n, r.pairs()));
  return out;
}

py::dict reportDict(const oracle::TheoremReport& r) {
  py::list sizes;
  for (const auto& s : r.sizes)
    sizes.append(py::dict("n"_a = s.n, "exhaustive"_a = s.exhaustive, "instances"_a = s.instances,
                          "forward"_a = s.forward, "backward"_a = s.backward));
  py::object cx = py::none();
  if (r.counterexample) {
    const auto& c = *r.counterexample;
    cx = py::dict("n"_a = c.n, "index"_a = c.index, "relations"_a = relations(c.relations),
                  "sets"_a = c.sets, "points"_a = c.points, "direction"_a = c.direction);
  }
  return py::dict("id"_a = r.id, "name"_a = r.name, "statement"_a = r.statement,
                  "holds"_a = r.holds(), "sizes"_a = sizes, "counterexample"_a = cx);
}

oracle::OracleOptions oracleOptions(int maxN, std::uint64_t seed, std::uint64_t samples) {
  oracle::OracleOptions o;
  o.maxN = maxN;
  o.seed = seed;
  o.sampleBudget = samples;
  return o;
}

}  // namespace

PYBIND11_MODULE(_lambdad, m) {
  m.doc() = "lambdad kernel, corpus checker, finite-model oracle and flag export";

  static py::exception<std::runtime_error> error(m, "LambdadError");
  py::register_exception_translator([](std::exception_ptr p) {
    auto raise = [](const std::string& code, const std::exception& e) {
      py::object exc = py::reinterpret_borrow<py::object>(error)(e.what());
      exc.attr("code") = code;
      PyErr_SetObject(error.ptr(), exc.ptr());
    };
    try {
      if (p) std::rethrow_exception(p);
    } catch (const ParseError& e) {
      raise(e.code(), e);
    } catch (const ElabError& e) {
      raise(e.code(), e);
    } catch (const CorpusError& e) {
      raise(e.code(), e);
    } catch (const ExportError& e) {
      raise(e.code(), e);
    } catch (const oracle::OracleError& e) {
      raise(e.code(), e);
    } catch (const KernelError& e) {
      raise(toString(e.kind()), e);
    }
  });

  m.def("format_script", [](const std::string& text, const std::string& path) {
    return printScript(parseScript(text, path));
  }, "text"_a, "path"_a = "<input>");

  m.def("flag_depth", [](const std::string& text) { return flagDepth(parseScript(text)); });

  py::class_<Session>(m, "Session")
      .def(py::init<>())
      .def_static("from_corpus", [](const std::string& manifest) {
        auto scripts = loadCorpus(manifest.empty() ? defaultManifestPath() : manifest);
        return checkCorpus(scripts).session;
      }, "manifest"_a = "")
      .def("check", [](Session& s, const std::string& text, const std::string& path) {
        py::list out;
        for (const auto& r : checkScript(s, parseScript(text, path)).items) out.append(itemDict(r));
        return out;
      }, "text"_a, "path"_a = "<input>")
      .def("names", [](const Session& s) {
        std::vector<std::string> out;
        for (std::size_t i = 0; i < s.env.size(); ++i) out.push_back(s.env.at(i).name);
        return out;
      })
      .def("export_latex", [](const Session& s, const std::string& text) {
        return exportLatex(parseScript(text), s.notations);
      }, "text"_a)
      .def("__len__", [](const Session& s) { return s.env.size(); });

  m.def("check_corpus", [](const std::string& manifest) {
    auto report = checkCorpus(loadCorpus(manifest.empty() ? defaultManifestPath() : manifest));
    py::list exports;
    for (const auto& e : report.exports)
      exports.append(py::dict("script"_a = e.script, "name"_a = e.name, "anchor"_a = e.anchor,
                              "ok"_a = e.ok, "code"_a = e.code, "type"_a = e.type));
    return py::dict("ok"_a = report.ok(), "failures"_a = report.failures(), "exports"_a = exports);
  }, "manifest"_a = "");

  m.def("required_exports", &requiredExports);

  m.def("theorem_ids", &oracle::theoremIds);
  m.def("verify_theorem", [](const std::string& id, int maxN, std::uint64_t seed,
                             std::uint64_t samples) {
    return reportDict(oracle::verifyTheorem(id, oracleOptions(maxN, seed, samples)));
  }, "id"_a, "max_n"_a = 3, "seed"_a = 0, "samples"_a = 100000);
  m.def("verify_all", [](int maxN, std::uint64_t seed, std::uint64_t samples) {
    py::list out;
    for (const auto& r : oracle::verifyAll(oracleOptions(maxN, seed, samples)))
      out.append(reportDict(r));
    return out;
  }, "max_n"_a = 3, "seed"_a = 0, "samples"_a = 100000);
  m.def("strictness_witness", [](int maxN) -> py::object {
    auto w = oracle::strictnessWitness(maxN);
    if (!w) return py::none();
    return py::dict("relations"_a = relations({w->r, w->p, w->q}), "point"_a = w->point);
  }, "max_n"_a = 3);

  m.def("export_latex", [](const std::string& text, bool standalone, int maxDepth) {
    ExportOptions o;
    o.standalone = standalone;
    o.maxDepth = maxDepth;
    std::string body = exportLatex(parseScript(text), NotationTable(), o);
    return standalone ? standaloneDocument(body) : body;
  }, "text"_a, "standalone"_a = false, "max_depth"_a = 32);
}
