// Copyright 2026 The lingds Authors
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

#include "lingds_cli/cli.hpp"

#include <algorithm>
#include <cctype>
#include <filesystem>
#include <fstream>
#include <map>
#include <ostream>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "CLI11.hpp"
#include "lingds/dependency.hpp"
#include "lingds/diagnostics.hpp"
#include "lingds/document.hpp"
#include "lingds/media.hpp"
#include "lingds/normalize.hpp"
#include "lingds/schemes.hpp"
#include "lingds/semgraph.hpp"
#include "lingds/xml.hpp"

namespace lingds::cli {

namespace {

constexpr int kOk = 0;
constexpr int kUnreadable = 1;
constexpr int kViolations = 2;
constexpr int kInternal = 3;

struct Options {
  std::string command;
  std::string file;
  std::string id;  // coref only
  std::string schemes;
  std::string dir;
  bool strict = false;
  bool quiet = false;
  bool no_normalize = false;
};

bool ReadFile(const std::string& path, std::string* bytes,
              std::ostream& err) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    err << "cannot read " << path << "\n";
    return false;
  }
  std::ostringstream buffer;
  buffer << in.rdbuf();
  *bytes = buffer.str();
  return true;
}

void Report(const Diagnostics& diags, const Options& opt, std::ostream& to) {
  if (opt.quiet) return;
  for (const Diagnostic& d : diags.entries()) to << d.ToString() << "\n";
}

int ExitFor(const Diagnostics& diags, const Options& opt) {
  if (diags.HasErrors()) return kViolations;
  if (opt.strict && diags.HasWarnings()) return kViolations;
  return kOk;
}

// Single whitespace-normalized content text, used to label elements
// without ids in coref output.
std::string LabelOf(const LingElement& e) {
  if (!e.id.empty()) return e.id;
  std::string text = e.InnerText();
  std::string label;
  bool space = false;
  for (char c : text) {
    if (std::isspace(static_cast<unsigned char>(c))) {
      space = !label.empty();
    } else {
      if (space) label.push_back(' ');
      space = false;
      label.push_back(c);
    }
  }
  return label;
}

int RunFile(const Options& opt, const SchemeRegistry& registry,
            std::ostream& out, std::ostream& err) {
  std::string bytes;
  if (!ReadFile(opt.file, &bytes, err)) return kUnreadable;
  Diagnostics diags;
  Document doc;
  try {
    doc = ParseDocument(bytes, diags);
  } catch (const ParseError& e) {
    if (opt.command == "validate") {
      if (!opt.quiet) out << "error parse - " << e.what() << "\n";
      return kViolations;
    }
    err << opt.file << ": " << e.what() << "\n";
    return kUnreadable;
  }

  if (opt.command == "validate") {
    Diagnostics checked = Validate(doc);
    for (const Diagnostic& d : checked.entries()) {
      diags.Add(d.severity, d.rule, d.path, d.message);
    }
    Report(diags, opt, out);
    return ExitFor(diags, opt);
  }

  try {
    if (opt.command == "original") {
      out << ReconstructOriginal(doc).text;
      Report(diags, opt, err);
      return ExitFor(diags, opt);
    }
    if (opt.command == "align") {
      for (const std::string& line : ExportSpans(doc)) out << line << "\n";
      Report(diags, opt, err);
      return ExitFor(diags, opt);
    }
    if (opt.command == "deps") {
      DependencyGraph graph = ResolveDependencies(doc, diags);
      if (doc.root != nullptr) {
        for (const std::string& line : graph.ExportArcs(*doc.root)) {
          out << line << "\n";
        }
      }
      Report(diags, opt, err);
      return ExitFor(diags, opt);
    }

    bool expand = !(opt.command == "compile" && opt.no_normalize);
    Document work = expand ? Expand(doc, diags) : std::move(doc);
    if (opt.command == "normalize") {
      out << SerializeCanonical(work);
      Report(diags, opt, err);
      return ExitFor(diags, opt);
    }

    DependencyGraph depg = ResolveDependencies(work, diags);
    CompiledGraph compiled = Compile(work, depg, registry, diags);
    if (opt.command == "compile") {
      out << ExportTriples(compiled.graph);
      Report(diags, opt, err);
      return ExitFor(diags, opt);
    }

    // coref
    auto ids = work.root != nullptr
                   ? IdIndex(*work.root)
                   : std::map<std::string, const LingElement*>{};
    auto it = ids.find(opt.id);
    if (it == ids.end()) {
      err << "no element with id " << opt.id << "\n";
      return kViolations;
    }
    std::map<std::string, const LingElement*> by_path;
    work.root->Walk([&by_path](const LingElement& e) {
      by_path[e.Path()] = &e;
    });
    for (const std::string& path : compiled.ClusterOf(it->second->Path())) {
      auto found = by_path.find(path);
      out << path << "\t"
          << (found != by_path.end() ? LabelOf(*found->second) : "") << "\n";
    }
    Report(diags, opt, err);
    return ExitFor(diags, opt);
  } catch (const NormalizeError& e) {
    err << opt.file << ": " << e.what() << "\n";
    return kViolations;
  }
}

}  // namespace

int Run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err) {
  Options opt;
  CLI::App app{"MPEG-7 Linguistic DS toolchain"};
  app.add_option("--schemes", opt.schemes,
                 "Extra classification scheme file")
      ->envname("LINGDS_SCHEMES_PATH");
  app.add_flag("--strict", opt.strict, "Treat warnings as errors");
  app.add_flag("--quiet", opt.quiet, "Suppress diagnostics");
  app.add_option("--dir", opt.dir,
                 "Process every file of a directory in name order");
  app.require_subcommand(1);

  auto add = [&app, &opt](const std::string& name, const std::string& desc) {
    CLI::App* sub = app.add_subcommand(name, desc);
    sub->fallthrough();
    sub->add_option("file", opt.file, "Input description");
    return sub;
  };
  add("validate", "Check structural rules; exit 2 on violations");
  add("normalize", "Expand ellipsis and print canonical form");
  add("deps", "Print dependency arcs as DEP lines");
  CLI::App* compile = add("compile", "Print the semantic graph as triples");
  compile->add_flag("--no-normalize", opt.no_normalize,
                    "Compile without ellipsis expansion");
  add("align", "Print media spans as SPAN lines");
  CLI::App* coref =
      add("coref", "Print the coreference class of an element id");
  coref->add_option("id", opt.id, "Element id");
  add("original", "Reconstruct the pre-edit source text");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(std::move(reversed));
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << e.what() << "\n";
    return kUnreadable;
  }
  for (const CLI::App* sub : app.get_subcommands()) {
    opt.command = sub->get_name();
  }

  SchemeRegistry registry = BuiltinRegistry();
  if (!opt.schemes.empty()) {
    std::string bytes;
    if (!ReadFile(opt.schemes, &bytes, err)) return kUnreadable;
    Diagnostics sdiags;
    LoadSchemes(bytes, registry, sdiags);
    Report(sdiags, opt, err);
  }

  try {
    if (!opt.dir.empty()) {
      namespace fs = std::filesystem;
      if (opt.command == "coref" && opt.id.empty()) {
        // In corpus mode the only positional is the id.
        opt.id = std::exchange(opt.file, "");
      }
      if (!fs::is_directory(opt.dir)) {
        err << "not a directory: " << opt.dir << "\n";
        return kUnreadable;
      }
      std::vector<std::string> files;
      for (const fs::directory_entry& entry : fs::directory_iterator(opt.dir)) {
        if (entry.is_regular_file()) files.push_back(entry.path().string());
      }
      std::sort(files.begin(), files.end());
      int worst = kOk;
      for (const std::string& file : files) {
        Options per = opt;
        per.file = file;
        std::ostringstream obuf;
        std::ostringstream ebuf;
        int code = RunFile(per, registry, obuf, ebuf);
        out << "== " << file << " ==\n" << obuf.str();
        err << ebuf.str();
        worst = std::max(worst, code);
      }
      return worst;
    }
    if (opt.file.empty()) {
      err << "missing input file\n";
      return kUnreadable;
    }
    return RunFile(opt, registry, out, err);
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << "\n";
    return kInternal;
  }
}

}  // namespace lingds::cli
