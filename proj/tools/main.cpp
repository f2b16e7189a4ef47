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

#include <filesystem>
#include <fstream>
#include <iostream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "kanforge/battery.hpp"
#include "kanforge/constructions.hpp"
#include "kanforge/corpus.hpp"
#include "kanforge/errors.hpp"
#include "kanforge/io.hpp"
#include "kanforge/variety.hpp"

namespace {

using kanforge::Algebra;
using kanforge::Signature;
using kanforge::Symbol;

constexpr int kExitPass = 0;
constexpr int kExitFail = 1;
constexpr int kExitUsage = 2;
constexpr int kExitParse = 3;

int run_check(const std::string& file, const std::string& variety,
              bool as_json) {
  Algebra a = kanforge::load_algebra_file(file);
  kanforge::VarietyReport report = kanforge::check_variety(a, variety);
  if (as_json) {
    nlohmann::ordered_json doc;
    doc["variety"] = report.variety;
    doc["verdict"] = report.ok;
    doc["axioms"] = nlohmann::ordered_json::array();
    for (const auto& ax : report.axioms) {
      nlohmann::ordered_json entry;
      entry["name"] = ax.name;
      entry["verdict"] = ax.holds;
      if (ax.counterexample) {
        nlohmann::ordered_json cex;
        for (const auto& [var, elem] : ax.counterexample->bindings)
          cex[var] = elem;
        entry["counterexample"] = cex;
      }
      doc["axioms"].push_back(entry);
    }
    std::cout << doc.dump(2) << "\n";
  } else {
    std::cout << "algebra " << a.name << ": variety " << variety << "\n";
    for (const auto& ax : report.axioms) {
      std::cout << "  " << ax.name << ": " << (ax.holds ? "ok" : "FAIL");
      if (ax.counterexample)
        std::cout << "  " << ax.counterexample->to_string();
      if (!ax.detail.empty()) std::cout << "  (" << ax.detail << ")";
      std::cout << "\n";
    }
    std::cout << "verdict: " << (report.ok ? "PASS" : "FAIL") << "\n";
  }
  return report.ok ? kExitPass : kExitFail;
}

int run_apply(const std::string& tag, const std::string& file,
              const std::string& out_path) {
  Algebra a = kanforge::load_algebra_file(file);
  kanforge::ConstructedAlgebra built = kanforge::apply_construction(tag, a);
  std::string doc = "# " + tag + " of " + a.name + "\n" +
                    kanforge::print_algebra(built.algebra);
  if (out_path.empty()) {
    std::cout << doc;
  } else {
    std::ofstream out(out_path);
    if (!out) throw kanforge::IoError("cannot write '" + out_path + "'");
    out << doc;
  }
  return kExitPass;
}

Signature parse_signature(const std::string& symbols, const Algebra& a,
                          const Algebra& b) {
  Signature sig = kanforge::lattice_signature();
  if (symbols.empty()) {
    for (Symbol s : {Symbol::knot, Symbol::neg, Symbol::star, Symbol::center})
      if (a.has(s) && b.has(s)) sig.insert(s);
    return sig;
  }
  size_t pos = 0;
  while (pos < symbols.size()) {
    size_t comma = symbols.find(',', pos);
    if (comma == std::string::npos) comma = symbols.size();
    std::string tok = symbols.substr(pos, comma - pos);
    pos = comma + 1;
    if (tok == "knot") sig.insert(Symbol::knot);
    else if (tok == "neg") sig.insert(Symbol::neg);
    else if (tok == "star") sig.insert(Symbol::star);
    else if (tok == "center") sig.insert(Symbol::center);
    else if (!tok.empty())
      throw CLI::ValidationError("--signature",
                                 "unknown symbol '" + tok + "'");
  }
  return sig;
}

int run_iso(const std::string& file1, const std::string& file2,
            const std::string& signature_spec) {
  Algebra a = kanforge::load_algebra_file(file1);
  Algebra b = kanforge::load_algebra_file(file2);
  Signature sig = parse_signature(signature_spec, a, b);
  auto iso = kanforge::find_isomorphism(a, b, sig);
  if (!iso) {
    std::cout << "not isomorphic\n";
    return kExitFail;
  }
  for (int x = 0; x < a.size(); ++x)
    std::cout << a.name_of(x) << " -> " << b.name_of(iso->mapping[x]) << "\n";
  return kExitPass;
}

int run_verify(const std::string& file) {
  Algebra a = kanforge::load_algebra_file(file);
  kanforge::BatteryReport report = kanforge::run_battery(a);
  std::cout << report.to_string();
  return report.ok ? kExitPass : kExitFail;
}

int run_enumerate(const std::string& lattice_file, int posets_n,
                  const std::string& variety, bool count_only,
                  const std::string& out_dir) {
  std::vector<std::pair<std::string, kanforge::FinLattice>> lattices;
  int poset_count = 0;
  if (!lattice_file.empty()) {
    Algebra a = kanforge::load_algebra_file(lattice_file);
    lattices.emplace_back(a.name, a.lattice);
  } else {
    auto posets = kanforge::enumerate_posets(posets_n);
    poset_count = static_cast<int>(posets.size());
    for (size_t i = 0; i < posets.size(); ++i)
      lattices.emplace_back("L" + std::to_string(i),
                            kanforge::downset_lattice(posets[i]));
  }

  if (!out_dir.empty()) {
    std::error_code ec;
    std::filesystem::create_directories(out_dir, ec);
    if (ec) throw kanforge::IoError("cannot create directory '" + out_dir + "'");
  }

  int total = 0;
  std::string docs;
  for (auto& [name, lat] : lattices) {
    // lattices generated here are already capped by the poset bound; the
    // table bound guards user-supplied input only
    kanforge::EnumOptions opts;
    if (lattice_file.empty()) opts.max_size = lat.size();
    auto structures = kanforge::enumerate_operator_pairs(lat, variety, opts);
    for (auto& a : structures) {
      a.name = name + "-" + a.name;
      if (!out_dir.empty()) {
        std::string path = out_dir + "/" + a.name + ".alg";
        std::ofstream out(path);
        if (!out) throw kanforge::IoError("cannot write '" + path + "'");
        out << kanforge::print_algebra(a);
      } else if (!count_only) {
        if (total) docs += "\n";
        docs += kanforge::print_algebra(a);
      }
      ++total;
    }
  }
  if (count_only || !out_dir.empty()) {
    if (lattice_file.empty()) std::cout << "posets: " << poset_count << "\n";
    std::cout << "lattices: " << lattices.size() << "\n";
    std::cout << "structures: " << total << "\n";
  } else {
    std::cout << docs;
  }
  return kExitPass;
}

int run_export_dot(const std::string& file) {
  Algebra a = kanforge::load_algebra_file(file);
  std::cout << kanforge::export_dot(a);
  return kExitPass;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Finite-model workbench for bounded distributive lattices "
               "with De Morgan and intuitionistic negations"};
  app.require_subcommand(1);

  std::string file, file2, variety, out_path, tag, signature_spec;
  std::string lattice_file, out_dir;
  int posets_n = 0;
  bool as_json = false, count_only = false;

  auto* check = app.add_subcommand("check", "check variety membership");
  check->add_option("file", file, "algebra document")->required();
  check->add_option("--variety", variety, "variety name")->required();
  check->add_flag("--json", as_json, "machine-readable report");

  auto* apply = app.add_subcommand("apply", "apply a construction");
  apply->add_option("construction", tag,
                    "kalman|monteiro|center-slice|diamond|box|theta")
      ->required();
  apply->add_option("file", file, "algebra document")->required();
  apply->add_option("-o,--output", out_path, "write the result here");

  auto* iso = app.add_subcommand("iso", "search for an isomorphism");
  iso->add_option("file1", file, "first algebra document")->required();
  iso->add_option("file2", file2, "second algebra document")->required();
  iso->add_option("--signature", signature_spec,
                  "comma-separated symbols (knot,neg,star,center); lattice "
                  "operations and bounds are always included");

  auto* verify = app.add_subcommand(
      "verify", "run every theorem check applicable to the detected variety");
  verify->add_option("file", file, "algebra document")->required();

  auto* enumerate = app.add_subcommand("enumerate",
                                       "enumerate operator structures");
  auto* lat_opt = enumerate->add_option("--lattice", lattice_file,
                                        "enumerate on this lattice");
  auto* posets_opt = enumerate->add_option(
      "--posets", posets_n, "enumerate on all downset lattices of this size");
  lat_opt->excludes(posets_opt);
  enumerate->add_option("--variety", variety,
                        "kleene|kan|kanc|skan|skanc")->required();
  enumerate->add_flag("--count-only", count_only, "print counts only");
  enumerate->add_option("--out-dir", out_dir,
                        "write each structure as a .alg file here");

  auto* dot = app.add_subcommand("export-dot", "Hasse diagram as DOT text");
  dot->add_option("file", file, "algebra document")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (check->parsed()) return run_check(file, variety, as_json);
    if (apply->parsed()) return run_apply(tag, file, out_path);
    if (iso->parsed()) return run_iso(file, file2, signature_spec);
    if (verify->parsed()) return run_verify(file);
    if (enumerate->parsed()) {
      if (lattice_file.empty() && posets_n <= 0) {
        std::cerr << "enumerate needs --lattice or --posets\n";
        return kExitUsage;
      }
      return run_enumerate(lattice_file, posets_n, variety, count_only,
                           out_dir);
    }
    if (dot->parsed()) return run_export_dot(file);
  } catch (const kanforge::ParseError& e) {
    std::cerr << "parse error at line " << e.line << ", column " << e.column
              << ": " << e.what() << "\n";
    return kExitParse;
  } catch (const kanforge::IoError& e) {
    std::cerr << "io error: " << e.what() << "\n";
    return kExitParse;
  } catch (const kanforge::UnknownVariety& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const kanforge::BoundExceeded& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const kanforge::MissingOperation& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const kanforge::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitFail;
  }
  return kExitUsage;
}
