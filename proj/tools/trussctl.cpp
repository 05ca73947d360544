#include <chrono>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "trusslab/cli.hpp"

using namespace trusslab;

int main(int argc, char **argv)
{
  CLI::App app{"trussctl: build and check finite heaps, trusses, modules and braces"};
  app.require_subcommand(1);
  app.fallthrough();

  Options opt;
  std::string json_path, format = "table";
  bool timing = false;
  app.add_option("--seed", opt.seed, "RNG seed")->capture_default_str();
  app.add_option("--samples", opt.samples, "samples for randomized checks")->capture_default_str();
  app.add_option("--json", json_path, "also write the JSON report to this path");
  app.add_option("--format", format, "table or json")
    ->check(CLI::IsMember({"table", "json"}))
    ->capture_default_str();
  app.add_flag("--timing", timing, "print elapsed time to stderr");

  std::string file, module_file, subset, family;
  std::size_t n_max = 16, anchor = 0;
  std::vector<std::string> params;

  auto *validate = app.add_subcommand("validate", "check the laws of a structure file");
  validate->add_option("file", file, "JSON structure")->required();

  auto *scan = app.add_subcommand("scan-units", "units of T(Z_n) as paragons, n = 2..n_max");
  scan->add_option("n_max", n_max, "largest n (at most 64)")->capture_default_str();

  auto *extend_cmd = app.add_subcommand("extend", "extension truss T[M;e] and its clause checks");
  extend_cmd->add_option("base", file, "truss JSON")->required();
  extend_cmd->add_option("module", module_file, "tmodule JSON or \"regular\"")->required();
  extend_cmd->add_option("e", anchor, "anchor element of M")->capture_default_str();

  auto *quotient = app.add_subcommand("quotient", "quotient of a truss by a paragon");
  quotient->add_option("file", file, "truss JSON")->required();
  quotient->add_option("subset", subset, "comma-separated indices or labels")->required();

  auto *brace = app.add_subcommand("brace", "socle and ideals of a brace or brace-type truss");
  brace->add_option("file", file, "brace or truss JSON")->required();

  auto *ident = app.add_subcommand("identify", "fingerprint and name of a group");
  ident->add_option("file", file, "group, brace or unital truss JSON")->required();

  auto *catalog = app.add_subcommand("catalog", "build a catalog structure");
  catalog->add_option("family", family, "zn, za, group-ring, trunc-poly or end")->required();
  catalog->add_option("params", params, "family parameters");
  std::string out_path;
  catalog->add_option("--out", out_path, "write the built truss JSON to this path");

  CLI11_PARSE(app, argc, argv);

  std::string command = "trussctl";
  for (int i = 1; i < argc; ++i)
    command += std::string(" ") + argv[i];

  Report rep;
  auto const start = std::chrono::steady_clock::now();
  try {
    if (*validate)
      rep = cmd_validate(load_json_file(file), opt);
    else if (*scan)
      rep = cmd_scan_units(n_max, opt);
    else if (*extend_cmd) {
      auto const base = load_json_file(file);
      if (module_file == "regular")
        rep = cmd_extend(base, nullptr, anchor, opt);
      else {
        auto const m = load_json_file(module_file);
        rep = cmd_extend(base, &m, anchor, opt);
      }
    } else if (*quotient)
      rep = cmd_quotient(load_json_file(file), subset, opt);
    else if (*brace)
      rep = cmd_brace(load_json_file(file), opt);
    else if (*ident)
      rep = cmd_identify(load_json_file(file), opt);
    else if (*catalog)
      rep = cmd_catalog(family, params, opt);
  } catch (ParseError const &e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (LawViolation const &e) {
    std::cerr << "error: input violates " << e.what() << '\n';
    return 2;
  } catch (InvariantBroken const &e) {
    std::cerr << "internal check failed: " << e.what() << '\n';
    return 3;
  } catch (std::exception const &e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }
  rep.elapsed_ms =
    std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  rep.command = command;

  auto const j = rep.to_json();
  if (format == "json")
    std::cout << j.dump(2) << '\n';
  else
    std::cout << rep.to_table();
  if (!json_path.empty()) {
    std::ofstream out(json_path, std::ios::binary);
    if (!out) {
      std::cerr << "error: cannot write " << json_path << '\n';
      return 2;
    }
    out << j.dump(2) << '\n';
  }
  if (!out_path.empty()) {
    auto const &st = rep.structures;
    std::ofstream out(out_path, std::ios::binary);
    if (!out || !(st.contains("truss") || st.contains("extension"))) {
      std::cerr << "error: cannot write " << out_path << '\n';
      return 2;
    }
    out << (st.contains("truss") ? st["truss"] : st["extension"]).dump(2) << '\n';
  }
  if (timing)
    std::cerr << "elapsed: " << rep.elapsed_ms << " ms\n";
  return rep.ok() ? 0 : 1;
}
