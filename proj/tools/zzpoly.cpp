// zzpoly: Zhang-Zhang polynomials of regular benzenoid strips.

#include <CLI11.hpp>

#include <iostream>

#include "zz/cli.hpp"
#include "zz/error.hpp"

int main(int argc, char** argv) {
  CLI::App app{"Zhang-Zhang polynomials of Kekulean regular benzenoid strips"};
  app.set_help_flag("-h,--help", "Print this help message and exit");

  zz::RunConfig config;
  std::string mode;
  std::string format = "text";
  std::string n_range;
  bool no_dedup = false;
  bool list_extensions = false, list_kekule = false, list_clar = false, oracle = false;

  app.add_option("mode", mode,
                 "profile | poset | extensions | zz | closed-form | kekule | clar | oracle | catalog");
  app.add_option("--strip", config.strip, "Strip text: \"WWRNN 3\" or \"M <tiers> <n>\"");
  app.add_option("--strip-file", config.strip_file, "File with strip text or a JSON StripSpec");
  app.add_option("--shapes", config.shapes, "Fragment shapes, e.g. WWRNN");
  app.add_option("--length,-n", config.length, "Strip length n");
  app.add_option("--n-range", n_range, "Run for every n in A..B");
  app.add_option("--format", format, "text | json | latex");
  app.add_option("--tiers", config.tiers, "Catalog: largest tier count");
  app.add_option("--max-vertices", config.max_vertices, "Oracle vertex limit")->check(CLI::PositiveNumber);
  app.add_flag("--no-dedup", no_dedup, "Catalog: keep mirror images");
  app.add_flag("--list-extensions", list_extensions, "Same as mode 'extensions'");
  app.add_flag("--list-kekule", list_kekule, "Same as mode 'kekule'");
  app.add_flag("--list-clar", list_clar, "Same as mode 'clar'");
  app.add_flag("--oracle", oracle, "Same as mode 'oracle'");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : zz::kExitInvalid;
  }

  try {
    std::vector<std::string> modes;
    if (!mode.empty()) modes.push_back(mode);
    if (list_extensions) modes.emplace_back("extensions");
    if (list_kekule) modes.emplace_back("kekule");
    if (list_clar) modes.emplace_back("clar");
    if (oracle) modes.emplace_back("oracle");
    if (modes.size() != 1) {
      std::cerr << "error: give exactly one mode\n" << app.help();
      return zz::kExitInvalid;
    }
    config.mode = zz::mode_from_string(modes.front());
    config.format = zz::format_from_string(format);
    if (!n_range.empty()) config.n_range = zz::parse_n_range(n_range);
    config.dedup = !no_dedup;
  } catch (const zz::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return zz::kExitInvalid;
  }
  return zz::run(config, std::cout, std::cerr);
}
