#pragma once

// Mode dispatch behind the zzpoly command-line tool.

#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "zz/oracle.hpp"

namespace zz {

enum class Mode { profile, poset, extensions, zz, closed_form, kekule, clar, oracle, catalog };
enum class Format { text, json, latex };

Mode mode_from_string(std::string_view s);  // throws ParseError
Format format_from_string(std::string_view s);
std::string to_string(Mode m);

// Exit statuses of run().
inline constexpr int kExitOk = 0;
inline constexpr int kExitMismatch = 1;
inline constexpr int kExitInvalid = 2;
inline constexpr int kExitGuard = 3;

struct RunConfig {
  Mode mode = Mode::zz;
  // Strip source: `strip` text ("WWRNN 3", "M 2 2"), a file holding such
  // text or a JSON StripSpec, or --shapes with --length.
  std::string strip;
  std::string strip_file;
  std::string shapes;
  std::optional<int> length;
  std::optional<std::pair<int, int>> n_range;
  Format format = Format::text;
  int tiers = 0;  // catalog only
  bool dedup = true;
  int max_vertices = kDefaultMaxVertices;
};

// "A..B" with 1 <= A <= B.
std::pair<int, int> parse_n_range(std::string_view text);

// Writes results to `out` and diagnostics to `err`; returns an exit status.
int run(const RunConfig& config, std::ostream& out, std::ostream& err);

}  // namespace zz
