#include "zz/cli.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <map>
#include <ostream>
#include <set>
#include <sstream>

#include "zz/catalog.hpp"
#include "zz/error.hpp"
#include "zz/json_io.hpp"
#include "zz/kekule.hpp"
#include "zz/order_poly.hpp"

namespace zz {

namespace {

const std::pair<const char*, Mode> kModes[] = {
    {"profile", Mode::profile}, {"poset", Mode::poset},   {"extensions", Mode::extensions},
    {"zz", Mode::zz},           {"closed-form", Mode::closed_form},
    {"kekule", Mode::kekule},   {"clar", Mode::clar},     {"oracle", Mode::oracle},
    {"catalog", Mode::catalog},
};

std::string join(const std::vector<int>& v, const char* sep) {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) s += sep;
    s += std::to_string(v[i]);
  }
  return s;
}

std::string latex_poly(const Polynomial& p) {
  std::string s = p.to_string();
  std::string out;
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (s[i] == '^') {
      std::size_t j = i + 1;
      while (j < s.size() && std::isdigit(static_cast<unsigned char>(s[j]))) ++j;
      out += "^{" + s.substr(i + 1, j - i - 1) + "}";
      i = j - 1;
    } else {
      out += s[i];
    }
  }
  return out;
}

std::vector<Shape> parse_shapes(std::string_view letters) {
  if (letters.empty()) throw ParseError("empty shape sequence");
  std::vector<Shape> shapes;
  for (char c : letters) shapes.push_back(shape_from_char(c));
  return shapes;
}

// The strip named by the config. n is 0 when no length was given.
StripSpec source_spec(const RunConfig& c) {
  const int sources = !c.strip.empty() + !c.strip_file.empty() + !c.shapes.empty();
  if (sources != 1) throw ParseError("give exactly one of --strip, --strip-file or --shapes");
  StripSpec spec;
  if (!c.shapes.empty()) {
    spec.shapes = parse_shapes(c.shapes);
    spec.n = 0;
  } else {
    std::string text = c.strip;
    if (!c.strip_file.empty()) {
      std::ifstream in(c.strip_file);
      if (!in) throw ParseError("cannot read " + c.strip_file);
      std::stringstream buf;
      buf << in.rdbuf();
      text = buf.str();
    }
    const auto first = text.find_first_not_of(" \t\r\n");
    if (first != std::string::npos && text[first] == '{') {
      try {
        spec = strip_from_json(Json::parse(text));
      } catch (const Json::exception& e) {
        throw ParseError(std::string("bad strip JSON: ") + e.what());
      }
    } else {
      spec = parse_strip(text);
    }
  }
  if (c.length) spec.n = *c.length;
  return spec;
}

std::vector<int> lengths(const RunConfig& c, const StripSpec& spec) {
  std::vector<int> ns;
  if (c.n_range) {
    for (int n = c.n_range->first; n <= c.n_range->second; ++n) ns.push_back(n);
  } else if (spec.n >= 1) {
    ns.push_back(spec.n);
  } else if (c.mode == Mode::closed_form || c.mode == Mode::poset || c.mode == Mode::extensions) {
    ns.push_back(min_length(spec.shapes));
  } else {
    throw ParseError(to_string(c.mode) + " needs a strip length (--length or --n-range)");
  }
  if (spec.n < 0 || (c.length && *c.length < 1)) throw ParseError("strip length n must be >= 1");
  return ns;
}

// Warns and returns false for non-Kekulean strips.
bool kekulean_or_warn(const StripSpec& spec, std::ostream& err) {
  const InterfaceProfile profile = interface_profile(spec);
  for (int k = 1; k <= profile.tiers(); ++k) {
    if (profile.order(k) < 0) {
      err << "non-Kekuléan: ord(i_" << k << ") = " << profile.order(k) << "\n";
      return false;
    }
  }
  return true;
}

void require_format(const RunConfig& c, std::initializer_list<Format> allowed) {
  if (std::find(allowed.begin(), allowed.end(), c.format) == allowed.end()) {
    throw ParseError("output format not supported by " + to_string(c.mode));
  }
}

void run_profile(const StripSpec& spec, const RunConfig& c, std::ostream& out) {
  require_format(c, {Format::text, Format::json});
  const InterfaceProfile prof = interface_profile(spec);
  const ValidationReport rep = validate(spec);
  if (c.format == Format::json) {
    out << Json{{"strip", strip_to_json(spec)},
                {"sizes", prof.sizes},
                {"orders", prof.orders},
                {"valid", rep.valid()},
                {"kekulean", rep.valid() && rep.is_kekulean},
                {"problems", rep.problems}}
               .dump()
        << "\n";
    return;
  }
  out << format_strip(spec) << "\n"
      << "sizes:    " << join(prof.sizes, " ") << "\n"
      << "orders:   " << join(prof.orders, " ") << "\n"
      << "valid:    " << (rep.valid() ? "yes" : "no") << "\n"
      << "kekulean: " << (rep.is_kekulean ? "yes" : "no") << "\n";
  for (const auto& p : rep.problems) out << "problem:  " << p << "\n";
}

void run_poset(const StripSpec& spec, const RunConfig& c, std::ostream& out) {
  require_format(c, {Format::text, Format::json});
  const DibPoset poset = build_poset(spec);
  if (c.format == Format::json) {
    out << poset_to_json(poset).dump() << "\n";
    return;
  }
  const NaturalLabeling lab = natural_labeling(poset);
  out << "elements (" << poset.size() << "):";
  for (int l = 1; l <= poset.size(); ++l) out << " " << l << "=" << dib_name(poset.element(lab.element(l)));
  out << "\ncovers (" << poset.covers().size() << "):\n";
  for (auto [a, b] : poset.covers()) {
    out << "  " << dib_name(poset.element(a)) << " < " << dib_name(poset.element(b)) << "\n";
  }
}

void run_extensions(const StripSpec& spec, const RunConfig& c, std::ostream& out) {
  require_format(c, {Format::text, Format::json});
  const DibPoset poset = build_poset(spec);
  const NaturalLabeling lab = natural_labeling(poset);
  const bool compact = poset.size() < 10;
  if (c.format == Format::text) {
    out << "# labels:";
    for (int l = 1; l <= poset.size(); ++l) out << " " << l << "=" << dib_name(poset.element(lab.element(l)));
    out << "\n";
  }
  for (const auto& r : extension_records(poset, lab)) {
    if (c.format == Format::json) {
      out << Json{{"word", r.word},
                  {"des", r.des()},
                  {"fix", r.fix()},
                  {"descents", r.descents.positions},
                  {"fixed", r.fixed.labels}}
                 .dump()
          << "\n";
    } else {
      out << join(r.word, compact ? "" : " ") << " des=" << r.des() << " fix=" << r.fix() << " descents={"
          << join(r.descents.positions, ",") << "} fixed={" << join(r.fixed.labels, ",") << "}\n";
    }
  }
}

void run_zz(const StripSpec& spec, const RunConfig& c, bool many, std::ostream& out, std::ostream& err) {
  Polynomial zz;
  if (kekulean_or_warn(spec, err)) zz = zz_polynomial(spec);
  if (c.format == Format::json) {
    Json j = zz_result_to_json({zz, std::nullopt});
    j["strip"] = strip_to_json(spec);
    out << j.dump() << "\n";
    return;
  }
  if (many) out << "n=" << spec.n << ": ";
  out << (c.format == Format::latex ? latex_poly(zz) : zz.to_string()) << "\n";
}

void run_closed_form(const StripSpec& spec, const RunConfig& c, std::ostream& out, std::ostream& err) {
  if (!kekulean_or_warn(spec, err)) {
    out << (c.format == Format::json ? zz_result_to_json({Polynomial(), std::nullopt}).dump() : "0") << "\n";
    return;
  }
  const ClosedForm form = closed_form(spec);
  switch (c.format) {
    case Format::text: out << "ZZ(x) = " << form.to_text() << "\n"; break;
    case Format::latex: out << "ZZ(x) = " << form.to_latex() << "\n"; break;
    case Format::json: {
      Json j = zz_result_to_json({form.evaluate(spec.n), form});
      j["strip"] = strip_to_json(spec);
      out << j.dump() << "\n";
      break;
    }
  }
}

void run_kekule(const StripSpec& spec, const RunConfig& c, std::ostream& out, std::ostream& err) {
  require_format(c, {Format::text, Format::json});
  if (!kekulean_or_warn(spec, err)) return;
  const DibPoset poset = build_poset(spec);
  long count = 0;
  if (c.mode == Mode::kekule) {
    for_each_kekule(spec, [&](const KekuleRecord& r) {
      out << kekule_to_json(poset, r).dump() << "\n";
      ++count;
    });
    err << count << " Kekulé structures\n";
  } else {
    for_each_clar_cover(spec, [&](const ClarCoverRecord& r) {
      out << clar_to_json(poset, r).dump() << "\n";
      ++count;
    });
    err << count << " Clar covers\n";
  }
}

// Returns false on any disagreement.
bool run_oracle(const StripSpec& spec, const RunConfig& c, std::ostream& out) {
  require_format(c, {Format::text, Format::json});
  const BenzenoidGraph g = build_graph(spec);
  check_vertex_guard(g, c.max_vertices);
  const bool kek = interface_profile(spec).min_order() >= 0;
  const Polynomial engine = zz_polynomial(spec);
  const Polynomial covers = zz_from_covers(enumerate_clar_covers(g, c.max_vertices));
  const Polynomial sextets = zz_from_matchings(g, SextetOrientation::standard, c.max_vertices);

  std::multiset<KekuleAssignment> oracle_ki;
  for_each_perfect_matching(g, [&](const Matching& m) { oracle_ki.insert(extract_ki(g, m)); }, c.max_vertices);
  std::multiset<KekuleAssignment> poset_ki;
  if (kek) for_each_kekule(spec, [&](const KekuleRecord& r) { poset_ki.insert(r.assignment); });

  std::vector<std::string> diff;
  if (covers != engine) diff.push_back("clar covers: " + covers.to_string() + " != " + engine.to_string());
  if (sextets != engine) diff.push_back("proper sextets: " + sextets.to_string() + " != " + engine.to_string());
  if (oracle_ki != poset_ki) {
    diff.push_back("K_I sets differ: " + std::to_string(poset_ki.size()) + " from the poset, " +
                   std::to_string(oracle_ki.size()) + " from matchings");
  }

  if (c.format == Format::json) {
    out << Json{{"strip", strip_to_json(spec)},
                {"poset", engine.to_string()},
                {"covers", covers.to_string()},
                {"sextets", sextets.to_string()},
                {"kekule_poset", poset_ki.size()},
                {"kekule_oracle", oracle_ki.size()},
                {"diff", diff}}
               .dump()
        << "\n";
  } else {
    out << format_strip(spec) << "\n"
        << "  poset:   " << engine.to_string() << "\n"
        << "  covers:  " << covers.to_string() << "\n"
        << "  sextets: " << sextets.to_string() << "\n"
        << "  kekule:  " << poset_ki.size() << " from poset, " << oracle_ki.size() << " from matchings\n"
        << "DIFF:";
    if (diff.empty()) out << " none\n";
    else {
      out << "\n";
      for (const auto& d : diff) out << "  " << d << "\n";
    }
  }
  return diff.empty();
}

void run_catalog(const RunConfig& c, std::ostream& out) {
  if (c.tiers < 1) throw ParseError("catalog needs --tiers >= 1");
  for (const CatalogEntry& e : build_catalog(c.tiers, c.dedup)) {
    const std::string shapes = e.spec.shape_string();
    if (c.format == Format::json) {
      Json j{{"shapes", strip_to_json(e.spec)["shapes"]},
             {"min_n", e.spec.n},
             {"orders", e.orders},
             {"kekulean", e.kekulean}};
      if (e.form) j["closed_form"] = zz_result_to_json({Polynomial(), e.form})["closed_form"];
      out << j.dump() << "\n";
    } else if (!e.form) {
      out << shapes << "  n>=" << e.spec.n << "  orders=" << join(e.orders, ",") << "  non-Kekuléan\n";
    } else if (c.format == Format::latex) {
      out << shapes << ": $" << e.form->to_latex() << "$\n";
    } else {
      out << shapes << "  n>=" << e.spec.n << "  orders=" << join(e.orders, ",") << "  p=" << e.form->p
          << "  " << e.form->to_text() << "\n";
    }
  }
}

}  // namespace

Mode mode_from_string(std::string_view s) {
  for (auto [name, mode] : kModes) {
    if (s == name) return mode;
  }
  throw ParseError("unknown mode '" + std::string(s) + "'");
}

std::string to_string(Mode m) {
  for (auto [name, mode] : kModes) {
    if (mode == m) return name;
  }
  return "?";
}

Format format_from_string(std::string_view s) {
  if (s == "text") return Format::text;
  if (s == "json") return Format::json;
  if (s == "latex") return Format::latex;
  throw ParseError("unknown format '" + std::string(s) + "'");
}

std::pair<int, int> parse_n_range(std::string_view text) {
  const auto dots = text.find("..");
  if (dots == std::string_view::npos) throw ParseError("n range must look like A..B");
  auto num = [&](std::string_view s) {
    if (s.empty() || !std::all_of(s.begin(), s.end(), [](char ch) { return std::isdigit(static_cast<unsigned char>(ch)); })) {
      throw ParseError("bad n range '" + std::string(text) + "'");
    }
    return std::stoi(std::string(s));
  };
  const int a = num(text.substr(0, dots));
  const int b = num(text.substr(dots + 2));
  if (a < 1 || b < a) throw ParseError("n range needs 1 <= A <= B");
  return {a, b};
}

int run(const RunConfig& config, std::ostream& out, std::ostream& err) {
  try {
    if (config.mode == Mode::catalog) {
      run_catalog(config, out);
      return kExitOk;
    }
    const StripSpec base = source_spec(config);
    const std::vector<int> ns = lengths(config, base);
    bool agree = true;
    for (int n : ns) {
      StripSpec spec = base;
      spec.n = n;
      if (config.mode != Mode::profile) require_valid(spec);
      switch (config.mode) {
        case Mode::profile: run_profile(spec, config, out); break;
        case Mode::poset: run_poset(spec, config, out); break;
        case Mode::extensions: run_extensions(spec, config, out); break;
        case Mode::zz: run_zz(spec, config, ns.size() > 1, out, err); break;
        case Mode::closed_form:
          run_closed_form(spec, config, out, err);
          return kExitOk;  // independent of n
        case Mode::kekule:
        case Mode::clar: run_kekule(spec, config, out, err); break;
        case Mode::oracle: agree = run_oracle(spec, config, out) && agree; break;
        case Mode::catalog: break;
      }
      if (config.mode == Mode::poset || config.mode == Mode::extensions) break;
    }
    return agree ? kExitOk : kExitMismatch;
  } catch (const GuardExceeded& e) {
    err << "error: " << e.what() << "\n";
    return kExitGuard;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kExitInvalid;
  }
}

}  // namespace zz
