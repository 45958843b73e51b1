#include "dmap/cli.hpp"

#include "dmap/cycles.hpp"
#include "dmap/regions.hpp"
#include "dmap/verify.hpp"
#include "dmap/words.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <iostream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

namespace dmap {

namespace {

using json = nlohmann::ordered_json;

enum class Format { Text, Json, Csv };

const std::map<std::string, Format> kFormats{{"text", Format::Text}, {"json", Format::Json}, {"csv", Format::Csv}};

// Thrown for malformed values that CLI11 cannot check on its own.
class UsageError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

Rational parse_rational(const std::string& text) {
  try {
    return Rational::parse(text);
  } catch (const std::exception&) {
    throw UsageError("not a rational number: '" + text + "'");
  }
}

Hole parse_hole(const std::string& a, const std::string& b) {
  try {
    return Hole(parse_rational(a), parse_rational(b));
  } catch (const UsageError&) {
    throw;
  } catch (const std::exception& e) {
    throw UsageError(std::string("bad hole: ") + e.what());
  }
}

// "lo:hi" with rational endpoints.
std::pair<Rational, Rational> parse_range(const std::string& text) {
  const auto colon = text.find(':');
  if (colon == std::string::npos)
    throw UsageError("expected lo:hi, got '" + text + "'");
  auto lo = parse_rational(text.substr(0, colon));
  auto hi = parse_rational(text.substr(colon + 1));
  if (!(lo < hi))
    throw UsageError("empty range '" + text + "'");
  return {lo, hi};
}

std::pair<int, int> parse_size(const std::string& text) {
  const auto x = text.find('x');
  try {
    if (x == std::string::npos)
      throw UsageError("");
    const int w = std::stoi(text.substr(0, x));
    const int h = std::stoi(text.substr(x + 1));
    if (w <= 0 || h <= 0 || w > 8192 || h > 8192)
      throw UsageError("");
    return {w, h};
  } catch (const std::exception&) {
    throw UsageError("expected WxH with 1 <= W, H <= 8192, got '" + text + "'");
  }
}

std::string points_text(const Cycle& c) {
  std::string out;
  for (const Rational& x : c.points())
    out += (out.empty() ? "" : " ") + x.str();
  return out;
}

json cycle_json(const Cycle& c) {
  json pts = json::array();
  for (const Rational& x : c.points())
    pts.push_back(x.str());
  return {{"word", c.representative().str()}, {"min", c.min_point().str()}, {"max", c.max_point().str()},
          {"points", pts}};
}

std::string to_text(RegionClass c) { return std::string(to_string(c)); }

struct Options {
  int max_n = kDefaultMaxCycleLength;
  Format format = Format::Text;

  int cycles_n = 0;
  std::vector<std::string> cycles_hole;

  std::string a, b;
  int nmax = 12;

  std::string rotation;

  std::string from = "1/4", to = "1/2";
  int samples = 100;

  std::string x_range = "0:1", y_range = "0:1", px = "256x256", region = "d3";

  std::string suite = "acceptance";
  bool list = false;
};

int cmd_cycles(const Options& o, std::ostream& out) {
  std::optional<Hole> hole;
  if (!o.cycles_hole.empty())
    hole = parse_hole(o.cycles_hole.at(0), o.cycles_hole.at(1));
  std::vector<Cycle> list;
  for (Cycle& c : enumerate_cycles(o.cycles_n, o.max_n)) {
    if (!hole || avoids(c, *hole))
      list.push_back(std::move(c));
  }
  switch (o.format) {
    case Format::Json: {
      json arr = json::array();
      for (const Cycle& c : list)
        arr.push_back(cycle_json(c));
      out << json{{"n", o.cycles_n}, {"count", list.size()}, {"cycles", arr}}.dump(2) << "\n";
      break;
    }
    case Format::Csv:
      out << "word,min,max,points\n";
      for (const Cycle& c : list)
        out << c.representative().str() << "," << c.min_point().str() << "," << c.max_point().str() << ","
            << points_text(c) << "\n";
      break;
    case Format::Text:
      for (const Cycle& c : list)
        out << "(" << c.representative().str() << ")  " << points_text(c) << "\n";
      out << list.size() << " cycles\n";
      break;
  }
  return kExitOk;
}

int cmd_badset(const Options& o, std::ostream& out) {
  const Hole h = parse_hole(o.a, o.b);
  if (o.nmax > o.max_n)
    throw UsageError("--nmax " + std::to_string(o.nmax) + " exceeds the cycle length cap " +
                     std::to_string(o.max_n));
  std::vector<int> bad;
  std::vector<std::pair<int, Cycle>> witnesses;
  for (int n = 1; n <= o.nmax; ++n) {
    if (auto w = find_avoiding_cycle(h, n, o.max_n))
      witnesses.emplace_back(n, *w);
    else
      bad.push_back(n);
  }
  switch (o.format) {
    case Format::Json: {
      json ws = json::object();
      for (const auto& [n, w] : witnesses)
        ws[std::to_string(n)] = w.representative().str();
      out << json{{"a", h.a().str()}, {"b", h.b().str()}, {"nmax", o.nmax}, {"bad", bad}, {"witnesses", ws}}.dump(2)
          << "\n";
      break;
    }
    case Format::Csv:
      out << "n,bad,witness\n";
      for (int n = 1, wi = 0; n <= o.nmax; ++n) {
        const bool good = wi < static_cast<int>(witnesses.size()) && witnesses[wi].first == n;
        out << n << "," << (good ? 0 : 1) << "," << (good ? witnesses[wi++].second.representative().str() : "")
            << "\n";
      }
      break;
    case Format::Text: {
      out << "bad periods up to " << o.nmax << ":";
      for (int n : bad)
        out << " " << n;
      out << (bad.empty() ? " none\n" : "\n");
      for (const auto& [n, w] : witnesses)
        out << "  n=" << n << "  (" << w.representative().str() << ")\n";
      break;
    }
  }
  return kExitOk;
}

int cmd_classify(const Options& o, std::ostream& out) {
  const Rational a = parse_rational(o.a);
  const Rational b = parse_rational(o.b);
  if (a < Rational(0) || b > Rational(1) || !(a < b))
    throw UsageError("need 0 <= a < b <= 1");
  json j{{"a", a.str()}, {"b", b.str()}, {"d3", to_text(d3_classify(a, b))}};
  try {
    j["d2"] = to_text(d2_classify(a, b));
  } catch (const UnsupportedRegion& e) {
    j["d2"] = "unsupported";
    j["d2_note"] = e.what();
  }
  if (Rational(1, 4) < a && a < Rational(1, 2)) {
    try {
      const Plateau p = plateau_find(a);
      j["plateau"] = p.r.str();
      j["kappa"] = kappa(a).str();
      if (a < Rational(5, 12))
        j["phi"] = phi(a).str();
    } catch (const PlateauSearchError& e) {
      j["plateau_note"] = e.what();
    }
  }
  if (o.format == Format::Json) {
    out << j.dump(2) << "\n";
  } else {
    for (const auto& [key, value] : j.items())
      out << key << (o.format == Format::Csv ? "," : ": ") << value.get<std::string>() << "\n";
  }
  return kExitOk;
}

int cmd_word(const Options& o, std::ostream& out) {
  RotationNumber r(0, 1);
  try {
    r = RotationNumber::parse(o.rotation);
  } catch (const std::exception& e) {
    throw UsageError(std::string("bad rotation number: ") + e.what());
  }
  if (!(RotationNumber(0, 1) < r && r < RotationNumber(1, 1)))
    throw UsageError("need 0 < r < 1");
  const Plateau p = plateau_of(r);
  json j{{"r", r.str()},          {"s", p.pair.s.str()},         {"t", p.pair.t.str()},
         {"s^inf", p.left.str()}, {"st^inf", p.right.str()},     {"ts^inf", p.kappa.str()},
         {"t^inf", p.phi.str()}};
  if (o.format == Format::Json) {
    out << j.dump(2) << "\n";
  } else {
    for (const auto& [key, value] : j.items())
      out << key << (o.format == Format::Csv ? "," : ": ") << value.get<std::string>() << "\n";
  }
  return kExitOk;
}

int cmd_staircase(const Options& o, std::ostream& out) {
  const Rational lo = parse_rational(o.from);
  const Rational hi = parse_rational(o.to);
  if (!(Rational(1, 4) <= lo && lo < hi && hi <= Rational(1, 2)))
    throw UsageError("need 1/4 <= from < to <= 1/2");
  if (o.samples < 1)
    throw UsageError("--samples must be positive");
  out << "a,kappa,phi\n";
  for (int i = 0; i < o.samples; ++i) {
    // cell centres keep the open endpoints out
    const Rational a = lo + (hi - lo) * Rational(2 * i + 1, 2L * o.samples);
    out << a.str() << "," << kappa(a).str() << ",";
    if (a < Rational(5, 12))
      out << phi(a).str();
    out << "\n";
  }
  return kExitOk;
}

// Exterior 0, boundary 128, interior 255 at each pixel centre.
int cmd_raster(const Options& o, std::ostream& out) {
  const auto [x0, x1] = parse_range(o.x_range);
  const auto [y0, y1] = parse_range(o.y_range);
  const auto [w, h] = parse_size(o.px);
  if (o.region != "d3" && o.region != "d2")
    throw UsageError("--region must be d3 or d2");
  const bool d2 = o.region == "d2";
  out << "P2\n" << w << " " << h << "\n255\n";
  for (int row = 0; row < h; ++row) {
    // top row is the largest b
    const Rational b = y1 - (y1 - y0) * Rational(2 * row + 1, 2L * h);
    for (int col = 0; col < w; ++col) {
      const Rational a = x0 + (x1 - x0) * Rational(2 * col + 1, 2L * w);
      int level = 255;
      try {
        const RegionClass c = d2 ? d2_classify(a, b) : d3_classify(a, b);
        level = c == RegionClass::Exterior ? 0 : c == RegionClass::Boundary ? 128 : 255;
      } catch (const UnsupportedRegion&) {
        level = 128;
      }
      out << level << (col + 1 < w ? " " : "\n");
    }
  }
  return kExitOk;
}

int cmd_verify(const Options& o, std::ostream& out) {
  if (o.list) {
    for (const SuiteInfo& s : verify_suites())
      out << s.name << (s.id > 0 ? "  [" + std::to_string(s.id) + "]  " : "  [+]  ") << s.summary << "\n";
    return kExitOk;
  }
  std::vector<CriterionResult> results;
  try {
    results = run_suites(o.suite);
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
  bool ok = true;
  if (o.format == Format::Json) {
    json arr = json::array();
    for (const CriterionResult& r : results) {
      arr.push_back({{"id", r.id}, {"name", r.name}, {"passed", r.passed}, {"detail", r.detail}, {"seconds", r.seconds}});
      ok = ok && r.passed;
    }
    out << arr.dump(2) << "\n";
  } else {
    for (const CriterionResult& r : results) {
      out << format_result(r) << "\n";
      ok = ok && r.passed;
    }
  }
  return ok ? kExitOk : kExitVerifyFailed;
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Prime cycles of the doubling map that avoid a hole (a, b)", "dmap"};
  app.require_subcommand(1);
  app.set_config("--config", "", "TOML or INI file with the same keys as the flags");

  Options o;
  app.add_option("--max-n", o.max_n, "Cycle length cap for enumeration")
      ->envname("DMAP_MAX_N")
      ->check(CLI::Range(1, 62))
      ->capture_default_str();
  std::string format = "text";
  app.add_option("--format", format, "Output format")
      ->check(CLI::IsMember({"text", "json", "csv"}, CLI::ignore_case))
      ->capture_default_str();
  // subcommands see the global flags after their own name too
  app.fallthrough();

  auto* cycles = app.add_subcommand("cycles", "List the prime n-cycles, optionally only those avoiding a hole");
  cycles->add_option("--n", o.cycles_n, "Cycle length")->required()->check(CLI::PositiveNumber);
  cycles->add_option("--hole", o.cycles_hole, "Hole endpoints a,b")->delimiter(',')->expected(2);

  auto* badset = app.add_subcommand("badset", "Periods n <= nmax with no avoiding cycle, plus witnesses");
  badset->add_option("a", o.a, "Left endpoint")->required();
  badset->add_option("b", o.b, "Right endpoint")->required();
  badset->add_option("--nmax", o.nmax, "Largest period")->check(CLI::PositiveNumber)->capture_default_str();

  auto* classify = app.add_subcommand("classify", "D3 and D2 classes of a hole, with its plateau");
  classify->add_option("a", o.a, "Left endpoint")->required();
  classify->add_option("b", o.b, "Right endpoint")->required();

  auto* word = app.add_subcommand("word", "Sturmian pair s, t of a rotation number and the four plateau values");
  word->add_option("r", o.rotation, "Rotation number p/q")->required();

  auto* staircase = app.add_subcommand("staircase", "Sample kappa and phi as CSV a,kappa,phi");
  staircase->add_option("--from", o.from, "Left end")->capture_default_str();
  staircase->add_option("--to", o.to, "Right end")->capture_default_str();
  staircase->add_option("--samples", o.samples, "Number of samples")->capture_default_str();

  auto* raster = app.add_subcommand("raster", "PGM image of a region over the (a, b) square");
  raster->add_option("--x", o.x_range, "a range lo:hi")->capture_default_str();
  raster->add_option("--y", o.y_range, "b range lo:hi")->capture_default_str();
  raster->add_option("--px", o.px, "Image size WxH")->capture_default_str();
  raster->add_option("--region", o.region, "d3 or d2")->capture_default_str();

  auto* verify = app.add_subcommand("verify", "Run a verification suite: acceptance, all, or one name");
  verify->add_option("suite", o.suite, "Suite name")->capture_default_str();
  verify->add_flag("--list", o.list, "List the suites");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "dmap: " << e.what() << "\n";
    if (!app.get_subcommands().empty())
      err << "run 'dmap " << app.get_subcommands().front()->get_name() << " --help' for usage\n";
    return kExitUsage;
  }

  o.format = kFormats.at(CLI::detail::to_lower(format));
  try {
    if (cycles->parsed())
      return cmd_cycles(o, out);
    if (badset->parsed())
      return cmd_badset(o, out);
    if (classify->parsed())
      return cmd_classify(o, out);
    if (word->parsed())
      return cmd_word(o, out);
    if (staircase->parsed())
      return cmd_staircase(o, out);
    if (raster->parsed())
      return cmd_raster(o, out);
    return cmd_verify(o, out);
  } catch (const UsageError& e) {
    err << "dmap: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::out_of_range& e) {
    err << "dmap: " << e.what() << "\n";
    return kExitUsage;
  }
}

int run_cli(int argc, const char* const* argv) { return run_cli(argc, argv, std::cout, std::cerr); }

}  // namespace dmap
