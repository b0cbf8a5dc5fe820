// polywidth: command-line front end.
//
// Exit codes: 0 ok, 1 usage or unsupported input, 2 non-generic or empty
// space, 3 verification failure.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "polywidth/polywidth.hpp"

namespace pw = polywidth;
using pw::io::Json;

namespace {

constexpr int kExitOk = 0, kExitUsage = 1, kExitInput = 2, kExitVerify = 3;

int exit_code_for(pw::ErrorKind k) {
  switch (k) {
    case pw::ErrorKind::NonGeneric:
    case pw::ErrorKind::EmptySpace: return kExitInput;
    case pw::ErrorKind::Internal: return kExitVerify;
    default: return kExitUsage;
  }
}

std::size_t resolve_cap(std::optional<std::size_t> flag, std::size_t n) {
  if (flag) return *flag;
  if (const char* env = std::getenv("POLYWIDTH_CAP")) {
    try {
      std::size_t used = 0;
      const auto v = std::stoul(env, &used);
      if (used == std::string(env).size() && v >= 2) return v;
    } catch (const std::exception&) {
    }
    throw pw::Error(pw::ErrorKind::Usage, std::string("POLYWIDTH_CAP must be an integer >= 2, got '") + env + "'");
  }
  return n + 2;
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream f(path, std::ios::binary);
  if (!f) throw pw::Error(pw::ErrorKind::Usage, "cannot write " + path);
  f << text;
}

std::string join(const pw::LengthVector& r) {
  std::string s;
  for (const auto& x : r.entries()) s += (s.empty() ? "" : " ") + pw::to_string(x);
  return s;
}

void print_json(const Json& j) { std::cout << j.dump(2) << '\n'; }

struct Options {
  std::vector<std::string> vector;
  bool json = false;
  bool explain = false;
  bool crosscheck = false;
  bool cross = false;
  std::string svg;
  std::string input;
  std::string system = "caterpillar";
  std::optional<std::size_t> cap;
  std::size_t n = 5;
  std::size_t samples = 100;
  std::uint64_t seed = 1;
  std::uint64_t max_den = 8;
};

pw::LengthVector vector_of(const Options& o) {
  if (o.vector.empty()) throw pw::Error(pw::ErrorKind::Usage, "a length vector is required");
  return pw::LengthVector::parse(o.vector);
}

int cmd_classify(const Options& o) {
  const auto r = vector_of(o);
  const auto j = pw::io::classify_json(r);
  if (o.json) {
    print_json(j);
    return kExitOk;
  }
  std::cout << "sorted     " << join(pw::LengthVector::parse(j["sorted"].get<std::vector<std::string>>())) << '\n';
  if (!j["nonempty"].get<bool>()) {
    std::cout << "space      empty (a singleton is long)\n";
    return kExitInput;
  }
  std::cout << "gamma      " << j["gamma"].get<std::string>() << '\n';
  std::cout << "max short ";
  for (const auto& s : j["maximal_short_sets"]) std::cout << ' ' << s.get<std::string>();
  std::cout << '\n';
  if (j["projective"].get<bool>()) std::cout << "projective yes\n";
  if (j.contains("chamber")) std::cout << "chamber    " << j["chamber"].get<std::string>() << '\n';
  if (j.contains("conditions")) {
    std::cout << "conditions";
    for (const auto& c : j["conditions"]) std::cout << ' ' << c.get<std::string>();
    if (j["conditions"].empty()) std::cout << " none";
    std::cout << '\n';
  }
  return kExitOk;
}

int cmd_polytope(const Options& o) {
  std::optional<pw::MomentImage> image;
  std::optional<pw::HPolytope> raw;
  if (!o.input.empty()) {
    std::ifstream f(o.input);
    if (!f) throw pw::Error(pw::ErrorKind::Usage, "cannot read " + o.input);
    Json j;
    try {
      j = Json::parse(f);
    } catch (const Json::exception& e) {
      throw pw::Error(pw::ErrorKind::Usage, std::string("bad JSON: ") + e.what());
    }
    raw = pw::io::polytope_from_json(j);
  } else {
    const auto r = vector_of(o);
    pw::require_generic(r);
    pw::require_nonempty(r);
    pw::DiagonalSystem s;
    if (o.system == "caterpillar")
      s = pw::DiagonalSystem::Caterpillar;
    else if (o.system == "triple-pairs")
      s = pw::DiagonalSystem::TriplePairs6;
    else
      throw pw::Error(pw::ErrorKind::Usage, "unknown system '" + o.system + "'");
    image = pw::build_moment_image(r, s);
  }
  const auto& p = image ? image->polytope : *raw;

  if (!o.svg.empty()) {
    std::optional<pw::CrossFit> fit;
    if (o.cross) fit = pw::max_axis_cross(p);
    const pw::MomentImage m = image ? *image : pw::MomentImage{p, pw::DiagonalSystem::Caterpillar, {}};
    write_file(o.svg, pw::io::emit_svg(m, fit));
  }
  Json j = image ? pw::io::to_json(*image) : Json{{"schema", pw::io::kSchema}, {"polytope", pw::io::to_json(p)}};
  if (!p.empty() && p.full_dimensional()) {
    try {
      const auto fan = pw::normal_fan(p.pruned());
      j["fan"] = pw::io::to_json(fan);
      j["delzant"] = fan.is_smooth();
      if (fan.is_smooth()) j["fano"] = pw::is_fano(fan);
    } catch (const pw::Error& e) {
      if (e.kind() != pw::ErrorKind::Geometry) throw;
      j["fan"] = nullptr;
      j["delzant"] = false;
    }
  }
  if (o.json) {
    print_json(j);
    return kExitOk;
  }
  std::cout << "dim        " << p.dim() << '\n';
  std::cout << "facets     " << p.halfspaces().size() << '\n';
  for (const auto& h : p.halfspaces()) {
    std::cout << "  <x, (";
    for (std::size_t k = 0; k < h.normal.size(); ++k) std::cout << (k ? "," : "") << h.normal[k];
    std::cout << ")> >= " << pw::to_string(h.offset) << '\n';
  }
  std::cout << "vertices   " << p.vertices().size() << '\n';
  for (const auto& v : p.vertices()) {
    std::cout << "  (";
    for (std::size_t k = 0; k < v.size(); ++k) std::cout << (k ? ", " : "") << pw::to_string(v[k]);
    std::cout << ")\n";
  }
  if (j.contains("volume")) std::cout << "volume     " << j["volume"].get<std::string>() << '\n';
  if (j.contains("toric")) std::cout << "toric      " << (j["toric"].get<bool>() ? "yes" : "no") << '\n';
  if (j.contains("delzant")) std::cout << "delzant    " << (j["delzant"].get<bool>() ? "yes" : "no") << '\n';
  if (j.contains("fano")) std::cout << "fano       " << (j["fano"].get<bool>() ? "yes" : "no") << '\n';
  return kExitOk;
}

int cmd_width(const Options& o) {
  const auto r = vector_of(o);
  const auto rep = pw::gromov_width_report(r, resolve_cap(o.cap, r.size()));
  if (!o.svg.empty()) {
    if (rep.sorted.size() != 5) throw pw::Error(pw::ErrorKind::Usage, "--svg needs a pentagon (2D moment image)");
    write_file(o.svg, pw::io::emit_svg(pw::caterpillar_polytope(rep.sorted), rep.cross));
  }
  if (o.json) {
    print_json(pw::io::to_json(rep));
    return kExitOk;
  }
  std::cout << "sorted     " << join(rep.sorted) << '\n';
  std::cout << "lower      " << pw::to_string(rep.lower) << "  [" << rep.lower_provenance << "]\n";
  std::cout << "upper      " << (rep.upper ? pw::to_string(*rep.upper) : "-") << "  [" << rep.upper_provenance
            << "]\n";
  std::cout << "exact      " << (rep.exact ? pw::to_string(*rep.exact) : "-") << '\n';
  std::cout << "formula    " << pw::to_string(rep.conjectured) << '\n';
  std::cout << "units      2pi\n";
  if (o.explain)
    for (const auto& line : rep.explain) std::cout << "  " << line << '\n';
  return kExitOk;
}

int cmd_volume(const Options& o) {
  const auto r = vector_of(o);
  const auto v = pw::combinatorial_volume(r);
  Json j = pw::io::to_json(v);
  if (o.crosscheck) {
    const auto image = pw::caterpillar_polytope(r);
    const auto toric = pw::is_bending_toric(image).toric;
    j["toric"] = toric;
    if (image.polytope.full_dimensional()) j["euclidean"] = pw::to_string(pw::euclidean_volume(image.polytope));
    if (toric) j["ratio"] = pw::to_string(pw::volume_ratio_check(r, image));
    const auto sorted = pw::sort_with_permutation(r).sorted;
    if (pw::singleton_maximal_short(sorted)) j["projective"] = pw::to_string(pw::projective_volume(sorted).coefficient);
  }
  if (o.json) {
    print_json(j);
    return kExitOk;
  }
  std::cout << "volume     " << pw::to_string(v.coefficient) << " * (2pi)^" << v.power << '\n';
  if (o.crosscheck) {
    if (j.contains("euclidean")) std::cout << "euclidean  " << j["euclidean"].get<std::string>() << '\n';
    if (j.contains("ratio"))
      std::cout << "ratio      " << j["ratio"].get<std::string>() << '\n';
    else
      std::cout << "ratio      - (bending action not toric)\n";
    if (j.contains("projective")) std::cout << "projective " << j["projective"].get<std::string>() << '\n';
  }
  return kExitOk;
}

int cmd_chart(const Options& o) {
  const auto r = vector_of(o);
  const auto j = pw::io::chart_json(r);
  if (o.json) {
    print_json(j);
    return kExitOk;
  }
  for (const auto& row : j["rows"]) {
    std::cout << row["vertex"].get<std::string>() << "  (";
    bool first = true;
    for (const auto& x : row["point"]) {
      std::cout << (first ? "" : ", ") << x.get<std::string>();
      first = false;
    }
    std::cout << ")";
    for (bool b : row["inside"]) std::cout << (b ? "  in " : "  out");
    std::cout << '\n';
  }
  return kExitOk;
}

int cmd_verify(const Options& o) {
  pw::verify::Config cfg{o.n, o.samples, o.seed, o.max_den, 0};
  if (o.cap || std::getenv("POLYWIDTH_CAP")) cfg.cap = resolve_cap(o.cap, o.n);
  const auto rep = pw::verify::run(cfg);
  if (o.json) {
    print_json(pw::verify::to_json(rep));
  } else {
    for (const auto& x : rep.results) {
      std::cout << (x.failed ? "FAIL " : "ok   ") << x.module << '/' << x.name << "  passed " << x.passed << ", failed "
                << x.failed << ", skipped " << x.skipped << '\n';
      for (const auto& w : x.witnesses) std::cout << "     " << w << '\n';
    }
    std::cout << rep.results.size() << " invariants, " << rep.failures() << " failures\n";
  }
  std::cerr << "wall clock " << static_cast<long>(rep.wall_ms) << " ms\n";
  return rep.failures() ? kExitVerify : kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Gromov width bounds for polygon spaces"};
  app.require_subcommand(1);
  Options o;

  auto add_vector = [&](CLI::App* c, bool required) {
    auto* opt = c->add_option("lengths", o.vector, "edge lengths, integers or p/q");
    if (required) opt->required();
    c->add_flag("--json", o.json, "JSON output");
  };

  auto* classify = app.add_subcommand("classify", "short sets, chamber and hexagon conditions");
  add_vector(classify, true);

  auto* polytope = app.add_subcommand("polytope", "moment polytope of a bending system, or a polytope from JSON");
  add_vector(polytope, false);
  polytope->add_option("--system", o.system, "caterpillar or triple-pairs")->check(CLI::IsMember({"caterpillar", "triple-pairs"}));
  polytope->add_option("--input", o.input, "polytope JSON file instead of a length vector");
  polytope->add_option("--svg", o.svg, "write an SVG drawing (2D only)");
  polytope->add_flag("--cross", o.cross, "overlay the largest axis cross in the SVG");

  auto* width = app.add_subcommand("width", "lower and upper Gromov width bounds");
  add_vector(width, true);
  width->add_option("--cap", o.cap, "total degree cap for the Upsilon search")->check(CLI::Range(2, 64));
  width->add_option("--svg", o.svg, "write the moment polygon with the fitted cross (pentagons)");
  width->add_flag("--explain", o.explain, "say which argument certified each bound");

  auto* volume = app.add_subcommand("volume", "symplectic volume from the long-set formula");
  add_vector(volume, true);
  volume->add_flag("--crosscheck", o.crosscheck, "compare with the Euclidean volume of the moment polytope");

  auto* chart = app.add_subcommand("chart", "vertex membership charts (n = 5, 6; partially ordered input)");
  add_vector(chart, true);

  auto* verify = app.add_subcommand("verify", "seeded invariant suite");
  verify->add_option("--n", o.n, "polygon size")->check(CLI::Range(4, 12));
  verify->add_option("--samples", o.samples, "number of samples")->check(CLI::PositiveNumber);
  verify->add_option("--seed", o.seed, "sampling seed");
  verify->add_option("--max-den", o.max_den, "largest denominator")->check(CLI::Range(1, 1000));
  verify->add_option("--cap", o.cap, "total degree cap for the Upsilon search")->check(CLI::Range(2, 64));
  verify->add_flag("--json", o.json, "JSON output");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (*classify) return cmd_classify(o);
    if (*polytope) return cmd_polytope(o);
    if (*width) return cmd_width(o);
    if (*volume) return cmd_volume(o);
    if (*chart) return cmd_chart(o);
    if (*verify) return cmd_verify(o);
  } catch (const pw::Error& e) {
    std::cerr << "polywidth: " << e.what() << '\n';
    return exit_code_for(e.kind());
  }
  return kExitUsage;
}
