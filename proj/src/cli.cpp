#include "torusarr/cli.hpp"

#include "torusarr/error.hpp"
#include "torusarr/intersection.hpp"
#include "torusarr/regions.hpp"
#include "torusarr/theory.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdlib>
#include <fstream>
#include <ostream>

namespace torusarr::cli {

namespace {

using nlohmann::json;

int exit_code_for(ErrorCode code) {
  switch (code) {
  case ErrorCode::NotFeasible: return kNotFeasible;
  case ErrorCode::ResourceLimit: return kResourceLimit;
  case ErrorCode::TheoremViolation: return kTheoremViolation;
  default: return kInputError;
  }
}

regions::BuildOptions build_options() {
  regions::BuildOptions opts;
  if (const char* env = std::getenv("TORUSARR_MAX_SHEETS")) {
    char* end = nullptr;
    unsigned long v = std::strtoul(env, &end, 10);
    if (end == env || *end != '\0' || v == 0)
      fail(ErrorCode::InvalidParams, std::string("TORUSARR_MAX_SHEETS must be a positive integer, got '") + env + "'");
    opts.max_sheets = v;
  }
  return opts;
}

json point_json(const RatVec& p) {
  json a = json::array();
  for (const Rational& q : p)
    a.push_back(to_fraction_string(q));
  return a;
}

json tori_json(const Arrangement& arr) {
  json tori = json::array();
  for (const Subtorus& s : arr.tori) {
    json normal = json::array();
    for (const Int& x : s.normal())
      normal.push_back(x.get_str());
    tori.push_back({{"normal", normal}, {"offset", to_fraction_string(s.offset())}});
  }
  return tori;
}

json verdicts_json(const theory::BoundsReport& r) {
  json v = {{"parallel_bound", r.parallel_bound_ok}, {"member", r.member}};
  v["dichotomy"] = r.dichotomy_applicable ? json(r.dichotomy_ok) : json(nullptr);
  return v;
}

json header(const std::string& command, std::size_t d, std::size_t n) {
  return {{"command", command}, {"d", d}, {"n", n}};
}

void print_report(std::ostream& out, const theory::BoundsReport& r) {
  out << "m = " << r.m << '\n';
  out << "parallel-class bound m(n-m-d+2) = " << r.parallel_class_bound << ": "
      << (r.parallel_bound_ok ? "ok" : "VIOLATED") << '\n';
  if (r.dichotomy_applicable)
    out << "dichotomy f >= 2n-2d or (f <= n and m >= n-d+1): " << (r.dichotomy_ok ? "ok" : "VIOLATED") << '\n';
  else
    out << "dichotomy: not applicable (needs n > d >= 2)\n";
  out << "f = " << r.f << (r.member ? " ∈ " : " ∉ ") << "F(T^" << r.d << "," << r.n << ") = "
      << theory::feasible_set(r.d, r.n).describe() << '\n';
}

} // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Region counting for arrangements of codimension-one subtori in flat tori"};
  app.require_subcommand(1);
  app.fallthrough();
  bool as_json = false;
  app.add_flag("--json", as_json, "Emit JSON on stdout");

  std::string file;
  bool witnesses = false;
  auto* count = app.add_subcommand("count", "Count the regions of the complement");
  count->add_option("file", file, ".tarr arrangement")->required();
  count->add_flag("--witnesses", witnesses, "Print one interior point per region");

  std::vector<long> pair;
  auto* intersect = app.add_subcommand("intersect", "Components of a pairwise intersection");
  intersect->add_option("file", file, ".tarr arrangement")->required();
  intersect->add_option("--pair", pair, "1-based subtorus indices i j")->required()->expected(2);

  long d = 0, n = 0, f = 0;
  std::optional<long> test_value;
  bool quiet = false;
  auto* feasible = app.add_subcommand("feasible", "The attainable region counts F(T^d,n)");
  feasible->add_option("d", d)->required();
  feasible->add_option("n", n)->required();
  feasible->add_option("--test", test_value, "Membership test for one value");
  feasible->add_flag("--quiet", quiet, "With --test: no output, exit 0 if a member and 2 otherwise");

  std::string out_path;
  auto* construct = app.add_subcommand("construct", "Generate an arrangement with a given region count");
  construct->add_option("d", d)->required();
  construct->add_option("n", n)->required();
  construct->add_option("f", f)->required();
  construct->add_option("-o,--output", out_path, "Write the .tarr file here instead of stdout");

  auto* verify = app.add_subcommand("verify", "Count regions and check every bound");
  verify->add_option("file", file, ".tarr arrangement")->required();

  std::optional<long> given_f;
  auto* bounds = app.add_subcommand("bounds", "Report the bounds for an arrangement");
  bounds->add_option("file", file, ".tarr arrangement")->required();
  bounds->add_option("--f", given_f, "Use this region count instead of computing it");

  std::vector<const char*> argv;
  for (const std::string& a : args)
    argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? kOk : kInputError;
  }

  try {
    regions::BuildOptions opts = build_options();

    if (count->parsed()) {
      Arrangement arr = read_tarr_file(file);
      regions::CellComplex cx = regions::decompose(arr, opts);
      std::vector<RatVec> points;
      if (witnesses)
        points = regions::region_witnesses(cx);
      if (as_json) {
        json j = header("count", arr.dim, arr.size());
        j["f"] = cx.region_count;
        if (witnesses) {
          j["witnesses"] = json::array();
          for (const RatVec& p : points)
            j["witnesses"].push_back(point_json(p));
        }
        out << j.dump() << '\n';
      } else {
        out << "f = " << cx.region_count << '\n';
        for (std::size_t r = 0; r < points.size(); ++r)
          out << "region " << r + 1 << ": " << to_string(points[r]) << '\n';
      }
      return kOk;
    }

    if (intersect->parsed()) {
      Arrangement arr = read_tarr_file(file);
      for (long idx : pair)
        if (idx < 1 || static_cast<std::size_t>(idx) > arr.size())
          fail(ErrorCode::InvalidParams, "subtorus index " + std::to_string(idx) + " out of range 1.." +
                                             std::to_string(arr.size()));
      const IntVec& a = arr.tori[static_cast<std::size_t>(pair[0] - 1)].normal();
      const IntVec& b = arr.tori[static_cast<std::size_t>(pair[1] - 1)].normal();
      Int c = intersection::components_pair(a, b);
      if (as_json) {
        json j = header("intersect", arr.dim, arr.size());
        j["pair"] = pair;
        j["components"] = c.get_str();
        out << j.dump() << '\n';
      } else {
        out << "components(A_" << pair[0] << " ∩ A_" << pair[1] << ") = " << c << '\n';
      }
      return kOk;
    }

    if (feasible->parsed()) {
      theory::FeasibleSet set = theory::feasible_set(d, n);
      std::string name = "F(T^" + std::to_string(d) + "," + std::to_string(n) + ")";
      if (!test_value) {
        if (as_json) {
          json j = header("feasible", static_cast<std::size_t>(d), static_cast<std::size_t>(n));
          j["set"] = set.describe();
          out << j.dump() << '\n';
        } else {
          out << name << " = " << set.describe() << '\n';
        }
        return kOk;
      }
      bool member = set.contains(*test_value);
      if (quiet)
        return member ? kOk : kNotFeasible;
      if (as_json) {
        json j = header("feasible", static_cast<std::size_t>(d), static_cast<std::size_t>(n));
        j["set"] = set.describe();
        j["l"] = *test_value;
        j["verdicts"] = {{"member", member}};
        out << j.dump() << '\n';
      } else {
        out << *test_value << (member ? " ∈ " : " ∉ ") << name << '\n';
      }
      return kOk;
    }

    if (construct->parsed()) {
      Arrangement arr = theory::construct_for(d, n, f, opts);
      std::string text = format_tarr(arr);
      if (!out_path.empty()) {
        std::ofstream os(out_path);
        if (!os)
          fail(ErrorCode::InvalidParams, "cannot write '" + out_path + "'");
        os << text;
      }
      if (as_json) {
        json j = header("construct", arr.dim, arr.size());
        j["f"] = f;
        j["tori"] = tori_json(arr);
        out << j.dump() << '\n';
      } else if (out_path.empty()) {
        out << "# f = " << f << '\n' << text;
      } else {
        out << "f = " << f << " written to " << out_path << '\n';
      }
      return kOk;
    }

    if (verify->parsed() || bounds->parsed()) {
      Arrangement arr = read_tarr_file(file);
      const bool checking = verify->parsed();
      std::int64_t region_count = (!checking && given_f) ? *given_f
                                                         : static_cast<std::int64_t>(regions::count_regions(arr, opts));
      theory::BoundsReport r = theory::evaluate_bounds(arr, region_count);
      if (as_json) {
        json j = header(checking ? "verify" : "bounds", arr.dim, arr.size());
        j["f"] = r.f;
        j["m"] = r.m;
        if (arr.size() > 0)
          j["set"] = theory::feasible_set(r.d, r.n).describe();
        j["parallel_class_bound"] = r.parallel_class_bound;
        j["verdicts"] = verdicts_json(r);
        out << j.dump() << '\n';
      } else {
        out << "f = " << r.f << '\n';
        if (arr.size() > 0)
          print_report(out, r);
      }
      if (checking && !r.ok()) {
        err << "error: TheoremViolation: " << r.describe() << '\n';
        return kTheoremViolation;
      }
      return kOk;
    }
  } catch (const Error& e) {
    err << "error: " << to_string(e.code()) << ": " << e.what() << '\n';
    return exit_code_for(e.code());
  }
  return kInputError;
}

} // namespace torusarr::cli
