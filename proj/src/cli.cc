// Copyright 2026 The xyhull Authors
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

#include "xyhull/cli.h"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <fstream>
#include <functional>
#include <sstream>
#include <stdexcept>

#include "CLI11.hpp"
#include "xyhull/errors.h"
#include "xyhull/hull.h"
#include "xyhull/json_io.h"
#include "xyhull/oracle.h"
#include "xyhull/volume.h"

namespace xyhull {
namespace {

struct ArgumentError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Options {
  RawBounds raw;
  std::string point;
  std::string at;
  int grid = 0;
  std::int64_t samples = 1000000;
  std::uint64_t seed = 1;
  std::string method = "all";
  std::string format = "json";
  std::string out;
};

std::vector<double> ParseList(const std::string& text, size_t count,
                              const char* flag) {
  std::vector<double> values;
  std::stringstream in(text);
  std::string item;
  while (std::getline(in, item, ',')) {
    size_t used = 0;
    double v = 0.0;
    try {
      v = std::stod(item, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used == 0 || used != item.size() || !std::isfinite(v)) {
      throw ArgumentError(std::string(flag) + ": not a number: '" + item + "'");
    }
    values.push_back(v);
  }
  if (values.size() != count) {
    throw ArgumentError(std::string(flag) + " expects " + std::to_string(count) +
                        " comma-separated numbers");
  }
  return values;
}

Point3 ParsePoint(const std::string& text) {
  const std::vector<double> v = ParseList(text, 3, "--point");
  return {v[0], v[1], v[2]};
}

std::pair<double, double> ParseAt(const std::string& text) {
  const std::vector<double> v = ParseList(text, 2, "--at");
  return {v[0], v[1]};
}

LinearInequality ToRaw(const LinearInequality& c, const Scaling& s) {
  return {c.a0, c.ax / s.sx, c.ay / s.sy, c.az / (s.sx * s.sy)};
}

// Points of an n x n grid over the normalized box.
std::vector<std::pair<double, double>> BoxGrid(const NormalizedBounds& b,
                                               int n) {
  if (n < 2) throw ArgumentError("--grid must be at least 2");
  std::vector<std::pair<double, double>> pts;
  for (int i = 0; i < n; ++i) {
    const double x = i == n - 1 ? 1.0 : b.lx + (1.0 - b.lx) * i / (n - 1);
    for (int j = 0; j < n; ++j) {
      const double y = j == n - 1 ? 1.0 : b.ly + (1.0 - b.ly) * j / (n - 1);
      pts.emplace_back(x, y);
    }
  }
  return pts;
}

class Command {
 public:
  explicit Command(const Options& o) : o_(o), inst_(Prepare(o.raw)) {
    desc_ = Describe(inst_.bounds);
    if (o.format != "json" && o.format != "csv") {
      throw ArgumentError("--format must be json or csv");
    }
  }

  bool Csv() const { return o_.format == "csv"; }

  Json Header() const {
    return {{"raw_bounds", ToJson(inst_.raw)},
            {"normalized_bounds", ToJson(inst_.bounds)},
            {"scaling", ToJson(inst_.scaling)},
            {"case", CaseName(desc_.tag)},
            {"swapped", desc_.swapped}};
  }

  void CsvHeader(std::ostream& os) const {
    const RawBounds& r = inst_.raw;
    const NormalizedBounds& n = inst_.bounds;
    os << "# raw lx=" << Format9(r.lx) << " ly=" << Format9(r.ly)
       << " lz=" << Format9(r.lz) << " ux=" << Format9(r.ux)
       << " uy=" << Format9(r.uy) << " uz=" << Format9(r.uz) << "\n";
    os << "# normalized lx=" << Format9(n.lx) << " ly=" << Format9(n.ly)
       << " lz=" << Format9(n.lz) << " uz=" << Format9(n.uz)
       << " sx=" << Format9(inst_.scaling.sx)
       << " sy=" << Format9(inst_.scaling.sy) << " case=" << CaseName(desc_.tag)
       << "\n";
  }

  void JsonOnly(const char* name) const {
    if (Csv()) {
      throw ArgumentError(std::string(name) + " has no csv output");
    }
  }

  void Emit(std::ostream& os, const Json& body) const {
    Json j = Header();
    for (auto it = body.begin(); it != body.end(); ++it) j[it.key()] = it.value();
    os << j.dump(2) << "\n";
  }

  void Describe_(std::ostream& os) const {
    JsonOnly("describe");
    Emit(os, {{"description", ToJson(desc_)}});
  }

  void Check(std::ostream& os) const {
    if (o_.point.empty()) throw ArgumentError("check needs --point x,y,z");
    const Point3 p = ParsePoint(o_.point);
    const Point3 np = ToNormalized(p, inst_.scaling);
    const WorstResidual w = Worst(desc_, np);
    const bool member = w.residual >= -desc_.tol.feas_tol;
    if (Csv()) {
      CsvHeader(os);
      os << "status,member,worst_residual,binding\n"
         << (member ? "inside" : "outside") << "," << (member ? "true" : "false")
         << "," << Format9(w.residual) << "," << w.label << "\n";
      return;
    }
    Emit(os, {{"point", ToJson(p)},
              {"normalized_point", ToJson(np)},
              {"status", member ? "inside" : "outside"},
              {"member", member},
              {"worst_residual", Round9(w.residual)},
              {"binding", w.label}});
  }

  void Separate_(std::ostream& os) const {
    if (o_.point.empty()) throw ArgumentError("separate needs --point x,y,z");
    const Point3 p = ParsePoint(o_.point);
    const Point3 np = ToNormalized(p, inst_.scaling);
    const std::optional<Cut> cut = Separate(desc_, np);
    const char* sources[] = {"rlt", "bound", "soc"};
    if (Csv()) {
      CsvHeader(os);
      os << "result,source,label,a0,ax,ay,az,residual\n";
      if (!cut) {
        os << "inside,,,,,,,\n";
        return;
      }
      const LinearInequality& c = cut->inequality;
      os << "cut," << sources[static_cast<int>(cut->source)] << ","
         << cut->label << "," << Format9(c.a0) << "," << Format9(c.ax) << ","
         << Format9(c.ay) << "," << Format9(c.az) << ","
         << Format9(cut->residual) << "\n";
      return;
    }
    Json body = {{"point", ToJson(p)}, {"normalized_point", ToJson(np)}};
    if (!cut) {
      body["result"] = "inside";
    } else {
      body["result"] = "cut";
      body["cut"] = {{"source", sources[static_cast<int>(cut->source)]},
                     {"label", cut->label},
                     {"inequality", ToJson(cut->inequality)},
                     {"raw_inequality", ToJson(ToRaw(cut->inequality, inst_.scaling))},
                     {"residual", Round9(cut->residual)}};
    }
    Emit(os, body);
  }

  std::vector<std::pair<double, double>> QueryPoints(int default_grid) const {
    if (!o_.at.empty()) {
      const auto [x, y] = ParseAt(o_.at);
      return {{x / inst_.scaling.sx, y / inst_.scaling.sy}};
    }
    const int n = o_.grid > 0 ? o_.grid : default_grid;
    if (n <= 0) throw ArgumentError("needs --at x,y or --grid n");
    return BoxGrid(inst_.bounds, n);
  }

  // Points outside the projection of the hull get empty values.
  bool InProjection(const EnvelopePair& e) const {
    return e.zmin <= e.zmax + desc_.tol.feas_tol;
  }
  static std::string CsvValue(bool in, double v) { return in ? Format9(v) : ""; }
  static Json JsonValue(bool in, double v) { return in ? Json(Round9(v)) : Json(); }

  void Envelope(std::ostream& os) const {
    const auto pts = QueryPoints(0);
    const double area = inst_.scaling.sx * inst_.scaling.sy;
    if (Csv()) {
      CsvHeader(os);
      os << "x,y,zmin,zmax\n";
    }
    Json rows = Json::array();
    for (const auto& [x, y] : pts) {
      const EnvelopePair e = Envelopes(desc_, x, y);
      const double rx = x * inst_.scaling.sx;
      const double ry = y * inst_.scaling.sy;
      const bool in = InProjection(e);
      if (Csv()) {
        os << Format9(rx) << "," << Format9(ry) << ","
           << CsvValue(in, e.zmin * area) << "," << CsvValue(in, e.zmax * area)
           << "\n";
      } else {
        rows.push_back({{"x", Round9(rx)},
                        {"y", Round9(ry)},
                        {"zmin", JsonValue(in, e.zmin * area)},
                        {"zmax", JsonValue(in, e.zmax * area)}});
      }
    }
    if (!Csv()) Emit(os, {{"rows", rows}});
  }

  void Tangent(std::ostream& os) const {
    JsonOnly("tangent");
    if (o_.at.empty()) throw ArgumentError("tangent needs --at x,y");
    const auto [x, y] = ParseAt(o_.at);
    const LiftedTangent t =
        LiftedTangentAt(desc_, x / inst_.scaling.sx, y / inst_.scaling.sy);
    Emit(os, {{"at", {Round9(x), Round9(y)}},
              {"tangent", ToJson(t)},
              {"raw_inequality", ToJson(ToRaw(t.inequality, inst_.scaling))},
              {"raw_segment",
               {{"lower", ToJson(FromNormalized(t.segment.lower, inst_.scaling))},
                {"upper",
                 ToJson(FromNormalized(t.segment.upper, inst_.scaling))}}}});
  }

  void Volume(std::ostream& os) const {
    const std::string& m = o_.method;
    if (m != "closed" && m != "numeric" && m != "mc" && m != "all") {
      throw ArgumentError("--method must be closed, numeric, mc or all");
    }
    VolumeReport r;
    r.closed_form = ClosedFormVolume(desc_);
    if (m == "numeric" || m == "all") {
      r.grid_n = o_.grid > 0 ? o_.grid : 1024;
      r.numeric = VolNumeric(desc_, r.grid_n);
    }
    if (m == "mc" || m == "all") r.monte_carlo = VolMc(desc_, o_.samples, o_.seed);
    const double factor = std::pow(inst_.scaling.sx * inst_.scaling.sy, 2);
    if (Csv()) {
      CsvHeader(os);
      os << "method,value,error,raw_value\n";
      auto row = [&](const char* name, double v, double e) {
        os << name << "," << Format9(v) << "," << Format9(e) << ","
           << Format9(v * factor) << "\n";
      };
      if (r.closed_form) row("closed", *r.closed_form, 0.0);
      if (r.numeric) row("numeric", r.numeric->value, r.numeric->error);
      if (r.monte_carlo) {
        row("mc", r.monte_carlo->value, 3.0 * r.monte_carlo->sigma);
      }
      return;
    }
    Emit(os, {{"volume", ToJson(r)}, {"raw_volume_factor", Round9(factor)}});
  }

  void Branch(std::ostream& os) const {
    const BranchReport r = OptimalBranch(o_.grid > 0 ? o_.grid : 99);
    if (Csv()) {
      os << "# b_star=" << Format9(r.b_star)
         << " sum_ratio=" << Format9(r.sum_ratio)
         << " reduction_percent=" << Format9(100.0 * r.reduction) << "\n";
      os << "b,ub_ratio,lb_ratio,sum_ratio\n";
      for (const RatioPoint& p : r.curve) {
        os << Format9(p.b) << "," << Format9(p.ub_ratio) << ","
           << Format9(p.lb_ratio) << "," << Format9(p.sum_ratio) << "\n";
      }
      return;
    }
    Emit(os, {{"branch", ToJson(r)}});
  }

  void Regions(std::ostream& os) const {
    const NormalizedBounds& b = inst_.bounds;
    const CaseTag tag = RegionOf(b);
    std::string region(CaseName(tag));
    if (region.rfind("Region", 0) == 0) region = region.substr(6);
    const double lz = b.lz;
    const double uz = b.uz;
    const double s = std::sqrt(lz * uz);
    const double r = std::sqrt(lz / uz);
    std::vector<std::pair<std::string, std::vector<std::pair<double, double>>>>
        lines;
    if (lz > 0.0 && uz < 1.0) {
      lines.push_back({"lx=s", {{s, lz}, {s, r}}});
      lines.push_back({"ly=s", {{lz, s}, {r, s}}});
      lines.push_back({"ly=r", {{lz, r}, {s, r}}});
      lines.push_back({"lx=r", {{r, lz}, {r, s}}});
      const int n = o_.grid > 1 ? o_.grid : 51;
      std::vector<std::pair<double, double>> hyperbola;
      const double x0 = lz / uz;
      for (int k = 0; k < n; ++k) {
        const double x = k == n - 1 ? uz : x0 * std::pow(uz / x0, double(k) / (n - 1));
        hyperbola.emplace_back(x, lz / x);
      }
      lines.push_back({"lx*ly=lz", hyperbola});
    }
    if (Csv()) {
      CsvHeader(os);
      os << "# region=" << region << "\n";
      os << "polyline,lx,ly\n";
      for (const auto& [name, pts] : lines) {
        for (const auto& [x, y] : pts) {
          os << name << "," << Format9(x) << "," << Format9(y) << "\n";
        }
      }
      return;
    }
    Json polylines = Json::array();
    for (const auto& [name, pts] : lines) {
      Json p = Json::array();
      for (const auto& [x, y] : pts) p.push_back({Round9(x), Round9(y)});
      polylines.push_back({{"name", name}, {"points", p}});
    }
    Emit(os, {{"region", region},
              {"thresholds", {{"s", Round9(s)}, {"r", Round9(r)}}},
              {"polylines", polylines}});
  }

  void Mesh(std::ostream& os) const {
    const int n = o_.grid > 0 ? o_.grid : 51;
    const auto pts = BoxGrid(inst_.bounds, n);
    const double area = inst_.scaling.sx * inst_.scaling.sy;
    if (Csv()) {
      CsvHeader(os);
      os << "x,y,zmin,zmax,piece_id\n";
    }
    Json rows = Json::array();
    for (const auto& [x, y] : pts) {
      const EnvelopePair e = Envelopes(desc_, x, y);
      const bool in = InProjection(e);
      const double rx = x * inst_.scaling.sx;
      const double ry = y * inst_.scaling.sy;
      if (Csv()) {
        os << Format9(rx) << "," << Format9(ry) << ","
           << CsvValue(in, e.zmin * area) << "," << CsvValue(in, e.zmax * area)
           << ",";
        if (in) os << ActivePiece(desc_, x, y);
        os << "\n";
      } else {
        rows.push_back({Round9(rx), Round9(ry), JsonValue(in, e.zmin * area),
                        JsonValue(in, e.zmax * area),
                        in ? Json(ActivePiece(desc_, x, y)) : Json(nullptr)});
      }
    }
    if (!Csv()) {
      Emit(os, {{"columns", {"x", "y", "zmin", "zmax", "piece_id"}},
                {"rows", rows}});
    }
  }

  void Oracle(std::ostream& os) const {
    JsonOnly("oracle");
    if (o_.at.empty() && o_.point.empty()) {
      throw ArgumentError("oracle needs --at x,y and/or --point x,y,z");
    }
    const int n = o_.grid > 0 ? o_.grid : 201;
    const SurfaceSample s = SampleSurface(inst_.bounds, n);
    Json body = {{"sample",
                  {{"n", n},
                   {"points", s.points.size()},
                   {"grid_points", s.grid_points},
                   {"curve_points", s.curve_points}}}};
    if (!o_.at.empty()) {
      const auto [x, y] = ParseAt(o_.at);
      const double nx = x / inst_.scaling.sx;
      const double ny = y / inst_.scaling.sy;
      const double oracle = OracleEnvelope(s, nx, ny);
      const double analytic = Envelopes(desc_, nx, ny).zmax;
      body["envelope"] = {{"at", {Round9(x), Round9(y)}},
                          {"oracle_zmax", Round9(oracle)},
                          {"analytic_zmax", Round9(analytic)},
                          {"difference", Round9(analytic - oracle)}};
    }
    if (!o_.point.empty()) {
      const Point3 p = ParsePoint(o_.point);
      const Point3 np = ToNormalized(p, inst_.scaling);
      body["membership"] = {{"point", ToJson(p)},
                            {"oracle_member", OracleMembership(s, np)},
                            {"analytic_member", IsMember(desc_, np)}};
    }
    Emit(os, body);
  }

 private:
  const Options& o_;
  Instance inst_;
  HullDescription desc_;
};

void AddCommon(CLI::App* sub, Options& o) {
  sub->add_option("--lx", o.raw.lx, "lower bound on x");
  sub->add_option("--ly", o.raw.ly, "lower bound on y");
  sub->add_option("--lz", o.raw.lz, "lower bound on z = xy");
  sub->add_option("--ux", o.raw.ux, "upper bound on x");
  sub->add_option("--uy", o.raw.uy, "upper bound on y");
  sub->add_option("--uz", o.raw.uz, "upper bound on z = xy");
  sub->add_option("--format", o.format, "json or csv");
  sub->add_option("--out", o.out, "write output to this file");
}

}  // namespace

int RunCli(const std::vector<std::string>& args, std::ostream& out,
           std::ostream& err) {
  Options o;
  CLI::App app{"Convex hulls of z = xy with bounds on x, y and z", "xyhull"};
  app.require_subcommand(1);
  std::vector<std::pair<CLI::App*, std::function<void(Command&, std::ostream&)>>>
      commands;
  auto add = [&](const char* name, const char* help,
                 std::function<void(Command&, std::ostream&)> run) {
    CLI::App* sub = app.add_subcommand(name, help);
    AddCommon(sub, o);
    commands.emplace_back(sub, std::move(run));
    return sub;
  };
  add("describe", "print the hull description",
      [](Command& c, std::ostream& os) { c.Describe_(os); });
  add("check", "test a point for membership",
      [](Command& c, std::ostream& os) { c.Check(os); })
      ->add_option("--point", o.point, "x,y,z");
  add("separate", "separating cut for a point",
      [](Command& c, std::ostream& os) { c.Separate_(os); })
      ->add_option("--point", o.point, "x,y,z");
  CLI::App* envelope = add("envelope", "lower and upper envelopes",
                           [](Command& c, std::ostream& os) { c.Envelope(os); });
  envelope->add_option("--at", o.at, "x,y");
  envelope->add_option("--grid", o.grid, "grid size");
  add("tangent", "lifted tangent inequality through a point",
      [](Command& c, std::ostream& os) { c.Tangent(os); })
      ->add_option("--at", o.at, "x,y");
  CLI::App* volume = add("volume", "hull volume",
                         [](Command& c, std::ostream& os) { c.Volume(os); });
  volume->add_option("--method", o.method, "closed, numeric, mc or all");
  volume->add_option("--grid", o.grid, "integration panels");
  volume->add_option("--samples", o.samples, "Monte Carlo samples");
  volume->add_option("--seed", o.seed, "Monte Carlo seed");
  add("branch", "optimal branching point on z",
      [](Command& c, std::ostream& os) { c.Branch(os); })
      ->add_option("--grid", o.grid, "ratio curve points");
  add("regions", "region of (lx, ly) and the region map",
      [](Command& c, std::ostream& os) { c.Regions(os); })
      ->add_option("--grid", o.grid, "points on the hyperbola");
  add("mesh", "envelope mesh with active pieces",
      [](Command& c, std::ostream& os) { c.Mesh(os); })
      ->add_option("--grid", o.grid, "grid size");
  CLI::App* oracle = add("oracle", "sampling LP cross-checks",
                         [](Command& c, std::ostream& os) { c.Oracle(os); });
  oracle->add_option("--at", o.at, "x,y");
  oracle->add_option("--point", o.point, "x,y,z");
  oracle->add_option("--grid", o.grid, "sample resolution");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : 2;
  }

  try {
    std::ostringstream buffer;
    Command command(o);
    for (auto& [sub, run] : commands) {
      if (sub->parsed()) run(command, buffer);
    }
    if (o.out.empty()) {
      out << buffer.str();
    } else {
      std::ofstream file(o.out, std::ios::binary);
      if (!file) throw ArgumentError("cannot open " + o.out);
      file << buffer.str();
    }
    return 0;
  } catch (const ArgumentError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const InfeasibleBounds& e) {
    err << "infeasible bounds: " << e.what() << "\n";
    return 3;
  } catch (const OutOfDomain& e) {
    err << "out of domain: " << e.what() << "\n";
    return 2;
  } catch (const DegenerateBounds& e) {
    err << "degenerate bounds: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << "\n";
    return 1;
  }
}

}  // namespace xyhull
