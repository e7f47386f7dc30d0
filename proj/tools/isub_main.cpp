// Copyright 2026 isub authors.
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
//
// Command-line front end: tail bounds, sampling, verification suites,
// divisibility diagnostics, and density evaluation with reproducible seeds
// and machine-readable output.

#include <cmath>
#include <complex>
#include <cstdint>
#include <cstdio>
#include <cstring>
#include <fstream>
#include <functional>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "isub/bounds.hpp"
#include "isub/density.hpp"
#include "isub/exponents.hpp"
#include "isub/samplers.hpp"
#include "isub/stats.hpp"

using nlohmann::json;
using namespace isub;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitDomainOrSuite = 1;
constexpr int kExitUsage = 2;

std::string fmt17(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

double normal_sf(double z) { return 0.5 * std::erfc(z / std::sqrt(2.0)); }

// Replicate i always draws from stream i, so results are byte-identical for
// any worker count; workers own disjoint index ranges and the merge is by
// index.
std::vector<double> generate_batch(std::size_t n, std::uint64_t seed,
                                   std::uint64_t stream_offset, unsigned workers,
                                   const std::function<double(RngStream&)>& draw) {
  std::vector<double> out(n);
  workers = std::max(1u, workers);
  if (workers == 1) {
    for (std::size_t i = 0; i < n; ++i) {
      RngStream rng(seed, stream_offset + i);
      out[i] = draw(rng);
    }
    return out;
  }
  std::vector<std::thread> pool;
  std::vector<std::string> errors(workers);
  const std::size_t chunk = (n + workers - 1) / workers;
  for (unsigned w = 0; w < workers; ++w) {
    pool.emplace_back([&, w] {
      const std::size_t lo = w * chunk, hi = std::min(n, lo + chunk);
      try {
        for (std::size_t i = lo; i < hi; ++i) {
          RngStream rng(seed, stream_offset + i);
          out[i] = draw(rng);
        }
      } catch (const std::exception& e) {
        errors[w] = e.what();
      }
    });
  }
  for (auto& t : pool) t.join();
  for (const auto& e : errors)
    if (!e.empty()) throw std::runtime_error(e);
  return out;
}

void write_text(const std::string& path, const std::string& content) {
  if (path.empty() || path == "-") {
    std::cout << content;
    return;
  }
  std::ofstream f(path, std::ios::binary);
  if (!f) throw std::runtime_error("cannot open output file: " + path);
  f << content;
}

void write_f64le(const std::string& path, const std::vector<double>& values) {
  std::ofstream f(path, std::ios::binary);
  if (!f) throw std::runtime_error("cannot open output file: " + path);
  std::uint64_t count = values.size();
  static_assert(std::endian::native == std::endian::little,
                "f64le writer assumes a little-endian host");
  f.write(reinterpret_cast<const char*>(&count), sizeof(count));
  f.write(reinterpret_cast<const char*>(values.data()),
          static_cast<std::streamsize>(values.size() * sizeof(double)));
}

// ---------------------------------------------------------------------------
// bound

struct BoundOpts {
  std::string spec_text;
  double t = 1.0;
  double p = 1.0;
  std::optional<double> x;
  double x_min = 0.0, x_max = 0.0;
  int x_points = 10;
  std::string format = "csv";
  std::string out;
};

int run_bound(const BoundOpts& o) {
  const SubordinatorSpec spec = parse_spec(o.spec_text);
  std::vector<double> grid;
  if (o.x.has_value())
    grid.push_back(*o.x);
  else if (o.x_min > 0.0 && o.x_max > o.x_min)
    grid = log_grid(o.x_min, o.x_max, o.x_points);
  else
    throw CLI::ValidationError("bound", "need --x or --x-min/--x-max");

  const auto curve = make_bound_curve(spec, o.t, grid, o.p);
  std::ostringstream os;
  if (o.format == "json") {
    json j;
    j["spec"] = json::parse(to_json_string(spec));
    j["t"] = o.t;
    j["p"] = o.p;
    j["x"] = curve.x;
    j["bound"] = curve.bound;
    j["ratio"] = curve.ratio;
    json cf = json::array(), regime = json::array();
    for (std::size_t i = 0; i < curve.x.size(); ++i) {
      cf.push_back(o.p == 1.0 ? closed_form_bound(spec, o.t, curve.x[i])
                              : closed_form_bound(spec, o.t, std::pow(curve.x[i], 1.0 / o.p)));
      regime.push_back(curve.trivial[i] ? "trivial" : "ok");
    }
    j["closed_form"] = cf;
    j["regime"] = regime;
    os << j.dump(2) << "\n";
  } else {
    os << "x,bound,closed_form,ratio,regime\n";
    for (std::size_t i = 0; i < curve.x.size(); ++i) {
      const double cf = o.p == 1.0
                            ? closed_form_bound(spec, o.t, curve.x[i])
                            : closed_form_bound(spec, o.t, std::pow(curve.x[i], 1.0 / o.p));
      os << fmt17(curve.x[i]) << ',' << fmt17(curve.bound[i]) << ',' << fmt17(cf) << ','
         << fmt17(curve.ratio[i]) << ',' << (curve.trivial[i] ? "trivial" : "ok") << "\n";
    }
  }
  write_text(o.out, os.str());
  return kExitOk;
}

// ---------------------------------------------------------------------------
// sample

struct SampleOpts {
  std::string target = "inverse";
  std::string spec_text;
  std::string alphas_text;
  std::string waiting_text;
  double alpha = 0.5;
  double lambda = 1.0;
  double t = 1.0;
  double dt = 1e-3;
  std::size_t n = 1000;
  std::uint64_t seed = 0;
  unsigned streams = 1;
  std::string format = "csv";
  std::string out;
};

std::vector<double> parse_alphas(const std::string& text) {
  std::vector<double> out;
  std::stringstream ss(text);
  std::string tok;
  while (std::getline(ss, tok, ',')) out.push_back(std::stod(tok));
  return out;
}

int run_sample(const SampleOpts& o) {
  if (o.out.empty()) throw CLI::ValidationError("sample", "--out is required");
  std::function<double(RngStream&)> draw;
  json meta;
  meta["subcommand"] = "sample";
  meta["target"] = o.target;
  meta["t"] = o.t;
  meta["n"] = o.n;
  meta["seed"] = o.seed;
  meta["streams"] = o.streams;
  meta["format"] = o.format;
  meta["stream_policy"] = "replicate i uses stream_id i";

  if (o.target == "increment") {
    const auto spec = parse_spec(o.spec_text);
    meta["spec"] = json::parse(to_json_string(spec));
    meta["dt"] = o.dt;
    draw = [spec, dt = o.dt](RngStream& r) { return sample_increment(spec, dt, r); };
  } else if (o.target == "inverse") {
    const auto spec = parse_spec(o.spec_text);
    meta["spec"] = json::parse(to_json_string(spec));
    meta["dt"] = o.dt;
    if (spec.family == Family::Stable) {
      draw = [spec, t = o.t](RngStream& r) {
        return sample_inverse_stable_exact(spec.p1, t, r);
      };
      meta["sampler"] = "exact";
    } else {
      draw = [spec, t = o.t, dt = o.dt](RngStream& r) {
        return sample_inverse_subordinator(spec, t, dt, r).midpoint();
      };
      meta["sampler"] = "bracket-midpoint";
    }
  } else if (o.target == "composed") {
    const auto alphas = parse_alphas(o.alphas_text);
    if (alphas.empty()) throw CLI::ValidationError("sample", "--alphas is required");
    meta["alphas"] = alphas;
    draw = [alphas, t = o.t](RngStream& r) { return sample_composed_iss(alphas, t, r); };
  } else if (o.target == "fracpoisson") {
    meta["lambda"] = o.lambda;
    meta["alpha"] = o.alpha;
    draw = [lam = o.lambda, a = o.alpha, t = o.t](RngStream& r) {
      return static_cast<double>(sample_fractional_poisson(lam, a, t, r));
    };
  } else if (o.target == "renewal") {
    const auto waiting = parse_waiting(o.waiting_text);
    meta["waiting"] = to_mini(waiting);
    draw = [waiting, t = o.t](RngStream& r) {
      return static_cast<double>(sample_renewal_count(waiting, t, r));
    };
  } else if (o.target == "timechanged") {
    const auto outer = parse_spec(o.spec_text);
    meta["spec"] = json::parse(to_json_string(outer));
    meta["alpha"] = o.alpha;
    meta["dt"] = o.dt;
    draw = [outer, a = o.alpha, t = o.t, dt = o.dt](RngStream& r) {
      return sample_time_changed_iss(a, outer, t, dt, r);
    };
  } else {
    throw CLI::ValidationError("sample", "unknown target: " + o.target);
  }

  const auto values = generate_batch(o.n, o.seed, 0, o.streams, draw);

  if (o.format == "f64le") {
    write_f64le(o.out, values);
  } else if (o.format == "csv") {
    std::ostringstream os;
    for (double v : values) os << fmt17(v) << "\n";
    write_text(o.out, os.str());
  } else {
    throw CLI::ValidationError("sample", "sample format must be csv or f64le");
  }
  write_text(o.out + ".meta.json", meta.dump(2) + "\n");
  return kExitOk;
}

// ---------------------------------------------------------------------------
// verify

struct VerifyOpts {
  std::string suite;
  std::string spec_text;
  std::string alphas_text;
  std::string waiting_text = "exp:2";
  double alpha = 0.5;
  double c = 2.0;
  double lambda = 1.0;
  double t = 1.0;
  double dt = 5e-3;
  std::size_t n = 0;  // 0 = suite default
  double x_min = 0.0, x_max = 0.0;
  int x_points = 10;
  std::uint64_t seed = 0;
  unsigned streams = 1;
  std::string out;
};

json ks_row(const std::string& name, const KSResult& r, std::size_t n, double level) {
  json row;
  row["test"] = name;
  row["n"] = n;
  row["statistic"] = r.statistic;
  row["p_value"] = r.p_value;
  row["pass"] = r.p_value > level;
  return row;
}

int run_verify(const VerifyOpts& o) {
  json report;
  report["suite"] = o.suite;
  report["seed"] = o.seed;
  json rows = json::array();

  if (o.suite == "selfsim") {
    const std::size_t n = o.n ? o.n : 100000;
    const double t = o.t;
    auto a = generate_batch(n, o.seed, 0, o.streams, [&](RngStream& r) {
      return sample_inverse_stable_exact(o.alpha, o.c * t, r);
    });
    const double scale = std::pow(o.c, o.alpha);
    auto b = generate_batch(n, o.seed, n, o.streams, [&](RngStream& r) {
      return scale * sample_inverse_stable_exact(o.alpha, t, r);
    });
    rows.push_back(ks_row("selfsim alpha=" + std::to_string(o.alpha) +
                              " c=" + std::to_string(o.c),
                          ks_two_sample(EmpiricalSample(a), EmpiricalSample(b)), n, 0.01));
  } else if (o.suite == "composition") {
    const std::size_t n = o.n ? o.n : 100000;
    const auto alphas = parse_alphas(o.alphas_text);
    if (alphas.empty()) throw CLI::ValidationError("verify", "--alphas is required");
    double product = 1.0;
    for (double a : alphas) product *= a;
    auto a = generate_batch(n, o.seed, 0, o.streams, [&](RngStream& r) {
      return sample_composed_iss(alphas, o.t, r);
    });
    auto b = generate_batch(n, o.seed, n, o.streams, [&](RngStream& r) {
      return sample_inverse_stable_exact(product, o.t, r);
    });
    rows.push_back(ks_row("composition product=" + std::to_string(product),
                          ks_two_sample(EmpiricalSample(a), EmpiricalSample(b)), n, 0.01));
  } else if (o.suite == "tailbound") {
    const std::size_t n = o.n ? o.n : 1000000;
    const auto spec = parse_spec(o.spec_text);
    std::function<double(RngStream&)> draw;
    if (spec.family == Family::Stable)
      draw = [&](RngStream& r) { return sample_inverse_stable_exact(spec.p1, o.t, r); };
    else
      draw = [&](RngStream& r) {
        return sample_inverse_subordinator(spec, o.t, o.dt, r).midpoint();
      };
    const auto values = generate_batch(n, o.seed, 0, o.streams, draw);
    std::vector<double> grid;
    if (o.x_min > 0.0 && o.x_max > o.x_min) {
      grid = log_grid(o.x_min, o.x_max, o.x_points);
    } else {
      // default grid: from where the bound starts to bite down to ~1e-4
      double lo = 0.0, hi = 0.0;
      for (double x = 1e-3 * std::max(o.t, 1.0); x < 1e9; x *= 1.05) {
        const double b = chernoff_bound(spec, o.t, x);
        if (lo == 0.0 && b < 0.3) lo = x;
        if (b < 1e-4) {
          hi = x;
          break;
        }
      }
      grid = log_grid(lo, hi, o.x_points);
    }
    const auto rep = check_tail_dominance(EmpiricalSample(values), spec, o.t, grid);
    for (const auto& row : rep.rows) {
      json r;
      r["test"] = "tailbound x=" + fmt17(row.x);
      r["n"] = rep.n;
      r["statistic"] = row.empirical_tail;
      r["bound"] = row.bound;
      r["threshold"] = row.threshold;
      r["pass"] = row.ok;
      rows.push_back(r);
    }
  } else if (o.suite == "renewal-limit") {
    const std::size_t n = o.n ? o.n : 10000;
    const auto waiting = parse_waiting(o.waiting_text);
    double rate_inv = 0.0;  // mean waiting time
    switch (waiting.kind) {
      case WaitingTimeSpec::Kind::Exponential: rate_inv = 1.0 / waiting.p1; break;
      case WaitingTimeSpec::Kind::Deterministic: rate_inv = waiting.p1; break;
      case WaitingTimeSpec::Kind::Gamma: rate_inv = waiting.p1 * waiting.p2; break;
    }
    const double rate = 1.0 / rate_inv;
    const double ta = std::pow(o.t, o.alpha);
    auto a = generate_batch(n, o.seed, 0, o.streams, [&](RngStream& r) {
      const double e = sample_inverse_stable_exact(o.alpha, 1.0, r);
      return static_cast<double>(sample_renewal_count(waiting, ta * e, r)) / ta;
    });
    auto b = generate_batch(n, o.seed, n, o.streams, [&](RngStream& r) {
      return rate * sample_inverse_stable_exact(o.alpha, 1.0, r);
    });
    rows.push_back(ks_row("renewal-limit", ks_two_sample(EmpiricalSample(a), EmpiricalSample(b)),
                          n, 0.05));
    // fractional Poisson corollary: M(E_alpha(t))/t^alpha vs lambda E_alpha(1)
    auto c = generate_batch(n, o.seed, 2 * n, o.streams, [&](RngStream& r) {
      return static_cast<double>(sample_fractional_poisson(o.lambda, o.alpha, o.t, r)) / ta;
    });
    auto d = generate_batch(n, o.seed, 3 * n, o.streams, [&](RngStream& r) {
      return o.lambda * sample_inverse_stable_exact(o.alpha, 1.0, r);
    });
    rows.push_back(ks_row("fracpoisson-limit",
                          ks_two_sample(EmpiricalSample(c), EmpiricalSample(d)), n, 0.05));
  } else if (o.suite == "timechange-limit") {
    const std::size_t n = o.n ? o.n : 10000;
    const auto outer = parse_spec(o.spec_text);
    const double mean_rate = derivative_sup(outer);  // E T(1)
    if (std::isinf(mean_rate))
      throw std::domain_error("timechange-limit: outer clock must have a finite mean");
    const double ta = std::pow(o.t, o.alpha);
    const double scale = std::pow(mean_rate, o.alpha);
    auto a = generate_batch(n, o.seed, 0, o.streams, [&](RngStream& r) {
      return sample_time_changed_iss(o.alpha, outer, o.t, o.dt, r) / ta;
    });
    auto b = generate_batch(n, o.seed, n, o.streams, [&](RngStream& r) {
      return scale * sample_inverse_stable_exact(o.alpha, 1.0, r);
    });
    rows.push_back(ks_row("timechange-limit",
                          ks_two_sample(EmpiricalSample(a), EmpiricalSample(b)), n, 0.05));
  } else if (o.suite == "lt-consistency") {
    const std::size_t n = o.n ? o.n : 1000000;
    const auto spec = parse_spec(o.spec_text);
    for (double u : {0.5, 1.0, 2.0}) {
      const auto ev = generate_batch(n, o.seed, 0, o.streams, [&](RngStream& r) {
        return std::exp(-u * sample_increment(spec, 1.0, r));
      });
      double s = 0.0, s2 = 0.0;
      for (double v : ev) {
        s += v;
        s2 += v * v;
      }
      const double mean = s / static_cast<double>(n);
      const double se = std::sqrt((s2 / static_cast<double>(n) - mean * mean) /
                                  static_cast<double>(n));
      const double target = std::exp(-laplace_exponent(spec, u));
      const double z = std::fabs(mean - target) / se;
      json row;
      row["test"] = "lt-consistency u=" + fmt17(u);
      row["n"] = n;
      row["statistic"] = z;
      row["p_value"] = 2.0 * normal_sf(z);
      row["pass"] = z < 4.0;
      rows.push_back(row);
    }
  } else {
    throw CLI::ValidationError("verify", "unknown suite: " + o.suite);
  }

  bool all_pass = true;
  for (const auto& row : rows)
    if (!row.at("pass").get<bool>()) all_pass = false;
  report["results"] = rows;
  report["pass"] = all_pass;
  write_text(o.out, report.dump(2) + "\n");
  return all_pass ? kExitOk : kExitDomainOrSuite;
}

// ---------------------------------------------------------------------------
// diagnose

struct DiagnoseOpts {
  std::string spec_text;
  double t = 1.0;
  double p = 1.0;
  double x_min = 10.0, x_max = 1e4;
  int x_points = 76;
  std::string out;        // curve CSV
  std::string json_out;   // verdict JSON (default stdout)
};

int run_diagnose(const DiagnoseOpts& o) {
  const auto spec = parse_spec(o.spec_text);
  const auto grid = log_grid(o.x_min, o.x_max, o.x_points);
  const auto d = diagnose_id(spec, o.t, grid, o.p);

  json j;
  j["spec"] = json::parse(to_json_string(spec));
  j["t"] = o.t;
  j["p"] = o.p;
  j["x_min"] = o.x_min;
  j["x_max"] = o.x_max;
  j["x_points"] = o.x_points;
  j["verdict"] = verdict_name(d.verdict);
  j["slope_estimate"] = d.slope_estimate;
  j["log_factor_estimate"] = d.log_factor_estimate;
  j["ratio_increasing"] = d.ratio_increasing;
  j["ratio_tail"] = d.ratio_tail;
  write_text(o.json_out, j.dump(2) + "\n");

  if (!o.out.empty()) {
    const auto curve = make_bound_curve(spec, o.t, grid, o.p);
    std::ostringstream os;
    os << "x,bound,ratio\n";
    for (std::size_t i = 0; i < curve.x.size(); ++i)
      os << fmt17(curve.x[i]) << ',' << fmt17(curve.bound[i]) << ',' << fmt17(curve.ratio[i])
         << "\n";
    write_text(o.out, os.str());
  }
  return kExitOk;
}

// ---------------------------------------------------------------------------
// density

struct DensityOpts {
  std::string mode = "inverse";
  std::string spec_text;
  std::string method = "talbot";
  int terms = 0;  // 0 = method default
  int order = 1;
  double lambda = 1.0;
  std::optional<double> x;
  std::optional<double> t;
  double sweep_min = 0.1, sweep_max = 3.0;
  int sweep_points = 30;
  std::string out;
};

int run_density(const DensityOpts& o) {
  LTInversionConfig cfg = o.method == "gs"
                              ? LTInversionConfig::gaver_stehfest(o.terms ? o.terms : 18)
                              : LTInversionConfig::talbot(o.terms ? o.terms : 32);
  std::ostringstream os;
  const auto sweep = log_grid(o.sweep_min, o.sweep_max, o.sweep_points);

  if (o.mode == "inverse") {
    const auto spec = parse_spec(o.spec_text);
    if (o.x.has_value() == o.t.has_value())
      throw CLI::ValidationError("density", "fix exactly one of --x / --t and sweep the other");
    if (o.x.has_value()) {
      os << "t,density,low_confidence\n";
      for (double t : sweep) {
        const auto d = inverse_subordinator_density(spec, *o.x, t, cfg);
        os << fmt17(t) << ',' << fmt17(d.value) << ',' << (d.low_confidence ? 1 : 0) << "\n";
      }
    } else {
      os << "x,density,low_confidence\n";
      for (double x : sweep) {
        const auto d = inverse_subordinator_density(spec, x, *o.t, cfg);
        os << fmt17(x) << ',' << fmt17(d.value) << ',' << (d.low_confidence ? 1 : 0) << "\n";
      }
    }
  } else if (o.mode == "erlang") {
    os << "t,density\n";
    for (double t : sweep) os << fmt17(t) << ',' << fmt17(erlang_pdf(o.order, o.lambda, t)) << "\n";
  } else if (o.mode == "family") {
    const auto spec = parse_spec(o.spec_text);
    if (!o.t.has_value()) throw CLI::ValidationError("density", "family mode needs --t");
    os << "y,density\n";
    for (double y : sweep) {
      const auto f = family_pdf(spec, *o.t, y);
      if (!f.has_value())
        throw std::domain_error("no closed-form marginal density for this family");
      os << fmt17(y) << ',' << fmt17(*f) << "\n";
    }
  } else {
    throw CLI::ValidationError("density", "unknown mode: " + o.mode);
  }
  write_text(o.out, os.str());
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"inverse-subordinator toolkit: tail bounds, simulation, diagnostics"};
  app.require_subcommand(1);

  BoundOpts bo;
  auto* bound = app.add_subcommand("bound", "evaluate the optimized tail bound on a level grid");
  bound->add_option("--spec", bo.spec_text, "subordinator spec (family:params or JSON)")
      ->required();
  bound->add_option("--t", bo.t, "time");
  bound->add_option("--p", bo.p, "power-transform exponent");
  double bx = 0.0;
  auto* bxopt = bound->add_option("--x", bx, "single level");
  bound->add_option("--x-min", bo.x_min, "grid start");
  bound->add_option("--x-max", bo.x_max, "grid end");
  bound->add_option("--x-points", bo.x_points, "grid size");
  bound->add_option("--format", bo.format, "csv|json");
  bound->add_option("--out", bo.out, "output path (default stdout)");

  SampleOpts so;
  auto* sample = app.add_subcommand("sample", "draw reproducible samples");
  sample->add_option("--target", so.target,
                     "increment|inverse|composed|fracpoisson|renewal|timechanged");
  sample->add_option("--spec", so.spec_text, "subordinator spec");
  sample->add_option("--alphas", so.alphas_text, "comma list for composed draws");
  sample->add_option("--waiting", so.waiting_text, "waiting law: exp:r|det:c|gamma:k,s");
  sample->add_option("--alpha", so.alpha, "stable index");
  sample->add_option("--lambda", so.lambda, "counting rate");
  sample->add_option("--t", so.t, "time / level");
  sample->add_option("--dt", so.dt, "path grid step");
  sample->add_option("--n", so.n, "number of draws");
  sample->add_option("--seed", so.seed, "seed (default 0, never time-derived)");
  sample->add_option("--streams", so.streams, "worker count (output-invariant)");
  sample->add_option("--format", so.format, "csv|f64le");
  sample->add_option("--out", so.out, "output path")->required();

  VerifyOpts vo;
  auto* verify = app.add_subcommand("verify", "run a distributional verification suite");
  verify
      ->add_option("--suite", vo.suite,
                   "selfsim|composition|tailbound|renewal-limit|timechange-limit|lt-consistency")
      ->required();
  verify->add_option("--spec", vo.spec_text, "subordinator spec");
  verify->add_option("--alphas", vo.alphas_text, "comma list for composition");
  verify->add_option("--waiting", vo.waiting_text, "waiting law");
  verify->add_option("--alpha", vo.alpha, "stable index");
  verify->add_option("--c", vo.c, "self-similarity time scale");
  verify->add_option("--lambda", vo.lambda, "counting rate");
  verify->add_option("--t", vo.t, "time");
  verify->add_option("--dt", vo.dt, "path grid step");
  verify->add_option("--n", vo.n, "sample size per side");
  verify->add_option("--x-min", vo.x_min, "tailbound grid start");
  verify->add_option("--x-max", vo.x_max, "tailbound grid end");
  verify->add_option("--x-points", vo.x_points, "tailbound grid size");
  verify->add_option("--seed", vo.seed, "seed");
  verify->add_option("--streams", vo.streams, "worker count");
  verify->add_option("--out", vo.out, "report path (default stdout)");

  DiagnoseOpts diag;
  auto* diagnose = app.add_subcommand("diagnose", "divisibility diagnostic from the bound curve");
  diagnose->add_option("--spec", diag.spec_text, "subordinator spec")->required();
  diagnose->add_option("--t", diag.t, "time");
  diagnose->add_option("--p", diag.p, "power-transform exponent");
  diagnose->add_option("--x-min", diag.x_min, "grid start");
  diagnose->add_option("--x-max", diag.x_max, "grid end");
  diagnose->add_option("--x-points", diag.x_points, "grid size");
  diagnose->add_option("--out", diag.out, "ratio curve CSV path");
  diagnose->add_option("--json-out", diag.json_out, "verdict JSON path (default stdout)");

  DensityOpts de;
  auto* density = app.add_subcommand("density", "density curves (inversion or closed forms)");
  density->add_option("--mode", de.mode, "inverse|erlang|family");
  density->add_option("--spec", de.spec_text, "subordinator spec");
  density->add_option("--method", de.method, "talbot|gs");
  density->add_option("--terms", de.terms, "inversion terms");
  density->add_option("--order", de.order, "erlang order");
  density->add_option("--lambda", de.lambda, "erlang rate");
  double dx = 0.0, dt = 0.0;
  auto* dxopt = density->add_option("--x", dx, "fixed level (sweep t)");
  auto* dtopt = density->add_option("--t", dt, "fixed time (sweep x or y)");
  density->add_option("--sweep-min", de.sweep_min, "sweep start");
  density->add_option("--sweep-max", de.sweep_max, "sweep end");
  density->add_option("--sweep-points", de.sweep_points, "sweep size");
  density->add_option("--out", de.out, "output path (default stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << e.what() << "\n";
    return kExitUsage;
  }

  try {
    if (bound->parsed()) {
      if (bxopt->count()) bo.x = bx;
      return run_bound(bo);
    }
    if (sample->parsed()) return run_sample(so);
    if (verify->parsed()) return run_verify(vo);
    if (diagnose->parsed()) return run_diagnose(diag);
    if (density->parsed()) {
      if (dxopt->count()) de.x = dx;
      if (dtopt->count()) de.t = dt;
      return run_density(de);
    }
  } catch (const CLI::ValidationError& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    std::cerr << "config error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitDomainOrSuite;
  }
  return kExitUsage;
}
