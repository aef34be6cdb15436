#include "hdisk/sweep.hpp"

#include "hdisk/io.hpp"
#include "hdisk/proof_checks.hpp"
#include "hdisk/verify.hpp"

#include <algorithm>
#include <atomic>
#include <charconv>
#include <chrono>
#include <cmath>
#include <exception>
#include <thread>

namespace hdisk {

namespace {

std::vector<std::string_view> split(std::string_view text, char sep) {
  std::vector<std::string_view> out;
  std::size_t start = 0;
  while (true) {
    const auto pos = text.find(sep, start);
    out.push_back(text.substr(start, pos == std::string_view::npos ? std::string_view::npos : pos - start));
    if (pos == std::string_view::npos) break;
    start = pos + 1;
  }
  return out;
}

double parse_real(std::string_view s) {
  double x = 0.0;
  const auto res = std::from_chars(s.data(), s.data() + s.size(), x);
  if (s.empty() || res.ec != std::errc() || res.ptr != s.data() + s.size() || !std::isfinite(x)) {
    throw UsageError("not a real number: '" + std::string(s) + "'");
  }
  return x;
}

std::uint64_t parse_uint(std::string_view s) {
  std::uint64_t x = 0;
  const auto res = std::from_chars(s.data(), s.data() + s.size(), x);
  if (s.empty() || res.ec != std::errc() || res.ptr != s.data() + s.size()) {
    throw UsageError("not a nonnegative integer: '" + std::string(s) + "'");
  }
  return x;
}

std::complex<double> parse_complex(std::span<const std::string_view> parts) {
  if (parts.size() == 1) return parse_real(parts[0]);
  if (parts.size() == 2) return {parse_real(parts[0]), parse_real(parts[1])};
  throw UsageError("expected a real or RE:IM");
}

std::string join_params(std::span<const std::string_view> parts) {
  std::string out;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (i) out += ':';
    out += parts[i];
  }
  return out;
}

MapInstance exact_instance(std::string family, std::string params, ExactFamily exact,
                           std::optional<BoundaryMap> map) {
  MapInstance inst;
  inst.map_id = params.empty() ? family : family + "-" + params;
  inst.family = std::move(family);
  inst.params = std::move(params);
  inst.exact = exact;
  inst.map = std::move(map);
  return inst;
}

template <class F>
auto usage_guard(F&& f) -> decltype(f()) {
  try {
    return f();
  } catch (const UsageError&) {
    throw;
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  } catch (const std::domain_error& e) {
    throw UsageError(e.what());
  }
}

}  // namespace

FourierCoeffs MapInstance::coefficients(int order) const {
  if (exact) return family_coefficients(*exact, order);
  if (!map) throw std::logic_error("MapInstance without data");
  return fourier_from_boundary(*map, order);
}

std::vector<double> parse_real_list(std::string_view text) {
  std::vector<double> out;
  for (auto part : split(text, ',')) out.push_back(parse_real(part));
  return out;
}

std::vector<std::uint64_t> parse_seed_range(std::string_view text) {
  std::vector<std::uint64_t> out;
  for (auto part : split(text, '+')) {
    const auto dots = part.find("..");
    if (dots == std::string_view::npos) {
      out.push_back(parse_uint(part));
      continue;
    }
    const auto lo = parse_uint(part.substr(0, dots));
    const auto hi = parse_uint(part.substr(dots + 2));
    if (hi < lo) throw UsageError("empty seed range: " + std::string(part));
    for (auto s = lo; s <= hi; ++s) out.push_back(s);
  }
  return out;
}

std::vector<MapInstance> expand_family(std::string_view spec) {
  return usage_guard([&]() -> std::vector<MapInstance> {
    const auto parts = split(spec, ':');
    const auto name = parts[0];
    const std::span<const std::string_view> args(parts.data() + 1, parts.size() - 1);
    const std::string params = join_params(args);

    if (name == "identity" && args.empty()) {
      return {exact_instance("identity", "", {ExactFamily::Kind::Identity, 0.0}, make_identity())};
    }
    if (name == "rotation" && args.size() == 1) {
      const double phi = parse_real(args[0]);
      return {exact_instance("rotation", params, {ExactFamily::Kind::Rotation, phi}, make_rotation(phi))};
    }
    if (name == "mobius" && !args.empty()) {
      const auto a = parse_complex(args);
      return {exact_instance("mobius", params, {ExactFamily::Kind::MobiusDisk, a}, make_mobius_boundary(a))};
    }
    if (name == "shear" && !args.empty()) {
      const auto c = parse_complex(args);
      ExactFamily fam{ExactFamily::Kind::Shear, c};
      family_coefficients(fam, 2);  // validates |c| < 1/2
      return {exact_instance("shear", params, fam, std::nullopt)};
    }
    if (name == "random" && args.size() == 2) {
      const double rough = parse_real(args[1]);
      std::vector<MapInstance> out;
      for (auto seed : parse_seed_range(args[0])) {
        MapInstance inst;
        inst.family = "random";
        inst.params = std::to_string(seed) + ":" + std::string(args[1]);
        inst.map_id = "random-s" + std::to_string(seed) + "-k" + std::string(args[1]);
        inst.map = make_random_homeomorphism(seed, kRandomKnots, rough);
        out.push_back(std::move(inst));
      }
      return out;
    }
    if (name == "symrandom" && args.size() == 3) {
      const double rough = parse_real(args[1]);
      const auto folds = parse_uint(args[2]);
      if (folds < 1) throw UsageError("symrandom needs folds >= 1");
      std::vector<MapInstance> out;
      for (auto seed : parse_seed_range(args[0])) {
        MapInstance inst;
        inst.family = "symrandom";
        inst.params = std::to_string(seed) + ":" + std::string(args[1]) + ":" + std::string(args[2]);
        inst.map_id = "symrandom-s" + std::to_string(seed) + "-k" + std::string(args[1]) + "-f" + std::string(args[2]);
        inst.map = make_symmetric_random_homeomorphism(seed, kRandomKnots * folds, rough, folds);
        out.push_back(std::move(inst));
      }
      return out;
    }
    if (name == "step" && args.size() == 1) {
      const auto n = parse_uint(args[0]);
      if (n < 2 || n > 4096) throw UsageError("step:N needs 2 <= N <= 4096");
      std::vector<double> jumps(n), values(n);
      for (std::size_t k = 0; k < n; ++k) {
        jumps[k] = kPi / static_cast<double>(n) + kTwoPi * static_cast<double>(k) / static_cast<double>(n);
        values[k] = kTwoPi * static_cast<double>(k + 1) / static_cast<double>(n);
      }
      MapInstance inst;
      inst.family = "step";
      inst.params = params;
      inst.map_id = "step-" + params;
      inst.map = make_step_map(jumps, values);
      return {std::move(inst)};
    }
    throw UsageError("unknown family spec: '" + std::string(spec) + "'");
  });
}

MapInstance mollified(const MapInstance& inst, int divisions) {
  if (!inst.map) throw UsageError(inst.map_id + ": no boundary map to mollify");
  if (divisions < 2) throw UsageError("mollification divisions must be >= 2");
  MapInstance out = inst;
  out.map = mollify(*inst.map, kTwoPi / divisions);
  out.exact.reset();
  out.map_id += "-m" + std::to_string(divisions);
  return out;
}

std::vector<VerdictRecord> run_tasks(const std::vector<VerdictTask>& tasks, unsigned threads) {
  if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
  threads = static_cast<unsigned>(std::min<std::size_t>(threads, std::max<std::size_t>(1, tasks.size())));

  std::vector<std::vector<VerdictRecord>> results(tasks.size());
  std::vector<std::exception_ptr> errors(tasks.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < tasks.size(); i = next++) {
      const auto start = std::chrono::steady_clock::now();
      try {
        results[i] = tasks[i]();
      } catch (...) {
        errors[i] = std::current_exception();
        continue;
      }
      const double ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
      for (auto& v : results[i]) {
        if (v.wall_time_ms == 0.0) v.wall_time_ms = ms;
      }
    }
  };
  std::vector<std::thread> pool;
  for (unsigned t = 1; t < threads; ++t) pool.emplace_back(worker);
  worker();
  for (auto& th : pool) th.join();
  for (auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }

  std::vector<VerdictRecord> out;
  for (auto& r : results) std::move(r.begin(), r.end(), std::back_inserter(out));
  std::stable_sort(out.begin(), out.end(), [](const VerdictRecord& a, const VerdictRecord& b) {
    if (a.check_name != b.check_name) return a.check_name < b.check_name;
    if (a.map_id != b.map_id) return a.map_id < b.map_id;
    return a.r < b.r;
  });
  return out;
}

VerdictSummary summarize(const std::vector<VerdictRecord>& records) {
  VerdictSummary s;
  for (const auto& v : records) {
    if (v.inconclusive) {
      ++s.inconclusive;
    } else if (v.passed) {
      ++s.passed;
    } else {
      ++s.failed;
    }
  }
  return s;
}

int exit_code(const VerdictSummary& summary) {
  if (summary.failed > 0) return 1;
  if (summary.inconclusive > 0) return 2;
  return 0;
}

namespace {

std::vector<MapInstance> corpus(const std::vector<std::string>& specs, const std::vector<std::string>& fallback) {
  std::vector<MapInstance> out;
  for (const auto& s : specs.empty() ? fallback : specs) {
    for (auto& inst : expand_family(s)) out.push_back(std::move(inst));
  }
  return out;
}

// Random families are mollified; explicit families are used as given.
std::vector<MapInstance> smoothed(const std::vector<MapInstance>& maps, const std::vector<int>& divisions) {
  std::vector<MapInstance> out;
  for (const auto& inst : maps) {
    if (inst.family == "random" || inst.family == "symrandom") {
      for (int d : divisions) out.push_back(mollified(inst, d));
    } else {
      out.push_back(inst);
    }
  }
  return out;
}

std::vector<double> radii_or(const VerifyConfig& c, std::vector<double> fallback) {
  const auto& r = c.radii.empty() ? fallback : c.radii;
  for (double x : r) {
    if (!(x > 0.0 && x <= 0.97)) throw UsageError("radii must lie in (0, 0.97]");
  }
  return r;
}

void stamp(VerdictRecord& v, const MapInstance& inst) {
  v.map_id = inst.map_id;
  v.family = inst.family;
  v.params = inst.params;
}

const BoundaryMap& need_map(const MapInstance& inst) {
  if (!inst.map) throw UsageError(inst.map_id + ": this check needs a boundary map");
  return *inst.map;
}

}  // namespace

std::vector<VerdictTask> theorem1_tasks(const VerifyConfig& config) {
  const auto radii = radii_or(config, {0.25, 0.5, 0.75, 0.9});
  const auto divisions = config.mollify.empty() ? std::vector<int>{32, 64, 128} : config.mollify;
  std::vector<VerdictTask> tasks;
  for (const auto& base : corpus(config.families, {"random:0..99:0.5"})) {
    need_map(base);
    if (base.map->kind() != MapKind::Homeomorphism) {
      throw UsageError(base.map_id + ": area contraction needs a homeomorphism");
    }
    for (int d : (base.family == "random" || base.family == "symrandom") ? divisions : std::vector<int>{0}) {
      tasks.push_back([base, d, radii, config] {
        const MapInstance inst = d ? mollified(base, d) : base;
        std::vector<VerdictRecord> out;
        for (double r : radii) {
          const double tol = config.theorem1_rel_tol * kPi * r * r;
          auto v = check_area_contraction(*inst.map, Radius(r), config.method, tol, config.resolution);
          stamp(v, inst);
          out.push_back(std::move(v));
        }
        return out;
      });
    }
  }
  return tasks;
}

std::vector<VerdictTask> equality_tasks(const VerifyConfig& config) {
  const auto radii = radii_or(config, {0.25, 0.5, 0.75, 0.9});
  const auto divisions = config.mollify.empty() ? std::vector<int>{64} : config.mollify;
  const auto maps = corpus(config.families, {"identity", "rotation:0.7", "rotation:2.5", "mobius:0.3",
                                             "mobius:0.1:0.5", "random:0..99:0.5"});
  std::vector<VerdictTask> tasks;
  for (const auto& base : maps) {
    need_map(base);
    const std::vector<int> ds = (base.family == "random" || base.family == "symrandom") ? divisions : std::vector<int>{0};
    for (int d : ds) {
      tasks.push_back([base, d, radii] {
        const MapInstance inst = d ? mollified(base, d) : base;
        std::vector<VerdictRecord> out;
        for (double r : radii) {
          auto v = check_equality_case(*inst.map, Radius(r));
          stamp(v, inst);
          out.push_back(std::move(v));
        }
        return out;
      });
    }
  }
  return tasks;
}

std::vector<VerdictTask> corollary_tasks(const VerifyConfig& config) {
  const auto maps = corpus(config.families,
                           {"identity", "rotation:1", "rotation:-2", "mobius:0.2", "mobius:0.4", "mobius:0.6"});
  std::vector<VerdictTask> tasks;
  for (const auto& inst : maps) {
    tasks.push_back([inst] {
      static const double eps[] = {0.04, 0.02, 0.01};
      VerdictRecord v;
      if (inst.exact) {
        v = boundary_jacobian_integral(inst.coefficients(512), eps);
      } else {
        if (inst.map->kind() != MapKind::Homeomorphism) {
          throw UsageError(inst.map_id + ": corollary check needs a homeomorphism");
        }
        v = boundary_jacobian_integral(*inst.map, eps);
      }
      stamp(v, inst);
      return std::vector<VerdictRecord>{v};
    });
  }
  return tasks;
}

std::vector<VerdictTask> schwarz_tasks(const VerifyConfig& config) {
  const auto divisions = config.mollify.empty() ? std::vector<int>{64} : config.mollify;
  const auto maps = smoothed(corpus(config.families, {"identity", "rotation:1", "symrandom:0..19:0.5:2",
                                                      "symrandom:0..19:0.5:3", "random:0..19:0.5", "step:2",
                                                      "step:3"}),
                             divisions);
  std::vector<VerdictTask> tasks;
  for (const auto& inst : maps) {
    tasks.push_back([inst] {
      const PolarGrid grid;
      const FourierCoeffs coeffs = inst.map ? schwarz_coefficients(*inst.map) : inst.coefficients(8);
      std::complex<double> shift = 0.0;
      std::string id = inst.map_id;
      if (std::abs(eval_harmonic(coeffs, std::complex<double>(0.0))) >= 1e-10) {
        shift = locate_zero(coeffs);
        id += "-centered";
      }
      std::vector<VerdictRecord> out;
      auto v = schwarz_bound_check(coeffs, shift, grid);
      stamp(v, inst);
      v.map_id = id;
      out.push_back(std::move(v));
      if (inst.family == "step" && inst.params == "2") {
        const double r = 0.9;
        double best = 0.0;
        for (std::size_t k = 0; k < grid.n_theta; ++k) {
          best = std::max(best, std::abs(eval_harmonic(coeffs, r, kTwoPi * k / grid.n_theta)));
        }
        const double bound = 4.0 / kPi * std::atan(r);
        auto s = ge_verdict("schwarz_sharpness", best, bound - 0.05, 0.0);
        stamp(s, inst);
        s.r = r;
        s.resolution = static_cast<std::size_t>(coeffs.order());
        s.error_indicator = bound - best;
        out.push_back(std::move(s));
      }
      return out;
    });
  }
  return tasks;
}

std::vector<VerdictTask> convexity_tasks(const VerifyConfig& config) {
  const auto radii = radii_or(config, {0.25, 0.5, 0.75});
  const auto maps = corpus(config.families, {"shear:0.3", "identity", "rotation:1", "mobius:0.3", "mobius:0.2:0.5"});
  std::vector<VerdictTask> tasks;
  for (const auto& inst : maps) {
    if (!inst.exact) throw UsageError(inst.map_id + ": convexity suite takes exact families only");
    tasks.push_back([inst, radii] {
      std::vector<VerdictRecord> out;
      const FourierCoeffs coeffs = inst.coefficients(256);
      if (inst.exact->kind == ExactFamily::Kind::Shear) {
        for (double r : radii) {
          auto v = convexity_counterexample(coeffs, Radius(r));
          stamp(v, inst);
          out.push_back(std::move(v));
        }
        return out;
      }
      std::vector<std::complex<double>> series;
      for (int n = 1; n <= coeffs.order(); ++n) series.push_back(coeffs[n]);
      if (!holomorphic_series_injective(series)) {
        throw HypothesisError(inst.map_id + ": series is not injective");
      }
      for (double r : radii) {
        auto v = holomorphic_convexity_check(series, Radius(r));
        stamp(v, inst);
        out.push_back(std::move(v));
      }
      return out;
    });
  }
  return tasks;
}

std::vector<VerdictTask> proof_tasks(const VerifyConfig& config) {
  ProofSuiteOptions opt;
  if (!config.radii.empty()) opt.radii = radii_or(config, {});
  opt.seed = config.seed;
  return {[opt] { return run_proof_suite(opt); }};
}

std::vector<VerdictRecord> run_suite(std::string_view suite, const VerifyConfig& config) {
  std::vector<VerdictTask> tasks;
  auto add = [&tasks](std::vector<VerdictTask> more) {
    std::move(more.begin(), more.end(), std::back_inserter(tasks));
  };
  if (suite == "theorem1") {
    add(theorem1_tasks(config));
  } else if (suite == "equality") {
    add(equality_tasks(config));
  } else if (suite == "corollary") {
    add(corollary_tasks(config));
  } else if (suite == "schwarz") {
    add(schwarz_tasks(config));
  } else if (suite == "convexity") {
    add(convexity_tasks(config));
  } else if (suite == "proof") {
    add(proof_tasks(config));
  } else if (suite == "all") {
    VerifyConfig defaults;
    defaults.threads = config.threads;
    defaults.seed = config.seed;
    add(theorem1_tasks(defaults));
    add(equality_tasks(defaults));
    add(corollary_tasks(defaults));
    add(schwarz_tasks(defaults));
    add(convexity_tasks(defaults));
    add(proof_tasks(defaults));
  } else {
    throw UsageError("unknown suite: '" + std::string(suite) + "'");
  }
  return run_tasks(tasks, config.threads);
}

}  // namespace hdisk
