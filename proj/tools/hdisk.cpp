#include "hdisk/area.hpp"
#include "hdisk/io.hpp"
#include "hdisk/sweep.hpp"
#include "hdisk/verify.hpp"

#include <CLI11.hpp>

#include <chrono>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <memory>

namespace {

using namespace hdisk;

constexpr int kExitUsage = 64;

struct OutputOptions {
  std::string format = "csv";
  std::string path;
};

void add_output_options(CLI::App* cmd, OutputOptions& out) {
  cmd->add_option("--format", out.format, "csv or jsonl")->check(CLI::IsMember({"csv", "jsonl"}));
  cmd->add_option("--output,-o", out.path, "output file ('-' for stdout); default $HDISK_OUT_DIR/<command>.<format>");
}

// Owns the stream when writing to a file.
class Sink {
 public:
  Sink(const OutputOptions& opt, const std::string& command) {
    std::string path = opt.path;
    if (path.empty()) {
      if (const char* dir = std::getenv("HDISK_OUT_DIR"); dir && *dir) {
        std::filesystem::create_directories(dir);
        path = (std::filesystem::path(dir) / (command + "." + opt.format)).string();
      }
    }
    if (path.empty() || path == "-") return;
    file_ = std::make_unique<std::ofstream>(path);
    if (!*file_) throw UsageError("cannot open output file: " + path);
  }
  std::ostream& stream() { return file_ ? *file_ : std::cout; }

 private:
  std::unique_ptr<std::ofstream> file_;
};

struct MapSource {
  std::vector<std::string> families;
  std::string map_file;
  bool conjugate = false;
  std::vector<int> mollify;
};

void add_map_options(CLI::App* cmd, MapSource& src) {
  cmd->add_option("--family,-f", src.families,
                  "identity | rotation:PHI | mobius:A[:IM] | shear:C[:IM] | random:SEEDS:ROUGH | "
                  "symrandom:SEEDS:ROUGH:FOLDS | step:N");
  cmd->add_option("--map-file", src.map_file, "boundary map JSON {kind, omega_re, omega_im, knots}");
  cmd->add_flag("--conjugate", src.conjugate, "map file holds orientation-reversing data; use f(conj z)");
  cmd->add_option("--mollify", src.mollify, "mollification widths 2pi/D, given as D")->delimiter(',');
}

MapInstance load_map_file(const std::string& path, bool conjugate) {
  std::ifstream in(path);
  if (!in) throw UsageError("cannot read map file: " + path);
  nlohmann::json j;
  try {
    in >> j;
  } catch (const nlohmann::json::exception& e) {
    throw UsageError(std::string("bad map file: ") + e.what());
  }
  MapInstance inst;
  inst.family = "file";
  inst.params = std::filesystem::path(path).filename().string();
  inst.map_id = "file-" + std::filesystem::path(path).stem().string();
  try {
    if (conjugate) {
      std::vector<Knot> knots;
      for (const auto& k : j.at("knots")) knots.push_back({k.at(0).get<double>(), k.at(1).get<double>()});
      const std::complex<double> omega(j.at("omega_re").get<double>(), j.at("omega_im").get<double>());
      inst.map = conjugate_orientation(knots, omega, map_kind_from_string(j.value("kind", "Homeomorphism")));
      inst.map_id += "-conj";
    } else {
      inst.map = boundary_map_from_json(j);
    }
  } catch (const nlohmann::json::exception& e) {
    throw UsageError(std::string("bad map file: ") + e.what());
  } catch (const std::invalid_argument& e) {
    throw UsageError(std::string("bad map file: ") + e.what());
  }
  return inst;
}

std::vector<MapInstance> resolve_maps(const MapSource& src) {
  std::vector<MapInstance> out;
  for (const auto& f : src.families) {
    for (auto& inst : expand_family(f)) out.push_back(std::move(inst));
  }
  if (!src.map_file.empty()) {
    out.push_back(load_map_file(src.map_file, src.conjugate));
  } else if (src.conjugate) {
    throw UsageError("--conjugate needs --map-file");
  }
  if (src.mollify.empty()) return out;
  std::vector<MapInstance> smooth;
  for (const auto& inst : out) {
    for (int d : src.mollify) smooth.push_back(mollified(inst, d));
  }
  return smooth;
}

std::vector<double> checked_radii(const std::string& text) {
  auto radii = parse_real_list(text);
  for (double r : radii) {
    if (!(r > 0.0 && r <= 0.97)) throw UsageError("radii must lie in (0, 0.97]");
  }
  return radii;
}

std::vector<AreaMethod> parse_methods(const std::string& text) {
  std::vector<AreaMethod> out;
  std::size_t start = 0;
  while (start <= text.size()) {
    const auto pos = text.find(',', start);
    const auto name = text.substr(start, pos == std::string::npos ? std::string::npos : pos - start);
    try {
      out.push_back(area_method_from_string(name));
    } catch (const std::invalid_argument&) {
      throw UsageError("unknown area method: '" + name + "'");
    }
    if (pos == std::string::npos) break;
    start = pos + 1;
  }
  return out;
}

double elapsed_ms(std::chrono::steady_clock::time_point start) {
  return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
}

AreaEstimate area_of(const MapInstance& inst, Radius r, AreaMethod method, std::size_t resolution) {
  if (method == AreaMethod::ExactFamily) {
    if (!inst.exact) throw UsageError(inst.map_id + ": no closed form for this family");
    return exact_family_area(*inst.exact, r);
  }
  if (!inst.map) {
    // Coefficient-only family: only the series routes apply.
    const int order = resolution ? static_cast<int>(resolution) : 64;
    if (method == AreaMethod::GreenSpectral) return area_green_spectral(inst.coefficients(order), r);
    if (method == AreaMethod::JacobianGrid) {
      return area_jacobian_grid(inst.coefficients(8), r, 64, resolution ? resolution : default_sample_count(r.value()));
    }
    throw UsageError(inst.map_id + ": method " + std::string(to_string(method)) + " needs a boundary map");
  }
  try {
    return compute_area(*inst.map, r, method, resolution);
  } catch (const std::domain_error& e) {
    throw UsageError(inst.map_id + ": " + e.what());
  }
}

struct AreaCmd {
  MapSource src;
  std::string radii = "0.5";
  std::string methods = "kernel-fft";
  std::size_t resolution = 0;
  OutputOptions out;

  int run() {
    const auto maps = resolve_maps(src);
    if (maps.empty()) throw UsageError("no maps: give --family or --map-file");
    const auto rs = checked_radii(radii);
    const auto ms = parse_methods(methods);
    Sink sink(out, "area");
    auto& os = sink.stream();
    if (out.format == "csv") os << area_csv_header() << '\n';
    for (const auto& inst : maps) {
      for (double r : rs) {
        for (auto m : ms) {
          const auto start = std::chrono::steady_clock::now();
          AreaRow row{inst.map_id, inst.family, inst.params, r, area_of(inst, Radius(r), m, resolution), 0.0};
          row.wall_time_ms = elapsed_ms(start);
          if (out.format == "csv") {
            os << area_csv_row(row) << '\n';
          } else {
            os << to_json(row).dump() << '\n';
          }
        }
      }
    }
    return 0;
  }
};

struct VerifyCmd {
  MapSource src;
  std::string suite = "theorem1";
  bool proof_suite = false;
  std::string radii;
  std::string seeds;
  double roughness = 0.5;
  std::string method = "kernel-fft";
  std::size_t resolution = 0;
  double rel_tol = 1e-6;
  unsigned threads = 0;
  std::uint64_t seed = 20091102;
  OutputOptions out;

  int run() {
    VerifyConfig cfg;
    cfg.families = src.families;
    if (!seeds.empty()) {
      cfg.families.push_back("random:" + seeds + ":" + format_double(roughness));
    }
    if (!src.map_file.empty()) {
      throw UsageError("verify takes --family specs; use 'area' for map files");
    }
    if (!radii.empty()) cfg.radii = checked_radii(radii);
    cfg.mollify = src.mollify;
    const auto ms = parse_methods(method);
    if (ms.size() != 1) throw UsageError("verify takes a single --method");
    cfg.method = ms.front();
    cfg.resolution = resolution;
    cfg.theorem1_rel_tol = rel_tol;
    cfg.threads = threads;
    cfg.seed = seed;

    std::vector<VerdictRecord> records;
    try {
      records = run_suite(proof_suite ? "proof" : suite, cfg);
    } catch (const HypothesisError& e) {
      throw UsageError(e.what());
    } catch (const PreconditionError& e) {
      throw UsageError(e.what());
    }
    Sink sink(out, "verify");
    auto& os = sink.stream();
    if (out.format == "csv") os << verdict_csv_header() << '\n';
    for (const auto& v : records) {
      if (out.format == "csv") {
        os << verdict_csv_row(v) << '\n';
      } else {
        os << to_json(v).dump() << '\n';
      }
    }
    const auto s = summarize(records);
    std::cerr << "verify: " << s.passed << " passed, " << s.failed << " failed, " << s.inconclusive
              << " inconclusive\n";
    return exit_code(s);
  }
};

struct BenchCmd {
  std::string family = "random:7:0.5";
  int mollify = 64;
  double r = 0.6;
  std::vector<std::size_t> sizes{256, 1024, 4096};
  int repeats = 3;
  OutputOptions out;

  int run() {
    auto maps = expand_family(family);
    if (maps.size() != 1 || !maps.front().map) throw UsageError("bench needs a single map family");
    MapInstance inst = mollify > 0 ? mollified(maps.front(), mollify) : maps.front();
    const Radius rad(r);
    Sink sink(out, "bench");
    auto& os = sink.stream();
    if (out.format == "csv") os << "schema,map_id,r,M,method,value,best_ms,rel_diff\n";
    int code = 0;
    for (auto m : sizes) {
      if (m < 8 || m % 2) throw UsageError("bench sizes must be even and >= 8");
      double best[2] = {1e300, 1e300};
      double value[2] = {0.0, 0.0};
      for (int rep = 0; rep < repeats; ++rep) {
        for (int which = 0; which < 2; ++which) {
          const auto start = std::chrono::steady_clock::now();
          value[which] = which == 0 ? area_kernel_direct(*inst.map, rad, m).value : area_kernel_fft(*inst.map, rad, m).value;
          best[which] = std::min(best[which], elapsed_ms(start));
        }
      }
      const double rel = std::abs(value[1] - value[0]) / std::abs(value[0]);
      if (!(rel <= 1e-10)) code = 1;
      const char* names[2] = {"kernel-direct", "kernel-fft"};
      for (int which = 0; which < 2; ++which) {
        if (out.format == "csv") {
          os << kSchemaVersion << ',' << inst.map_id << ',' << format_double(r) << ',' << m << ',' << names[which]
             << ',' << format_double(value[which]) << ',' << format_double(best[which]) << ',' << format_double(rel)
             << '\n';
        } else {
          nlohmann::json j{{"schema", kSchemaVersion}, {"map_id", inst.map_id}, {"r", r},
                           {"M", m},                   {"method", names[which]}, {"value", value[which]},
                           {"best_ms", best[which]},   {"rel_diff", rel}};
          os << j.dump() << '\n';
        }
      }
      std::cerr << "bench: M=" << m << " direct " << best[0] << " ms, fft " << best[1] << " ms, rel diff " << rel
                << '\n';
    }
    return code;
  }
};

struct ExportCmd {
  std::string family;
  int mollify = 0;
  int coefficients = 0;
  std::string path;

  int run() {
    auto maps = expand_family(family);
    if (maps.size() != 1) throw UsageError("export-map needs a single map");
    MapInstance inst = mollify > 0 ? mollified(maps.front(), mollify) : maps.front();
    nlohmann::json j;
    if (coefficients > 0) {
      j = to_json(inst.coefficients(coefficients));
    } else {
      if (!inst.map) throw UsageError(inst.map_id + ": no boundary map; use --coefficients");
      j = to_json(*inst.map);
    }
    if (path.empty() || path == "-") {
      std::cout << j.dump() << '\n';
    } else {
      std::ofstream os(path);
      if (!os) throw UsageError("cannot open output file: " + path);
      os << j.dump() << '\n';
    }
    return 0;
  }
};

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Area contraction toolkit for harmonic self-maps of the unit disk"};
  app.require_subcommand(1);

  AreaCmd area;
  auto* area_cmd = app.add_subcommand("area", "compute |f(D_r)| for each family, radius and method");
  add_map_options(area_cmd, area.src);
  area_cmd->add_option("--r,--radii", area.radii, "comma-separated radii in (0, 0.97]");
  area_cmd->add_option("--method,-m", area.methods,
                       "comma list of green-spectral, green-quadrature, kernel-direct, kernel-fft, jacobian, exact");
  area_cmd->add_option("--M", area.resolution, "resolution (samples, Fourier order or n_theta); 0 = default");
  add_output_options(area_cmd, area.out);

  VerifyCmd verify;
  auto* verify_cmd = app.add_subcommand("verify", "run verification suites and emit verdicts");
  add_map_options(verify_cmd, verify.src);
  verify_cmd->add_option("--suite", verify.suite, "theorem1 | equality | corollary | schwarz | convexity | proof | all")
      ->check(CLI::IsMember({"theorem1", "equality", "corollary", "schwarz", "convexity", "proof", "all"}));
  verify_cmd->add_flag("--proof-suite", verify.proof_suite, "run the proof checks as one batch");
  verify_cmd->add_option("--r,--radii", verify.radii, "comma-separated radii in (0, 0.97]");
  verify_cmd->add_option("--seeds", verify.seeds, "seed range for random maps, e.g. 0..99");
  verify_cmd->add_option("--roughness", verify.roughness, "roughness for --seeds");
  verify_cmd->add_option("--method,-m", verify.method, "area method for theorem1");
  verify_cmd->add_option("--M", verify.resolution, "area resolution; 0 = default");
  verify_cmd->add_option("--rel-tol", verify.rel_tol, "theorem1 tolerance relative to pi r^2");
  verify_cmd->add_option("--threads,-j", verify.threads, "worker threads; 0 = all cores");
  verify_cmd->add_option("--seed", verify.seed, "seed for the proof suite's random samples");
  add_output_options(verify_cmd, verify.out);

  BenchCmd bench;
  auto* bench_cmd = app.add_subcommand("bench", "time kernel-direct against kernel-fft");
  bench_cmd->add_option("--family,-f", bench.family, "single-map family spec");
  bench_cmd->add_option("--mollify", bench.mollify, "mollification width 2pi/D; 0 = none");
  bench_cmd->add_option("--r", bench.r, "radius");
  bench_cmd->add_option("--M", bench.sizes, "sample counts")->delimiter(',');
  bench_cmd->add_option("--repeats", bench.repeats, "timing repeats (best is kept)")->check(CLI::PositiveNumber);
  add_output_options(bench_cmd, bench.out);

  ExportCmd exporter;
  auto* export_cmd = app.add_subcommand("export-map", "write a boundary map or its Fourier coefficients as JSON");
  export_cmd->add_option("--family,-f", exporter.family, "single-map family spec")->required();
  export_cmd->add_option("--mollify", exporter.mollify, "mollification width 2pi/D; 0 = none");
  export_cmd->add_option("--coefficients", exporter.coefficients, "emit coefficients up to this order instead");
  export_cmd->add_option("--output,-o", exporter.path, "output file");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitUsage;
  }

  try {
    if (area_cmd->parsed()) return area.run();
    if (verify_cmd->parsed()) return verify.run();
    if (bench_cmd->parsed()) return bench.run();
    if (export_cmd->parsed()) return exporter.run();
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
  return kExitUsage;
}
