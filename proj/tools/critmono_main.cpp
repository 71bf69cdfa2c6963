// Command line front end. All computations go through the C interface of the
// shared library; this file only handles argument parsing, file IO, report
// rendering and the on-disk result cache.

#include <fcntl.h>
#include <unistd.h>

#include <cstdint>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include <critmono.h>

namespace {

using nlohmann::json;

struct CliError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw CliError("cannot read file: " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::uint64_t fnv1a64(std::string_view s) {
  std::uint64_t h = 1469598103934665603ull;
  for (unsigned char c : s) {
    h ^= c;
    h *= 1099511628211ull;
  }
  return h;
}

std::string hex16(std::uint64_t v) {
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(v));
  return buf;
}

std::string sci(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.6g", v);
  return buf;
}

std::string fmt_complex(const json& z) {
  double re = z.at(0).get<double>();
  double im = z.at(1).get<double>();
  if (std::abs(im) < 1e-12) return sci(re);
  char buf[80];
  std::snprintf(buf, sizeof buf, "%s%s%si", sci(re).c_str(), im < 0 ? "-" : "+",
                sci(std::abs(im)).c_str());
  return buf;
}

std::string fmt_point(const json& pt) {
  std::string out = "(";
  for (std::size_t i = 0; i < pt.size(); ++i) {
    if (i) out += ", ";
    out += fmt_complex(pt.at(i));
  }
  return out + ")";
}

std::string fmt_class(const json& parts) {
  std::string out = "(";
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (i) out += ",";
    out += std::to_string(parts.at(i).get<int>());
  }
  return out + ")";
}

std::string fmt_blocks(const json& blocks) {
  std::string out;
  for (std::size_t i = 0; i < blocks.size(); ++i) {
    if (i) out += " ";
    out += "{";
    const json& b = blocks.at(i);
    for (std::size_t k = 0; k < b.size(); ++k) {
      if (k) out += ",";
      out += std::to_string(b.at(k).get<int>());
    }
    out += "}";
  }
  return out;
}

// One-line cycle notation for a permutation given by its image list.
std::string fmt_cycles(const json& images) {
  int n = static_cast<int>(images.size());
  std::vector<char> seen(static_cast<std::size_t>(n), 0);
  std::string out;
  for (int i = 0; i < n; ++i) {
    if (seen[static_cast<std::size_t>(i)]) continue;
    std::vector<int> cyc;
    int j = i;
    while (!seen[static_cast<std::size_t>(j)]) {
      seen[static_cast<std::size_t>(j)] = 1;
      cyc.push_back(j);
      j = images.at(static_cast<std::size_t>(j)).get<int>();
    }
    if (cyc.size() < 2) continue;
    out += "(";
    for (std::size_t k = 0; k < cyc.size(); ++k) {
      if (k) out += " ";
      out += std::to_string(cyc[k]);
    }
    out += ")";
  }
  return out.empty() ? "id" : out;
}

std::string fmt_chain(const json& chain) {
  std::string out;
  for (std::size_t i = 0; i < chain.size(); ++i) {
    if (i) out += " < ";
    out += fmt_class(chain.at(i));
  }
  return out;
}

void print_generators(const json& gens) {
  std::cout << "generators:\n";
  for (const auto& g : gens) std::cout << "  " << fmt_cycles(g) << "\n";
}

void render_bound(const json& r) {
  std::cout << "n: " << r.at("n").get<int>() << "\n"
            << "kind: " << r.at("kind").get<std::string>() << "\n"
            << "s: " << r.at("s").get<int>() << "\n"
            << "witness: " << fmt_chain(r.at("witness")) << "\n";
}

void render_table(const json& r) {
  auto row = [](const std::string& label, const json& vals) {
    std::printf("%-24s", label.c_str());
    for (const auto& v : vals) std::printf("%4d", v.get<int>());
    std::printf("\n");
  };
  row("n", r.at("n"));
  row("chain lower bound", r.at("tschebotarow"));
  row("hilbert", r.at("hilbert"));
  std::cout << "note: " << r.at("annotations").at("wiman").get<std::string>() << "\n";
}

void render_monodromy(const json& r) {
  std::cout << "degree: " << r.at("degree").get<int>() << "\n"
            << "order: " << r.at("order").get<std::uint64_t>() << "\n"
            << "transitive: " << (r.at("transitive").get<bool>() ? "yes" : "no") << "\n"
            << "orbits: " << fmt_blocks(r.at("orbits")) << "\n";
  print_generators(r.at("generators"));
  std::cout << "basepoint: " << fmt_point(r.at("basepoint")) << "\n"
            << "loops: " << r.at("loop_count").get<std::size_t>()
            << (r.at("auto").get<bool>() ? " (auto)" : "") << "\n"
            << "seed: " << r.at("seed").get<std::uint64_t>() << "\n";
}

void render_inertia(const json& r) {
  std::cout << "point: " << fmt_point(r.at("point")) << "\n"
            << "pattern: " << fmt_blocks(r.at("pattern")) << "\n"
            << "class: " << fmt_class(r.at("class")) << "\n"
            << "order: " << r.at("order").get<std::uint64_t>() << "\n";
  print_generators(r.at("generators"));
  std::cout << "probes: " << r.at("probes").size() << "\n"
            << "seed: " << r.at("seed").get<std::uint64_t>() << "\n";
}

void render_phi(const json& r) {
  std::cout << "class: " << fmt_class(r.at("class")) << "\n"
            << "blocks: " << fmt_blocks(r.at("blocks")) << "\n"
            << "vanishes: " << (r.at("vanishes").get<bool>() ? "yes" : "no") << "\n"
            << "max |Phi|: " << sci(r.at("max_abs").get<double>()) << "\n"
            << "min |Phi|: " << sci(r.at("min_abs").get<double>()) << "\n"
            << "samples: " << r.at("samples").get<int>() << "\n"
            << "seed: " << r.at("seed").get<std::uint64_t>() << "\n";
}

void render_chain(const json& r) {
  std::cout << "points: " << r.at("points").size() << "\n";
  std::cout << "patterns:\n";
  for (const auto& p : r.at("patterns")) std::cout << "  " << fmt_blocks(p) << "\n";
  std::cout << "chain: " << fmt_chain(r.at("chain")) << "\n"
            << "kind: " << r.at("kind").get<std::string>() << "\n"
            << "length: " << r.at("length").get<int>() << "\n"
            << "lower bound: s >= " << r.at("lower_bound").get<int>() << "\n";
}

void render_transform(const json& r) {
  std::cout << "transformable: " << (r.at("transformable").get<bool>() ? "yes" : "no") << "\n"
            << "residual: " << sci(r.at("residual").get<double>()) << "\n";
  std::cout << "alphas:";
  for (const auto& a : r.at("alphas")) std::cout << " " << fmt_complex(a);
  std::cout << "\n";
  if (!r.at("alignment").is_null())
    std::cout << "alignment: " << fmt_cycles(r.at("alignment")) << "\n";
  std::cout << "invariant_ok: " << (r.at("invariant_ok").get<bool>() ? "yes" : "no") << "\n"
            << "u-drift: " << sci(r.at("u_drift").get<double>()) << "\n"
            << "seed: " << r.at("seed").get<std::uint64_t>() << "\n";
}

struct Cache {
  std::optional<std::filesystem::path> dir;

  std::optional<std::filesystem::path> file_for(const std::string& sub,
                                                const std::string& material) const {
    if (!dir) return std::nullopt;
    return *dir / (sub + "-" + hex16(fnv1a64(material)) + ".json");
  }

  static std::optional<std::string> load(const std::filesystem::path& f) {
    std::ifstream in(f, std::ios::binary);
    if (!in) return std::nullopt;
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
  }

  // Best effort write guarded by an exclusive lock file; a concurrent writer
  // simply wins and we skip.
  static void store(const std::filesystem::path& f, const std::string& text) {
    std::filesystem::path lock = f;
    lock += ".lock";
    int fd = ::open(lock.c_str(), O_CREAT | O_EXCL | O_WRONLY, 0644);
    if (fd < 0) return;
    ::close(fd);
    std::filesystem::path tmp = f;
    tmp += ".tmp";
    {
      std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
      out << text;
    }
    std::error_code ec;
    std::filesystem::rename(tmp, f, ec);
    if (ec) std::filesystem::remove(tmp, ec);
    std::filesystem::remove(lock, ec);
  }
};

struct Ctx {
  critmono_config cfg = critmono_default_config();
  bool json_out = false;
  Cache cache;

  // Returns the exit code. compute must fill *report on success.
  int run(const std::string& sub, const std::string& key_material,
          const std::function<critmono_status(char**, char**)>& compute,
          const std::function<void(const json&)>& render_text) const {
    std::string material = std::to_string(cfg.seed) + "\x1f" + sci(cfg.tol_residual) + "\x1f" +
                           sci(cfg.tol_cluster) + "\x1f" + sci(cfg.tol_safety) + "\x1f" +
                           critmono_version() + "\x1f" + key_material;
    auto cache_file = cache.file_for(sub, material);
    std::string report;
    bool have = false;
    if (cache_file) {
      if (auto cached = Cache::load(*cache_file)) {
        report = *cached;
        have = true;
      }
    }
    if (!have) {
      char* rep = nullptr;
      char* err = nullptr;
      critmono_status st = compute(&rep, &err);
      if (st != CRITMONO_OK) {
        std::cerr << "critmono: error: " << (err ? err : "unknown error") << "\n";
        critmono_free(err);
        critmono_free(rep);
        return static_cast<int>(st);
      }
      report = rep ? rep : "";
      critmono_free(rep);
      critmono_free(err);
      if (cache_file) Cache::store(*cache_file, report);
    }
    if (json_out) {
      std::cout << report << "\n";
    } else {
      render_text(json::parse(report));
    }
    return 0;
  }
};

// Owns a parsed family handle.
struct Family {
  critmono_family* h = nullptr;
  std::string text;
  ~Family() { critmono_family_destroy(h); }
  void parse(const std::string& path) {
    text = read_file(path);
    char* err = nullptr;
    critmono_status st = critmono_family_parse(text.c_str(), &h, &err);
    if (st != CRITMONO_OK) {
      std::string msg = err ? err : "cannot parse family";
      critmono_free(err);
      throw CliError(msg + " (" + path + ")");
    }
  }
};

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"critical manifolds, monodromy and resolvent bounds"};
  app.require_subcommand(1);
  app.fallthrough();

  Ctx ctx;
  std::string cache_dir;
  app.add_option("--seed", ctx.cfg.seed, "seed of the deterministic random streams");
  app.add_option("--tol-residual", ctx.cfg.tol_residual, "root certification tolerance");
  app.add_option("--tol-cluster", ctx.cfg.tol_cluster, "coincidence clustering tolerance");
  app.add_option("--tol-safety", ctx.cfg.tol_safety, "discriminant safety threshold");
  app.add_flag("--json", ctx.json_out, "print the raw JSON report");
  app.add_option("--cache-dir", cache_dir, "directory for cached reports");
  app.set_version_flag("--version", std::string(critmono_version()));

  auto* cmd_bound = app.add_subcommand("bound", "longest strictly increasing class chain");
  int bound_n = 0;
  std::string bound_kind = "alternating";
  cmd_bound->add_option("--n", bound_n, "degree")->required();
  cmd_bound->add_option("--kind", bound_kind, "alternating or symmetric");

  auto* cmd_table = app.add_subcommand("table", "computed bounds for n = 5..9 vs literature");

  auto* cmd_mono = app.add_subcommand("monodromy", "monodromy group at a basepoint");
  std::string mono_family, mono_loops, mono_base;
  bool mono_auto = false;
  cmd_mono->add_option("--family", mono_family, "family JSON file")->required();
  cmd_mono->add_option("--basepoint", mono_base, "basepoint JSON file")->required();
  auto* mono_loops_opt = cmd_mono->add_option("--loops", mono_loops, "loop list JSON file");
  auto* mono_auto_flag = cmd_mono->add_flag("--auto", mono_auto, "derive loops automatically");
  mono_loops_opt->excludes(mono_auto_flag);
  mono_auto_flag->excludes(mono_loops_opt);

  auto* cmd_inertia = app.add_subcommand("inertia", "inertia group at a critical point");
  std::string in_family, in_point;
  int in_probes = 0;
  cmd_inertia->add_option("--family", in_family, "family JSON file")->required();
  cmd_inertia->add_option("--point", in_point, "critical point JSON file")->required();
  cmd_inertia->add_option("--probes", in_probes, "number of probe loops (default 8)");

  auto* cmd_phi = app.add_subcommand("phi", "vanishing test of the constrained form product");
  std::string phi_family, phi_point, phi_class, phi_blocks, phi_base;
  int phi_samples = 0;
  cmd_phi->add_option("--family", phi_family, "family JSON file")->required();
  cmd_phi->add_option("--point", phi_point, "point JSON file")->required();
  cmd_phi->add_option("--class", phi_class, "cycle class, e.g. 3,1,1")->required();
  cmd_phi->add_option("--samples", phi_samples, "number of random samples (default 8)");
  cmd_phi->add_option("--blocks", phi_blocks, "symbol layout JSON file (optional)");
  cmd_phi->add_option("--basepoint", phi_base, "labeling basepoint JSON file (optional)");

  auto* cmd_chain = app.add_subcommand("chain", "chain certificate across critical points");
  std::string ch_family, ch_points;
  cmd_chain->add_option("--family", ch_family, "family JSON file")->required();
  cmd_chain->add_option("--points", ch_points, "point list JSON file")->required();

  auto* cmd_tr = app.add_subcommand("transform", "transformability along a parameter map");
  std::string tr_from, tr_to, tr_pmap, tr_base, tr_loops;
  cmd_tr->add_option("--from", tr_from, "source family JSON file")->required();
  cmd_tr->add_option("--to", tr_to, "target family JSON file")->required();
  cmd_tr->add_option("--pmap", tr_pmap, "parameter map JSON file")->required();
  cmd_tr->add_option("--basepoint", tr_base, "basepoint JSON file")->required();
  cmd_tr->add_option("--loops", tr_loops, "loop list JSON file")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << "critmono: error: " << e.what() << "\n";
    return 2;
  }

  try {
    if (!cache_dir.empty()) {
      ctx.cache.dir = std::filesystem::path(cache_dir);
      std::filesystem::create_directories(*ctx.cache.dir);
    }
    const critmono_config* cfg = &ctx.cfg;

    if (cmd_bound->parsed()) {
      return ctx.run(
          "bound", std::to_string(bound_n) + "\x1f" + bound_kind,
          [&](char** rep, char** err) {
            return critmono_bound(bound_n, bound_kind.c_str(), cfg, rep, err);
          },
          render_bound);
    }
    if (cmd_table->parsed()) {
      return ctx.run(
          "table", "",
          [&](char** rep, char** err) { return critmono_table(cfg, rep, err); }, render_table);
    }
    if (cmd_mono->parsed()) {
      if (!mono_auto && mono_loops.empty())
        throw CliError("monodromy needs either --loops or --auto");
      Family fam;
      fam.parse(mono_family);
      std::string base = read_file(mono_base);
      std::string loops = mono_loops.empty() ? "" : read_file(mono_loops);
      return ctx.run(
          "monodromy", fam.text + "\x1f" + base + "\x1f" + (mono_auto ? "auto" : loops),
          [&](char** rep, char** err) {
            return critmono_monodromy(fam.h, base.c_str(),
                                      mono_auto ? nullptr : loops.c_str(), cfg, rep, err);
          },
          render_monodromy);
    }
    if (cmd_inertia->parsed()) {
      Family fam;
      fam.parse(in_family);
      std::string point = read_file(in_point);
      return ctx.run(
          "inertia", fam.text + "\x1f" + point + "\x1f" + std::to_string(in_probes),
          [&](char** rep, char** err) {
            return critmono_inertia(fam.h, point.c_str(), in_probes, cfg, rep, err);
          },
          render_inertia);
    }
    if (cmd_phi->parsed()) {
      Family fam;
      fam.parse(phi_family);
      std::string point = read_file(phi_point);
      std::string blocks = phi_blocks.empty() ? "" : read_file(phi_blocks);
      std::string base = phi_base.empty() ? "" : read_file(phi_base);
      return ctx.run(
          "phi",
          fam.text + "\x1f" + point + "\x1f" + phi_class + "\x1f" +
              std::to_string(phi_samples) + "\x1f" + blocks + "\x1f" + base,
          [&](char** rep, char** err) {
            return critmono_phi_test(fam.h, point.c_str(), phi_class.c_str(), phi_samples,
                                     blocks.empty() ? nullptr : blocks.c_str(),
                                     base.empty() ? nullptr : base.c_str(), cfg, rep, err);
          },
          render_phi);
    }
    if (cmd_chain->parsed()) {
      Family fam;
      fam.parse(ch_family);
      std::string points = read_file(ch_points);
      return ctx.run(
          "chain", fam.text + "\x1f" + points,
          [&](char** rep, char** err) {
            return critmono_chain(fam.h, points.c_str(), cfg, rep, err);
          },
          render_chain);
    }
    if (cmd_tr->parsed()) {
      Family from, to;
      from.parse(tr_from);
      to.parse(tr_to);
      std::string pmap = read_file(tr_pmap);
      std::string base = read_file(tr_base);
      std::string loops = read_file(tr_loops);
      return ctx.run(
          "transform",
          from.text + "\x1f" + to.text + "\x1f" + pmap + "\x1f" + base + "\x1f" + loops,
          [&](char** rep, char** err) {
            return critmono_transform(from.h, to.h, pmap.c_str(), base.c_str(), loops.c_str(),
                                      cfg, rep, err);
          },
          render_transform);
    }
  } catch (const CliError& e) {
    std::cerr << "critmono: error: " << e.what() << "\n";
    return 2;
  } catch (const json::exception& e) {
    std::cerr << "critmono: error: invalid JSON: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "critmono: error: " << e.what() << "\n";
    return 3;
  }
  return 2;
}
