// hyperricci: generate hypergraphs and compute their curvatures.

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <iterator>
#include <mutex>
#include <optional>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "hyperricci/families.hpp"
#include "hyperricci/io.hpp"
#include "hyperricci/kantorovich.hpp"
#include "hyperricci/laplacian.hpp"
#include "hyperricci/resolvent.hpp"
#include "hyperricci/transport.hpp"
#include "hyperricci/two_level.hpp"

namespace hr = hyperricci;
using json = nlohmann::ordered_json;

namespace {

constexpr int kExitRowError = 1;
constexpr int kExitInvalidInput = 2;

struct Config {
  std::string input = "-";
  std::string output = "-";
  std::string format = "csv";
  std::vector<std::string> pair;
  bool all = false;
  std::vector<std::string> methods;
  std::string lambdas;
  double tol = 1e-3;
  std::uint64_t seed = 0;
  int samples = 200;
  int threads = 0;  // 0: hardware concurrency
  // gen
  std::string family;
  int n = 0;
  int A = 0;
  int B = 0;
  double w_ev = 1.0;
  double w_e = 1.0;
  double w = 1.0;
};

std::string fmt(double v) {
  if (std::isnan(v)) return "";
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.12g", v);
  return buf;
}

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\r\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

// A table of string cells; numbers are kept as doubles so JSON stays typed.
struct Cell {
  std::optional<double> number;
  std::string text;
  bool null = false;
};

Cell num(double v) { return std::isnan(v) ? Cell{std::nullopt, "", true} : Cell{v, "", false}; }
Cell str(std::string s) { return Cell{std::nullopt, std::move(s), false}; }
Cell none() { return Cell{std::nullopt, "", true}; }

struct Table {
  std::vector<std::string> columns;
  std::vector<std::vector<Cell>> rows;

  void write(std::ostream& out, const std::string& format) const {
    if (format == "json") {
      json arr = json::array();
      for (const auto& row : rows) {
        json obj = json::object();
        for (std::size_t i = 0; i < columns.size(); ++i) {
          const Cell& c = row[i];
          if (c.null) obj[columns[i]] = nullptr;
          else if (c.number) obj[columns[i]] = *c.number;
          else obj[columns[i]] = c.text;
        }
        arr.push_back(obj);
      }
      out << arr.dump(2) << "\n";
      return;
    }
    for (std::size_t i = 0; i < columns.size(); ++i) out << (i ? "," : "") << csv_field(columns[i]);
    out << "\r\n";
    for (const auto& row : rows) {
      for (std::size_t i = 0; i < row.size(); ++i) {
        const Cell& c = row[i];
        out << (i ? "," : "") << csv_field(c.null ? "" : c.number ? fmt(*c.number) : c.text);
      }
      out << "\r\n";
    }
  }
};

hr::Hypergraph load(const std::string& path) {
  if (path == "-" || path.empty()) {
    std::string text((std::istreambuf_iterator<char>(std::cin)), std::istreambuf_iterator<char>());
    return hr::parse(text);
  }
  return hr::read_file(path);
}

void emit(const Config& cfg, const std::string& text) {
  if (cfg.output == "-" || cfg.output.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(cfg.output, std::ios::binary);
  if (!out) throw hr::Error("cannot open output file " + cfg.output);
  out << text;
}

int resolve_vertex(const hr::Hypergraph& h, const std::string& label) {
  if (auto v = h.find_vertex(label)) return *v;
  try {
    std::size_t used = 0;
    int v = std::stoi(label, &used);
    if (used == label.size() && v >= 0 && v < h.num_vertices()) return v;
  } catch (const std::exception&) {
  }
  throw hr::ValidationError("unknown vertex '" + label + "'");
}

std::vector<std::pair<int, int>> pairs_of(const hr::Hypergraph& h, const Config& cfg) {
  std::vector<std::pair<int, int>> out;
  if (cfg.all) {
    for (int a = 0; a < h.num_vertices(); ++a)
      for (int b = a + 1; b < h.num_vertices(); ++b) out.emplace_back(a, b);
    return out;
  }
  if (cfg.pair.size() != 2) throw hr::ValidationError("give --pair <x> <y> or --all");
  int x = resolve_vertex(h, cfg.pair[0]);
  int y = resolve_vertex(h, cfg.pair[1]);
  if (x == y) throw hr::ValidationError("--pair needs two distinct vertices");
  out.emplace_back(x, y);
  return out;
}

std::vector<double> parse_lambdas(const std::string& text) {
  if (text.empty()) return hr::kDefaultSchedule;
  std::vector<double> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    std::size_t used = 0;
    double v = std::stod(item, &used);
    if (used != item.size() || !(v > 0.0)) throw hr::ValidationError("bad lambda '" + item + "'");
    out.push_back(v);
  }
  if (out.empty()) throw hr::ValidationError("empty lambda list");
  return out;
}

int cmd_info(const Config& cfg) {
  auto h = load(cfg.input);
  Table t;
  t.columns = {"vertex", "name", "degree"};
  for (int v = 0; v < h.num_vertices(); ++v) t.rows.push_back({num(v), str(h.name(v)), num(h.degree(v))});
  std::ostringstream out;
  if (cfg.format == "json") {
    json j;
    j["vertices"] = h.num_vertices();
    j["hyperedges"] = h.num_edges();
    j["volume"] = h.volume();
    j["diameter"] = h.diameter();
    j["is_graph"] = h.is_graph();
    json deg = json::array();
    for (int v = 0; v < h.num_vertices(); ++v) deg.push_back({{"vertex", v}, {"name", h.name(v)}, {"degree", h.degree(v)}});
    j["degrees"] = deg;
    out << j.dump(2) << "\n";
  } else {
    out << "vertices " << h.num_vertices() << "\n"
        << "hyperedges " << h.num_edges() << "\n"
        << "volume " << fmt(h.volume()) << "\n"
        << "diameter " << h.diameter() << "\n";
    for (int v = 0; v < h.num_vertices(); ++v) out << "degree " << h.name(v) << " " << fmt(h.degree(v)) << "\n";
  }
  emit(cfg, out.str());
  return 0;
}

int cmd_gen(const Config& cfg) {
  hr::FamilySpec spec;
  spec.family = hr::parse_family(cfg.family);
  spec.n = cfg.n;
  spec.A = cfg.A;
  spec.B = cfg.B;
  spec.w_ev = cfg.w_ev;
  spec.w_e = cfg.w_e;
  spec.w = cfg.w;
  emit(cfg, hr::serialize(hr::generate(spec)));
  return 0;
}

// Runs fn(i) for i < count on a few worker threads; results keep index order.
template <class Fn>
auto ordered_parallel(std::size_t count, int threads, Fn fn) {
  using Result = decltype(fn(std::size_t{0}));
  std::vector<Result> out(count);
  std::size_t workers = threads > 0 ? static_cast<std::size_t>(threads) : std::max(1u, std::thread::hardware_concurrency());
  workers = std::min(workers, count);
  std::atomic<std::size_t> next{0};
  std::exception_ptr first_error;
  std::mutex error_lock;
  auto work = [&] {
    for (std::size_t i; (i = next.fetch_add(1)) < count;) {
      try {
        out[i] = fn(i);
      } catch (...) {
        std::lock_guard<std::mutex> g(error_lock);
        if (!first_error) first_error = std::current_exception();
      }
    }
  };
  std::vector<std::thread> pool;
  for (std::size_t k = 1; k < workers; ++k) pool.emplace_back(work);
  work();
  for (auto& t : pool) t.join();
  if (first_error) std::rethrow_exception(first_error);
  return out;
}

bool wants(const Config& cfg, const std::string& m) {
  if (cfg.methods.empty()) return true;
  return std::find(cfg.methods.begin(), cfg.methods.end(), m) != cfg.methods.end();
}

int cmd_curvature(const Config& cfg) {
  auto h = load(cfg.input);
  auto pairs = pairs_of(h, cfg);
  hr::KappaOptions kopt;
  kopt.schedule = parse_lambdas(cfg.lambdas);
  kopt.stabilization = cfg.tol;
  kopt.search.seed = cfg.seed;

  Table t;
  t.columns = {"x", "y", "d", "kappa_lly", "kappa_iktu", "kappa_wiktu", "C", "pairing_constant",
               "stabilization_lambda", "certificates", "error"};
  auto rows = ordered_parallel(pairs.size(), cfg.threads, [&](std::size_t i) {
    auto [x, y] = pairs[i];
    double lly = NAN, iktu = NAN, wiktu = NAN, c = NAN, pairing = NAN, lambda = NAN;
    std::vector<std::string> certs;
    std::vector<std::string> errors;
    auto guarded = [&](const char* what, auto&& fn) {
      try {
        fn();
      } catch (const hr::Error& e) {
        errors.push_back(std::string(what) + ": " + e.what());
      }
    };
    auto run_kappa = [&](hr::KappaVariant variant, double& slot, const char* tag) {
      auto rep = hr::kappa(h, x, y, variant, kopt);
      slot = rep.kappa;
      pairing = rep.pairing_constant;
      lambda = rep.lambda;
      double gap = 0.0, stat = 0.0;
      for (const auto& row : rep.rows) {
        gap = std::max(gap, row.prox_gap);
        stat = std::max(stat, row.stationarity);
      }
      certs.push_back(std::string(tag) + "_prox_gap=" + fmt(gap));
      certs.push_back(std::string(tag) + "_stationarity=" + fmt(stat));
    };
    if (wants(cfg, "lly") && h.is_graph()) {
      guarded("lly", [&] {
        auto rep = hr::lly_report(h, x, y);
        lly = rep.value;
        certs.push_back("lly_lambda=" + fmt(rep.lambda));
      });
    }
    if (wants(cfg, "iktu")) guarded("iktu", [&] { run_kappa(hr::KappaVariant::Iktu, iktu, "iktu"); });
    if (wants(cfg, "wiktu")) guarded("wiktu", [&] { run_kappa(hr::KappaVariant::Wiktu, wiktu, "wiktu"); });
    if (wants(cfg, "c")) {
      guarded("c", [&] {
        if (hr::two_level_supported(h)) {
          c = hr::c_two_level(h, x, y).value;
          certs.push_back("c=exact");
        } else {
          auto g = hr::c_generic(h, x, y, 64, cfg.seed);
          c = g.value;
          certs.push_back(g.upper_bound ? "c=upper_bound" : "c=cross_checked");
        }
      });
    }
    std::string cert_text, err_text;
    for (const auto& s : certs) cert_text += (cert_text.empty() ? "" : ";") + s;
    for (const auto& s : errors) err_text += (err_text.empty() ? "" : "; ") + s;
    return std::make_pair(std::vector<Cell>{str(h.name(x)), str(h.name(y)), num(h.distance(x, y)), num(lly), num(iktu),
                                            num(wiktu), num(c), num(pairing), num(lambda), str(cert_text),
                                            err_text.empty() ? none() : str(err_text)},
                          !errors.empty());
  });
  bool failed = false;
  for (auto& [row, bad] : rows) {
    failed = failed || bad;
    t.rows.push_back(std::move(row));
  }
  std::ostringstream out;
  t.write(out, cfg.format);
  emit(cfg, out.str());
  return failed ? kExitRowError : 0;
}

int cmd_probe(const Config& cfg) {
  auto h = load(cfg.input);
  auto pairs = pairs_of(h, cfg);
  auto lambdas = parse_lambdas(cfg.lambdas);
  hr::KdOptions kopt;
  kopt.seed = cfg.seed;

  Table t;
  t.columns = {"x", "y", "lambda", "psi_inf_over_lambda", "samples", "distinct_vertices", "kd", "wkd",
               "kd_minus_wkd", "pairing_constant", "error"};
  auto blocks = ordered_parallel(pairs.size(), cfg.threads, [&](std::size_t pi) {
    auto [x, y] = pairs[pi];
    std::vector<std::vector<Cell>> rows;
    bool failed = false;
    std::vector<hr::LiminfRow> probe;
    std::string probe_error;
    try {
      probe = hr::probe_liminf(h, x, y, lambdas, cfg.samples, cfg.seed);
    } catch (const hr::Error& e) {
      probe_error = e.what();
    }
    for (std::size_t i = 0; i < lambdas.size(); ++i) {
      double lambda = lambdas[i];
      std::vector<Cell> row{str(h.name(x)), str(h.name(y)), num(lambda)};
      if (i < probe.size()) {
        row.push_back(num(probe[i].infimum));
        row.push_back(num(probe[i].samples));
        row.push_back(num(probe[i].distinct_vertices));
      } else {
        row.insert(row.end(), {none(), none(), none()});
      }
      std::string err = probe_error;
      try {
        auto k = hr::kd(h, x, y, lambda, kopt);
        auto w = hr::wkd(h, x, y, lambda, kopt);
        double pc = hr::pairing(h, hr::laplacian_l0(h, hr::from_potential(h, w.potential)).value, x, y);
        row.insert(row.end(), {num(k.value), num(w.value), num(k.value - w.value), num(pc)});
      } catch (const hr::Error& e) {
        row.insert(row.end(), {none(), none(), none(), none()});
        err += (err.empty() ? "" : "; ") + std::string(e.what());
      }
      if (!err.empty()) failed = true;
      row.push_back(err.empty() ? none() : str(err));
      rows.push_back(std::move(row));
    }
    return std::make_pair(std::move(rows), failed);
  });
  bool failed = false;
  for (auto& [rows, bad] : blocks) {
    failed = failed || bad;
    for (auto& row : rows) t.rows.push_back(std::move(row));
  }
  std::ostringstream out;
  t.write(out, cfg.format);
  emit(cfg, out.str());
  return failed ? kExitRowError : 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Discrete Ricci curvatures of weighted hypergraphs"};
  app.require_subcommand(1);
  Config cfg;

  auto add_io = [&](CLI::App* sub) {
    sub->add_option("-i,--input", cfg.input, "hypergraph file, '-' for stdin")->capture_default_str();
    sub->add_option("-o,--output", cfg.output, "output file, '-' for stdout")->capture_default_str();
    sub->add_option("--format", cfg.format, "csv or json")->check(CLI::IsMember({"csv", "json"}))->capture_default_str();
  };
  auto add_pairs = [&](CLI::App* sub) {
    sub->add_option("--pair", cfg.pair, "vertex pair by name or index")->expected(2);
    sub->add_flag("--all", cfg.all, "every unordered pair");
    sub->add_option("--lambdas", cfg.lambdas, "comma separated lambda schedule");
    sub->add_option("--seed", cfg.seed, "random seed")->capture_default_str();
    sub->add_option("--threads", cfg.threads, "worker threads, 0 for one per core")->check(CLI::NonNegativeNumber);
  };

  auto* info = app.add_subcommand("info", "summary of a hypergraph file");
  add_io(info);

  auto* gen = app.add_subcommand("gen", "write a family member in the file format");
  gen->add_option("family", cfg.family, "kn, cn, khn, r1, fig1, fig2, fig3")->required();
  gen->add_option("--n", cfg.n, "vertex count for kn, cn, khn, r1");
  gen->add_option("--A", cfg.A, "p-vertex count for fig families");
  gen->add_option("--B", cfg.B, "q-vertex count for fig families");
  gen->add_option("--w-ev", cfg.w_ev, "weight of the covering hyperedge")->capture_default_str();
  gen->add_option("--w-e", cfg.w_e, "weight of the second hyperedge")->capture_default_str();
  gen->add_option("--w", cfg.w, "weight of the r1 hyperedge")->capture_default_str();
  gen->add_option("-o,--output", cfg.output, "output file, '-' for stdout")->capture_default_str();

  auto* curvature = app.add_subcommand("curvature", "curvature table, one row per pair");
  add_io(curvature);
  add_pairs(curvature);
  curvature->add_option("--method", cfg.methods, "lly, iktu, wiktu, c (repeatable; default all)")
      ->delimiter(',')
      ->check(CLI::IsMember({"lly", "iktu", "wiktu", "c"}));
  curvature->add_option("--tol", cfg.tol, "stabilization threshold for kappa")->check(CLI::PositiveNumber)
      ->capture_default_str();

  auto* probe = app.add_subcommand("probe", "liminf probe and KD - wKD gap per lambda");
  add_io(probe);
  add_pairs(probe);
  probe->add_option("--samples", cfg.samples, "sampled potentials per pair")->check(CLI::PositiveNumber)
      ->capture_default_str();
  probe->add_option("--tol", cfg.tol, "unused by probe; accepted for symmetry")->check(CLI::PositiveNumber);

  CLI11_PARSE(app, argc, argv);

  try {
    if (*info) return cmd_info(cfg);
    if (*gen) return cmd_gen(cfg);
    if (*curvature) return cmd_curvature(cfg);
    if (*probe) return cmd_probe(cfg);
  } catch (const hr::ValidationError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInvalidInput;
  } catch (const hr::ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInvalidInput;
  } catch (const hr::InvalidSpec& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInvalidInput;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitRowError;
  }
  return 0;
}
