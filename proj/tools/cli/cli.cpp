// Copyright 2026 The tlhad Authors
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

#include "cli.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <functional>
#include <limits>
#include <iostream>
#include <iterator>
#include <sstream>

#include "CLI11.hpp"
#include "tlhad/baxter.hpp"
#include "tlhad/hadamard.hpp"
#include "tlhad/json_io.hpp"
#include "tlhad/master.hpp"
#include "tlhad/tlrep.hpp"

namespace tlhad::cli {

namespace {

using io::Json;

struct Outcome {
  Json body;
  bool passed = true;
};

using Action = std::function<Outcome()>;

double parse_real(std::string_view s) {
  while (!s.empty() && s.front() == ' ') s.remove_prefix(1);
  while (!s.empty() && s.back() == ' ') s.remove_suffix(1);
  if (!s.empty() && s.front() == '+') s.remove_prefix(1);
  double x = 0.0;
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), x);
  if (s.empty() || ec != std::errc{} || ptr != s.data() + s.size() || !std::isfinite(x)) {
    throw FormatError("not a finite real number: '" + std::string(s) + "'");
  }
  return x;
}

// "re" or "re,im".
Complex parse_complex(const std::string& text) {
  const auto comma = text.find(',');
  if (comma == std::string::npos) return {parse_real(text), 0.0};
  const std::string_view view(text);
  return {parse_real(view.substr(0, comma)), parse_real(view.substr(comma + 1))};
}

std::vector<Complex> parse_complexes(const std::vector<std::string>& items) {
  std::vector<Complex> out;
  out.reserve(items.size());
  for (const auto& s : items) out.push_back(parse_complex(s));
  return out;
}

class Inputs {
 public:
  explicit Inputs(std::istream& in) : in_(in) {}

  Json json(const std::string& path) {
    if (path == "-") {
      if (stdin_used_) throw FormatError("stdin can back only one input");
      stdin_used_ = true;
      return io::parse(std::string(std::istreambuf_iterator<char>(in_), {}));
    }
    std::ifstream file(path);
    if (!file) throw FormatError("cannot open '" + path + "'");
    std::ostringstream text;
    text << file.rdbuf();
    return io::parse(text.str());
  }

  Matrix matrix(const std::string& path) { return io::matrix_from_json(json(path)); }
  MasterSpec spec(const std::string& path) { return io::master_spec_from_json(json(path)); }
  NestingSpec nesting(const std::string& path) { return io::nesting_spec_from_json(json(path)); }
  TLAnsatz ansatz(const std::string& path) { return io::ansatz_from_json(json(path)); }
  BraidData braid(const std::string& path) { return io::braid_from_json(json(path)); }

 private:
  std::istream& in_;
  bool stdin_used_ = false;
};

Json verdict_json(const HadamardVerdict& v) {
  Json out = Json::object();
  out["is_chm"] = v.is_chm;
  out["is_ghm"] = v.is_ghm;
  out["butson_order"] = v.butson_order ? Json(*v.butson_order) : Json(nullptr);
  out["max_residual"] = io::real_to_json(v.max_residual);
  if (!v.reason.empty()) out["reason"] = v.reason;
  return out;
}

// max(| |u_ij| - 1 |, |U U^† - n I|); infinite for non-square input.
double chm_residual(const Matrix& u) {
  if (!u.is_square() || u.empty()) return std::numeric_limits<double>::infinity();
  double worst = 0.0;
  for (const Complex& z : u.entries()) worst = std::max(worst, std::abs(std::abs(z) - 1.0));
  const auto n = static_cast<double>(u.rows());
  return std::max(worst, max_abs_diff(u * adjoint(u), Matrix::identity(u.rows()) * n));
}

Json spec_or_matrix(const MasterSpec& spec, bool as_matrix) {
  return as_matrix ? io::matrix_to_json(master_matrix(spec)) : io::master_spec_to_json(spec);
}

struct Options {
  double tol = 1e-9;
  std::uint64_t seed = 42;
  std::string out;

  std::int64_t n = 0, ell = 1, k = 1, m = 1, r = 1, s = 1, q = 0;
  std::string a, b;
  std::string matrix, spec, ansatz, braid, p, h, a_file;
  std::vector<std::string> blocks, v, w;
  std::string alpha;
  bool as_matrix = false, as_ansatz = false;
  std::size_t sites = 0, site = 1, samples = 20;
  std::int64_t exponent_bound = 12, root_bound = 12;
};

class Dispatcher {
 public:
  Dispatcher(std::istream& in) : inputs_(in) {}

  void install(CLI::App& app) {
    app.add_option("--tol", o_.tol, "Absolute residual tolerance")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
    app.add_option("--seed", o_.seed, "Seed for randomized checks")->capture_default_str();
    app.add_option("--out", o_.out, "Write JSON here instead of stdout");
    app.require_subcommand(1);
    // Global flags are accepted after the verb too.
    app.fallthrough();
    install_gen(*app.add_subcommand("gen", "Generate matrices and master specs"));
    install_check(*app.add_subcommand("check", "Verify a relation; exit 1 on failure"));
    install_build(*app.add_subcommand("build", "Build TL, braid and R operators"));
    install_search(*app.add_subcommand("search", "Bounded searches"));
  }

  const Action& action() const { return action_; }
  const Options& options() const { return o_; }

 private:
  CLI::App* verb(CLI::App& parent, const std::string& name, const std::string& help,
                 Action act) {
    auto* sub = parent.add_subcommand(name, help);
    sub->callback([this, act = std::move(act)] { action_ = act; });
    return sub;
  }

  TLAnsatz ansatz_with_sites() {
    TLAnsatz a = inputs_.ansatz(o_.ansatz);
    return o_.sites ? a.with_sites(o_.sites) : a;
  }

  BraidData braid_source() {
    if (!o_.braid.empty() == !o_.ansatz.empty()) {
      throw FormatError("give exactly one of --braid or --ansatz");
    }
    if (!o_.braid.empty()) return inputs_.braid(o_.braid);
    // No loop-relation gate here: the checks report it as a Hecke residual.
    const TLAnsatz a = inputs_.ansatz(o_.ansatz);
    return braid_from_tl(build_local_generator(a), a.alpha(),
                         std::numeric_limits<double>::infinity());
  }

  void install_gen(CLI::App& gen) {
    gen.require_subcommand(1);
    auto* fourier_cmd = verb(gen, "fourier", "Fourier matrix F_n^(l)", [this] {
      return Outcome{io::matrix_to_json(fourier(o_.n, o_.ell))};
    });
    fourier_cmd->add_option("--n", o_.n)->required();
    fourier_cmd->add_option("--ell", o_.ell)->capture_default_str();

    verb(gen, "f4", "One-parameter 4x4 family", [this] {
      return Outcome{io::matrix_to_json(f4_family(parse_complex(o_.a)))};
    })->add_option("--a", o_.a, "re or re,im")->required();

    auto* f6 = verb(gen, "f6", "Two-parameter 6x6 family", [this] {
      return Outcome{io::matrix_to_json(f6_family(parse_complex(o_.a), parse_complex(o_.b)))};
    });
    f6->add_option("--a", o_.a)->required();
    f6->add_option("--b", o_.b)->required();

    auto* dita_cmd = verb(gen, "dita", "Block matrix A_ij B^(i)", [this] {
      const Matrix a = inputs_.matrix(o_.a_file);
      std::vector<Matrix> bs;
      for (const auto& path : o_.blocks) bs.push_back(inputs_.matrix(path));
      return Outcome{io::matrix_to_json(dita(a, bs))};
    });
    dita_cmd->add_option("--a", o_.a_file, "Outer matrix JSON")->required();
    dita_cmd->add_option("--block", o_.blocks, "Block matrix JSON, once per row of A")
        ->required();

    auto* nest_cmd = verb(gen, "nest", "Iterated Fourier nesting", [this] {
      return Outcome{spec_or_matrix(nest(inputs_.nesting(o_.spec)), o_.as_matrix)};
    });
    nest_cmd->add_option("--spec", o_.spec, "Nesting spec JSON")->required();
    nest_cmd->add_flag("--matrix", o_.as_matrix, "Emit the master matrix");

    verb(gen, "h0", "6x6 CHM that is not a master matrix",
         [] { return Outcome{io::matrix_to_json(h0())}; });
    verb(gen, "h1", "6x6 one-parameter family", [this] {
      return Outcome{io::matrix_to_json(h1(parse_complex(o_.a)))};
    })->add_option("--a", o_.a)->required();

    for (int which : {1, 2}) {
      auto* fx = verb(gen, which == 1 ? "fixture-u1" : "fixture-u2",
                      which == 1 ? "Weighted 9x9 TL generator" : "Plain 9x9 TL generator",
                      [this, which] {
                        if (o_.as_ansatz) {
                          const std::size_t sites = o_.sites ? o_.sites : 3;
                          return Outcome{io::ansatz_to_json(
                              which == 1 ? fixture_u1_ansatz(sites) : fixture_u2_ansatz(sites))};
                        }
                        return Outcome{io::matrix_to_json(which == 1 ? fixture_u1() : fixture_u2())};
                      });
      fx->add_flag("--ansatz", o_.as_ansatz, "Emit the generating ansatz instead");
      fx->add_option("--sites", o_.sites, "Sites for --ansatz (default 3)");
    }

    auto* mf = verb(gen, "master-fourier", "Fourier master spec", [this] {
      return Outcome{spec_or_matrix(fourier_master(o_.n, o_.ell), o_.as_matrix)};
    });
    mf->add_option("--n", o_.n)->required();
    mf->add_option("--ell", o_.ell)->capture_default_str();
    mf->add_flag("--matrix", o_.as_matrix, "Emit the master matrix");

    auto* m4 = verb(gen, "master-f4", "Master spec of the 4x4 family", [this] {
      return Outcome{spec_or_matrix(f4_master(o_.k, o_.m), o_.as_matrix)};
    });
    m4->add_option("--k", o_.k)->required();
    m4->add_option("--m", o_.m, "Odd")->required();
    m4->add_flag("--matrix", o_.as_matrix, "Emit the master matrix");

    auto* m6 = verb(gen, "master-f6", "Master spec of the 6x6 family", [this] {
      return Outcome{spec_or_matrix(f6_master(o_.k, o_.r, o_.s), o_.as_matrix)};
    });
    m6->add_option("--k", o_.k)->required();
    m6->add_option("--r", o_.r)->required();
    m6->add_option("--s", o_.s)->required();
    m6->add_flag("--matrix", o_.as_matrix, "Emit the master matrix");
  }

  void install_check(CLI::App& check) {
    check.require_subcommand(1);

    verb(check, "chm", "Complex Hadamard", [this] {
      const Matrix u = inputs_.matrix(o_.matrix);
      Outcome res;
      res.passed = is_chm(u, o_.tol);
      res.body = Json::object();
      res.body["passed"] = res.passed;
      res.body["max_residual"] = io::real_to_json(chm_residual(u));
      res.body["tol"] = o_.tol;
      return res;
    })->add_option("--matrix", o_.matrix)->required();

    verb(check, "ghm", "Generalized Hadamard", [this] {
      const HadamardVerdict v = is_ghm(inputs_.matrix(o_.matrix), o_.tol);
      Outcome res{verdict_json(v), v.is_ghm};
      res.body["passed"] = res.passed;
      res.body["tol"] = o_.tol;
      return res;
    })->add_option("--matrix", o_.matrix)->required();

    auto* butson = verb(check, "butson", "Butson type of order q", [this] {
      const Matrix u = inputs_.matrix(o_.matrix);
      Outcome res;
      res.passed = is_butson(u, o_.q, o_.tol);
      res.body = Json::object();
      res.body["passed"] = res.passed;
      res.body["q"] = o_.q;
      res.body["chm_residual"] = io::real_to_json(chm_residual(u));
      res.body["tol"] = o_.tol;
      return res;
    });
    butson->add_option("--matrix", o_.matrix)->required();
    butson->add_option("--q", o_.q)->required();

    verb(check, "master", "Master condition", [this] {
      const MasterCheck mc = check_master_condition(inputs_.spec(o_.spec), o_.tol);
      Outcome res;
      res.passed = mc.passed;
      res.body = Json::object();
      res.body["passed"] = mc.passed;
      res.body["n"] = mc.n;
      res.body["max_residual"] = io::real_to_json(mc.max_residual);
      res.body["tol"] = o_.tol;
      return res;
    })->add_option("--spec", o_.spec, "Master spec JSON")->required();

    auto* m4 = verb(check, "master4", "Factorized TL condition for eigenvectors P", [this] {
      const Matrix p = inputs_.matrix(o_.p);
      const MasterSpec spec = inputs_.spec(o_.spec);
      const Master4Report rep =
          (o_.v.empty() && o_.w.empty())
              ? check_master4(p, spec.lambdas(), spec.exponents(), o_.tol)
              : check_master4_weighted(p, spec.lambdas(), spec.exponents(),
                                       weights(o_.v, spec.size()), weights(o_.w, spec.size()),
                                       o_.tol);
      Outcome res;
      res.passed = rep.passed;
      res.body = Json::object();
      res.body["passed"] = rep.passed;
      res.body["max_residual"] = io::real_to_json(rep.max_residual);
      res.body["worst"] = rep.worst;
      res.body["tol"] = o_.tol;
      return res;
    });
    m4->add_option("--p", o_.p, "Eigenvector matrix JSON")->required();
    m4->add_option("--spec", o_.spec, "Master spec JSON")->required();
    m4->add_option("--v", o_.v, "Weights v_a (re or re,im)");
    m4->add_option("--w", o_.w, "Weights w_a (re or re,im)");

    auto* tl = verb(check, "tl", "TL relations on N sites", [this] {
      const TLAnsatz a = ansatz_with_sites();
      const TLReport rep = verify_tl(a);
      Outcome res{io::tl_report_to_json(rep, o_.tol), rep.passed(o_.tol)};
      res.body["sites"] = a.sites();
      res.body["local_dim"] = a.local_dim();
      return res;
    });
    tl->add_option("--ansatz", o_.ansatz, "TL ansatz JSON")->required();
    tl->add_option("--sites", o_.sites, "Override the ansatz site count");

    auto* hecke = verb(check, "hecke", "Hecke condition and inverse identity", [this] {
      const BraidData b = braid_source();
      const Matrix id = Matrix::identity(b.r_check.rows());
      const double inv = max_abs_diff(inverse(b.r_check), b.r_check - id * omega_of(b.q));
      Outcome res;
      res.passed = b.hecke_residual <= o_.tol && inv <= o_.tol;
      res.body = Json::object();
      res.body["q"] = io::complex_to_json(b.q);
      res.body["nu"] = io::complex_to_json(b.nu);
      res.body["hecke_residual"] = io::real_to_json(b.hecke_residual);
      res.body["inverse_residual"] = io::real_to_json(inv);
      res.body["passed"] = res.passed;
      res.body["tol"] = o_.tol;
      return res;
    });
    braid_inputs(*hecke);

    auto* braid = verb(check, "braid", "Constant braided YBE", [this] {
      const BraidData b = braid_source();
      const double r = check_braid(b.r_check, b.local_dim);
      Outcome res;
      res.passed = r <= o_.tol;
      res.body = Json::object();
      res.body["braid_residual"] = io::real_to_json(r);
      res.body["passed"] = res.passed;
      res.body["tol"] = o_.tol;
      return res;
    });
    braid_inputs(*braid);

    auto* ybe = verb(check, "ybe", "Constant and spectral Yang-Baxter equations", [this] {
      const BraidData b = braid_source();
      const auto samples = default_spectral_samples(o_.seed, o_.samples);
      const double braid_r = check_braid(b.r_check, b.local_dim);
      const double plain_r = check_ybe(to_plain_r(b), b.local_dim);
      const double spectral = check_spectral_ybe(b, samples);
      Json sample_json = Json::array();
      for (const auto& [u, w] : samples) {
        sample_json.push_back(Json::array({io::complex_to_json(u), io::complex_to_json(w)}));
      }
      Outcome res;
      res.passed = b.hecke_residual <= o_.tol && braid_r <= o_.tol && plain_r <= o_.tol &&
                   spectral <= 10.0 * o_.tol;
      res.body = Json::object();
      res.body["q"] = io::complex_to_json(b.q);
      res.body["nu"] = io::complex_to_json(b.nu);
      res.body["hecke_residual"] = io::real_to_json(b.hecke_residual);
      res.body["braid_residual"] = io::real_to_json(braid_r);
      res.body["ybe_residual"] = io::real_to_json(plain_r);
      res.body["spectral_worst"] = io::real_to_json(spectral);
      res.body["spectral_tol"] = 10.0 * o_.tol;
      res.body["seed"] = o_.seed;
      res.body["samples"] = std::move(sample_json);
      res.body["passed"] = res.passed;
      res.body["tol"] = o_.tol;
      return res;
    });
    braid_inputs(*ybe);
    ybe->add_option("--samples", o_.samples, "Number of (u, w) pairs")->capture_default_str();

    auto* wh = verb(check, "weighted-hadamard", "Weighted Hadamard condition on the master matrix",
                    [this] {
                      const MasterSpec spec = inputs_.spec(o_.spec);
                      const auto v = weights(o_.v, spec.size());
                      const auto w = weights(o_.w, spec.size());
                      Complex alpha{};
                      for (std::size_t i = 0; i < v.size(); ++i) alpha += v[i] * w[i];
                      if (!o_.alpha.empty()) alpha = parse_complex(o_.alpha);
                      const auto rep =
                          weighted_hadamard_check(master_matrix(spec), v, w, alpha, o_.tol);
                      Outcome res;
                      res.passed = rep.passed;
                      res.body = Json::object();
                      res.body["alpha"] = io::complex_to_json(alpha);
                      res.body["max_residual"] = io::real_to_json(rep.residual);
                      res.body["passed"] = rep.passed;
                      res.body["tol"] = o_.tol;
                      return res;
                    });
    wh->add_option("--spec", o_.spec, "Master spec JSON")->required();
    wh->add_option("--v", o_.v, "Weights v_a (default all ones)");
    wh->add_option("--w", o_.w, "Weights w_a (default all ones)");
    wh->add_option("--alpha", o_.alpha, "Override alpha = sum v_a w_a");
  }

  void install_build(CLI::App& build) {
    build.require_subcommand(1);

    verb(build, "tl-local", "Two-site TL generator", [this] {
      return Outcome{io::matrix_to_json(build_local_generator(inputs_.ansatz(o_.ansatz)))};
    })->add_option("--ansatz", o_.ansatz)->required();

    auto* emb = verb(build, "tl-embedded", "TL generator T_i on N sites", [this] {
      const TLAnsatz a = ansatz_with_sites();
      return Outcome{io::matrix_to_json(
          embed(build_local_generator(a), o_.site, a.sites(), a.local_dim()))};
    });
    emb->add_option("--ansatz", o_.ansatz)->required();
    emb->add_option("--site", o_.site, "1-based site i")->capture_default_str();
    emb->add_option("--sites", o_.sites, "Override the ansatz site count");

    verb(build, "braid", "Hecke braid generator from a TL ansatz", [this] {
      const TLAnsatz a = inputs_.ansatz(o_.ansatz);
      return Outcome{io::braid_to_json(braid_from_tl(build_local_generator(a), a.alpha(), o_.tol))};
    })->add_option("--ansatz", o_.ansatz)->required();

    auto* rm = verb(build, "rmatrix", "Plain R = flip * braid generator",
                    [this] { return Outcome{io::matrix_to_json(to_plain_r(braid_source()))}; });
    braid_inputs(*rm);

    auto* rec = verb(build, "reconstruct-m", "TL ansatz from a master spec and H", [this] {
      const MasterSpec spec = inputs_.spec(o_.spec);
      const Matrix m = reconstruct_m(master_matrix(spec), inputs_.matrix(o_.h), spec.lambdas());
      const TLAnsatz a(m, std::vector<std::int64_t>(spec.exponents().begin(), spec.exponents().end()),
                       {}, {}, o_.sites ? o_.sites : 3);
      return Outcome{io::ansatz_to_json(a)};
    });
    rec->add_option("--spec", o_.spec, "Master spec JSON")->required();
    rec->add_option("--hadamard", o_.h, "Eigenvector Hadamard matrix JSON")->required();
    rec->add_option("--sites", o_.sites, "Site count recorded in the ansatz (default 3)");
  }

  void install_search(CLI::App& search) {
    search.require_subcommand(1);
    auto* rep = verb(search, "master-rep", "Find lambda, n with Omega(lambda, n) = U", [this] {
      const auto found = search_master_representation(inputs_.matrix(o_.matrix),
                                                      o_.exponent_bound, o_.root_bound, o_.tol);
      Outcome res;
      res.passed = found.has_value();
      res.body = Json::object();
      res.body["found"] = res.passed;
      res.body["spec"] = found ? io::master_spec_to_json(*found) : Json(nullptr);
      res.body["exponent_bound"] = o_.exponent_bound;
      res.body["root_order_bound"] = o_.root_bound;
      return res;
    });
    rep->add_option("--matrix", o_.matrix)->required();
    rep->add_option("--exponent-bound", o_.exponent_bound)->capture_default_str();
    rep->add_option("--root-bound", o_.root_bound)->capture_default_str();
  }

  void braid_inputs(CLI::App& sub) {
    auto* b = sub.add_option("--braid", o_.braid, "Braid data JSON");
    auto* a = sub.add_option("--ansatz", o_.ansatz, "TL ansatz JSON");
    b->excludes(a);
  }

  static std::vector<Complex> weights(const std::vector<std::string>& items, std::size_t n) {
    if (items.empty()) return std::vector<Complex>(n, Complex{1.0});
    auto out = parse_complexes(items);
    if (out.size() != n) {
      throw FormatError("expected " + std::to_string(n) + " weights, got " +
                        std::to_string(out.size()));
    }
    return out;
  }

  Inputs inputs_;
  Options o_;
  Action action_;
};

}  // namespace

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
        std::ostream& err) {
  CLI::App app{"Temperley-Lieb representations from generalized Hadamard data", "tlhad"};
  Dispatcher dispatcher(in);
  dispatcher.install(app);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kPass;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kPass;
  } catch (const CLI::ParseError& e) {
    err << "tlhad: " << e.what() << "\n";
    return kUsageError;
  }

  Outcome result;
  try {
    result = dispatcher.action()();
  } catch (const Error& e) {
    err << "tlhad: " << e.what() << "\n";
    return kUsageError;
  } catch (const Json::exception& e) {
    err << "tlhad: " << e.what() << "\n";
    return kUsageError;
  }

  const std::string text = io::dump(result.body);
  const std::string& path = dispatcher.options().out;
  if (path.empty()) {
    out << text;
  } else {
    std::ofstream file(path, std::ios::binary | std::ios::trunc);
    if (!(file << text)) {
      err << "tlhad: cannot write '" << path << "'\n";
      return kUsageError;
    }
  }
  if (!result.passed) err << "tlhad: check failed\n";
  return result.passed ? kPass : kCheckFailed;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  std::istringstream empty;
  return run(args, empty, out, err);
}

}  // namespace tlhad::cli
