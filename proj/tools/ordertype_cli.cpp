// Command-line front end. Talks to the library exclusively through the C
// interface in ordertype.h.
#include <cstdint>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "ordertype.h"

using nlohmann::json;

namespace {

// exit codes: 0 ok, 1 below-target or failed verdict, 2 degenerate,
// 3 projection repair, 4 retries, 5 budget, 64 usage, 65 parse
int exit_code_of(ot_status st) {
  switch (st) {
    case OT_OK:
      return 0;
    case OT_ERR_DEGENERATE:
      return 2;
    case OT_ERR_REPAIR:
      return 3;
    case OT_ERR_RETRIES:
      return 4;
    case OT_ERR_BUDGET:
      return 5;
    case OT_ERR_PARSE:
      return 65;
    case OT_ERR_INVALID:
    case OT_ERR_INSUFFICIENT:
      return 64;
    default:
      return 70;
  }
}

int fail(ot_status st) {
  std::cerr << "error: " << ot_last_error() << "\n";
  return exit_code_of(st);
}

struct SeqDeleter {
  void operator()(ot_seq* s) const { ot_seq_free(s); }
};
struct ResultDeleter {
  void operator()(ot_result* r) const { ot_result_free(r); }
};
struct BoundDeleter {
  void operator()(ot_bound* b) const { ot_bound_free(b); }
};
using SeqPtr = std::unique_ptr<ot_seq, SeqDeleter>;
using ResultPtr = std::unique_ptr<ot_result, ResultDeleter>;
using BoundPtr = std::unique_ptr<ot_bound, BoundDeleter>;

std::string take_string(char* s) {
  std::string out = s ? s : "";
  ot_string_free(s);
  return out;
}

int load_seq(const std::string& path, SeqPtr& out) {
  std::ifstream in(path);
  if (!in.good()) {
    std::cerr << "error: cannot open '" << path << "'\n";
    return 65;
  }
  std::ostringstream buf;
  buf << in.rdbuf();
  ot_seq* raw = nullptr;
  ot_status st = ot_seq_parse(buf.str().c_str(), &raw);
  if (st != OT_OK) return fail(st);
  out.reset(raw);
  return 0;
}

int write_output(const std::string& text, const std::string& out_path) {
  if (out_path.empty()) {
    std::cout << text;
    return 0;
  }
  std::ofstream out(out_path, std::ios::binary);
  if (!out.good()) {
    std::cerr << "error: cannot write '" << out_path << "'\n";
    return 65;
  }
  out << text;
  return 0;
}

uint64_t budget_from_env() {
  const char* env = std::getenv("ORDERTYPE_BUDGET");
  if (!env || !*env) return 0;  // library default
  return std::strtoull(env, nullptr, 10);
}

std::string sign_text(int sign) { return sign >= 0 ? "+1" : "-1"; }

const char* gp_text(int state) {
  switch (state) {
    case 0:
      return "verified";
    case 1:
      return "unverified";
    default:
      return "degenerate";
  }
}

// --- gen -------------------------------------------------------------

int run_gen(const std::string& kind, size_t dim, size_t count, size_t n,
            uint64_t seed, const std::string& bound,
            const std::string& t_start, const std::string& t_step,
            const std::string& out_path) {
  ot_seq* raw = nullptr;
  ot_status st;
  if (kind == "moment")
    st = ot_gen_moment(dim, count, t_start.c_str(), t_step.c_str(), &raw);
  else if (kind == "es-monotone")
    st = ot_gen_es_monotone(n, &raw);
  else if (kind == "es-capcup")
    st = ot_gen_es_capcup(n, &raw);
  else
    st = ot_gen_random(dim, count, seed, bound.c_str(), &raw);
  if (st != OT_OK) return fail(st);
  SeqPtr seq(raw);

  char* text = nullptr;
  st = ot_seq_serialize(seq.get(), &text);
  if (st != OT_OK) return fail(st);
  return write_output(take_string(text), out_path);
}

// --- analyze ---------------------------------------------------------

int run_analyze(const std::string& file, bool as_json, unsigned threads) {
  SeqPtr seq;
  if (int rc = load_seq(file, seq)) return rc;
  ot_analysis a;
  ot_status st = ot_analyze(seq.get(), budget_from_env(), threads, &a);
  if (st != OT_OK) return fail(st);

  if (as_json) {
    json j = {{"dim", a.dim},
              {"points", a.n_points},
              {"general_position", gp_text(a.gp_state)},
              {"plus_tuples", a.plus_tuples},
              {"minus_tuples", a.minus_tuples},
              {"homogeneous", a.homogeneous != 0}};
    if (a.homogeneous) j["sign"] = a.sign;
    std::cout << j.dump() << "\n";
  } else {
    std::cout << "dim: " << a.dim << "\n"
              << "points: " << a.n_points << "\n"
              << "general-position: " << gp_text(a.gp_state) << "\n"
              << "+1: " << a.plus_tuples << "\n"
              << "-1: " << a.minus_tuples << "\n"
              << "homogeneous: "
              << (a.homogeneous ? "yes (" + sign_text(a.sign) + ")"
                                : std::string("no"))
              << "\n";
  }
  return 0;
}

// --- extract ---------------------------------------------------------

int run_extract(const std::string& file, size_t target,
                const std::string& algo, bool as_json) {
  SeqPtr seq;
  if (int rc = load_seq(file, seq)) return rc;

  ot_algo a = OT_ALGO_AUTO;
  if (algo == "brute")
    a = OT_ALGO_BRUTE;
  else if (algo == "monotone")
    a = OT_ALGO_MONOTONE;
  else if (algo == "cupcap")
    a = OT_ALGO_CUPCAP;
  else if (algo == "suk")
    a = OT_ALGO_SUK;

  ot_result* raw = nullptr;
  ot_status st = ot_extract(seq.get(), a, target, &raw);
  if (st != OT_OK) return fail(st);
  ResultPtr res(raw);

  size_t size = ot_result_size(res.get());
  std::vector<size_t> idx(size);
  for (size_t i = 0; i < size; ++i) idx[i] = ot_result_index(res.get(), i);

  if (as_json) {
    json j = {{"algorithm", ot_result_algorithm(res.get())},
              {"size", size},
              {"indices", idx},
              {"sign", ot_result_sign(res.get())},
              {"verified", ot_result_verified(res.get()) != 0},
              {"target", target}};
    std::cout << j.dump() << "\n";
  } else {
    std::cout << "algorithm: " << ot_result_algorithm(res.get()) << "\n"
              << "size: " << size << "\n"
              << "indices:";
    for (size_t i : idx) std::cout << ' ' << i;
    std::cout << "\n"
              << "sign: " << sign_text(ot_result_sign(res.get())) << "\n"
              << "verified: "
              << (ot_result_verified(res.get()) ? "yes" : "no") << "\n";
  }
  return size >= target ? 0 : 1;
}

// --- verify ----------------------------------------------------------

int run_verify(const std::string& file, const std::vector<size_t>& indices,
               bool convex, bool cyclic, bool as_json) {
  SeqPtr seq;
  if (int rc = load_seq(file, seq)) return rc;

  int hom = 0, sign = 0;
  char* cex = nullptr;
  ot_status st = ot_check_homogeneous(seq.get(), indices.data(),
                                      indices.size(), &hom, &sign, &cex);
  if (st != OT_OK) return fail(st);
  std::string counterexample = take_string(cex);

  int convex_ok = -1, cyclic_ok = -1;
  if (convex) {
    st = ot_check_convex_position(seq.get(), indices.data(), indices.size(),
                                  &convex_ok);
    if (st != OT_OK) return fail(st);
  }
  if (cyclic) {
    st = ot_check_cyclic_polytope(seq.get(), indices.data(), indices.size(),
                                  &cyclic_ok);
    if (st != OT_OK) return fail(st);
  }

  bool pass = hom != 0 && convex_ok != 0 && cyclic_ok != 0;
  if (as_json) {
    json j = {{"homogeneous", hom != 0}};
    if (hom)
      j["sign"] = sign;
    else
      j["counterexample"] = counterexample;
    if (convex) j["convex_position"] = convex_ok != 0;
    if (cyclic) j["cyclic_polytope"] = cyclic_ok != 0;
    j["pass"] = pass;
    std::cout << j.dump() << "\n";
  } else {
    std::cout << "homogeneous: "
              << (hom ? "yes (" + sign_text(sign) + ")"
                      : "no, " + counterexample)
              << "\n";
    if (convex)
      std::cout << "convex-position: " << (convex_ok ? "yes" : "no") << "\n";
    if (cyclic)
      std::cout << "cyclic-polytope: " << (cyclic_ok ? "yes" : "no") << "\n";
    std::cout << (pass ? "pass" : "fail") << "\n";
  }
  return pass ? 0 : 1;
}

// --- bound -----------------------------------------------------------

std::string known_results_row(unsigned long dim) {
  switch (dim) {
    case 1:
      return "known: threshold(1,n) = (n-1)^2 + 1, tight";
    case 2:
      return "known: threshold(2,n) = 2^Theta(n)";
    case 3:
      return "known: threshold(3,n) = 2^(2^Theta(n))";
    default:
      return "known: 2^(2^Omega(n)) <= threshold(" + std::to_string(dim) +
             ",n) <= twr_" + std::to_string(dim) + "(O(n))";
  }
}

int run_bound(unsigned long dim, unsigned long target, bool as_json) {
  ot_bound* raw = nullptr;
  ot_status st = ot_guarantee_threshold(dim, target, &raw);
  if (st != OT_OK) return fail(st);
  BoundPtr bound(raw);
  char* text = nullptr;
  st = ot_bound_render(bound.get(), &text);
  if (st != OT_OK) return fail(st);
  std::string rendered = take_string(text);

  if (as_json) {
    json j = {{"dim", dim},
              {"target", target},
              {"kind", ot_bound_kind(bound.get())},
              {"threshold", rendered},
              {"context", known_results_row(dim)}};
    std::cout << j.dump() << "\n";
  } else {
    std::cout << rendered << "\n" << known_results_row(dim) << "\n";
  }
  return 0;
}

// --- plot ------------------------------------------------------------

std::string fmt(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.6f", v);
  return buf;
}

int run_plot(const std::string& file, const std::string& out_path,
             const std::vector<size_t>& indices) {
  SeqPtr seq;
  if (int rc = load_seq(file, seq)) return rc;
  if (ot_seq_dim(seq.get()) != 2) {
    std::cerr << "error: plot requires dimension 2\n";
    return 64;
  }
  const size_t n = ot_seq_size(seq.get());
  std::vector<double> xs(n), ys(n);
  for (size_t i = 0; i < n; ++i) {
    if (ot_seq_coord_double(seq.get(), i, 0, &xs[i]) != OT_OK ||
        ot_seq_coord_double(seq.get(), i, 1, &ys[i]) != OT_OK)
      return fail(OT_ERR_INVALID);
  }
  for (size_t i : indices)
    if (i >= n) {
      std::cerr << "error: index " << i << " out of range\n";
      return 64;
    }

  double min_x = xs[0], max_x = xs[0], min_y = ys[0], max_y = ys[0];
  for (size_t i = 1; i < n; ++i) {
    min_x = std::min(min_x, xs[i]);
    max_x = std::max(max_x, xs[i]);
    min_y = std::min(min_y, ys[i]);
    max_y = std::max(max_y, ys[i]);
  }
  double span = std::max({max_x - min_x, max_y - min_y, 1.0});
  double margin = span * 0.1;
  double vb_x = min_x - margin;
  double vb_y = min_y - margin;
  double vb_w = (max_x - min_x) + 2 * margin;
  double vb_h = (max_y - min_y) + 2 * margin;
  double r = span * 0.012;
  double font = span * 0.035;

  // y is flipped so larger y renders upward
  auto flip = [&](double y) { return vb_y + vb_h - (y - vb_y); };

  std::ostringstream svg;
  svg << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" "
         "width=\"640\" height=\"640\" viewBox=\""
      << fmt(vb_x) << ' ' << fmt(vb_y) << ' ' << fmt(vb_w) << ' '
      << fmt(vb_h) << "\">\n";
  if (indices.size() >= 2) {
    svg << "  <polyline fill=\"none\" stroke=\"#d33\" stroke-width=\""
        << fmt(r * 0.6) << "\" points=\"";
    for (size_t k = 0; k < indices.size(); ++k) {
      if (k) svg << ' ';
      svg << fmt(xs[indices[k]]) << ',' << fmt(flip(ys[indices[k]]));
    }
    svg << "\"/>\n";
  }
  for (size_t i = 0; i < n; ++i) {
    svg << "  <circle cx=\"" << fmt(xs[i]) << "\" cy=\"" << fmt(flip(ys[i]))
        << "\" r=\"" << fmt(r) << "\" fill=\"#036\"/>\n"
        << "  <text x=\"" << fmt(xs[i] + 1.5 * r) << "\" y=\""
        << fmt(flip(ys[i]) - 1.5 * r) << "\" font-size=\"" << fmt(font)
        << "\" fill=\"#000\">" << i << "</text>\n";
  }
  svg << "</svg>\n";
  return write_output(svg.str(), out_path);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact order types, homogeneous subsequence extraction, and "
               "guarantee thresholds for point sequences in R^d"};
  app.require_subcommand(1);
  unsigned threads = 1;
  app.add_option("--threads", threads, "worker threads (results identical "
                 "for any value)")
      ->capture_default_str();

  // gen
  auto* gen = app.add_subcommand("gen", "generate a point sequence");
  gen->require_subcommand(1);
  size_t dim = 2, count = 0, n_target = 0;
  uint64_t seed = 0;
  std::string bound = "1000000", t_start = "1", t_step = "1", out_path;

  auto* gm = gen->add_subcommand("moment", "moment curve points");
  gm->add_option("--dim", dim, "dimension")->required();
  gm->add_option("--count", count, "number of points")->required();
  gm->add_option("--t-start", t_start, "first parameter value");
  gm->add_option("--t-step", t_step, "parameter increment");
  gm->add_option("--out", out_path, "output file (default stdout)");

  auto* ge = gen->add_subcommand(
      "es-monotone", "(n-1)^2 reals with no monotone n-subsequence");
  ge->add_option("--n", n_target, "forbidden subsequence length")->required();
  ge->add_option("--out", out_path, "output file (default stdout)");

  auto* gc = gen->add_subcommand(
      "es-capcup", "C(2n-4,n-2) planar points with no n-cup and no n-cap");
  gc->add_option("--n", n_target, "forbidden cup/cap length")->required();
  gc->add_option("--out", out_path, "output file (default stdout)");

  auto* gr = gen->add_subcommand("random", "seeded random integer points");
  gr->add_option("--dim", dim, "dimension")->required();
  gr->add_option("--count", count, "number of points")->required();
  gr->add_option("--seed", seed, "RNG seed")->required();
  gr->add_option("--bound", bound, "coordinate box [-B, B]");
  gr->add_option("--out", out_path, "output file (default stdout)");

  // analyze
  auto* an = app.add_subcommand("analyze", "order-type signature summary");
  std::string file;
  bool as_json = false;
  an->add_option("file", file, "input point file")->required();
  an->add_flag("--json", as_json, "machine-readable output");

  // extract
  auto* ex = app.add_subcommand("extract",
                                "find a homogeneous subsequence");
  size_t target = 0;
  std::string algo = "auto";
  ex->add_option("file", file, "input point file")->required();
  ex->add_option("--target", target, "requested subsequence length");
  ex->add_option("--algo", algo, "auto|brute|monotone|cupcap|suk")
      ->check(CLI::IsMember({"auto", "brute", "monotone", "cupcap", "suk"}))
      ->capture_default_str();
  ex->add_flag("--json", as_json, "machine-readable output");

  // verify
  auto* ve = app.add_subcommand("verify", "check a claimed index subset");
  std::vector<size_t> indices;
  bool convex = false, cyclic = false;
  ve->add_option("file", file, "input point file")->required();
  ve->add_option("--indices", indices, "0-based indices, comma-separated")
      ->required()
      ->delimiter(',');
  ve->add_flag("--convex", convex, "also check convex position");
  ve->add_flag("--cyclic", cyclic, "also check the evenness facet rule");
  ve->add_flag("--json", as_json, "machine-readable output");

  // bound
  auto* bo = app.add_subcommand("bound", "guarantee threshold for (d, n)");
  unsigned long bdim = 0, btarget = 0;
  bo->add_option("--dim", bdim, "dimension")->required();
  bo->add_option("--target", btarget, "subsequence length n")->required();
  bo->add_flag("--json", as_json, "machine-readable output");

  // plot
  auto* pl = app.add_subcommand("plot", "render a planar sequence as SVG");
  std::string svg_out;
  pl->add_option("file", file, "input point file")->required();
  pl->add_option("--out", svg_out, "output SVG path")->required();
  pl->add_option("--indices", indices, "highlighted subsequence")
      ->delimiter(',');

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? 0 : 64;
  }

  if (gen->parsed()) {
    std::string kind = gm->parsed()   ? "moment"
                       : ge->parsed() ? "es-monotone"
                       : gc->parsed() ? "es-capcup"
                                      : "random";
    return run_gen(kind, dim, count, n_target, seed, bound, t_start, t_step,
                   out_path);
  }
  if (an->parsed()) return run_analyze(file, as_json, threads);
  if (ex->parsed()) return run_extract(file, target, algo, as_json);
  if (ve->parsed()) return run_verify(file, indices, convex, cyclic, as_json);
  if (bo->parsed()) return run_bound(bdim, btarget, as_json);
  if (pl->parsed()) return run_plot(file, svg_out, indices);
  return 64;
}
