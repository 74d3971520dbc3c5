/*******************************************************************************
 * Copyright (c) 2026 The lincodes authors.                                    *
 * All rights reserved.                                                        *
 *                                                                             *
 * This source code and the accompanying materials are made available under    *
 * the terms of the Apache License 2.0 which accompanies this distribution.    *
 ******************************************************************************/
#include "cli.hpp"

#include "lincodes/channel.hpp"
#include "lincodes/code.hpp"
#include "lincodes/decoder.hpp"
#include "lincodes/ensemble.hpp"
#include "lincodes/errors.hpp"
#include "lincodes/kernels.hpp"

#include <CLI11.hpp>
#include <json.hpp>
#include <openssl/evp.h>

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <map>
#include <sstream>

#ifndef LINCODES_VERSION
#define LINCODES_VERSION "0.0.0"
#endif

namespace lincodes::cli {

namespace fs = std::filesystem;
using nlohmann::json;

namespace {

/// Bad input that got past flag parsing; maps to exit 1.
struct Usage {
  std::string what;
};

std::string real(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.12g", v);
  return buf;
}

std::string bool_str(bool b) { return b ? "true" : "false"; }

std::string read_file(const fs::path &p) {
  std::ifstream in(p, std::ios::binary);
  if (!in)
    throw Usage{"cannot read " + p.string()};
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file(const fs::path &p, const std::string &bytes) {
  std::ofstream out(p, std::ios::binary | std::ios::trunc);
  if (!out)
    throw Usage{"cannot write " + p.string()};
  out << bytes;
}

LinearCode load_code(const std::string &path) {
  return LinearCode::parse(read_file(path));
}

AdditiveChannel load_channel(const std::string &spec, std::ostream &err) {
  bool renorm = false;
  auto w = AdditiveChannel::parse(spec, &renorm);
  if (renorm)
    err << "warning: channel probabilities renormalised to sum to 1\n";
  return w;
}

void require_alphabet(const LinearCode &c, const AdditiveChannel &w) {
  if (c.q() != w.q())
    throw Usage{"channel alphabet size " + std::to_string(w.q()) +
                " does not match code field size " + std::to_string(c.q())};
}

std::vector<double> parse_list(const std::string &text) {
  std::vector<double> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    std::size_t used = 0;
    double v = 0.0;
    try {
      v = std::stod(item, &used);
    } catch (const std::exception &) {
      throw Usage{"not a number: '" + item + "'"};
    }
    if (used != item.size())
      throw Usage{"not a number: '" + item + "'"};
    out.push_back(v);
  }
  if (out.empty())
    throw Usage{"empty list"};
  return out;
}

json type_json(const std::optional<TypeVector> &t) {
  return t ? json(t->to_string()) : json(nullptr);
}

std::string pad_index(std::uint64_t i, std::uint64_t total) {
  const auto width = std::to_string(total).size();
  auto s = std::to_string(i);
  return std::string(width > s.size() ? width - s.size() : 0, '0') + s;
}

// ---------------------------------------------------------------------------
// ensemble build

struct BuildOptions {
  unsigned q = 2;
  std::size_t n = 0, k1 = 0, k2 = 0;
  std::string poly;
  bool transpose = false;
  std::string out;
};

int ensemble_build(const BuildOptions &o, const std::string &command_line,
                   std::ostream &out) {
  std::string dir = o.out;
  if (dir.empty()) {
    if (const char *env = std::getenv(kOutDirEnv))
      dir = env;
    else
      throw Usage{"--out not given and " + std::string(kOutDirEnv) +
                  " is not set"};
  }
  require_prime_modulus(o.q);
  const auto f = o.poly.empty() ? find_primitive_poly(o.q, o.n)
                                : MonicPolynomial::parse(o.poly, o.q);
  if (f.degree() != o.n)
    throw Usage{"polynomial degree " + std::to_string(f.degree()) +
                " differs from --n " + std::to_string(o.n)};
  auto t = companion_matrix(f);
  if (o.transpose)
    t = t.transpose();
  const auto ensemble = build_ensemble(t, o.k1, o.k2);

  fs::create_directories(dir);
  for (const auto &entry : fs::directory_iterator(dir)) {
    const auto name = entry.path().filename().string();
    if (name == "manifest.json" || name.ends_with(".code"))
      fs::remove(entry.path());
  }

  json files = json::array();
  const std::uint64_t total = ensemble.size();
  for (const auto &pair : ensemble) {
    const auto idx = pad_index(pair.index, total);
    for (int side = 1; side <= 2; ++side) {
      const auto name = "c" + std::to_string(side) + "_" + idx + ".code";
      const auto text = (side == 1 ? pair.c1 : pair.c2).to_text();
      write_file(fs::path(dir) / name, text);
      files.push_back({{"name", name}, {"sha256", sha256_hex(text)}});
    }
  }

  json manifest = {
      {"command", command_line},
      {"version", LINCODES_VERSION},
      {"seed", 0},
      {"parameters",
       {{"q", o.q},
        {"n", o.n},
        {"k1", o.k1},
        {"k2", o.k2},
        {"polynomial", f.to_csv_string()},
        {"transpose", o.transpose}}},
      {"members", total},
      {"files", files}};
  write_file(fs::path(dir) / "manifest.json", manifest.dump(2) + "\n");

  out << "polynomial: " << f.to_string() << "\n";
  out << "members: " << total << "\n";
  out << "directory: " << dir << "\n";
  return kExitOk;
}

// ---------------------------------------------------------------------------
// ensemble verify

struct LoadedEnsemble {
  unsigned q = 0;
  std::size_t n = 0;
  std::vector<LinearCode> c1, c2;
};

LoadedEnsemble load_ensemble(const std::string &dir) {
  const auto manifest = json::parse(read_file(fs::path(dir) / "manifest.json"),
                                    nullptr, false);
  if (manifest.is_discarded() || !manifest.contains("files"))
    throw Usage{"malformed manifest in " + dir};
  LoadedEnsemble e;
  e.q = manifest["parameters"]["q"].get<unsigned>();
  e.n = manifest["parameters"]["n"].get<std::size_t>();
  for (const auto &f : manifest["files"]) {
    const auto name = f["name"].get<std::string>();
    const auto text = read_file(fs::path(dir) / name);
    if (sha256_hex(text) != f["sha256"].get<std::string>())
      throw Usage{"digest mismatch for " + name};
    auto code = LinearCode::parse(text);
    (name.starts_with("c1_") ? e.c1 : e.c2).push_back(std::move(code));
  }
  if (e.c1.empty() || e.c1.size() != e.c2.size())
    throw Usage{"ensemble in " + dir + " is incomplete"};
  return e;
}

int ensemble_verify(const std::string &dir, int side, bool as_json,
                    std::ostream &out, std::ostream &err) {
  const auto e = load_ensemble(dir);
  const auto &codes = side == 1 ? e.c1 : e.c2;
  const auto &other = side == 1 ? e.c2 : e.c1;

  std::vector<std::string> failures;
  const auto balance = verify_balanced(codes);
  const auto balance_other = verify_balanced(other);
  if (!balance.balanced || !balance.pair_count_identity)
    failures.push_back("balancedness: some nonzero word is in " +
                       std::to_string(balance.witness_count) +
                       " codes, expected a constant count");
  if (!balance_other.balanced)
    failures.push_back("balancedness of the other side");

  std::size_t compatible = 0;
  for (std::size_t i = 0; i < e.c1.size(); ++i)
    compatible += is_compatible_pair(e.c1[i], e.c2[i]) ? 1 : 0;

  bool av_ok = false;
  if (balance.balanced) {
    const auto av = average_spectrum(codes);
    av_ok = av.identity_holds && av.upper_bound_holds;
    if (!av_ok)
      failures.push_back("average spectrum identity at type " +
                         type_json(av.first_mismatch).dump());
  }

  std::vector<CensusReport> census;
  if (balance.balanced) {
    const auto spectra = spectra_of(codes);
    for (int s = 0; s <= 10; ++s) {
      census.push_back(census_bad_codes(codes, spectra, s / 10.0));
      if (!census.back().within_bound)
        failures.push_back("bad-code census bound at epsilon " +
                           real(s / 10.0));
    }
  }

  if (as_json) {
    out << json{{"side", side},
                {"members", codes.size()},
                {"balanced", balance.balanced},
                {"V", balance.v},
                {"V_other", balance_other.v},
                {"pair_count_identity", balance.pair_count_identity},
                {"average_spectrum_identity", av_ok},
                {"compatible_pairs", compatible}}
               .dump()
        << "\n";
    for (const auto &c : census)
      out << json{{"epsilon", std::stod(real(c.epsilon))},
                  {"bad_count", c.bad_count},
                  {"z", c.z}}
                 .dump()
          << "\n";
  } else {
    out << "side: " << side << "\n";
    out << "members: " << codes.size() << "\n";
    out << "balanced: " << bool_str(balance.balanced) << "\n";
    out << "V = " << balance.v << "\n";
    out << "V_other = " << balance_other.v << "\n";
    out << "pair_count_identity: " << bool_str(balance.pair_count_identity)
        << "\n";
    out << "average_spectrum_identity: " << bool_str(av_ok) << "\n";
    out << "compatible_pairs: " << compatible << "/" << e.c1.size() << "\n";
    out << "epsilon,bad_count,z\n";
    for (const auto &c : census)
      out << real(c.epsilon) << "," << c.bad_count << "," << c.z << "\n";
  }
  if (!failures.empty()) {
    for (const auto &f : failures)
      err << "violated: " << f << "\n";
    return kExitViolation;
  }
  return kExitOk;
}

// ---------------------------------------------------------------------------
// spectrum, exponent

int spectrum_cmd(const std::string &path, bool nonzero, bool as_json,
                 std::ostream &out) {
  const auto c = load_code(path);
  auto s = spectrum(c);
  if (nonzero)
    s = s.without_zero_word();
  if (as_json) {
    for (std::size_t i = 0; i < s.types().size(); ++i)
      out << json{{"type", s.types()[i].to_string()}, {"count", s.counts()[i]}}
                 .dump()
          << "\n";
  } else {
    out << s.to_csv();
  }
  return kExitOk;
}

int exponent_cmd(unsigned q, const std::string &channel,
                 const std::string &rates, unsigned resolution, bool bits,
                 bool as_json, std::ostream &out, std::ostream &err) {
  const auto w = load_channel(channel, err);
  if (w.q() != q)
    throw Usage{"--q " + std::to_string(q) + " but the channel has " +
                std::to_string(w.q()) + " symbols"};
  const double scale = bits ? std::log2(static_cast<double>(q)) : 1.0;
  if (!as_json)
    out << (bits ? "r,Er_bits,minimizer\n" : "r,Er,minimizer\n");
  for (double r : parse_list(rates)) {
    const auto e = random_coding_exponent(w, r, resolution);
    const double v = e.value * scale;
    if (as_json)
      out << json{{"r", r},
                  {bits ? "Er_bits" : "Er", v},
                  {"minimizer", e.minimizer.to_string()}}
                 .dump()
          << "\n";
    else
      out << real(r) << "," << real(v) << ",\"" << e.minimizer.to_string()
          << "\"\n";
  }
  return kExitOk;
}

// ---------------------------------------------------------------------------
// bound, decode-sim, lemma-gen-check, pair-check

std::optional<double> exact_if_feasible(const LinearCode &c,
                                        const AdditiveChannel &w) {
  if (checked_pow(c.q(), static_cast<unsigned>(c.n())) > kSweepCap)
    return std::nullopt;
  return exact_error_probability(RepresentativeTable::build(c), w);
}

int bound_cmd(const std::string &path, const std::string &channel,
              double epsilon, unsigned resolution, std::ostream &out,
              std::ostream &err) {
  if (!(epsilon >= 0.0))
    throw Usage{"--epsilon must be >= 0"};
  const auto c = load_code(path);
  const auto w = load_channel(channel, err);
  require_alphabet(c, w);
  const unsigned n = static_cast<unsigned>(c.n());
  const double types = type_count_real(n, c.q());
  const double a_n =
      std::pow(double(c.q()), epsilon * n) * std::max(1.0, types - 1.0);
  const auto s = spectrum(c);
  const auto b = rcex_error_bound(s, c.k(), w, a_n, resolution);
  const double inner =
      good_code_error_bound(n, c.q(), b.exponent.value, epsilon);
  const auto good =
      is_a_good(s, c.k(), GoodnessFactor::q_power(c.q(), epsilon * n));
  const auto exact = exact_if_feasible(c, w);

  out << json{{"n", n},
              {"k", c.k()},
              {"q", c.q()},
              {"rate", b.rate},
              {"epsilon", epsilon},
              {"Er", b.exponent.value},
              {"minimizer", b.exponent.minimizer.to_string()},
              {"a_n", a_n},
              {"premise_holds", b.premise.holds},
              {"premise_witness", type_json(b.premise.witness)},
              {"premise_ratio", b.premise.ratio},
              {"tight_a_n", tight_premise_factor(s, c.k())},
              {"good", good.good},
              {"raw", b.raw},
              {"bound", b.bound},
              {"bound_inner", inner},
              {"error_probability", exact ? json(*exact) : json(nullptr)}}
             .dump()
      << "\n";

  if (exact && b.premise.holds && *exact > b.bound) {
    err << "violated: error probability " << real(*exact)
        << " > a_n |P_n|^2 q^{-n Er} = " << real(b.bound) << "\n";
    return kExitViolation;
  }
  if (exact && good.good && *exact > inner) {
    err << "violated: error probability " << real(*exact)
        << " > |P_n|^3 q^{-n (Er - eps)} = " << real(inner) << "\n";
    return kExitViolation;
  }
  return kExitOk;
}

int decode_sim_cmd(const std::string &path, const std::string &channel,
                   std::uint64_t trials, std::uint64_t seed, std::ostream &out,
                   std::ostream &err) {
  const auto c = load_code(path);
  const auto w = load_channel(channel, err);
  require_alphabet(c, w);
  const auto tbl = RepresentativeTable::build(c);
  auto r = simulate_error_probability(tbl, w, trials, seed);
  const auto s = spectrum(c);
  const double a_n = tight_premise_factor(s, c.k());
  r.bound = rcex_error_bound(s, c.k(), w, a_n).bound;

  out << json{{"exact", r.exact ? json(*r.exact) : json(nullptr)},
              {"estimate", r.estimate},
              {"trials", r.trials},
              {"failures", r.failures},
              {"seed", r.seed},
              {"std_error", r.std_error},
              {"bound", *r.bound},
              {"a_n", a_n}}
             .dump()
      << "\n";
  if (r.exact && *r.exact > *r.bound) {
    err << "violated: error probability " << real(*r.exact)
        << " > a_n |P_n|^2 q^{-n Er} = " << real(*r.bound) << "\n";
    return kExitViolation;
  }
  return kExitOk;
}

int lemma_gen_cmd(const std::string &path, const std::string &channel,
                  std::optional<double> t_param, std::ostream &out,
                  std::ostream &err) {
  const auto c = load_code(path);
  const auto w = load_channel(channel, err);
  require_alphabet(c, w);
  if (c.n() > 6)
    throw Usage{"lemma-gen-check enumerates all n! permutations; n <= 6"};
  const double t = t_param.value_or(1.0 - c.rate());
  const double a_n = tight_permutation_factor(c, t);
  std::vector<Rational> law;
  for (double p : w.error_law().probs())
    law.emplace_back(p); // exact binary value of the double
  const auto rep = permuted_failure_average_product<Rational>(c, law, a_n, t);

  out << json{{"n", c.n()},
              {"k", c.k()},
              {"T", t},
              {"a_n", a_n},
              {"lhs", static_cast<double>(rep.lhs)},
              {"lhs_exact", rep.lhs.str()},
              {"rhs", rep.rhs},
              {"holds", rep.holds},
              {"premise_holds", rep.premise_holds},
              {"premise_witness", type_json(rep.premise_witness)},
              {"orbit_identity_holds", rep.orbit_identity_holds},
              {"orbit_bound_holds", rep.orbit_bound_holds},
              {"pointwise_bound_holds", rep.pointwise_bound_holds}}
             .dump()
      << "\n";

  int code = kExitOk;
  auto fail = [&](bool ok, const char *what) {
    if (!ok) {
      err << "violated: " << what << "\n";
      code = kExitViolation;
    }
  };
  fail(rep.premise_holds, "M_Q(C \\ {0}) <= a_n q^{-nT} |T_Q|");
  fail(rep.orbit_identity_holds, "|T_Q| cnt_Q = n! M_Q(C \\ {0})");
  fail(rep.orbit_bound_holds, "cnt_Q / n! <= a_n q^{-nT}");
  fail(rep.pointwise_bound_holds, "pointwise failure bound");
  fail(rep.holds, "permutation average <= a_n |P_n| sum_Q P(T_Q) "
                  "q^{-n|T - H(Q)|^+}");
  return code;
}

int pair_check_cmd(const std::string &p1, const std::string &p2,
                   std::ostream &out, std::ostream &err) {
  const auto c1 = load_code(p1);
  const auto c2 = load_code(p2);
  if (c1.n() != c2.n() || c1.q() != c2.q())
    throw Usage{"codes differ in length or field"};
  const bool ok = is_compatible_pair(c1, c2);
  out << "compatible: " << bool_str(ok) << "\n";
  if (!ok) {
    err << "violated: dual of C2 is not contained in C1\n";
    return kExitViolation;
  }
  return kExitOk;
}

std::string join(const std::vector<std::string> &args) {
  std::string s = "lincodes";
  for (const auto &a : args)
    s += " " + a;
  return s;
}

} // namespace

std::string sha256_hex(const std::string &bytes) {
  unsigned char md[EVP_MAX_MD_SIZE];
  unsigned int len = 0;
  EVP_Digest(bytes.data(), bytes.size(), md, &len, EVP_sha256(), nullptr);
  static const char *hex = "0123456789abcdef";
  std::string out;
  for (unsigned i = 0; i < len; ++i) {
    out.push_back(hex[md[i] >> 4]);
    out.push_back(hex[md[i] & 15]);
  }
  return out;
}

int run(const std::vector<std::string> &args, std::ostream &out,
        std::ostream &err) {
  CLI::App app{"Linear codes over prime fields: balanced ensembles, type "
               "spectra, error exponents and minimum entropy decoding.",
               "lincodes"};
  app.require_subcommand(1);
  bool as_json = false;
  int threads = 0;
  app.add_flag("--json", as_json, "Tabular output as JSON lines");
  app.add_option("--threads", threads, "Worker threads (0 = runtime default)")
      ->check(CLI::NonNegativeNumber);
  app.set_version_flag("--version", LINCODES_VERSION);

  // ensemble build / verify
  auto *ens = app.add_subcommand("ensemble", "Companion-matrix ensembles");
  ens->require_subcommand(1);
  ens->fallthrough();
  BuildOptions bo;
  auto *build = ens->add_subcommand("build", "Write the ensemble to a directory");
  build->add_option("--q", bo.q, "Field size (prime)")->required();
  build->add_option("--n", bo.n, "Block length")->required();
  build->add_option("--k1", bo.k1, "Dimension of the first codes")->required();
  build->add_option("--k2", bo.k2, "Dimension of the second codes")->required();
  build->add_option("--poly", bo.poly,
                    "Monic polynomial, coefficients low to high, e.g. 1,1,0,0,1");
  build->add_flag("--transpose", bo.transpose, "Use the transposed companion matrix");
  build->add_option("--out", bo.out, std::string("Output directory (default $") +
                                         kOutDirEnv + ")");
  build->fallthrough();

  std::string verify_dir;
  int side = 1;
  auto *verify = ens->add_subcommand("verify", "Check balance, average spectrum and census");
  verify->add_option("dir", verify_dir, "Directory written by ensemble build")
      ->required();
  verify->add_option("--side", side, "Which codes to census (1 or 2)")
      ->check(CLI::IsMember({1, 2}));
  verify->fallthrough();

  std::string code_path, channel, c1_path, c2_path;

  bool nonzero = false;
  auto *spec = app.add_subcommand("spectrum", "Type spectrum of a code as CSV");
  spec->add_option("--code", code_path, "Code file")->required();
  spec->add_flag("--nonzero", nonzero, "Exclude the zero word");
  spec->fallthrough();

  unsigned q = 2, resolution = 64;
  std::string rates;
  bool bits = false;
  auto *expo = app.add_subcommand("exponent", "Random coding exponent table");
  expo->add_option("--q", q, "Alphabet size")->required();
  expo->add_option("--channel", channel, "Noise law p0,...,p_{q-1}")->required();
  expo->add_option("--r", rates, "Comma-separated rates")->required();
  expo->add_option("--resolution", resolution, "Type grid used as seed")
      ->check(CLI::Range(1u, 4096u));
  expo->add_flag("--bits", bits, "Report exponents in bits");
  expo->fallthrough();

  double epsilon = 0.0;
  auto *bnd = app.add_subcommand("bound", "Error-probability bound for a code");
  bnd->add_option("--code", code_path, "Code file")->required();
  bnd->add_option("--channel", channel, "Noise law")->required();
  bnd->add_option("--epsilon", epsilon, "Goodness exponent")->required();
  bnd->add_option("--resolution", resolution, "Type grid used as seed")
      ->check(CLI::Range(1u, 4096u));
  bnd->fallthrough();

  std::uint64_t trials = 0, seed = 0;
  auto *sim = app.add_subcommand("decode-sim", "Monte-Carlo decoding error rate");
  sim->add_option("--code", code_path, "Code file")->required();
  sim->add_option("--channel", channel, "Noise law")->required();
  sim->add_option("--trials", trials, "Number of trials")->required();
  sim->add_option("--seed", seed, "64-bit seed")->required();
  sim->fallthrough();

  std::optional<double> t_param;
  auto *gen = app.add_subcommand("lemma-gen-check",
                                 "Exhaustive permutation-average check");
  gen->add_option("--code", code_path, "Code file")->required();
  gen->add_option("--channel", channel, "Noise law")->required();
  gen->add_option("--t", t_param, "T parameter (default 1 - k/n)");
  gen->fallthrough();

  auto *pair = app.add_subcommand("pair-check", "Is C2's dual contained in C1?");
  pair->add_option("--c1", c1_path, "First code file")->required();
  pair->add_option("--c2", c2_path, "Second code file")->required();
  pair->fallthrough();

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp &e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp &e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForVersion &e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError &e) {
    app.exit(e, out, err);
    err << app.help();
    return kExitUsage;
  }

  if (threads > 0)
    kernels::set_num_threads(threads);

  try {
    if (*build)
      return ensemble_build(bo, join(args), out);
    if (*verify)
      return ensemble_verify(verify_dir, side, as_json, out, err);
    if (*spec)
      return spectrum_cmd(code_path, nonzero, as_json, out);
    if (*expo)
      return exponent_cmd(q, channel, rates, resolution, bits, as_json, out,
                          err);
    if (*bnd)
      return bound_cmd(code_path, channel, epsilon, resolution, out, err);
    if (*sim)
      return decode_sim_cmd(code_path, channel, trials, seed, out, err);
    if (*gen)
      return lemma_gen_cmd(code_path, channel, t_param, out, err);
    if (*pair)
      return pair_check_cmd(c1_path, c2_path, out, err);
  } catch (const Usage &e) {
    err << "error: " << e.what << "\n";
    return kExitUsage;
  } catch (const Error &e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const fs::filesystem_error &e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  err << app.help();
  return kExitUsage;
}

} // namespace lincodes::cli
