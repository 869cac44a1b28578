// braidsurf command-line tool.
//
// Computes the surface-counting invariants P_k of a closed braid, runs the
// independent HOMFLY-PT skein evaluator, cross-verifies the two against each
// other, dumps state censuses, and drives randomized identity campaigns.
//
// Exit codes: 0 success, 1 verification failure or counterexample,
// 2 usage/parse error, 3 resource bound exceeded.

#include "braidsurf/braid.hpp"
#include "braidsurf/invariant.hpp"
#include "braidsurf/oracle.hpp"
#include "braidsurf/random.hpp"
#include "braidsurf/serialize.hpp"

#include "CLI11.hpp"

#include <cstdint>
#include <iostream>
#include <sstream>
#include <string>

namespace {

using namespace braidsurf;

struct CommonOpts {
  std::string braid;
  int strands = 0;  // 0 = infer from letters
  bool json = false;
  int max_arrows = 20;
  int workers = 1;
};

void add_common(CLI::App* cmd, CommonOpts& o, bool with_workers = true) {
  cmd->add_option("--braid", o.braid, "braid word as signed generator indices, e.g. \"1 -2 1\"");
  cmd->add_option("--strands", o.strands, "strand count (default: max generator + 1)");
  cmd->add_flag("--json", o.json, "emit JSON instead of text");
  cmd->add_option("--max-arrows", o.max_arrows, "refuse words with more letters than this")
      ->default_val(20);
  if (with_workers)
    cmd->add_option("--workers", o.workers, "enumeration worker threads")->default_val(1);
}

BraidWord load_word(const CommonOpts& o) {
  const BraidWord w =
      o.strands > 0 ? parse_braid(o.braid, o.strands) : parse_braid(o.braid);
  if (static_cast<int>(w.letters.size()) > o.max_arrows)
    throw ResourceLimitError("braid has " + std::to_string(w.letters.size()) +
                             " letters, --max-arrows is " + std::to_string(o.max_arrows));
  return w;
}

std::string describe(const BraidWord& w) {
  return (w.letters.empty() ? std::string("(empty)") : format_braid(w)) +
         "  strands=" + std::to_string(w.strands);
}

int run_invariant(const CommonOpts& o, int k) {
  const BraidWord w = load_word(o);
  BraidInvariants eng(gauss_from_braid(w), o.workers);
  const InvariantReport rep = eng.report(k);
  if (o.json) {
    Json out = to_json(rep);
    out["braid"] = format_braid(w);
    std::cout << out.dump(2) << "\n";
    return 0;
  }
  std::cout << "braid: " << describe(w) << "  components=" << rep.components
            << "  writhe=" << rep.writhe << "\n";
  for (const auto& [j, val] : rep.weights)
    std::cout << "f_" << j << "^(" << k << ") = " << val.str() << "\n";
  if (rep.counts.empty()) {
    std::cout << "D_{n," << k << ",j}: all zero\n";
  } else {
    std::cout << "D_{n," << k << ",j} (nonzero):\n";
    int last_n = rep.counts.begin()->first.first - 1;
    for (const auto& [key, val] : rep.counts) {
      if (key.first != last_n) {
        std::cout << (last_n >= rep.counts.begin()->first.first ? "\n" : "") << "  n=" << key.first << ":";
        last_n = key.first;
      }
      std::cout << "  j=" << key.second << " -> " << val.str();
    }
    std::cout << "\n";
  }
  std::cout << "P_" << k << " = " << rep.polynomial.str() << "\n";
  return 0;
}

int run_oracle(const CommonOpts& o, int k, bool k_given, int max_letters) {
  const BraidWord w = o.strands > 0 ? parse_braid(o.braid, o.strands) : parse_braid(o.braid);
  const HomflyOracle oracle(max_letters);
  if (!k_given) {
    const LaurentPoly2 p = oracle.homfly(w);
    if (o.json) {
      std::cout << Json({{"braid", format_braid(w)}, {"homfly", to_json(p)}, {"homfly_str", p.str()}}).dump(2)
                << "\n";
    } else {
      std::cout << "braid: " << describe(w) << "\n";
      std::cout << "HOMFLY = " << p.str() << "\n";
    }
    return 0;
  }
  const LaurentPoly1 d = oracle.homfly_derivative(w, k);
  if (o.json) {
    std::cout << Json({{"braid", format_braid(w)}, {"k", k}, {"derivative", to_json(d)}, {"derivative_str", d.str()}})
                     .dump(2)
              << "\n";
  } else {
    std::cout << "braid: " << describe(w) << "\n";
    std::cout << "PP_" << k << " = " << d.str() << "  (z^k d^k/da^k HOMFLY at a=1)\n";
  }
  return 0;
}

int run_verify(const CommonOpts& o, int k, int max_letters) {
  const BraidWord w = load_word(o);
  if (static_cast<int>(w.letters.size()) > max_letters)
    throw ResourceLimitError("braid has " + std::to_string(w.letters.size()) +
                             " letters, oracle bound is " + std::to_string(max_letters));
  BraidInvariants eng(gauss_from_braid(w), o.workers);
  const HomflyOracle oracle(max_letters);
  const LaurentPoly1 descending = eng.descending_polynomial(k + 1);
  const LaurentPoly1 ascending = eng.ascending_polynomial(k + 1);
  const LaurentPoly1 derivative = oracle.homfly_derivative(w, k);
  const bool ok = descending == ascending && ascending == derivative;
  if (o.json) {
    std::cout << Json({{"braid", format_braid(w)},
                       {"k", k},
                       {"descending", descending.str()},
                       {"ascending", ascending.str()},
                       {"oracle", derivative.str()},
                       {"pass", ok}})
                     .dump(2)
              << "\n";
  } else {
    std::cout << "braid: " << describe(w) << "\n";
    std::cout << "P_" << k + 1 << "  = " << descending.str() << "  (descending states)\n";
    std::cout << "P*_" << k + 1 << " = " << ascending.str() << "  (ascending states)\n";
    std::cout << "PP_" << k << " = " << derivative.str() << "  (HOMFLY derivative oracle)\n";
    std::cout << (ok ? "PASS" : "FAIL") << "\n";
  }
  return ok ? 0 : 1;
}

template <typename ColoringT>
std::string coloring_line(const ColoringT& col) {
  std::ostringstream out;
  out << "base points:";
  for (size_t i = 0; i < col.based.size(); ++i) out << " *" << i + 1 << "->a" << col.based[i];
  bool any = false;
  for (size_t t = 1; t < col.color.size(); ++t)
    if (col.color[t] != 0) {
      out << (any ? "" : "  colors:");
      out << " a" << t << "=" << col.color[t];
      any = true;
    }
  return out.str();
}

std::string state_line(const StateRecord& rec) {
  std::ostringstream out;
  out << "state {";
  bool first = true;
  for (int a = 0; a < 64; ++a)
    if ((rec.state >> a) & 1) {
      out << (first ? "" : ",") << a;
      first = false;
    }
  out << "} sign=" << (rec.sign > 0 ? "+1" : "-1") << " boundaries=" << rec.boundary_count
      << " genus=[";
  for (size_t i = 0; i < rec.genus.size(); ++i) out << (i ? "," : "") << rec.genus[i];
  out << "] separating={";
  for (size_t i = 0; i < rec.separating.size(); ++i) out << (i ? "," : "") << rec.separating[i];
  out << "} passages:";
  for (const Passage& p : rec.passages)
    out << " " << p.arrow << (p.tail_to_head ? ">" : "<") << "@" << p.boundary;
  return out.str();
}

int run_states(const CommonOpts& o, int k, int j_filter) {
  const BraidWord w = load_word(o);
  BraidInvariants eng(gauss_from_braid(w), o.workers);
  const GaussDiagram& g = eng.diagram();

  Json levels = Json::array();
  std::ostringstream text;
  text << "braid: " << describe(w) << "  components=" << eng.components() << "\n";
  for (int j = 1; j <= k; ++j) {
    if (j_filter > 0 && j != j_filter) continue;
    const auto colorings = enumerate_colorings(g, j);
    text << "level j=" << j << ": " << colorings.size() << " coloring(s)\n";
    if (colorings.empty()) {
      text << "  (none: " << j << " base points exceed " << g.strands << " labeled arcs)\n";
      levels.push_back({{"j", j}, {"colorings", Json::array()}, {"states", Json::array()}});
      continue;
    }
    Json jcols = Json::array();
    for (const auto& col : colorings) jcols.push_back(coloring_to_json(col));
    Json jstates = Json::array();
    const auto states = eng.accepted_states(j, StateFlavor::descending);
    for (size_t ci = 0; ci < colorings.size(); ++ci) {
      text << "  coloring #" << ci << ": " << coloring_line(colorings[ci]) << "\n";
      for (const StateRecord& rec : states)
        if (rec.coloring_index == static_cast<int>(ci)) {
          text << "    " << state_line(rec) << "\n";
          jstates.push_back(to_json(rec));
        }
    }
    levels.push_back({{"j", j}, {"colorings", jcols}, {"states", jstates}});
  }
  if (o.json) {
    std::cout << Json({{"braid", format_braid(w)}, {"k", k}, {"diagram", to_json(g)}, {"levels", levels}})
                     .dump(2)
              << "\n";
  } else {
    std::cout << text.str();
  }
  return 0;
}

struct CampaignOpts {
  int max_strands = 3;
  int max_letters = 7;
  int samples = 50;
  int max_k = 2;
  std::uint64_t seed = 0;
  int workers = 1;
};

int run_random_check(const CampaignOpts& c) {
  WordSampler sampler(c.seed);
  const HomflyOracle oracle(std::max(16, c.max_letters + 6));
  int failures = 0;
  auto factorial = [](int n) {
    BigInt f = 1;
    for (int i = 2; i <= n; ++i) f *= i;
    return f;
  };

  for (int sample = 0; sample < c.samples; ++sample) {
    const BraidWord w = sampler.word(c.max_strands, c.max_letters);
    std::vector<std::string> errors;

    BraidInvariants eng(gauss_from_braid(w), c.workers);
    for (int k = 0; k <= c.max_k; ++k) {
      const LaurentPoly1 descending = eng.descending_polynomial(k + 1);
      const LaurentPoly1 ascending = eng.ascending_polynomial(k + 1);
      const LaurentPoly1 derivative = oracle.homfly_derivative(w, k);
      if (descending != derivative)
        errors.push_back("P_" + std::to_string(k + 1) + " = " + descending.str() +
                         " but oracle gives " + derivative.str());
      if (ascending != descending)
        errors.push_back("P*_" + std::to_string(k + 1) + " = " + ascending.str() +
                         " differs from P_" + std::to_string(k + 1) + " = " + descending.str());
    }

    if (!w.letters.empty()) {
      const size_t index = static_cast<size_t>(sampler.index(static_cast<int>(w.letters.size())));
      const ConwayTriple t = conway_triple(w, index);
      BraidInvariants plus(gauss_from_braid(t.plus), c.workers);
      BraidInvariants minus(gauss_from_braid(t.minus), c.workers);
      BraidInvariants zero(gauss_from_braid(t.zero), c.workers);
      const int max_level_k = std::min(3, c.max_k + 1);
      for (int k = 1; k <= max_level_k; ++k)
        for (int j = 1; j <= k; ++j)
          for (int n = 0; n <= static_cast<int>(w.letters.size()) + 2; ++n) {
            const BigInt lhs = plus.descending_count(n, k, j) - minus.descending_count(n, k, j);
            const BigInt rhs = n == 0 ? BigInt(0) : zero.descending_count(n - 1, k, j);
            if (lhs != rhs)
              errors.push_back("state-count skein fails at index " + std::to_string(index) +
                               " n=" + std::to_string(n) + " k=" + std::to_string(k) +
                               " j=" + std::to_string(j));
          }
      for (int k = 0; k <= std::min(2, c.max_k); ++k) {
        LaurentPoly1 lhs = plus.descending_polynomial(k + 1) - minus.descending_polynomial(k + 1);
        LaurentPoly1 rhs = zero.descending_polynomial(k + 1).shifted(1);
        if (k >= 1) rhs -= plus.descending_polynomial(k).shifted(1).scaled(k);
        for (int i = 0; i < k; ++i) {
          const BigInt coeff = factorial(k) / factorial(i) * ((k - 1 - i) % 2 == 0 ? 1 : -1);
          rhs -= minus.descending_polynomial(i + 1).shifted(k - i).scaled(coeff);
        }
        if (lhs != rhs)
          errors.push_back("polynomial skein fails at index " + std::to_string(index) +
                           " k=" + std::to_string(k));
      }
    }

    const BraidWord g = sampler.word_exact(w.strands, 2);
    BraidInvariants conj(gauss_from_braid(conjugate(w, g)), c.workers);
    BraidInvariants stab_pos(gauss_from_braid(stabilize(w, 1)), c.workers);
    BraidInvariants stab_neg(gauss_from_braid(stabilize(w, -1)), c.workers);
    for (int k = 1; k <= c.max_k + 1; ++k) {
      const LaurentPoly1 expect = eng.descending_polynomial(k);
      if (conj.descending_polynomial(k) != expect)
        errors.push_back("P_" + std::to_string(k) + " changes under conjugation by \"" +
                         format_braid(g) + "\"");
      if (stab_pos.descending_polynomial(k) != expect)
        errors.push_back("P_" + std::to_string(k) + " changes under positive stabilization");
      if (stab_neg.descending_polynomial(k) != expect)
        errors.push_back("P_" + std::to_string(k) + " changes under negative stabilization");
    }

    if (errors.empty()) {
      std::cout << "[" << sample << "] braid \"" << format_braid(w) << "\" strands="
                << w.strands << ": ok\n";
    } else {
      ++failures;
      std::cout << "[" << sample << "] braid \"" << format_braid(w) << "\" strands="
                << w.strands << " seed=" << c.seed << ": FAIL\n";
      for (const std::string& e : errors) std::cout << "    " << e << "\n";
    }
  }
  std::cout << "random-check: " << c.samples << " samples, " << failures
            << " failure(s), seed=" << c.seed << "\n";
  return failures == 0 ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"surface-counting invariants of closed braids"};
  app.require_subcommand(1);

  CommonOpts inv_opts;
  int inv_k = 1;
  CLI::App* inv = app.add_subcommand("invariant", "compute P_k by counting descending states");
  add_common(inv, inv_opts);
  inv->add_option("--k", inv_k, "index k of P_k (k >= 1)")->default_val(1)->check(CLI::Range(1, 64));

  CommonOpts orc_opts;
  int orc_k = 0;
  int orc_max_letters = 16;
  CLI::App* orc = app.add_subcommand("oracle", "HOMFLY-PT via skein recursion; with --k its scaled a-derivative");
  add_common(orc, orc_opts, false);
  CLI::Option* orc_k_opt = orc->add_option("--k", orc_k, "derivative order (prints z^k d^k/da^k HOMFLY at a=1)");
  orc->add_option("--max-letters", orc_max_letters, "skein recursion letter bound")->default_val(16);

  CommonOpts ver_opts;
  int ver_k = 0;
  int ver_max_letters = 16;
  CLI::App* ver = app.add_subcommand("verify", "check P_{k+1} = P*_{k+1} = oracle derivative of order k");
  add_common(ver, ver_opts);
  ver->add_option("--k", ver_k, "derivative order k >= 0 (compares P_{k+1} against it)")
      ->default_val(0)
      ->check(CLI::Range(0, 63));
  ver->add_option("--max-letters", ver_max_letters, "skein recursion letter bound")->default_val(16);

  CommonOpts st_opts;
  int st_k = 1;
  int st_j = 0;
  CLI::App* st = app.add_subcommand("states", "dump colorings and accepted descending states");
  add_common(st, st_opts);
  st->add_option("--k", st_k, "index k of P_k; levels j = 1..k are listed")->default_val(1)->check(CLI::Range(1, 64));
  st->add_option("--j", st_j, "restrict to a single level j");

  CampaignOpts camp;
  CLI::App* rc = app.add_subcommand("random-check", "randomized identity campaign over sampled words");
  rc->add_option("--strands", camp.max_strands, "maximum strand count")->default_val(3)->check(CLI::Range(2, 16));
  rc->add_option("--letters", camp.max_letters, "maximum word length")->default_val(7)->check(CLI::Range(0, 14));
  rc->add_option("--samples", camp.samples, "number of sampled words")->default_val(50);
  rc->add_option("--max-k", camp.max_k, "largest derivative order checked")->default_val(2)->check(CLI::Range(0, 4));
  rc->add_option("--seed", camp.seed, "RNG seed")->default_val(0);
  rc->add_option("--workers", camp.workers, "enumeration worker threads")->default_val(1);

  int rc_code = 0;
  inv->callback([&] { rc_code = run_invariant(inv_opts, inv_k); });
  orc->callback([&] { rc_code = run_oracle(orc_opts, orc_k, orc_k_opt->count() > 0, orc_max_letters); });
  ver->callback([&] { rc_code = run_verify(ver_opts, ver_k, ver_max_letters); });
  st->callback([&] { rc_code = run_states(st_opts, st_k, st_j); });
  rc->callback([&] { rc_code = run_random_check(camp); });

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  } catch (const braidsurf::ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const braidsurf::ResourceLimitError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 4;
  }
  return rc_code;
}
