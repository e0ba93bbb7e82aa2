// Command-line front end for the verification toolkit.
//
// Exit status: 0 all checks pass, 1 a mathematical check failed, 2 a resource
// limit was hit, 64 bad usage or unreadable input.

#include <cstdio>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <new>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "beauville/beauville.hpp"
#include "beauville/certificate.hpp"
#include "beauville/errors.hpp"
#include "beauville/fp_series.hpp"
#include "beauville/group.hpp"
#include "beauville/nottingham.hpp"
#include "beauville/pipeline.hpp"
#include "beauville/presentation.hpp"

namespace {

using namespace beauville;

constexpr int kOk = 0;
constexpr int kFalsified = 1;
constexpr int kLimit = 2;
constexpr int kUsage = 64;

struct RunConfig {
  std::uint32_t p = 3;
  std::uint32_t k = 1;
  std::size_t precision = 0;
  std::string check = "order";
  std::string file;
  std::size_t max_cosets = 0;
  std::string out;
  std::uint64_t seed = 0;
  std::size_t pairs = 500;
  int which = 1;
  std::uint32_t n = 5;
  bool dump = false;
  std::size_t expect = 0;
};

EnumerationLimits limits_from(const RunConfig& cfg) {
  EnumerationLimits limits = default_limits();
  if (cfg.max_cosets) limits.max_cosets = cfg.max_cosets;
  return limits;
}

void require_odd_prime(std::uint32_t p) {
  if (p < 3 || !is_prime(p)) throw DomainError("--p must be an odd prime, got " + std::to_string(p));
}

int cmd_verify(const RunConfig& cfg) {
  require_odd_prime(cfg.p);
  if (cfg.k < 1) throw DomainError("--k must be at least 1");
  const Certificate cert = verify_main_theorem(cfg.p, cfg.k, limits_from(cfg));
  const std::string json = to_json(cert);
  if (cfg.out.empty()) {
    std::cout << json;
  } else {
    write_atomically(cfg.out, json);
  }
  std::cerr << "verify p=" << cert.p << " k=" << cert.k << " i=" << cert.i << ": |H| = " << cert.group_order
            << ", exp H = " << cert.exponent << ", o(uv) = " << cert.order_uv << "\n";
  for (const auto& c : cert.checks) std::cerr << (c.pass ? "  pass  " : "  FAIL  ") << c.name << ": " << c.detail << "\n";
  std::cerr << (cert.all_pass() ? "all checks pass" : "some checks FAILED") << " (" << cert.wall_ms << " ms)\n";
  return cert.all_pass() ? kOk : kFalsified;
}

int nottingham_order(const RunConfig& cfg) {
  const auto gens = nottingham_generators(cfg.p, cfg.precision);
  std::cout << "generator  depth  expected_depth  power_p_is_id\n";
  bool ok = true;
  const std::pair<const char*, const TruncSeries*> rows[] = {{"a", &gens.a}, {"b", &gens.b}};
  std::uint32_t expected = 1;
  for (const auto& [name, f] : rows) {
    const bool id = power(*f, cfg.p).is_identity();
    const Depth d = f->depth();
    ok = ok && id && d == Depth(expected);
    std::cout << std::left << std::setw(11) << name << std::setw(7) << d.to_string() << std::setw(16) << expected
              << (id ? "yes" : "no") << "\n";
    ++expected;
  }
  std::cerr << "order check at precision " << cfg.precision << ": " << (ok ? "pass" : "FAIL") << "\n";
  return ok ? kOk : kFalsified;
}

int nottingham_lcs(const RunConfig& cfg) {
  const auto rows = check_lcs_formula(cfg.p, cfg.precision);
  std::cout << "j  r(j)  observed  log_order  observed_log_order  match\n";
  bool ok = !rows.empty();
  for (const auto& r : rows) {
    ok = ok && r.matches;
    std::cout << std::left << std::setw(3) << r.j << std::setw(6) << r.expected_index << std::setw(10)
              << r.observed_index << std::setw(11) << r.expected_log_order << std::setw(20) << r.observed_log_order
              << (r.matches ? "yes" : "NO") << "\n";
  }
  std::cerr << "lower central series at precision " << cfg.precision << ": " << rows.size() << " rows, "
            << (ok ? "all match" : "MISMATCH") << "\n";
  return ok ? kOk : kFalsified;
}

int nottingham_comms(const RunConfig& cfg) {
  const auto r = check_commutator_depths(cfg.p, cfg.precision, cfg.pairs, cfg.seed);
  std::cout << "pairs " << r.pairs << "\n"
            << "composition_violations " << r.composition_violations << "\n"
            << "lower_bound_violations " << r.lower_bound_violations << "\n"
            << "congruent_pairs " << r.congruent_pairs << "\n"
            << "strictness_violations " << r.strictness_violations << "\n"
            << "measurable_incongruent " << r.measurable_incongruent << "\n"
            << "exact_when_incongruent " << r.exact_when_incongruent << "\n";
  const bool ok = r.composition_violations == 0 && r.lower_bound_violations == 0 && r.strictness_violations == 0;
  std::cerr << "commutator depths, seed " << cfg.seed << ": " << (ok ? "pass" : "FAIL") << "\n";
  return ok ? kOk : kFalsified;
}

int nottingham_noncover(const RunConfig& cfg) {
  if (cfg.precision < 3 + cfg.p || (cfg.precision - 3) % cfg.p != 0) {
    throw DomainError("noncover needs --precision of the form kp+3 with k >= 1");
  }
  const auto k = static_cast<std::uint32_t>((cfg.precision - 3) / cfg.p);
  const SeriesGroup G = nottingham_quotient(cfg.p, cfg.precision, limits_from(cfg).max_cosets);
  const Elem alpha = G.group.generator(0);
  const Subset top = depth_filter(G, k * cfg.p + 1);
  const Subset deep = depth_filter(G, k * cfg.p + 2);
  const NonCoveringVerdict nc = noncovering_check(G.group, alpha, top);
  const std::size_t meet = nc.commutators.intersect(deep).size();
  std::cout << "|G| " << G.group.order() << "\n"
            << "|{[alpha,g]}| " << nc.commutators.size() << "\n"
            << "|N_" << k * cfg.p + 1 << "| " << top.size() << "\n"
            << "{[alpha,g]} meets N_" << k * cfg.p + 2 << " in " << meet << " element(s)\n";
  if (nc.witness) std::cout << "uncovered " << G.element(*nc.witness).to_string() << "\n";
  const bool ok = nc.uncovered && meet == 1;
  std::cerr << "non-covering in N/N_" << cfg.precision << ": " << (ok ? "pass" : "FAIL") << "\n";
  return ok ? kOk : kFalsified;
}

int cmd_nottingham(const RunConfig& cfg) {
  require_odd_prime(cfg.p);
  if (cfg.precision < 3) throw DomainError("--precision must be at least 3");
  if (cfg.check == "order") return nottingham_order(cfg);
  if (cfg.check == "lcs") return nottingham_lcs(cfg);
  if (cfg.check == "comms") return nottingham_comms(cfg);
  return nottingham_noncover(cfg);
}

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw DomainError("cannot read " + path);
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

int cmd_enumerate(const RunConfig& cfg) {
  const Presentation pres = parse_presentation(read_file(cfg.file));
  const CosetTable table = enumerate(pres, limits_from(cfg));
  if (cfg.dump) std::cout << table.dump();
  std::cout << "order " << table.n_cosets() << "\n";
  std::cerr << format_presentation(pres) << ": " << table.n_cosets() << " cosets (" << table.cosets_defined()
            << " defined)\n";
  if (cfg.expect && table.n_cosets() != cfg.expect) {
    std::cerr << "expected " << cfg.expect << "\n";
    return kFalsified;
  }
  return kOk;
}

int cmd_fairbairn(const RunConfig& cfg) {
  std::string text;
  std::size_t expected = 0;
  if (cfg.which == 1) {
    text = "< x, y | x^8, y^8, [x^2, y^2]";
    for (int i = 1; i <= 3; ++i)
      for (int j = 1; j <= 3; ++j) text += ", (x^" + std::to_string(i) + " y^" + std::to_string(j) + ")^4";
    expected = 8192;
  } else {
    text = "< x, y | ";
    bool first = true;
    for (int i = 0; i <= 3; ++i) {
      for (int j = 0; j <= 3; ++j) {
        if (i == 0 && j == 0) continue;  // (x^0 y^0)^4 is the empty word
        if (!first) text += ", ";
        first = false;
        text += "(x^" + std::to_string(i) + " y^" + std::to_string(j) + ")^4";
      }
    }
    expected = 16384;
  }
  text += " >";
  const Presentation pres = parse_presentation(text);
  const CosetTable table = enumerate(pres, limits_from(cfg));
  const bool ok = table.n_cosets() == expected;
  std::cout << "order " << table.n_cosets() << "\nexpected " << expected << "\n";
  std::cerr << "Fairbairn group " << cfg.which << ": " << table.n_cosets() << " cosets, " << (ok ? "pass" : "FAIL")
            << "\n";
  return ok ? kOk : kFalsified;
}

int cmd_abelian(const RunConfig& cfg) {
  if (cfg.n < 2) throw DomainError("--n must be at least 2");
  const auto found = abelian_beauville_search(cfg.n);
  if (!found) {
    std::cout << "NONE\n";
    std::cerr << "C_" << cfg.n << " x C_" << cfg.n << ": no Beauville structure\n";
    return kOk;
  }
  const auto& c = found->coordinates;
  auto pt = [](const std::pair<std::uint32_t, std::uint32_t>& v) {
    return "(" + std::to_string(v.first) + "," + std::to_string(v.second) + ")";
  };
  std::cout << "pair1 " << pt(c[0]) << " " << pt(c[1]) << "\n"
            << "pair2 " << pt(c[2]) << " " << pt(c[3]) << "\n"
            << "strongly_real " << (found->strongly_real ? "yes" : "no") << "\n";
  std::cerr << "C_" << cfg.n << " x C_" << cfg.n << ": structure found after " << found->pairs_examined
            << " candidate pairs" << (found->strongly_real ? ", strongly real" : ", NOT strongly real") << "\n";
  return found->strongly_real ? kOk : kFalsified;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Beauville structures on finite p-groups"};
  app.require_subcommand(1);
  RunConfig cfg;

  auto add_limit = [&](CLI::App* sub) {
    sub->add_option("--max-cosets", cfg.max_cosets, "Coset/element ceiling (default 2000000 or $BEAUVILLE_MAX_COSETS)")
        ->check(CLI::PositiveNumber);
  };

  auto* verify = app.add_subcommand("verify", "Verify the main theorem for F/gamma_(i+1)(F), i = k(p-1)+1");
  verify->add_option("--p", cfg.p, "Odd prime")->required();
  verify->add_option("--k", cfg.k, "k >= 1")->required();
  verify->add_option("--out", cfg.out, "Certificate path (stdout when absent)");
  verify->add_option("--seed", cfg.seed, "Seed (unused by the deterministic pipeline)");
  add_limit(verify);

  auto* nott = app.add_subcommand("nottingham", "Nottingham group checks");
  nott->add_option("--p", cfg.p, "Odd prime")->required();
  nott->add_option("--precision", cfg.precision, "Truncation M")->required();
  nott->add_option("--check", cfg.check, "order, lcs, comms or noncover")
      ->check(CLI::IsMember({"order", "lcs", "comms", "noncover"}));
  nott->add_option("--pairs", cfg.pairs, "Random pairs for comms")->check(CLI::PositiveNumber);
  nott->add_option("--seed", cfg.seed, "Seed for comms");
  add_limit(nott);

  auto* enumerate_cmd = app.add_subcommand("enumerate", "Coset enumeration of a presentation file");
  enumerate_cmd->add_option("file", cfg.file, "Presentation file")->required();
  enumerate_cmd->add_flag("--dump", cfg.dump, "Print the coset table");
  enumerate_cmd->add_option("--expect", cfg.expect, "Exit 1 unless the order is this");
  add_limit(enumerate_cmd);

  auto* fairbairn = app.add_subcommand("fairbairn", "Orders of Fairbairn's two 2-groups");
  fairbairn->add_option("--which", cfg.which, "1 (order 8192) or 2 (order 16384)")->check(CLI::Range(1, 2));
  add_limit(fairbairn);

  auto* abelian = app.add_subcommand("abelian", "Beauville structures in C_n x C_n");
  abelian->add_option("--n", cfg.n, "n >= 2")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsage;
  }

  try {
    if (*verify) return cmd_verify(cfg);
    if (*nott) return cmd_nottingham(cfg);
    if (*enumerate_cmd) return cmd_enumerate(cfg);
    if (*fairbairn) return cmd_fairbairn(cfg);
    if (*abelian) return cmd_abelian(cfg);
  } catch (const LimitExceeded& e) {
    std::cerr << "limit exceeded: " << e.what() << "\n";
    return kLimit;
  } catch (const ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return kUsage;
  } catch (const DomainError& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return kUsage;
  } catch (const std::bad_alloc&) {
    std::cerr << "out of memory\n";
    return kLimit;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kFalsified;
  }
  return kUsage;
}
