#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <set>

#include "beauville/beauville.hpp"
#include "beauville/certificate.hpp"
#include "beauville/errors.hpp"
#include "beauville/lemmas.hpp"
#include "beauville/maximal_class.hpp"
#include "beauville/nottingham.hpp"
#include "beauville/pipeline.hpp"
#include "beauville/presentation.hpp"

using namespace beauville;

namespace {

const FiniteGroup& H31() {
  static const FiniteGroup h = group_from_presentation(gamma_quotient_presentation(3, 3));
  return h;
}

using Square = ConcreteGroup<std::uint64_t, std::hash<std::uint64_t>>;

Elem at(const Square& g, std::uint32_t n, std::uint32_t a, std::uint32_t b) { return g.find(a * n + b); }

// Sigma in an abelian group by direct union of the three cyclic subgroups.
std::set<Elem> sigma_oracle(const FiniteGroup& g, Elem x, Elem y) {
  std::set<Elem> out;
  for (Elem t : {x, y, g.mul(x, y)}) {
    Elem e = g.identity();
    do {
      out.insert(e);
      e = g.mul(e, t);
    } while (e != g.identity());
  }
  return out;
}

bool structure_oracle(const FiniteGroup& g, Elem x1, Elem y1, Elem x2, Elem y2) {
  for (auto [a, b] : {std::pair{x1, y1}, {x2, y2}}) {
    if (subgroup_closure(g, std::vector<Elem>{a, b}).order() != g.order()) return false;
  }
  const auto s1 = sigma_oracle(g, x1, y1), s2 = sigma_oracle(g, x2, y2);
  for (Elem e : s1) {
    if (e != g.identity() && s2.count(e)) return false;
  }
  return true;
}

}  // namespace

TEST_CASE("Sigma sets") {
  const auto c5 = cyclic_square(5);
  const FiniteGroup& G = c5.group;
  const Elem x = at(c5, 5, 1, 0), y = at(c5, 5, 0, 1);
  const Subset s = sigma_set(G, x, y);
  CHECK(s.size() == 13);
  CHECK(s.size() == sigma_oracle(G, x, y).size());
  CHECK(sigma_set(G, G.identity(), G.identity()).size() == 1);

  // Conjugation invariance in a nonabelian group.
  const FiniteGroup& H = H31();
  const Elem u = H.generator(0), v = H.generator(1);
  const Subset sh = sigma_set(H, u, H.mul(v, v));
  CHECK(sh.contains(H.identity()));
  for (Elem e : sh.members()) {
    for (Elem g : H.generators()) CHECK(sh.contains(H.conj(e, g)));
  }
}

TEST_CASE("Beauville structures in C_5 x C_5") {
  const auto c5 = cyclic_square(5);
  const FiniteGroup& G = c5.group;
  const Elem x1 = at(c5, 5, 1, 0), y1 = at(c5, 5, 0, 1);
  // x1 y1 = (1,1) lies in both Sigma sets.
  const Elem a = at(c5, 5, 1, 1), b = at(c5, 5, 1, 2);
  const auto bad = is_beauville_structure(G, {{x1, y1}, {a, b}});
  CHECK_FALSE(bad.ok);
  CHECK(bad.witness.has_value());
  CHECK(structure_oracle(G, x1, y1, a, b) == false);

  const Elem c = at(c5, 5, 1, 2), d = at(c5, 5, 3, 4);
  CHECK(is_beauville_structure(G, {{x1, y1}, {c, d}}).ok);
  CHECK(structure_oracle(G, x1, y1, c, d));

  CHECK_FALSE(is_beauville_structure(G, {{x1, y1}, {x1, y1}}).ok);
  const auto nongen = is_beauville_structure(G, {{x1, x1}, {c, d}});
  CHECK_FALSE(nongen.ok);
  CHECK(nongen.reason.find("does not generate") != std::string::npos);

  // Exhaustive agreement with the oracle on a sample of pairs.
  std::size_t agree = 0;
  for (Elem p = 1; p < G.order(); p += 3) {
    for (Elem q = 1; q < G.order(); q += 5) {
      const bool fast = is_beauville_structure(G, {{x1, y1}, {p, q}}).ok;
      agree += fast == structure_oracle(G, x1, y1, p, q);
    }
  }
  CHECK(agree == ((G.order() - 2) / 3 + 1) * ((G.order() - 2) / 5 + 1));
}

TEST_CASE("C_3 x C_3 has no Beauville structure") {
  const auto c3 = cyclic_square(3);
  const FiniteGroup& G = c3.group;
  std::vector<GeneratingPair> pairs;
  for (Elem a = 0; a < G.order(); ++a) {
    for (Elem b = 0; b < G.order(); ++b) {
      if (subgroup_closure(G, std::vector<Elem>{a, b}).order() == G.order()) pairs.push_back({a, b});
    }
  }
  CHECK(pairs.size() == 48);
  for (const auto& p1 : pairs) {
    for (const auto& p2 : pairs) CHECK_FALSE(is_beauville_structure(G, {p1, p2}).ok);
  }
}

TEST_CASE("non-covering") {
  const auto c5 = cyclic_square(5);
  const auto ab = noncovering_check(c5.group, c5.group.generator(0), whole_group(c5.group).elements);
  CHECK(ab.commutators.size() == 1);
  CHECK(ab.uncovered);

  const SeriesGroup G = nottingham_quotient(3, 6);
  const Elem alpha = G.group.generator(0);
  const auto nc = noncovering_check(G.group, alpha, depth_filter(G, 4));
  CHECK(nc.uncovered);
  CHECK(nc.commutators.intersect(depth_filter(G, 5)).size() == 1);

  const FiniteGroup& H = H31();
  const auto series = lower_central_series(H);
  const auto hu = noncovering_check(H, H.generator(0), series[2].elements);
  CHECK(hu.uncovered);
  REQUIRE(hu.witness.has_value());
  CHECK_FALSE(commutator_set(H, H.generator(0)).contains(*hu.witness));
}

TEST_CASE("witness search") {
  const FiniteGroup& H = H31();
  const Elem u = H.generator(0), v = H.generator(1);
  const auto series = lower_central_series(H);
  const Witnesses ws = witness_search(H, u, v, series[2].elements);
  REQUIRE(ws.found());
  for (Elem t : {*ws.w, *ws.z}) {
    CHECK(element_order(H, t) == 3);
    for (Elem g : H.generators()) CHECK(H.comm(t, g) == H.identity());
    CHECK(series[2].contains(t));
  }
  const Subset cu = commutator_set(H, u);
  for (Elem h = 0; h < H.order(); ++h) CHECK(H.comm(u, h) != *ws.w);
  CHECK_FALSE(cu.contains(*ws.w));
  CHECK_FALSE(commutator_set(H, v).contains(*ws.z));
  const Elem x2 = H.inv(H.mul(u, *ws.w)), y2 = H.mul(v, *ws.z);
  CHECK(subgroup_closure(H, std::vector<Elem>{x2, y2}).order() == H.order());

  // A non-central last term is refused.
  const Witnesses none = witness_search(H, u, v, series[1].elements);
  CHECK_FALSE(none.found());
}

TEST_CASE("strong reality") {
  const auto c5 = cyclic_square(5);
  const FiniteGroup& G = c5.group;
  const Hom inv = automorphism_from_images(G, std::vector<Elem>{G.inv(G.generator(0)), G.inv(G.generator(1))});
  const BeauvilleStructure s{{at(c5, 5, 1, 0), at(c5, 5, 0, 1)}, {at(c5, 5, 1, 2), at(c5, 5, 3, 4)}};
  CHECK(strongly_real_check(G, s, inv));

  const FiniteGroup& H = H31();
  const Elem u = H.generator(0), v = H.generator(1);
  const auto series = lower_central_series(H);
  const Witnesses ws = witness_search(H, u, v, series[2].elements);
  const BeauvilleStructure hs{{u, v}, {H.inv(H.mul(u, *ws.w)), H.mul(v, *ws.z)}};
  CHECK(is_beauville_structure(H, hs).ok);
  const Hom theta = automorphism_from_images(H, std::vector<Elem>{H.inv(u), H.inv(v)});
  CHECK(strongly_real_check(H, hs, theta));
  const Hom id = automorphism_from_images(H, H.generators());
  CHECK_FALSE(strongly_real_check(H, hs, id));
}

TEST_CASE("abelian search follows the gcd(n, 6) = 1 criterion") {
  for (std::uint32_t n : {2u, 3u, 4u, 6u, 8u, 9u}) CHECK_FALSE(abelian_beauville_search(n).has_value());
  for (std::uint32_t n : {5u, 7u, 11u}) {
    const auto r = abelian_beauville_search(n);
    REQUIRE(r.has_value());
    CHECK(r->strongly_real);
    const auto g = cyclic_square(n);
    const auto& c = r->coordinates;
    auto e = [&](int k) { return at(g, n, c[k].first, c[k].second); };
    CHECK(structure_oracle(g.group, e(0), e(1), e(2), e(3)));
  }
  CHECK_THROWS_AS(abelian_beauville_search(1), DomainError);
}

TEST_CASE("intersection lemmas") {
  const FiniteGroup& H = H31();
  const auto P = construct_P(3, 3);
  for (const FiniteGroup* g : {&H, &P.group()}) {
    const LemmaReport r1 = check_intersection1(*g);
    CHECK(r1.cases > 0);
    CHECK(r1.ok());
    const LemmaReport r2 = check_intersection2(*g);
    CHECK(r2.ok());
  }
  CHECK(check_intersection2(H).cases > 0);
  // In P(3,3) every x of order 3 outside Phi has {[x,g]} = Phi, so the hypothesis never holds.
  CHECK(check_intersection2(P.group()).cases == 0);
  // A larger maximal-class quotient and the Nottingham quotient do exercise it.
  const LemmaReport n6 = check_intersection2(nottingham_quotient(3, 6).group);
  CHECK(n6.cases > 0);
  CHECK(n6.ok());
}

TEST_CASE("homomorphism lemma through psi") {
  const FiniteGroup& H = H31();
  const auto P = construct_P(3, 3);
  const Hom psi = hom_from_images(H, P.group(), std::vector<Elem>{P.group().inv(P.s), P.group().mul(P.s, P.s1)});
  const LemmaReport r = check_homomorphism_lemma(H, P.group(), psi);
  CHECK(r.cases > 0);
  CHECK(r.ok());
  const SeriesGroup G = nottingham_quotient(3, 6);
  const Hom psi_n = hom_from_images(H, G.group, std::vector<Elem>{G.group.generator(0), G.group.generator(1)});
  const LemmaReport rn = check_homomorphism_lemma(H, G.group, psi_n);
  CHECK(rn.cases > 0);
  CHECK(rn.ok());
}

TEST_CASE("main theorem for (3,1)") {
  const Certificate c = verify_main_theorem(3, 1);
  CHECK(c.i == 3);
  CHECK(c.group_order == 243);
  CHECK(c.group_order == nottingham_quotient(3, 6).group.order());
  CHECK(c.exponent == 9);
  CHECK(c.order_uv == 9);
  for (const auto& ch : c.checks) {
    CAPTURE(ch.name);
    CAPTURE(ch.detail);
    CHECK(ch.pass);
  }
  CHECK(c.all_pass());
  CHECK(c.pair1[0] == "x");
  CHECK(c.pair1[1] == "y");
  CHECK(c.find("strongly_real") != nullptr);
  CHECK(c.find("no such check") == nullptr);
}

TEST_CASE("main theorem argument checks") {
  CHECK_THROWS_AS(verify_main_theorem(4, 1), DomainError);
  CHECK_THROWS_AS(verify_main_theorem(2, 1), DomainError);
  CHECK_THROWS_AS(verify_main_theorem(3, 0), DomainError);
  CHECK_THROWS_AS(verify_main_theorem(3, 9), LimitExceeded);
  CHECK(expected_exponent_log(3, 3) == 2);
  CHECK(expected_exponent_log(5, 5) == 2);
  CHECK(expected_exponent_log(3, 5) == 3);
}

TEST_CASE("certificates are deterministic and round-trip") {
  Certificate a = verify_main_theorem(3, 1);
  Certificate b = verify_main_theorem(3, 1);
  a.wall_ms = b.wall_ms = 0;
  CHECK(to_json(a) == to_json(b));

  const Certificate back = certificate_from_json(to_json(a));
  CHECK(back == a);
  for (const auto& r : recheck_certificate(back)) {
    CAPTURE(r.name);
    CAPTURE(r.detail);
    CHECK(r.pass);
  }

  Certificate tampered = a;
  tampered.witness_w = tampered.pair1[0];  // u is not in H_i
  bool some_fail = false;
  for (const auto& r : recheck_certificate(tampered)) some_fail = some_fail || !r.pass;
  CHECK(some_fail);

  Certificate garbage = a;
  garbage.pair2[0] = "q^2";
  bool words_fail = false;
  for (const auto& r : recheck_certificate(garbage)) words_fail = words_fail || (r.name == "words" && !r.pass);
  CHECK(words_fail);

  CHECK_THROWS_AS(certificate_from_json("{"), ParseError);
  CHECK_THROWS_AS(certificate_from_json("{\"p\": 3}"), ParseError);
}

TEST_CASE("atomic certificate writes") {
  const auto dir = std::filesystem::temp_directory_path() / "beauville_cert_test";
  std::filesystem::create_directories(dir);
  const auto path = dir / "cert.json";
  write_atomically(path, "first\n");
  write_atomically(path, "second\n");
  std::ifstream in(path);
  std::string line;
  std::getline(in, line);
  CHECK(line == "second");
  CHECK_FALSE(std::filesystem::exists(dir / "cert.json.tmp"));
  CHECK_THROWS_AS(write_atomically(dir / "missing" / "cert.json", "x"), StateError);
  std::filesystem::remove_all(dir);
}
