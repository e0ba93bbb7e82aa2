#include "beauville/pipeline.hpp"

#include <chrono>
#include <sstream>

#include "beauville/beauville.hpp"
#include "beauville/errors.hpp"
#include "beauville/fp_series.hpp"
#include "beauville/group_algorithms.hpp"
#include "beauville/maximal_class.hpp"
#include "beauville/nottingham.hpp"
#include "beauville/presentation.hpp"

namespace beauville {

namespace {

// p^e, saturating at UINT64_MAX.
std::uint64_t sat_pow(std::uint64_t p, std::uint32_t e) {
  std::uint64_t r = 1;
  while (e--) {
    if (r > UINT64_MAX / p) return UINT64_MAX;
    r *= p;
  }
  return r;
}

std::string orders_of(const std::vector<Subgroup>& series) {
  std::ostringstream os;
  for (std::size_t j = 0; j < series.size(); ++j) os << (j ? " " : "") << series[j].order();
  return os.str();
}

}  // namespace

std::uint32_t expected_exponent_log(std::uint32_t p, std::uint32_t i) { return (i + p - 2) / (p - 1); }

Certificate verify_main_theorem(std::uint32_t p, std::uint32_t k, const EnumerationLimits& limits) {
  if (p < 3 || !is_prime(p)) throw DomainError("p must be an odd prime");
  if (k < 1) throw DomainError("k must be at least 1");
  const auto start = std::chrono::steady_clock::now();

  Certificate cert;
  cert.p = p;
  cert.k = k;
  cert.i = k * (p - 1) + 1;
  const std::uint32_t i = cert.i;
  const std::size_t m = static_cast<std::size_t>(k) * p + 3;

  // H maps onto N/N_(kp+3), which has p^(kp+2) elements.
  const std::uint64_t lower_bound = sat_pow(p, static_cast<std::uint32_t>(m - 1));
  if (lower_bound > limits.max_cosets) {
    throw LimitExceeded("F/gamma_" + std::to_string(i + 1) + "(F) has at least " + std::to_string(p) + "^" +
                            std::to_string(m - 1) + " elements, more than the coset limit allows",
                        limits.max_cosets);
  }

  auto record = [&](std::string name, bool pass, std::string detail) {
    cert.checks.push_back({std::move(name), pass, std::move(detail)});
  };

  const Presentation pres = gamma_quotient_presentation(p, i);
  const FiniteGroup H = group_from_presentation(pres, limits);
  cert.group_order = H.order();
  const Elem u = H.generator(0), v = H.generator(1), uv = H.mul(u, v);
  record("enumeration", H.order() > 1,
         std::to_string(pres.relators.size()) + " relators, " + std::to_string(H.order()) + " cosets");

  // Nottingham quotient G = N/N_(kp+3) with alpha, beta the images of a, b.
  const SeriesGroup G = nottingham_quotient(p, m, limits.max_cosets);
  const FiniteGroup& NG = G.group;
  const Elem alpha = NG.generator(0), beta = NG.generator(1);
  record("nottingham_order", NG.order() == lower_bound && H.order() >= NG.order(),
         "|<alpha, beta>| = " + std::to_string(NG.order()) + " in N/N_" + std::to_string(m) + ", expected " +
             std::to_string(lower_bound) + "; |H| = " + std::to_string(H.order()));

  const auto series = lower_central_series(H);
  const bool class_i = series.size() > i && series[i].order() == 1 && series[i - 1].order() > 1;
  const Subset Hi = series.size() >= i ? series[i - 1].elements : Subset(H.order());
  const bool hi_central = is_central(H, Hi);
  record("lower_central_series", class_i && hi_central,
         "orders " + orders_of(series) + "; |H_i| = " + std::to_string(Hi.size()) +
             (hi_central ? ", H_i central" : ", H_i not central"));

  try {
    const std::vector<Elem> images{alpha, beta};
    const Hom psi = hom_from_images(H, NG, images);
    record("nottingham_epimorphism", psi.surjective(),
           "u -> alpha, v -> beta; image order " + std::to_string(psi.image_order()));
  } catch (const HomRejected& e) {
    record("nottingham_epimorphism", false, std::string(e.what()) + ": " + e.failing_relator());
  }

  {
    const Subset top = depth_filter(G, static_cast<std::uint32_t>(k * p + 1));
    const Subset deep = depth_filter(G, static_cast<std::uint32_t>(k * p + 2));
    const NonCoveringVerdict nc = noncovering_check(NG, alpha, top);
    const std::size_t meet = nc.commutators.intersect(deep).size();
    std::string detail = "{[alpha,g]} meets N_" + std::to_string(k * p + 2) + " in " + std::to_string(meet) +
                         " element(s)";
    if (nc.witness) detail += "; uncovered in N_" + std::to_string(k * p + 1) + ": " + G.element(*nc.witness).to_string();
    record("nottingham_noncovering", meet == 1 && nc.uncovered, detail);
  }

  const NonCoveringVerdict ncu = noncovering_check(H, u, Hi);
  record("noncovering_u", ncu.uncovered, ncu.witness ? "uncovered " + H.format(*ncu.witness) : "H_i covered");
  const NonCoveringVerdict ncv = noncovering_check(H, v, Hi);
  record("noncovering_v", ncv.uncovered, ncv.witness ? "uncovered " + H.format(*ncv.witness) : "H_i covered");

  const Witnesses ws = witness_search(H, u, v, Hi);
  record("witnesses", ws.found(), ws.detail);
  cert.pair1 = {H.format(u), H.format(v)};
  std::optional<BeauvilleStructure> structure;
  if (ws.found()) {
    cert.witness_w = H.format(*ws.w);
    cert.witness_z = H.format(*ws.z);
    structure = BeauvilleStructure{{u, v}, {H.inv(H.mul(u, *ws.w)), H.mul(v, *ws.z)}};
    cert.pair2 = {H.format(structure->pair2.x), H.format(structure->pair2.y)};
    const BeauvilleVerdict verdict = is_beauville_structure(H, *structure);
    record("beauville_structure", verdict.ok, verdict.reason);
  } else {
    record("beauville_structure", false, "no witnesses, structure not built");
  }

  try {
    const std::vector<Elem> images{H.inv(u), H.inv(v)};
    const Hom theta = automorphism_from_images(H, images);
    bool involution = true, inverts = true;
    for (Elem e = 0; e < H.order(); ++e) involution = involution && theta(theta(e)) == e;
    for (Elem t : Hi.members()) inverts = inverts && theta(t) == H.inv(t);
    record("inversion_automorphism", involution && inverts,
           std::string(involution ? "theta^2 = 1" : "theta^2 != 1") +
               (inverts ? ", inverts H_i" : ", does not invert H_i"));
    if (structure) {
      record("strongly_real", strongly_real_check(H, *structure, theta), "theta inverts x1, y1, x2, y2");
    } else {
      record("strongly_real", false, "no structure to test");
    }
  } catch (const HomRejected& e) {
    record("inversion_automorphism", false, std::string(e.what()) + ": " + e.failing_relator());
    record("strongly_real", false, "no automorphism");
  }

  const std::uint32_t K = expected_exponent_log(p, i);
  const std::uint64_t pK = sat_pow(p, K);
  cert.exponent = exponent(H);
  cert.order_uv = element_order(H, uv);
  record("exponent", cert.exponent == pK,
         "exp H = " + std::to_string(cert.exponent) + ", expected p^ceil(i/(p-1)) = " + std::to_string(pK));
  record("order_uv", cert.order_uv == pK,
         "o(uv) = " + std::to_string(cert.order_uv) + ", expected " + std::to_string(pK));

  {
    // Least K' with gamma_(K'(p-1)+1)(H) = 1; the bound is exp Omega_1 <= p^K'.
    std::uint32_t kk = 1;
    while (true) {
      const std::size_t idx = static_cast<std::size_t>(kk) * (p - 1) + 1;
      if (idx > series.size() || series[idx - 1].order() == 1) break;
      ++kk;
    }
    const Subgroup omega = characteristic_subgroup(H, CharacteristicKind::omega, 1);
    const std::uint64_t e = exponent(H, omega);
    const std::uint64_t bound = sat_pow(p, kk);
    record("easterfield", e <= bound,
           "exp Omega_1(H) = " + std::to_string(e) + " <= p^" + std::to_string(kk) + " = " + std::to_string(bound) +
               " (|Omega_1| = " + std::to_string(omega.order()) + ")");
  }

  {
    const MaximalClassGroup P = construct_P(p, i);
    const LayerReport layers = verify_layer_orders(P);
    const PsiToP psi = psi_to_P(H, P);
    const bool ok = layers.ok && psi.accepted && psi.surjective && psi.class_bound_verified && psi.image_uv_is_s1 &&
                    psi.order_s1 == pK && cert.order_uv >= psi.order_s1;
    std::string detail = "|P| = " + std::to_string(P.group().order()) + ", o(s1) = " + std::to_string(psi.order_s1) +
                         ", psi(uv) " + (psi.image_uv_is_s1 ? "= s1" : "!= s1") + ", " +
                         (psi.accepted ? (psi.surjective ? "epimorphism" : "not onto") : "rejected: " + psi.failure) +
                         "; convention " + kSemidirectConvention;
    for (const auto& f : layers.failures) detail += "; " + f;
    record("maximal_class_psi", ok, detail);
  }

  cert.wall_ms = std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start).count();
  return cert;
}

}  // namespace beauville
