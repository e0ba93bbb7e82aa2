#include "beauville/certificate.hpp"

#include <fstream>
#include <optional>
#include <system_error>

#include <json.hpp>

#include "beauville/beauville.hpp"
#include "beauville/errors.hpp"
#include "beauville/group.hpp"
#include "beauville/group_algorithms.hpp"
#include "beauville/presentation.hpp"

namespace beauville {

using nlohmann::json;

bool Certificate::all_pass() const {
  if (checks.empty()) return false;
  for (const auto& c : checks) {
    if (!c.pass) return false;
  }
  return true;
}

const CheckOutcome* Certificate::find(const std::string& name) const {
  for (const auto& c : checks) {
    if (c.name == name) return &c;
  }
  return nullptr;
}

std::string to_json(const Certificate& c) {
  json checks = json::array();
  for (const auto& ch : c.checks) checks.push_back({{"name", ch.name}, {"pass", ch.pass}, {"detail", ch.detail}});
  const json j = {{"p", c.p},
                  {"k", c.k},
                  {"i", c.i},
                  {"group_order", c.group_order},
                  {"exponent", c.exponent},
                  {"order_uv", c.order_uv},
                  {"witness_w", c.witness_w},
                  {"witness_z", c.witness_z},
                  {"pair1", c.pair1},
                  {"pair2", c.pair2},
                  {"checks", checks},
                  {"version", c.version},
                  {"wall_ms", c.wall_ms}};
  return j.dump(2) + "\n";
}

Certificate certificate_from_json(const std::string& text) {
  try {
    const json j = json::parse(text);
    Certificate c;
    c.p = j.at("p").get<std::uint32_t>();
    c.k = j.at("k").get<std::uint32_t>();
    c.i = j.at("i").get<std::uint32_t>();
    c.group_order = j.at("group_order").get<std::uint64_t>();
    c.exponent = j.at("exponent").get<std::uint64_t>();
    c.order_uv = j.at("order_uv").get<std::uint64_t>();
    c.witness_w = j.at("witness_w").get<std::string>();
    c.witness_z = j.at("witness_z").get<std::string>();
    c.pair1 = j.at("pair1").get<std::array<std::string, 2>>();
    c.pair2 = j.at("pair2").get<std::array<std::string, 2>>();
    for (const auto& ch : j.at("checks")) {
      c.checks.push_back({ch.at("name").get<std::string>(), ch.at("pass").get<bool>(), ch.at("detail").get<std::string>()});
    }
    c.version = j.at("version").get<std::string>();
    c.wall_ms = j.at("wall_ms").get<std::int64_t>();
    return c;
  } catch (const json::parse_error& e) {
    throw ParseError(std::string("malformed certificate: ") + e.what(), 1, e.byte);
  } catch (const json::exception& e) {
    throw ParseError(std::string("bad certificate field: ") + e.what(), 1, 0);
  }
}

void write_atomically(const std::filesystem::path& path, const std::string& contents) {
  std::filesystem::path tmp = path;
  tmp += ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw StateError("cannot open " + tmp.string() + " for writing");
    out << contents;
    out.flush();
    if (!out) throw StateError("failed writing " + tmp.string());
  }
  std::error_code ec;
  std::filesystem::rename(tmp, path, ec);
  if (ec) {
    std::filesystem::remove(tmp);
    throw StateError("cannot rename " + tmp.string() + " to " + path.string() + ": " + ec.message());
  }
}

std::vector<CheckOutcome> recheck_certificate(const Certificate& c, const EnumerationLimits& limits) {
  std::vector<CheckOutcome> out;
  if (c.p < 3 || c.k < 1 || c.i != c.k * (c.p - 1) + 1) {
    out.push_back({"parameters", false, "inconsistent p, k, i"});
    return out;
  }
  const Presentation pres = gamma_quotient_presentation(c.p, c.i);
  const FiniteGroup H = group_from_presentation(pres, limits);
  out.push_back({"group_order", H.order() == c.group_order,
                 "rebuilt " + std::to_string(H.order()) + ", recorded " + std::to_string(c.group_order)});

  auto eval = [&](const std::string& text) -> std::optional<Elem> {
    try {
      return H.evaluate(parse_word(text, pres.generator_names));
    } catch (const Error&) {
      return std::nullopt;
    }
  };
  const auto w = eval(c.witness_w), z = eval(c.witness_z);
  const auto x1 = eval(c.pair1[0]), y1 = eval(c.pair1[1]);
  const auto x2 = eval(c.pair2[0]), y2 = eval(c.pair2[1]);
  const bool parsed = w && z && x1 && y1 && x2 && y2;
  out.push_back({"words", parsed, parsed ? "all words evaluate in H" : "some recorded word does not parse"});
  if (!parsed) return out;

  const Elem u = H.generator(0), v = H.generator(1);
  out.push_back({"pair1", *x1 == u && *y1 == v, "pair1 = (u, v)"});
  out.push_back({"pair2", *x2 == H.inv(H.mul(u, *w)) && *y2 == H.mul(v, *z), "pair2 = ((uw)^-1, vz)"});

  const auto series = lower_central_series(H);
  const Subset Hi = series.size() >= c.i ? series[c.i - 1].elements : Subset(H.order());
  const std::uint64_t p = c.p;
  const bool w_ok = Hi.contains(*w) && element_order(H, *w) == p && !commutator_set(H, u).contains(*w);
  const bool z_ok = Hi.contains(*z) && element_order(H, *z) == p && !commutator_set(H, v).contains(*z);
  out.push_back({"witnesses", w_ok && z_ok && is_central(H, Hi), "w, z in H_i of order p outside the commutator sets"});

  const BeauvilleStructure s{{*x1, *y1}, {*x2, *y2}};
  const BeauvilleVerdict verdict = is_beauville_structure(H, s);
  out.push_back({"beauville_structure", verdict.ok, verdict.reason});

  try {
    const std::vector<Elem> images{H.inv(u), H.inv(v)};
    const Hom theta = automorphism_from_images(H, images);
    out.push_back({"strongly_real", strongly_real_check(H, s, theta), "inversion automorphism"});
  } catch (const HomRejected& e) {
    out.push_back({"strongly_real", false, e.what()});
  }
  return out;
}

}  // namespace beauville
