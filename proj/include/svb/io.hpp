#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "svb/desing.hpp"
#include "svb/gauss.hpp"
#include "svb/permutation.hpp"
#include "svb/pure.hpp"
#include "svb/surface.hpp"

namespace svb {

using Json = nlohmann::ordered_json;

inline Json perm_to_json(const Permutation& p) { return Json(p.images()); }

inline Permutation perm_from_json(const Json& j) {
  if (!j.is_array()) throw DomainError("perm must be an array of integers");
  return Permutation(j.get<std::vector<int>>());
}

inline const char* kind_tag(ArrowKind k) {
  switch (k) {
    case ArrowKind::Pos: return "+";
    case ArrowKind::Neg: return "-";
    case ArrowKind::Sing: return "s";
  }
  return "?";
}

inline ArrowKind kind_from_tag(const std::string& tag) {
  if (tag == "+") return ArrowKind::Pos;
  if (tag == "-") return ArrowKind::Neg;
  if (tag == "s") return ArrowKind::Sing;
  throw DomainError("unknown arrow kind \"" + tag + "\"");
}

inline Json to_json(const GaussWord& g) {
  Json arrows = Json::array();
  for (const auto& a : g.arrows()) {
    arrows.push_back({{"tail", a.tail}, {"head", a.head}, {"kind", kind_tag(a.kind)}});
  }
  return {{"n", g.strand_count()}, {"arrows", std::move(arrows)}, {"perm", perm_to_json(g.perm())}};
}

inline GaussWord gauss_from_json(const Json& j) {
  try {
    const auto n = j.at("n").get<std::size_t>();
    std::vector<Arrow> arrows;
    for (const auto& a : j.at("arrows")) {
      arrows.push_back({a.at("tail").get<int>(), a.at("head").get<int>(),
                        kind_from_tag(a.at("kind").get<std::string>())});
    }
    return GaussWord(n, std::move(arrows), perm_from_json(j.at("perm")));
  } catch (const nlohmann::json::exception& e) {
    throw DomainError(std::string("malformed Gauss diagram JSON: ") + e.what());
  }
}

inline Json to_json(const FormalSum& f) {
  Json out = Json::array();
  for (const auto& [word, coeff] : f.sorted_by_text()) out.push_back({{"coeff", coeff}, {"word", word}});
  return out;
}

inline Json to_json(const SemidirectPair& p) {
  return {{"pure", print_pure_word(p.pure)}, {"perm", perm_to_json(p.perm)}};
}

inline Json to_json(const SurfaceSummary& s) {
  return {{"euler", s.euler}, {"boundaries", s.boundaries}, {"genus", s.genus}};
}

inline Json to_json(const DegreeSpectrum& s) {
  Json out = Json::object();
  for (const auto& [deg, count] : s) out[std::to_string(deg)] = count;
  return out;
}

}  // namespace svb
