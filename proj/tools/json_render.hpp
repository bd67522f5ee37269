#pragma once

// ordered_json renderers for the CLI; field order is part of the output format.

#include <optional>
#include <string>
#include <vector>

#include "circwl.hpp"
#include "json.hpp"

namespace circwl::cli {

using Json = nlohmann::ordered_json;

inline Json members_json(const GroupSubset& s) { return Json(s.members()); }

inline Json params_json(const std::optional<DezaParams>& p) {
  if (!p) return nullptr;
  return Json{{"n", p->n}, {"k", p->k}, {"b", p->b}, {"a", p->a}};
}

inline Json deza_json(const DezaReport& r) {
  Json out;
  out["n"] = r.n;
  out["k"] = r.k;
  out["deza"] = r.is_deza;
  out["srg"] = r.is_srg;
  out["strict"] = r.is_strictly_deza;
  out["ddg"] = r.is_ddg;
  out["b"] = r.params ? Json(r.params->b) : Json(nullptr);
  out["a"] = r.params ? Json(r.params->a) : Json(nullptr);
  return out;
}

inline Json ddg_json(const std::optional<DdgParams>& d) {
  if (!d) return nullptr;
  return Json{{"n", d->n},
              {"k", d->k},
              {"within", d->within},
              {"between", d->between},
              {"classes", d->classes},
              {"class_size", d->class_size}};
}

inline Json family_json(const std::optional<FamilySpec>& f) {
  if (!f) return nullptr;
  Json out;
  out["label"] = to_string(f->label);
  switch (f->label) {
    case FamilyLabel::G1:
    case FamilyLabel::G2:
    case FamilyLabel::G3: out["m"] = f->m; break;
    case FamilyLabel::G4:
    case FamilyLabel::G5:
      out["l"] = f->l;
      out["m"] = f->m;
      break;
    case FamilyLabel::G6:
    case FamilyLabel::G7:
    case FamilyLabel::G8: out["p"] = f->p; break;
    case FamilyLabel::F1:
      out["p"] = f->p;
      out["q"] = f->q;
      break;
    case FamilyLabel::F2: out["k"] = f->k; break;
    case FamilyLabel::SP8:
    case FamilyLabel::SP9: break;
  }
  return out;
}

inline Json dim_json(const DimBounds& d) {
  Json trace = Json::array();
  for (const auto& e : d.trace) trace.push_back(e.rule + ": " + e.premise);
  return Json{{"lower", d.lower},
              {"upper", d.upper ? Json(*d.upper) : Json(nullptr)},
              {"interval", d.interval()},
              {"trace", trace}};
}

inline Json rank4_json(const std::optional<Rank4Form>& f) {
  if (!f) return nullptr;
  return Json{{"case", to_string(f->tag)}, {"description", describe(*f)}};
}

inline Json rank3_json(const std::optional<Rank3Form>& f) {
  if (!f) return nullptr;
  return Json{{"case", to_string(f->tag)}, {"description", describe(*f)}};
}

inline Json record_json(const SearchRecord& r) {
  Json out;
  out["n"] = r.n;
  out["set"] = members_json(r.connection);
  out["params"] = params_json(r.params);
  out["srg"] = r.is_srg;
  out["strict"] = r.is_strict;
  out["ddg"] = r.is_ddg;
  out["wl_rank"] = r.wl_rank;
  out["rank4_case"] = rank4_json(r.rank4);
  out["rank3_case"] = rank3_json(r.rank3);
  out["family"] = family_json(r.family);
  out["dim"] = dim_json(r.dim);
  return out;
}

inline Json stats_json(const SurveyStats& s) {
  return Json{{"sets_enumerated", s.sets_enumerated},
              {"deza_survivors", s.deza_survivors},
              {"closures", s.closures},
              {"axiom_failures", s.axiom_failures},
              {"triple_identity_checks", s.triple_identity_checks},
              {"triple_identity_failures", s.triple_identity_failures},
              {"closure_constant_failures", s.closure_constant_failures},
              {"subgroup_chain_checks", s.subgroup_chain_checks},
              {"subgroup_chain_failures", s.subgroup_chain_failures}};
}

inline Json basic_sets_json(const SchurRing& a) {
  Json out = Json::array();
  for (const auto& x : a.basic_sets()) out.push_back(members_json(x));
  return out;
}

}  // namespace circwl::cli
