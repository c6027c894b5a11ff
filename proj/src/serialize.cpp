#include "grsdual/serialize.hpp"

#include <cstdio>
#include <fstream>

#include "grsdual/constructions.hpp"

namespace grsdual {

namespace {
[[noreturn]] void malformed(const std::string& why) { raise(Errc::MalformedDescriptor, why); }

uint64_t get_uint(const Json& j, const char* key) {
  if (!j.contains(key) || !j[key].is_number_unsigned())
    malformed(std::string("missing or non-integer field '") + key + "'");
  return j[key].get<uint64_t>();
}

const Json& get_array(const Json& j, const char* key) {
  if (!j.contains(key) || !j[key].is_array())
    malformed(std::string("missing or non-array field '") + key + "'");
  return j[key];
}
}  // namespace

Json field_to_json(const FieldContext& F) {
  return Json{{"p", F.p()}, {"m", F.m()}, {"modulus", F.modulus()}};
}

FieldPtr field_from_json(const Json& j, uint64_t max_q) {
  if (!j.is_object()) malformed("field descriptor must be an object");
  uint64_t p = get_uint(j, "p");
  uint64_t m = get_uint(j, "m");
  FieldPtr F;
  try {
    F = build_field(static_cast<uint32_t>(p), static_cast<uint32_t>(m), max_q);
  } catch (const Error& e) {
    if (e.code() == Errc::FieldTooLarge) throw;
    malformed(std::string("field rejected: ") + e.what());
  }
  if (j.contains("modulus")) {
    std::vector<uint32_t> mod;
    for (const auto& c : get_array(j, "modulus")) {
      if (!c.is_number_unsigned()) malformed("modulus coefficients must be integers");
      mod.push_back(c.get<uint32_t>());
    }
    if (mod != F->modulus()) malformed("modulus differs from the canonical choice");
  }
  return F;
}

Json element_to_json(const FieldElement& x) { return Json(x.coeffs()); }

FieldElement element_from_json(const Json& j, const FieldContext& F) {
  if (!j.is_array() || j.size() != F.m()) malformed("element needs exactly m coefficients");
  std::vector<uint32_t> c;
  for (const auto& v : j) {
    if (!v.is_number_unsigned() || v.get<uint64_t>() >= F.p())
      malformed("element coefficient out of range");
    c.push_back(v.get<uint32_t>());
  }
  return F.from_coeffs(c);
}

Json point_to_json(const EvalPoint& p) {
  if (p.is_infinity()) return Json{{"kind", "infinity"}};
  return Json{{"kind", "finite"}, {"coeffs", p.value().coeffs()}};
}

EvalPoint point_from_json(const Json& j, const FieldContext& F) {
  if (!j.is_object() || !j.contains("kind") || !j["kind"].is_string())
    malformed("point needs a 'kind' tag");
  std::string kind = j["kind"].get<std::string>();
  if (kind == "infinity") return EvalPoint::infinity();
  if (kind != "finite") malformed("unknown point kind '" + kind + "'");
  if (!j.contains("coeffs")) malformed("finite point needs 'coeffs'");
  return EvalPoint::finite(element_from_json(j["coeffs"], F));
}

Json code_to_json(const GrsCode& code, bool include_matrix) {
  Json j;
  j["field"] = field_to_json(*code.field());
  j["n"] = code.n();
  j["k"] = code.k();
  Json pts = Json::array();
  for (const auto& p : code.points()) pts.push_back(point_to_json(p));
  j["points"] = pts;
  Json sc = Json::array();
  for (const auto& v : code.scaling().values()) sc.push_back(element_to_json(v));
  j["scaling"] = sc;
  if (include_matrix) {
    Json rows = Json::array();
    for (size_t i = 0; i < code.k(); ++i) {
      Json row = Json::array();
      for (size_t c = 0; c < code.n(); ++c) row.push_back(element_to_json(code.generator().get(i, c)));
      rows.push_back(row);
    }
    j["generator"] = rows;
  }
  j["provenance"] = code.provenance();
  return j;
}

GrsCode code_from_json(const Json& j, uint64_t max_q) {
  if (!j.is_object()) malformed("code descriptor must be an object");
  if (!j.contains("field")) malformed("missing 'field'");
  FieldPtr F = field_from_json(j["field"], max_q);
  uint64_t n = get_uint(j, "n");
  uint64_t k = get_uint(j, "k");
  const Json& jpts = get_array(j, "points");
  const Json& jsc = get_array(j, "scaling");
  if (jpts.size() != n) malformed("'points' length differs from n");
  if (jsc.size() != n) malformed("'scaling' length differs from n");

  std::vector<EvalPoint> pts;
  pts.reserve(n);
  for (const auto& jp : jpts) pts.push_back(point_from_json(jp, *F));
  std::vector<FieldElement> sc;
  sc.reserve(n);
  for (const auto& jv : jsc) sc.push_back(element_from_json(jv, *F));

  Provenance prov = Provenance::object();
  if (j.contains("provenance")) {
    if (!j["provenance"].is_object()) malformed("'provenance' must be an object");
    prov = j["provenance"];
  }

  try {
    EvaluationSet points(F, std::move(pts));
    ScalingVector scaling(F, std::move(sc));
    if (!j.contains("generator"))
      return make_code(F, static_cast<size_t>(k), std::move(points), std::move(scaling),
                       std::move(prov));
    const Json& jg = get_array(j, "generator");
    if (jg.size() != k) malformed("'generator' row count differs from k");
    Matrix G(F.get(), k, n);
    for (size_t i = 0; i < k; ++i) {
      if (!jg[i].is_array() || jg[i].size() != n) malformed("generator row length differs from n");
      for (size_t c = 0; c < n; ++c) G.set(i, c, element_from_json(jg[i][c], *F));
    }
    return GrsCode::with_generator(F, static_cast<size_t>(k), std::move(points),
                                   std::move(scaling), std::move(G), std::move(prov));
  } catch (const Error& e) {
    if (e.code() == Errc::MalformedDescriptor) throw;
    malformed(std::string("descriptor rejected: ") + e.what());
  }
}

Json transform_to_json(const MobiusTransform& g) {
  return Json{{"a", element_to_json(g.a())},
              {"b", element_to_json(g.b())},
              {"c", element_to_json(g.c())},
              {"d", element_to_json(g.d())}};
}

MobiusTransform transform_from_json(const Json& j, const FieldContext& F) {
  if (!j.is_object()) malformed("transform must be an object");
  for (const char* key : {"a", "b", "c", "d"})
    if (!j.contains(key)) malformed(std::string("transform missing '") + key + "'");
  try {
    return {element_from_json(j["a"], F), element_from_json(j["b"], F),
            element_from_json(j["c"], F), element_from_json(j["d"], F)};
  } catch (const Error& e) {
    if (e.code() == Errc::MalformedDescriptor) throw;
    malformed(std::string("transform rejected: ") + e.what());
  }
}

Json certificate_to_json(const TransportCertificate& cert) {
  Json j;
  j["g"] = transform_to_json(cert.g);
  j["original"] = code_to_json(cert.original);
  j["transported"] = code_to_json(cert.transported);
  Json mult = Json::array();
  for (const auto& m : cert.multipliers) mult.push_back(element_to_json(m));
  j["multipliers"] = mult;
  j["row_space_equal"] = cert.row_space_equal;
  j["self_dual"] = cert.self_dual;
  return j;
}

Json self_dual_report_to_json(const SelfDualReport& rep) {
  Json j;
  j["verdict"] = rep.verdict;
  j["length_ok"] = rep.length_ok;
  j["rank_ok"] = rep.rank_ok;
  j["gram_zero"] = rep.gram_zero;
  if (rep.witness_rows) {
    j["witness"] = Json{{"row_i", rep.witness_rows->first},
                        {"row_j", rep.witness_rows->second},
                        {"value", element_to_json(*rep.witness_value)}};
  } else {
    j["witness"] = nullptr;
  }
  return j;
}

Json mds_report_to_json(const MdsReport& rep) {
  Json j;
  j["mode"] = rep.mode;
  if (rep.mode == "skip")
    j["verdict"] = nullptr;
  else
    j["verdict"] = rep.verdict;
  j["tested"] = rep.tested;
  if (rep.mode == "sampled") {
    j["samples"] = rep.samples;
    j["seed"] = rep.seed;
  }
  if (rep.witness)
    j["witness"] = *rep.witness;
  else
    j["witness"] = nullptr;
  return j;
}

Json verification_report_json(const GrsCode& code, const MdsOptions& opts) {
  SelfDualReport sd = is_self_dual(code);
  MdsReport mds = mds_check(code, opts);
  bool consistent = code.generator_consistent();
  Json j;
  j["n"] = code.n();
  j["k"] = code.k();
  j["design_distance"] = code.n() - code.k() + 1;
  j["self_dual"] = self_dual_report_to_json(sd);
  j["generator_consistent"] = consistent;
  j["mds"] = mds_report_to_json(mds);
  bool mds_ok = mds.mode == "skip" || mds.verdict;
  j["pass"] = sd.verdict && consistent && mds_ok;
  return j;
}

Json length_witness_to_json(const LengthWitness& w) {
  return Json{{"N", w.N},     {"theorem", w.family}, {"case", w.case_tag},
              {"n_prime", w.n_prime}, {"t", w.t},    {"r", w.r}};
}

Json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) raise(Errc::IoFailure, "cannot open " + path);
  Json j = Json::parse(in, nullptr, false);
  if (j.is_discarded()) malformed("invalid JSON in " + path);
  return j;
}

void write_text_file(const std::string& path, const std::string& text) {
  std::string tmp = path + ".tmp";
  {
    std::ofstream out(tmp, std::ios::trunc);
    if (!out) raise(Errc::IoFailure, "cannot open " + tmp + " for writing");
    out << text;
    if (!out) raise(Errc::IoFailure, "short write to " + tmp);
  }
  if (std::rename(tmp.c_str(), path.c_str()) != 0)
    raise(Errc::IoFailure, "cannot move " + tmp + " into place");
}

}  // namespace grsdual
