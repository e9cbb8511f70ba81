#include "carlgoss/io.hpp"

#include "carlgoss/common.hpp"

namespace carlgoss {

json poly_json(const Poly& a) {
  json coeffs = json::array();
  for (fq_code c : a.coeffs()) coeffs.push_back(static_cast<int>(c));
  return coeffs;
}

Poly poly_from_json(const Fq* F, const json& j) {
  if (!j.is_array()) throw precondition_error("poly: expected a code array");
  std::vector<fq_code> c;
  c.reserve(j.size());
  for (const json& v : j) {
    long long code = v.get<long long>();
    if (code < 0 || code >= F->q()) throw precondition_error("poly: code out of range");
    c.push_back(static_cast<fq_code>(code));
  }
  return Poly(F, std::move(c));
}

json padic_json(const PadicElem& a) {
  return json{{"rep", poly_json(a.rep())}, {"prec", a.prec()}};
}

PadicElem padic_from_json(const PrimeCtx* P, const json& j) {
  return PadicElem(P, poly_from_json(P->field(), j.at("rep")), j.at("prec").get<int>());
}

json zp_json(const ZpApprox& y) {
  return json{{"p", y.p()}, {"value", y.value()}, {"digits", y.digits()}};
}

ZpApprox zp_from_json(const json& j) {
  return ZpApprox(j.at("p").get<int>(), j.at("value").get<long long>(),
                  j.at("digits").get<int>());
}

json laurent_json(const LaurentElem& x) {
  json out{{"val", x.val_raw()}, {"coeffs", json::array()}};
  for (fq_code c : x.coeffs()) out["coeffs"].push_back(static_cast<int>(c));
  if (x.exact())
    out["prec"] = "exact";
  else
    out["prec"] = x.abs_prec();
  return out;
}

LaurentElem laurent_from_json(const Fq* F, const json& j) {
  std::vector<fq_code> c;
  for (const json& v : j.at("coeffs")) {
    long long code = v.get<long long>();
    if (code < 0 || code >= F->q()) throw precondition_error("laurent: code out of range");
    c.push_back(static_cast<fq_code>(code));
  }
  int prec = j.at("prec").is_string() ? LaurentElem::EXACT : j.at("prec").get<int>();
  return LaurentElem(F, j.at("val").get<int>(), std::move(c), prec);
}

json groupring_json(const GroupRingElem& g) {
  json terms = json::array();
  for (int idx = 0; idx < g.group()->size(); ++idx)
    if (g.coeff(idx) != 0) terms.push_back(json::array({idx, g.coeff(idx)}));
  return json{{"level", g.group()->level()}, {"terms", terms}};
}

GroupRingElem groupring_from_json(const GammaLevel* G, const json& j) {
  if (j.at("level").get<int>() != G->level())
    throw precondition_error("group ring: level mismatch");
  GroupRingElem out(G);
  for (const json& term : j.at("terms")) {
    int idx = term.at(0).get<int>();
    int val = term.at(1).get<int>();
    if (idx < 0 || idx >= G->size() || val < 0 || val >= G->ctx()->residue_size())
      throw precondition_error("group ring: term out of range");
    out.set_coeff(idx, val);
  }
  return out;
}

json theta_json(const ThetaSeries& th) {
  json coeffs = json::array();
  for (const GroupRingElem& c : th.coeff) coeffs.push_back(groupring_json(c));
  return json{{"level", th.n}, {"i", th.i}, {"xdeg", th.D}, {"coeffs", coeffs}};
}

json dirfunction_json(const DirFunction& f) {
  json table = json::array();
  for (const PadicElem& v : f.table) table.push_back(padic_json(v));
  return json{{"level", f.n}, {"digits", f.m}, {"table", table}};
}

json lseries_json(const std::vector<PadicElem>& c) {
  json out = json::array();
  for (const PadicElem& v : c) out.push_back(padic_json(v));
  return out;
}

json minvariant_json(const MInvariant& mi) {
  json rows = json::array();
  for (const MClassRow& r : mi.rows)
    rows.push_back(json{{"y", r.y}, {"j", r.j}, {"v", r.v}, {"floor", r.floor}});
  json out{{"i", mi.i},         {"forced", mi.forced}, {"resolved", mi.resolved},
           {"prec", mi.M},      {"digits", mi.m},      {"rows", rows}};
  if (mi.resolved) {
    out["value"] = mi.value;
    out["witness_y"] = mi.witness_y;
    out["witness_j"] = mi.witness_j;
  }
  return out;
}

std::string dump_canonical(const json& j) { return j.dump(2) + "\n"; }

}  // namespace carlgoss
