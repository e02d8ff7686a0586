#include "kneser/report.hpp"

#include "kneser/rational.hpp"

namespace kneser::report {

namespace {

nlohmann::json qp_json(const QPDecomposition& d, const HybridGroup& g) {
  return {{"K", d.k.to_string()},
          {"A1", d.a1.to_string()},
          {"A0", d.a0.to_string()},
          {"B1", d.b1.to_string()},
          {"B0", d.b0.to_string()},
          {"ueWitness", g.finite().format(d.ue_witness)}};
}

}  // namespace

nlohmann::json classification(const ClassificationReport& r, const HybridGroup& g) {
  nlohmann::json j;
  j["surCritical"] = r.sur_critical;
  j["conclusions"] = r.conclusions();
  j["measures"] = {{"A", to_string(r.m_a)}, {"B", to_string(r.m_b)}, {"AB", to_string(r.m_sum)}};
  j["sum"] = r.sum.to_string();
  nlohmann::json w = nlohmann::json::object();
  if (r.p) w["P"] = {{"K", r.p->k.to_string()}, {"order", r.p->k.size()}};
  if (r.e) {
    nlohmann::json e = {{"A'", r.e->a_ext.to_string()},
                        {"B'", r.e->b_ext.to_string()},
                        {"refinement", to_string(r.e->refinement)},
                        {"H", r.e->h.to_string()},
                        {"method", r.e->method}};
    if (!r.e->e2_detail.empty()) e["structure"] = r.e->e2_detail;
    if (r.e->e2_decomposition) e["decomposition"] = qp_json(*r.e->e2_decomposition, g);
    w["E"] = e;
  }
  if (r.k) {
    w["K"] = {{"K", r.k->k.to_string()},
              {"psi", r.k->psi.to_string()},
              {"n", r.k->n},
              {"I", r.k->i.to_string()},
              {"J", r.k->j.to_string()},
              {"a", format_point(g, r.k->a)},
              {"b", format_point(g, r.k->b)}};
  }
  if (r.qp) {
    nlohmann::json q = qp_json(r.qp->decomposition, g);
    q["qp4"] = r.qp->qp4;
    w["QP"] = q;
  }
  j["witnesses"] = w;
  if (r.roman) j["roman"] = to_string(*r.roman);
  nlohmann::json chain = nlohmann::json::array();
  for (const auto& k : r.cascade) chain.push_back(k.to_string());
  j["cascade"] = chain;
  j["diagnostics"] = r.diagnostics;
  return j;
}

std::string classification_text(const ClassificationReport& r, const HybridGroup& g) {
  std::string s;
  s += "m(A) = " + to_string(r.m_a) + ", m(B) = " + to_string(r.m_b) + ", m(A+B) = " + to_string(r.m_sum) + "\n";
  s += "A+B = " + r.sum.to_string() + "\n";
  std::string tags;
  for (const auto& c : r.conclusions()) tags += (tags.empty() ? "" : " ") + c;
  s += "conclusions: " + tags + "\n";
  if (r.p) s += "  P: K = " + r.p->k.to_string() + "\n";
  if (r.e) {
    s += "  E: A' = " + r.e->a_ext.to_string() + ", B' = " + r.e->b_ext.to_string() + " (" +
         to_string(r.e->refinement) + ")\n";
  }
  if (r.k) {
    s += "  K: K = " + r.k->k.to_string() + ", psi = " + r.k->psi.to_string() + ", n = " + std::to_string(r.k->n) +
         ", I = " + r.k->i.to_string() + ", J = " + r.k->j.to_string() + ", a = " + format_point(g, r.k->a) +
         ", b = " + format_point(g, r.k->b) + "\n";
  }
  if (r.qp) {
    const auto& d = r.qp->decomposition;
    s += "  QP: K = " + d.k.to_string() + ", A0 = " + d.a0.to_string() + ", B0 = " + d.b0.to_string() +
         (r.qp->qp4 ? "" : " [QP.4 fails]") + "\n";
  }
  if (r.roman) s += "roman: " + std::string(to_string(*r.roman)) + "\n";
  for (const auto& d : r.diagnostics) s += "note: " + d + "\n";
  return s;
}

nlohmann::json step(const ETransformStep& s, const HybridGroup& g) {
  return {{"e", format_point(g, s.e)},
          {"Ae", s.ae.to_string()},
          {"Be", s.be.to_string()},
          {"measures",
           {{"A", to_string(s.m_a)}, {"B", to_string(s.m_b)}, {"Ae", to_string(s.m_ae)}, {"Be", to_string(s.m_be)}}}};
}

std::string transcript_jsonl(const TransformTranscript& t, const HybridGroup& g) {
  std::string out;
  for (std::size_t i = 0; i < t.steps.size(); ++i) {
    nlohmann::json j = step(t.steps[i].step, g);
    j["step"] = i + 1;
    j["sumSimilar"] = t.steps[i].sum_similar;
    j["shrinkBound"] = t.steps[i].shrink_bound;
    out += j.dump() + "\n";
  }
  out += nlohmann::json{{"stop", t.stop_reason}, {"steps", t.steps.size()}}.dump() + "\n";
  return out;
}

nlohmann::json truncation(const TruncationPair& t) {
  return {{"depth", t.depth},
          {"group", t.group.to_string()},
          {"inner", to_string(t.inner_measure)},
          {"outer", to_string(t.outer_measure)},
          {"gap", to_string(Rational(t.outer_measure - t.inner_measure))}};
}

nlohmann::json truncated_sum(const TruncatedSumReport& r) {
  return {{"depth", r.depth},
          {"lower", to_string(r.lower)},
          {"upper", to_string(r.upper)},
          {"gap", to_string(Rational(r.upper - r.lower))},
          {"innerSum", to_string(r.inner_sum_measure)},
          {"stabilizerOrder", r.stabilizer_order},
          {"outerSurCritical", r.sur_critical_outer}};
}

}  // namespace kneser::report
