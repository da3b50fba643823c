#include "ngeta/report.hpp"

#include <sstream>

#include "ngeta/graph6.hpp"

namespace ngeta {

namespace {

std::string num(std::uint64_t v) { return std::to_string(v); }

Json certificates_json(const std::vector<Certificate>& certs) {
  Json out = Json::array();
  for (const auto& c : certs) {
    Json canonical = c.form ? Json(emit_graph6(c.form->graph())) : Json(nullptr);
    out.push_back({{"canonical", canonical}, {"witness", emit_graph6(c.witness)}});
  }
  return out;
}

std::string joined(const std::vector<Certificate>& certs) {
  std::string out;
  for (const auto& c : certs) {
    if (!out.empty()) out += ',';
    out += emit_graph6(c.form ? c.form->graph() : c.witness);
  }
  return out;
}

}  // namespace

Json eta_json(const Graph& g, Count eta) { return {{"graph6", emit_graph6(g)}, {"eta", num(eta)}}; }

Json profile_json(const Graph& g, const EtaProfile& profile) {
  Json counts = Json::array();
  for (int k = 1; k <= profile.order(); ++k) counts.push_back(num(profile.at(k)));
  return {{"graph6", emit_graph6(g)}, {"total", num(profile.total())}, {"counts", counts}};
}

Json ng_json(const Graph& g, const NgReport& r) {
  return {{"graph6", emit_graph6(g)},
          {"eta_g", num(r.eta_g)},
          {"eta_gbar", num(r.eta_gbar)},
          {"sum", num(r.sum)},
          {"ng_set_size", num(r.ng_set_size)}};
}

Json graph_json(const Graph& g) {
  return {{"graph6", emit_graph6(g)}, {"order", num(g.order())}, {"edges", num(g.edge_count())}};
}

Json extremal_json(const ExtremalReport& r) {
  return {{"class", r.class_spec},
          {"order", num(r.order)},
          {"class_size", num(r.class_size)},
          {"min", num(r.min)},
          {"max", num(r.max)},
          {"argmin", certificates_json(r.argmin)},
          {"argmax", certificates_json(r.argmax)}};
}

Json law_json(const LawReport& r) {
  Json counterexamples = Json::array();
  for (const auto& c : r.counterexamples) counterexamples.push_back({{"graph6", c.graph6}, {"detail", c.detail}});
  return {{"law", r.law},
          {"domain", r.domain},
          {"instances_checked", num(r.instances_checked)},
          {"pass", r.pass()},
          {"counterexample_count", num(r.counterexample_total)},
          {"counterexamples", counterexamples},
          {"notes", r.notes}};
}

std::string eta_tsv(const Graph& g, Count eta) { return emit_graph6(g) + '\t' + num(eta); }

std::string profile_tsv(const Graph& g, const EtaProfile& profile) {
  std::string out = emit_graph6(g) + '\t' + num(profile.total());
  for (int k = 1; k <= profile.order(); ++k) out += '\t' + num(profile.at(k));
  return out;
}

std::string ng_tsv(const Graph& g, const NgReport& r) {
  return emit_graph6(g) + '\t' + num(r.eta_g) + '\t' + num(r.eta_gbar) + '\t' + num(r.sum) + '\t' +
         num(r.ng_set_size);
}

std::string graph_tsv(const Graph& g) {
  return emit_graph6(g) + '\t' + num(g.order()) + '\t' + num(g.edge_count());
}

std::string extremal_tsv(const ExtremalReport& r) {
  std::ostringstream out;
  out << r.class_spec << '\t' << r.order << '\t' << r.class_size << '\t' << r.min << '\t' << r.max << '\t'
      << joined(r.argmin) << '\t' << joined(r.argmax);
  return out.str();
}

std::string law_tsv(const LawReport& r) {
  std::ostringstream out;
  out << r.law << '\t' << r.domain << '\t' << r.instances_checked << '\t' << (r.pass() ? "pass" : "fail") << '\t'
      << r.counterexample_total;
  return out.str();
}

}  // namespace ngeta
