#include "psi/serialize.hpp"

#include "psi/errors.hpp"
#include "psi/parse.hpp"

namespace psi {

Json to_json(const Partition& a) {
  Json j = Json::array();
  for (Exponent p : a.parts()) j.push_back(p);
  return j;
}

Partition partition_from_json(const Json& j) {
  std::vector<Exponent> parts;
  for (const auto& p : j) parts.push_back(p.get<Exponent>());
  return Partition(std::move(parts));
}

namespace {

Json types_json(const std::vector<Partition>& types) {
  Json j = Json::array();
  for (const auto& t : types) j.push_back(to_json(t));
  return j;
}

std::vector<Partition> types_from_json(const Json& j) {
  std::vector<Partition> out;
  for (const auto& t : j) out.push_back(partition_from_json(t));
  return out;
}

}  // namespace

Json to_json(const Permutation& p) {
  Json j = Json::array();
  for (auto image : p.images()) j.push_back(image + 1);
  return j;
}

Json to_json(const GradedPiece& piece) {
  Json basis = Json::array();
  for (const auto& b : piece.basis()) basis.push_back(b.to_string());
  return Json{{"degree", piece.degree()}, {"dim", piece.dim()}, {"basis", basis}};
}

Json to_json(const SymmetricIdeal& ideal, std::uint64_t hilbert_cutoff) {
  Json gens = Json::array();
  for (const auto& g : ideal.generators()) gens.push_back(g.to_string());
  Json hilbert = Json::object();
  for (std::uint64_t n = 0; n <= hilbert_cutoff; ++n) {
    hilbert[std::to_string(n)] = hilbert_I(ideal, n);
  }
  return Json{{"d", ideal.num_vars()},
              {"field", ideal.field().to_string()},
              {"provenance", to_string(ideal.provenance())},
              {"generators", gens},
              {"mu", mu(ideal)},
              {"hilbert", hilbert}};
}

Json to_json(const StabilizerReport& stab) {
  Json elements = Json::array();
  Json cycles = Json::array();
  Json characters = Json::array();
  for (std::size_t i = 0; i < stab.elements.size(); ++i) {
    elements.push_back(to_json(stab.elements[i]));
    cycles.push_back(stab.elements[i].to_cycle_string());
    characters.push_back(stab.characters[i].get_str());
  }
  return Json{{"d", stab.d},
              {"size", stab.size()},
              {"elements", elements},
              {"cycles", cycles},
              {"characters", characters},
              {"is_full_group", stab.is_full_group},
              {"is_alternating", stab.is_alternating}};
}

Json to_json(const PsiVerdict& verdict) {
  Json j{{"verdict", to_string(verdict.verdict)}};
  if (verdict.witness) j["witness"] = verdict.witness->to_string();
  Json cert = nullptr;
  if (const auto* c = std::get_if<MuBoundCertificate>(&verdict.certificate)) {
    cert = Json{{"kind", "MuBound"}, {"mu", c->mu}, {"d_factorial", c->d_factorial}};
  } else if (const auto* c = std::get_if<OrderTypePairCertificate>(&verdict.certificate)) {
    cert = Json{{"kind", "OrderTypePair"}, {"degree", c->degree}, {"a", types_json(c->a)},
                {"b", types_json(c->b)},       {"g1", c->g1.to_string()}, {"g2", c->g2.to_string()}};
  } else if (const auto* c = std::get_if<GeneratorDegreesCertificate>(&verdict.certificate)) {
    cert = Json{{"kind", "GeneratorDegrees"}, {"low", c->low}, {"high", c->high}};
  }
  j["certificate"] = cert;
  j["notes"] = verdict.notes;
  return j;
}

PsiVerdict verdict_from_json(const Json& j, std::size_t d) {
  PsiVerdict v;
  const auto kind = j.at("verdict").get<std::string>();
  if (kind == "IsPsi") {
    v.verdict = VerdictKind::IsPsi;
  } else if (kind == "NotPsi") {
    v.verdict = VerdictKind::NotPsi;
  } else if (kind == "Inconclusive") {
    v.verdict = VerdictKind::Inconclusive;
  } else {
    throw DomainError("unknown verdict '" + kind + "'");
  }
  if (j.contains("witness")) v.witness = parse_polynomial(j.at("witness").get<std::string>(), d);
  if (j.contains("notes")) v.notes = j.at("notes").get<std::string>();
  const Json& cert = j.at("certificate");
  if (cert.is_null()) return v;
  const auto cert_kind = cert.at("kind").get<std::string>();
  if (cert_kind == "MuBound") {
    v.certificate = MuBoundCertificate{cert.at("mu").get<std::size_t>(),
                                       cert.at("d_factorial").get<std::uint64_t>()};
  } else if (cert_kind == "OrderTypePair") {
    v.certificate = OrderTypePairCertificate{
        cert.at("degree").get<std::uint64_t>(), types_from_json(cert.at("a")),
        types_from_json(cert.at("b")), parse_polynomial(cert.at("g1").get<std::string>(), d),
        parse_polynomial(cert.at("g2").get<std::string>(), d)};
  } else if (cert_kind == "GeneratorDegrees") {
    v.certificate = GeneratorDegreesCertificate{cert.at("low").get<std::uint64_t>(),
                                                cert.at("high").get<std::uint64_t>()};
  } else {
    throw DomainError("unknown certificate kind '" + cert_kind + "'");
  }
  return v;
}

Json to_json(const HFTable& table) {
  Json j = Json::object();
  for (std::size_t n = 0; n < table.values.size(); ++n) j[std::to_string(n)] = table.values[n];
  return j;
}

}  // namespace psi
