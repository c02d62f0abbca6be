#include "relrep/json_io.hpp"

#include "relrep/error.hpp"

namespace relrep {

Json to_json(const Complex& z) { return Json::array({z.real(), z.imag()}); }

Json to_json(const Matrix& m) {
  Json rows = Json::array();
  for (Eigen::Index r = 0; r < m.rows(); ++r) {
    Json row = Json::array();
    for (Eigen::Index c = 0; c < m.cols(); ++c) row.push_back(to_json(m(r, c)));
    rows.push_back(std::move(row));
  }
  return rows;
}

Json to_json(const FourVector& p) { return Json::array({p.t, p.x, p.y, p.z}); }

Complex complex_from_json(const Json& j) {
  if (!j.is_array() || j.size() != 2)
    throw ParseError("complex: expected [re, im]");
  return {j[0].get<double>(), j[1].get<double>()};
}

Matrix matrix_from_json(const Json& j) {
  if (!j.is_array() || j.empty()) throw ParseError("matrix: expected a row array");
  const Eigen::Index rows = static_cast<Eigen::Index>(j.size());
  const Eigen::Index cols = static_cast<Eigen::Index>(j[0].size());
  Matrix m(rows, cols);
  for (Eigen::Index r = 0; r < rows; ++r) {
    if (static_cast<Eigen::Index>(j[r].size()) != cols)
      throw ParseError("matrix: ragged rows");
    for (Eigen::Index c = 0; c < cols; ++c) m(r, c) = complex_from_json(j[r][c]);
  }
  return m;
}

FourVector four_vector_from_json(const Json& j) {
  if (!j.is_array() || j.size() != 4) throw ParseError("four-vector: expected [t,x,y,z]");
  return {j[0].get<double>(), j[1].get<double>(), j[2].get<double>(), j[3].get<double>()};
}

Json to_json(const StateVector& s) {
  Json terms = Json::array();
  for (const auto& term : s.terms) {
    terms.push_back({{"p", to_json(term.ket.p)},
                     {"sigma", to_string(term.ket.sigma)},
                     {"species", term.ket.species.name},
                     {"amp", to_json(term.amp)}});
  }
  return terms;
}

StateVector state_from_json(const Json& j,
                            const std::map<std::string, SpeciesDescriptor>& species) {
  if (!j.is_array()) throw ParseError("state: expected an array of terms");
  StateVector s;
  for (const auto& term : j) {
    const std::string name = term.at("species").get<std::string>();
    const auto found = species.find(name);
    if (found == species.end()) throw ParseError("state: unknown species '" + name + "'");
    Ket ket{four_vector_from_json(term.at("p")),
            parse_half_int(term.at("sigma").get<std::string>()), found->second};
    validate(ket);
    s.add(ket, complex_from_json(term.at("amp")));
  }
  return s;
}

Json to_json(const CoefficientTensor& t) {
  Json entries = Json::array();
  for (Eigen::Index r = 0; r < t.entries.rows(); ++r)
    for (Eigen::Index c = 0; c < t.entries.cols(); ++c)
      entries.push_back(to_json(t.entries(r, c)));
  return {{"kind", t.kind == CoefficientTensor::Kind::U ? "u" : "v"},
          {"momentum", t.momentum ? to_json(*t.momentum) : Json("standard")},
          {"rep", to_string(t.rep)},
          {"entries", std::move(entries)}};
}

CoefficientTensor coefficient_tensor_from_json(const Json& j) {
  CoefficientTensor t;
  const std::string kind = j.at("kind").get<std::string>();
  if (kind != "u" && kind != "v") throw ParseError("coefficient tensor: bad kind");
  t.kind = kind == "u" ? CoefficientTensor::Kind::U : CoefficientTensor::Kind::V;
  if (!(j.at("momentum").is_string() && j.at("momentum") == "standard"))
    t.momentum = four_vector_from_json(j.at("momentum"));
  t.rep = parse_rep_sum(j.at("rep").get<std::string>());
  const auto& entries = j.at("entries");
  const int rows = t.rep.dim();
  if (!entries.is_array() || entries.empty() ||
      entries.size() % static_cast<std::size_t>(rows) != 0)
    throw ParseError("coefficient tensor: entry count does not fit the representation");
  const int cols = static_cast<int>(entries.size()) / rows;
  t.entries.resize(rows, cols);
  for (int r = 0; r < rows; ++r)
    for (int c = 0; c < cols; ++c)
      t.entries(r, c) = complex_from_json(entries[r * cols + c]);
  return t;
}

Json to_json(const OperatorSum& e) {
  const auto mode_json = [](const Mode& m) {
    Json out{{"species", m.species.name}, {"sigma", to_string(m.sigma)}};
    if (m.is_symbolic())
      out["label"] = std::get<std::string>(m.label);
    else
      out["label"] = to_json(std::get<FourVector>(m.label));
    return out;
  };
  Json terms = Json::array();
  for (const auto& t : e.terms) {
    Json deltas = Json::array(), creators = Json::array(), annihilators = Json::array();
    for (const auto& d : t.deltas)
      deltas.push_back(Json::array({mode_json(d.first), mode_json(d.second)}));
    for (const auto& c : t.creators) creators.push_back(mode_json(c));
    for (const auto& a : t.annihilators) annihilators.push_back(mode_json(a));
    terms.push_back({{"coeff", to_json(t.coeff)},
                     {"deltas", std::move(deltas)},
                     {"creators", std::move(creators)},
                     {"annihilators", std::move(annihilators)}});
  }
  return terms;
}

}  // namespace relrep
