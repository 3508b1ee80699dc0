#include "majorlab/report.hpp"

#include <cmath>

namespace majorlab {

double json_safe(double v) {
  if (std::isnan(v)) return 0.0;
  if (std::isinf(v)) return v > 0 ? kMarginSentinel : -kMarginSentinel;
  return v;
}

namespace {

Json safe_array(const std::vector<double>& v) {
  Json arr = Json::array();
  for (double x : v) arr.push_back(json_safe(x));
  return arr;
}

}  // namespace

Json to_json(const ComplexMatrix& m) {
  Json j;
  j["rows"] = m.rows();
  j["cols"] = m.cols();
  Json data = Json::array();
  for (int i = 0; i < m.rows(); ++i)
    for (int k = 0; k < m.cols(); ++k) {
      data.push_back(m(i, k).real());
      data.push_back(m(i, k).imag());
    }
  j["data"] = std::move(data);
  return j;
}

ComplexMatrix matrix_from_json(const Json& j) {
  const int rows = j.at("rows").get<int>();
  const int cols = j.at("cols").get<int>();
  const auto& data = j.at("data");
  if (static_cast<int>(data.size()) != 2 * rows * cols)
    throw BadDomain("matrix_from_json: data length mismatch");
  ComplexMatrix m(rows, cols);
  size_t idx = 0;
  for (int i = 0; i < rows; ++i)
    for (int k = 0; k < cols; ++k) {
      const double re = data[idx++].get<double>();
      const double im = data[idx++].get<double>();
      m(i, k) = Complex{re, im};
    }
  return m;
}

Json to_json(const Instance& inst) {
  Json j;
  j["seed"] = inst.seed;
  j["gen_id"] = inst.gen_id;
  j["n"] = inst.n;
  j["m"] = inst.m;
  Json parts = Json::object();
  for (const auto& [name, part] : inst.parts) {
    Json p;
    p["kind"] = part_kind_id(part.kind);
    p["matrix"] = to_json(part.value);
    parts[name] = std::move(p);
  }
  j["parts"] = std::move(parts);
  Json scalars = Json::object();
  for (const auto& [name, v] : inst.scalars) scalars[name] = json_safe(v);
  j["scalars"] = std::move(scalars);
  if (inst.map) {
    Json map;
    map["in_dim"] = inst.map->in_dim();
    map["out_dim"] = inst.map->out_dim();
    Json kraus = Json::array();
    for (const auto& z : inst.map->kraus()) kraus.push_back(to_json(z));
    map["kraus"] = std::move(kraus);
    j["map"] = std::move(map);
  }
  if (inst.norm) j["norm"] = inst.norm->id();
  return j;
}

Instance instance_from_json(const Json& j) {
  Instance inst;
  inst.seed = j.at("seed").get<uint64_t>();
  inst.gen_id = j.at("gen_id").get<std::string>();
  inst.n = j.at("n").get<int>();
  inst.m = j.at("m").get<int>();
  for (const auto& [name, p] : j.at("parts").items()) {
    Part part;
    part.kind = parse_part_kind(p.at("kind").get<std::string>());
    part.value = matrix_from_json(p.at("matrix"));
    inst.parts[name] = std::move(part);
  }
  for (const auto& [name, v] : j.at("scalars").items())
    inst.scalars[name] = v.get<double>();
  if (j.contains("map")) {
    const auto& map = j.at("map");
    std::vector<ComplexMatrix> kraus;
    for (const auto& z : map.at("kraus")) kraus.push_back(matrix_from_json(z));
    inst.map = KrausMap(map.at("in_dim").get<int>(), map.at("out_dim").get<int>(),
                        std::move(kraus));
  }
  if (j.contains("norm")) inst.norm = SymmetricNorm::parse(j.at("norm").get<std::string>());
  return inst;
}

Json to_json(const CheckOutcome& outcome) {
  Json j;
  j["check_id"] = outcome.check_id;
  j["seed"] = outcome.seed;
  j["n"] = outcome.n;
  j["verdict"] = outcome.verdict;
  j["expects_violation"] = outcome.expects_violation;
  j["margin"] = json_safe(outcome.margin);
  if (outcome.margin_n) j["margin_n"] = json_safe(*outcome.margin_n);
  j["margins"] = safe_array(outcome.margins);
  if (!outcome.note.empty()) j["note"] = outcome.note;
  if (outcome.witness) j["witness"] = to_json(*outcome.witness);
  return j;
}

Json to_json(const MajorizationReport& rep) {
  Json j;
  switch (rep.relation) {
    case Relation::WeakLog: j["relation"] = "weak_log"; break;
    case Relation::Log: j["relation"] = "log"; break;
    case Relation::SuperWeakLog: j["relation"] = "super_weak_log"; break;
  }
  j["verdict"] = rep.verdict;
  j["tol"] = rep.tol;
  j["k_margins"] = safe_array(rep.k_margins);
  return j;
}

Json to_json(const ProbeReport& rep) {
  Json j;
  j["grid"] = Json{{"p", rep.grid.ps}, {"t", rep.grid.ts}};
  j["log_values"] = safe_array(rep.log_values);
  Json checks = Json::array();
  for (const auto& c : rep.checks) {
    Json e;
    e["a"] = {c.a[0], c.a[1]};
    e["b"] = {c.b[0], c.b[1]};
    e["mid"] = {c.mid[0], c.mid[1]};
    e["residual"] = json_safe(c.residual);
    checks.push_back(std::move(e));
  }
  j["midpoint_checks"] = std::move(checks);
  j["worst_residual"] = json_safe(rep.worst_residual);
  j["min_residual_margin"] = json_safe(rep.min_residual_margin);
  j["verdict"] = rep.verdict;
  j["tol"] = rep.tol;
  return j;
}

Json to_json(const SearchReport& rep) {
  Json j;
  j["objective_id"] = rep.objective_id;
  j["seed"] = rep.seed;
  j["restarts"] = rep.restarts;
  j["steps"] = rep.steps;
  j["best_margin"] = json_safe(rep.best_margin);
  j["best_instance"] = to_json(rep.best_instance);
  Json traj = Json::array();
  for (const auto& [step, margin] : rep.trajectory)
    traj.push_back(Json{{"step", step}, {"margin", json_safe(margin)}});
  j["trajectory"] = std::move(traj);
  return j;
}

}  // namespace majorlab
