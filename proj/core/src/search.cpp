#include "majorlab/search.hpp"

#include <algorithm>
#include <cmath>

namespace majorlab {

namespace {

constexpr double kCheckTol = 1e-9;
constexpr double kLieTrotterInterest = 1e-3;

bool is_registry_objective(const std::string& id) {
  for (const auto& d : registry())
    if (d.id == id) return true;
  return false;
}

// Cauchy tail of the matrix sequence (A^p Z* B^p Z A^p)^{1/p} along a
// geometric p ladder; large tails would be evidence against convergence.
// The p-th roots of the eigenvalues come from limit_probe (which survives the
// dynamic range of large powers); the eigenvector frame comes from the
// top-normalized sandwich, whose eigenvectors match the full-scale matrix.
double lie_trotter_z_tail(const Instance& inst) {
  const PsdMatrix A = PsdMatrix(inst.part("A").value);
  const PsdMatrix B = PsdMatrix(inst.part("B").value);
  const ComplexMatrix& Z = inst.part("Z").value;
  const int n = inst.n;
  const std::vector<double> ps = {4.0, 8.0, 16.0, 32.0, 64.0};

  std::vector<LimitProbe> ladders;
  for (int j = 1; j <= n; ++j) ladders.push_back(limit_probe(A, B, Z, j, ps));

  std::vector<double> va = A.eigenvalues(), vb = B.eigenvalues();
  const double ta = std::max(va.front(), 1e-300);
  const double tb = std::max(vb.front(), 1e-300);
  for (double& v : va) v /= ta;
  for (double& v : vb) v /= tb;
  const PsdMatrix a_hat = PsdMatrix::from_spectrum(std::move(va), A.spectrum().vectors);
  const PsdMatrix b_hat = PsdMatrix::from_spectrum(std::move(vb), B.spectrum().vectors);
  const double tz = std::max(operator_norm(Z), 1e-300);
  const ComplexMatrix z_hat = (1.0 / tz) * Z;

  double tail = 0.0;
  ComplexMatrix prev;
  for (size_t i = 0; i < ps.size(); ++i) {
    const ComplexMatrix ap = psd_power(a_hat, ps[i]).matrix();
    const ComplexMatrix bp = psd_power(b_hat, ps[i]).matrix();
    const EigenSystem frame =
        hermitian_eigen(hermitian_part(ap * (z_hat.adjoint() * (bp * (z_hat * ap)))));
    ComplexMatrix root(n, n);
    for (int r = 0; r < n; ++r)
      for (int c = 0; c < n; ++c) {
        Complex acc{0.0, 0.0};
        for (int j = 0; j < n; ++j)
          acc += frame.vectors(r, j) * ladders[j].values[i] * std::conj(frame.vectors(c, j));
        root(r, c) = acc;
      }
    if (prev.rows() > 0) tail = std::max(tail, operator_norm(root - prev));
    prev = root;
  }
  return tail;
}

Instance gen_objective_instance(const std::string& id, uint64_t seed, uint64_t trial, int n) {
  SweepParams params;
  params.dims = {n};
  if (is_registry_objective(id)) return gen_instance(id, seed, trial, params);
  if (id == "lie_trotter_z") {
    RandomStream rs = RandomStream(seed).substream(id).substream(trial);
    Instance inst;
    inst.seed = RandomStream::mix(seed ^ RandomStream::mix(trial));
    inst.gen_id = id;
    inst.n = n;
    inst.m = n;
    inst.parts["A"] = {gen_psd(rs, n, SpectrumProfile::WellConditioned).matrix(), PartKind::Psd};
    inst.parts["B"] = {gen_psd(rs, n, SpectrumProfile::WellConditioned).matrix(), PartKind::Psd};
    inst.parts["Z"] = {gen_general(rs, n), PartKind::General};
    return inst;
  }
  throw UnknownObjective("unknown objective id '" + id + "'");
}

// Constraint-preserving perturbation of one part. Each kind re-projects onto
// its hypothesis set so margins keep meaning.
ComplexMatrix perturb_part(const Part& part, double sigma, RandomStream& rs) {
  const int rows = part.value.rows();
  const int cols = part.value.cols();
  ComplexMatrix noise(rows, cols);
  for (int i = 0; i < rows; ++i)
    for (int j = 0; j < cols; ++j) noise(i, j) = sigma * rs.complex_gaussian();

  switch (part.kind) {
    case PartKind::Psd:
      return PsdMatrix::project(part.value + hermitian_part(noise)).matrix();
    case PartKind::Hermitian:
      return hermitian_part(part.value + noise);
    case PartKind::General:
      return part.value + noise;
    case PartKind::Contraction: {
      ComplexMatrix z = part.value + noise;
      const double top = operator_norm(z);
      if (top > 1.0) z *= 1.0 / top;
      return z;
    }
    case PartKind::Expansive: {
      SvdSystem sv = svd(part.value + noise);
      std::vector<Complex> fixed(rows);
      for (int j = 0; j < rows; ++j) fixed[j] = std::max(sv.singulars[j], 1.0);
      return sv.left * ComplexMatrix::diagonal(fixed) * sv.right.adjoint();
    }
    case PartKind::Unitary:
      return polar(part.value + noise).first;
    case PartKind::SchurMask: {
      ComplexMatrix c = PsdMatrix::project(part.value + hermitian_part(noise)).matrix();
      for (int i = 0; i < rows; ++i) {
        const double di = c(i, i).real();
        if (di > 1.0) {
          const double f = 1.0 / std::sqrt(di);
          for (int j = 0; j < cols; ++j) {
            c(i, j) *= f;
            c(j, i) *= f;
          }
        }
      }
      for (int i = 0; i < rows; ++i) c(i, i) = Complex{std::min(c(i, i).real(), 1.0), 0.0};
      return c;
    }
    case PartKind::Normal: {
      // stay inside the commutative algebra of the part, then move along the
      // unitary orbit: a X + b X* + c I conjugated by a small unitary
      const Complex a = Complex{1.0, 0.0} + sigma * rs.complex_gaussian();
      const Complex b = 0.5 * sigma * rs.complex_gaussian();
      const Complex c = 0.5 * sigma * rs.complex_gaussian();
      ComplexMatrix x = a * part.value + b * part.value.adjoint() +
                        c * ComplexMatrix::identity(rows);
      ComplexMatrix gen(rows, cols);
      for (int i = 0; i < rows; ++i)
        for (int j = 0; j < cols; ++j) gen(i, j) = sigma * rs.complex_gaussian();
      const ComplexMatrix u = expm_general(Complex{0.0, 1.0} * hermitian_part(gen));
      return u * (x * u.adjoint());
    }
  }
  return part.value + noise;
}

Instance perturb_instance(const Instance& inst, double sigma, RandomStream& rs) {
  Instance next = inst;
  for (auto& [name, part] : next.parts) {
    const double scale = std::max(1.0, part.value.frobenius_norm());
    part.value = perturb_part(part, sigma * scale, rs);
  }
  if (next.map) {
    std::vector<ComplexMatrix> kraus = next.map->kraus();
    for (auto& z : kraus) {
      const double scale = std::max(0.25, z.frobenius_norm());
      for (int i = 0; i < z.rows(); ++i)
        for (int j = 0; j < z.cols(); ++j) z(i, j) += sigma * scale * rs.complex_gaussian();
    }
    ComplexMatrix gram(next.map->out_dim(), next.map->out_dim());
    for (const auto& z : kraus) gram += z.adjoint() * z;
    EigenSystem es = hermitian_eigen(hermitian_part(gram));
    if (es.values.front() > 1.0) {
      const double f = 1.0 / std::sqrt(es.values.front());
      for (auto& z : kraus) z *= f;
    }
    next.map = KrausMap(next.map->in_dim(), next.map->out_dim(), std::move(kraus));
  }
  return next;
}

}  // namespace

std::vector<std::string> objective_ids() {
  std::vector<std::string> ids = registry_ids();
  ids.push_back("lie_trotter_z");
  return ids;
}

double objective_margin(const std::string& objective_id, const Instance& inst) {
  if (objective_id == "lie_trotter_z") return kLieTrotterInterest - lie_trotter_z_tail(inst);
  return run_check(objective_id, inst, kCheckTol).margin;
}

SearchReport minimize_margin(const std::string& objective_id, int n, SearchBudget budget,
                             uint64_t seed) {
  if (!is_registry_objective(objective_id) && objective_id != "lie_trotter_z")
    throw UnknownObjective("unknown objective id '" + objective_id + "'");

  SearchReport report;
  report.objective_id = objective_id;
  report.seed = seed;
  report.budget = budget;
  report.restarts = budget.restarts;
  report.steps = budget.steps;

  bool have_best = false;
  int global_step = 0;
  for (int restart = 0; restart < budget.restarts; ++restart) {
    RandomStream walk =
        RandomStream(seed).substream("walk").substream(static_cast<uint64_t>(restart));
    Instance current =
        gen_objective_instance(objective_id, seed, static_cast<uint64_t>(restart), n);
    double current_margin = objective_margin(objective_id, current);
    if (!have_best || current_margin < report.best_margin) {
      report.best_margin = current_margin;
      report.best_instance = current;
      report.trajectory.emplace_back(global_step, current_margin);
      have_best = true;
    }
    double sigma = 0.2;
    for (int step = 0; step < budget.steps; ++step, ++global_step) {
      Instance cand = perturb_instance(current, sigma, walk);
      const double margin = objective_margin(objective_id, cand);
      if (margin < current_margin) {
        current = std::move(cand);
        current_margin = margin;
        if (current_margin < report.best_margin) {
          report.best_margin = current_margin;
          report.best_instance = current;
          report.trajectory.emplace_back(global_step, current_margin);
        }
      }
      sigma *= 0.95;
    }
  }
  return report;
}

}  // namespace majorlab
