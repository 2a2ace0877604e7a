#pragma once

#include <string>
#include <vector>

#include "rydcav/params.hpp"
#include "rydcav/symmetric_eigen.hpp"

namespace rydcav {

// Couplings entering the two-atom Hamiltonian, all in rad/us.
struct PairCouplings {
  double U = 0.0;
  double J = 0.0;
  double g1a = 0.0;
  double g1b = 0.0;
  double g2a = 0.0;
  double g2b = 0.0;

  PairCouplings scaled(double lambda) const {
    return {lambda * U, lambda * J, lambda * g1a, lambda * g1b, lambda * g2a, lambda * g2b};
  }
};

// Detunings and the bare d-level energy the matrices are built from.
struct PairLevels {
  double delta = 0.0;    // omega_d - omega
  double Delta = 0.0;    // 2 omega_d - omega_p
  double omega_d = 0.0;  // set to 0 to measure energies from 2 omega_d

  static PairLevels from(const PhysicalParams& p) {
    return {p.cavity_detuning(), p.forster_detuning(), p.omega_d};
  }
};

struct PairHamiltonian {
  Matrix matrix;
  std::vector<std::string> basis_labels;
  PairLevels levels;
  PairCouplings couplings;

  std::size_t dd0_index() const { return matrix.size() - 1; }
};

// 6x6 matrix in the basis |df1>, |fd1>, |ff2>, |pf0>, |fp0>, |dd0>.
PairHamiltonian build_full(const PairLevels& levels, const PairCouplings& c);

// 4x4 matrix in the symmetric basis (|df1>+|fd1>)/sqrt2, |ff2>, (|pf0>+|fp0>)/sqrt2, |dd0>.
// Requires identical couplings at both sites: uses g1a/g1b and rejects g2a != g1a or
// g2b != g1b with ContractError.
PairHamiltonian build_reduced(const PairLevels& levels, const PairCouplings& c);

inline PairHamiltonian build_reduced(const PairLevels& levels, double U, double J, double ga,
                                     double gb) {
  return build_reduced(levels, PairCouplings{U, J, ga, gb, ga, gb});
}

// Couplings for two atoms separated by r (um) at dipole angle theta, same mode amplitude.
PairCouplings couplings_at(const PhysicalParams& p, double r, double theta);

struct PerturbationResult {
  double dE1 = 0.0;
  double dE2 = 0.0;
  double dE3 = 0.0;
  double dE4 = 0.0;
  double dE_total = 0.0;
  double pair_interaction = 0.0;  // O(e^4) two-particle part; filled by the closed forms
  double stark_shift_1 = 0.0;
  double stark_shift_2 = 0.0;
};

// Generic Rayleigh-Schroedinger series to fourth order for the level `target` of
// H0 + V, with H0 = diag(h0) and V given with (ignored) diagonal. Intermediate
// states must satisfy |E_target - E_n| > degeneracy_tol; otherwise DegeneracyError.
// A nonzero V(target,target) is rejected with ContractError.
PerturbationResult rs_perturbation_order4(const std::vector<double>& h0, const Matrix& v,
                                          std::size_t target, double degeneracy_tol);

// Same series on a PairHamiltonian, targeting |dd0> with the default degeneracy
// tolerance 1e-9 * max(|delta|, |Delta|).
PerturbationResult rs_perturbation_order4(const PairHamiltonian& h);

// Closed forms of the second to fourth order shifts of |dd0>, including the
// single-atom Stark shifts and the O(e^4) pair interaction.
PerturbationResult perturbation_closed_form(const PairLevels& levels, const PairCouplings& c);

struct PairInteraction {
  double value = 0.0;  // U-tilde, rad/us
  bool gate_failed = false;
};

// U-tilde for a pair with site couplings (g_ia, g_ib) and (g_ja, g_jb).
double effective_pair_interaction(double delta, double Delta, const PairCouplings& c);

// Same, evaluated from physical parameters with the perturbative gate checked.
PairInteraction effective_pair_interaction(const PhysicalParams& p, const PairCouplings& c,
                                           double threshold = 10.0);

struct DressedShift {
  double exact_shift = 0.0;  // dressed |dd0> eigenvalue minus its bare energy
  double overlap = 0.0;      // |<dd0|v>|^2
  std::size_t eigen_index = 0;
};

// Exact shift of the eigenstate with the largest |dd0> weight. Throws DegeneracyError
// if that weight is below 0.5.
DressedShift dressed_dd0_shift(const PairHamiltonian& h);

}  // namespace rydcav
