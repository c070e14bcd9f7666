#pragma once

#include <cstddef>
#include <utility>

#include "chsh/engine.hpp"
#include "chsh/linalg.hpp"

namespace chsh::fock {

enum class Side { A, B };

/// Default per-mode cutoff. η^{2N} ≤ 1e-7 for η ≤ 0.82.
inline constexpr std::size_t kDefaultCutoff = 40;

/// Two bosonic modes truncated to levels 0..N−1 each; index n_a·N + n_b.
class FockSpace {
 public:
  /// Throws DomainError unless N is even and N ≥ 4.
  explicit FockSpace(std::size_t cutoff = kDefaultCutoff);

  std::size_t cutoff() const noexcept { return cutoff_; }
  std::size_t dim() const noexcept { return cutoff_ * cutoff_; }
  std::size_t index(std::size_t n_a, std::size_t n_b) const { return n_a * cutoff_ + n_b; }

 private:
  std::size_t cutoff_;
};

struct LadderMatrices {
  DenseOperator a, a_dag, b, b_dag;
};

/// Single-mode annihilator a|n⟩ = √n|n−1⟩ on N levels.
DenseOperator local_annihilator(std::size_t cutoff);

/// a = a_loc ⊗ I, b = I ⊗ b_loc and their adjoints.
LadderMatrices ladder_matrices(const FockSpace& space);

struct SqueezedState {
  double eta;
  FockSpace space;
  Ket ket;
  /// ‖·‖² of the truncated expansion before renormalization (equals 1 − η^{2N}).
  double truncated_norm_sq;
};

/// √(1−η²) Σ_{n<N} ηⁿ|n,n⟩, renormalized. Throws DomainError unless 0 < η < 1.
SqueezedState squeezed_state(double eta, const FockSpace& space);

struct BogoliubovPair {
  double eta;
  DenseOperator alpha, beta;
};

/// α = (a − η b†)/√(1−η²), β = (b − η a†)/√(1−η²).
BogoliubovPair bogoliubov_pair(double eta, const FockSpace& space);

/// ((1+η²)(a†a + b†b) − 2η(a†b† + ab) + 2η²)/(1−η²), which equals α†α + β†β
/// away from the top Fock level.
DenseOperator squeezed_hamiltonian(double eta, const FockSpace& space);

/// Single-mode parity-pair flip: |2n⟩ → e^{iφ}|2n+1⟩, |2n+1⟩ → e^{−iφ}|2n⟩.
DenseOperator local_pair_flip(std::size_t cutoff, double phase);

/// local_pair_flip on the designated mode, identity on the other.
DenseOperator pair_flip(const FockSpace& space, Side side, double phase);

ChshQuadruple quadruple(const FockSpace& space, const AngleSet& angles);

/// 2η/(1+η²).
double correlation_prefactor(double eta);

/// ⟨η|A_k B_i|η⟩ = (2η/(1+η²)) cos(α_k + β_i).
double correlator_closed(double eta, double alpha_k, double beta_i);

ClosedFormCorrelator closed_form(double eta);

/// (2η/(1+η²))(cos(α₁+β₁) + cos(α₂+β₁) + cos(α₁+β₂) − cos(α₂+β₂)).
double chsh_closed(double eta, const AngleSet& angles);

/// Matrix evaluation of the CHSH value on the truncated squeezed state.
double chsh_oracle(double eta, const AngleSet& angles, const FockSpace& space);

/// Lower endpoint of the violation window at squeezed_optimal_angles(), found
/// by bisection of chsh_closed − 2 on (0, 1) to the given bracket width.
double bisect_window_lower(double width = 1e-14);

/// (√2 − 1, 1). Throws ConsistencyError if bisection disagrees with √2 − 1 by
/// more than 1e-10.
std::pair<double, double> violation_window();

}  // namespace chsh::fock
