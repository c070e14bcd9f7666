#pragma once

#include "chsh/engine.hpp"
#include "chsh/linalg.hpp"

namespace chsh::spin {

enum class Spin { half, one };
enum class Side { A, B };

/// Local dimension: 2 for spin 1/2, 3 for spin 1.
std::size_t local_dim(Spin s);

/// Local basis index of magnetic number m. Spin 1/2 orders (+, −); spin 1
/// orders m = (1, 0, −1). The argument for spin 1/2 is 2m, i.e. ±1.
/// Throws DomainError if m is out of range.
std::size_t index_of(Spin s, int m);

/// Two-particle singlet on the product space, left particle slow.
struct SingletState {
  Spin spin;
  Ket ket;
};

/// (|1,−1⟩ − |0,0⟩ + |−1,1⟩)/√3 for spin 1, (|+,−⟩ − |−,+⟩)/√2 for spin 1/2.
SingletState singlet(Spin s);

/// Local spin matrices (S_x, S_y, S_z) in the ordering of index_of.
struct SpinMatrices {
  DenseOperator x, y, z;
};
SpinMatrices spin_matrices(Spin s);

/// S_A·S_B = ½(S_A + S_B)² − 2 on the 9-dimensional spin-1 pair space.
DenseOperator spin_hamiltonian();

/// (S_A + S_B)² on the pair space.
DenseOperator total_spin_squared(Spin s);

/// Phase-flip measurement on one side, identity on the other.
///   spin 1/2:     |+⟩ → e^{iφ}|−⟩,  |−⟩ → e^{−iφ}|+⟩.
///   spin 1, A:    |−1⟩ → e^{iφ}|0⟩, |0⟩ → e^{−iφ}|−1⟩, |1⟩ fixed.
///   spin 1, B:    |1⟩ → e^{iφ}|0⟩,  |0⟩ → e^{−iφ}|1⟩,  |−1⟩ fixed.
DenseOperator flip_operator(Spin s, Side side, double phase);

/// Local (single-particle) version of flip_operator.
DenseOperator local_flip(Spin s, Side side, double phase);

ChshQuadruple quadruple(Spin s, const AngleSet& angles);

/// Angles giving 2(2+√2)/3 for the spin-1 singlet: α₁ = π/2, α₂ = 0, β₁ = 3π/4, β₂ = 0.
AngleSet spin_one_demo_angles();

/// Angles giving |CHSH| = 2√2 for the spin-1/2 singlet: α₁ = 0, α₂ = π/2, β₁ = π/4, β₂ = −π/4.
AngleSet tsirelson_angles();

/// (2/3)(1 − cos(α₁+β₁) − cos(α₂+β₁) − cos(α₁+β₂) + cos(α₂+β₂)).
ClosedFormCorrelator spin_one_closed_form();
double spin_one_chsh_closed(const AngleSet& angles);

/// Singlet pair correlator ⟨A_k B_i⟩ = −cos(α_k − β_i) for spin 1/2.
double spin_half_pair_correlator(double alpha, double beta);

}  // namespace chsh::spin
