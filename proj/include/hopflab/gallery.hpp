#pragma once

#include <map>
#include <optional>

#include "hopflab/twist.hpp"

namespace hopflab {

/// B(k_g^chi) # kC_n with chi(g) = zeta_n^(n/N), so q = chi(g) has order N.
struct QuantumLineSetup {
  int N = 0;
  int n = 0;
  CycScalar q;
  HopfPtr group;     // kC_n
  BraidedPtr nichols;
  HopfPtr smash;     // B(V) # kC_n, basis x^k g^t at index k * n + t
  HopfPtr dual;      // dual_hopf(smash)
};
QuantumLineSetup quantum_line_setup(int N, int n);

/// 1 (x) 1 + xi sum_k 1/((N-k)_q! (k)_q!) x^k g^(N-k) (x) x^(N-k).
TwistData twist_J_xi(const QuantumLineSetup& s, const CycScalar& xi);
/// The same sum without the group-likes, in B(V) (x) B(V).
BraidedTwistData braided_J_xi(const QuantumLineSetup& s, const CycScalar& xi);
/// Cocycle on the line itself: sigma(x^i g^k, x^j g^l) = [i + j = 0] + xi q^(jk) [i + j = N].
/// Deforms x^N = 0 into x^N = xi (1 - g^N).
CocycleData cocycle_sigma_xi(const QuantumLineSetup& s, const CycScalar& xi);
/// Cocycle on the dual with sigma(y^i h^k, y^j h^l) = [i + j = 0] + xi w^(jk) [i + j = N],
/// where y(x^s g^t) = [s = 1], h(x^s g^t) = [s = 0] w^t and w = zeta_n.
/// Its transpose is twist_J_xi when g^N = 1.
CocycleData dual_cocycle_sigma_xi(const QuantumLineSetup& s, const CycScalar& xi);
/// y^i h^k as an element of the dual, i < N, k < n.
SparseVec dual_monomial(const QuantumLineSetup& s, int i, int k);

/// Quantum linear space datum: xis[i] for each generator and linking
/// scalars a_ij for i != j.
struct QLSDatum {
  DiagonalRealization realization;
  std::vector<CycScalar> xis;
  std::map<std::pair<int, int>, CycScalar> as;
};

struct QLSSetup {
  QLSDatum datum;
  std::vector<int> orders;  // N_i = ord(q_ii)
  HopfPtr group;
  BraidedPtr nichols;
  HopfPtr smash;
};
/// Throws std::invalid_argument unless q_ij q_ji = 1 for i != j and every q_ii
/// has finite order at least 2.
QLSSetup qls_setup(const QLSDatum& d);

/// prod_i J_{xi_i} prod_{i != j} exp(a_ij x_i (x) x_j) in the braided tensor
/// square, pairs (i, j) taken in lexicographic order. exp(X) = sum_n X^n / (n)_q!
/// with q = q_ji the scalar in (x_i (x) x_j)^n = q_ji^(n(n-1)/2) x_i^n (x) x_j^n.
BraidedTwistData braided_J_D(const QLSSetup& s);
/// bosonize_twist(braided_J_D(s), smash, f).
TwistData twist_J_D(const QLSSetup& s, const std::optional<TwistData>& f = std::nullopt);
/// x_i^k in B(V).
SparseVec qls_monomial(const QLSSetup& s, int i, int k);

/// Quantum plane with N_1 = N_2 = 2 and all q_ij = -1: over C2 (g_1 = g_2 = g,
/// chi_1 = chi_2 = sign), or over C2 x C2 (g_i = (1,0), chi_i(a,b) = (-1)^(a+b))
/// when `klein` is set, so that twists of kK4 can be composed with it.
QLSDatum quantum_plane_datum(const CycScalar& xi1, const CycScalar& xi2, const CycScalar& a12,
                             const CycScalar& a21, bool klein = false);
/// y_i in dual_hopf(smash): y_i(x^v # h) = [v = x_i].
SparseVec qls_dual_generator(const QLSSetup& s, int i);

/// FK_n # k^{S_n} built from the transposition module (n = 3 or 4).
struct FKSetup {
  int n = 0;
  GroupTable group;  // S_n
  HopfPtr base;      // k^{S_n}
  BraidedPtr nichols;
  HopfPtr smash;     // basis r # delta_w at index r * n! + w
  std::vector<int> transpositions;
};
FKSetup fk_setup(int n);

/// 1 (x) 1 + sum_{eta, tau} y_eta (x) y_tau in FK_n (x) FK_n.
BraidedTwistData braided_J_n(const FKSetup& s);
/// 1 (x) 1 + sum_w sign(w) sum_{eta, tau} y_eta delta_w (x) y_{w^-1 tau w}.
TwistData twist_J_n(const FKSetup& s);
/// On dual_hopf(smash): sigma(w, w') = 1, sigma(x_tau w, x_tau' w') = sign(w), zero on
/// other homogeneous pairs. Here x_tau(y_eta # delta_v) = [tau = eta][v = e] and
/// w(r # delta_v) = eps(r) [w = v].
CocycleData cocycle_GM(const FKSetup& s, HopfPtr dual_smash);

/// J = sum_{a,b} alpha(a, b) e_a (x) e_b on kGamma, e_a = |Gamma|^-1 sum_g chi_a(g^-1) g
/// the idempotent of the character chars[a] (values on Gamma's elements).
/// Throws std::invalid_argument if chars is not closed under products or
/// alpha fails the 2-cocycle identity (witness triple in the message).
TwistData twist_abelian(const GroupTable& gamma, const std::vector<std::vector<CycScalar>>& chars,
                        const std::vector<std::vector<CycScalar>>& alpha);
/// The same element pushed into kG along embedding[gamma element] = G element.
TwistData lift_twist(const TwistData& t, const GroupTable& g, const std::vector<int>& embedding);
/// C2 x C2 (klein_four) with characters psi_{ab}(x, y) = (-1)^(ax + by) at index 2a + b and
/// alpha(psi_{ab}, psi_{cd}) = (-1)^(bc).
TwistData twist_klein_alpha();
/// twist_klein_alpha lifted to S_4 along C2 x C2 = <(12)(34), (13)(24)>.
TwistData twist_s4_from_klein();

/// FK_3 # (k^{S_3} # kC_m) with C_m = <(12)> (m = 2), <(123)> (m = 3) or
/// trivial (m = 1), acting on S_3 by conjugation and on V by
/// f . y_eta = y_{f eta f^-1}.
struct FKExtension {
  int m = 0;
  GroupTable group;  // S_3
  GroupTable f;      // C_m
  HopfPtr base;      // k^{S_3} # kC_m, basis delta_w # f at w * m + f
  BraidedPtr nichols;
  HopfPtr smash;
  std::vector<int> transpositions;
};
FKExtension fk3_extension(int m);
/// J_3 pushed along delta_w -> delta_w # 1.
TwistData extend_J3_matched_pair(const FKExtension& e);

/// Algebra characters of H found from its generator metadata: nilpotent
/// generators map to 0, one idempotent of each orthogonal family maps to 1,
/// group-like families map by a group homomorphism to roots of unity.
/// Candidates failing multiplicativity on the full basis are dropped.
struct CharacterGroup {
  std::vector<SparseVec> characters;  // values on the basis of H
  GroupTable table;                   // convolution product, using H's comult
};
CharacterGroup character_convolution_group(const HopfData& h);

/// V of Cartan type A2 at q = -1 over k[C2 x C2]: g1 = (1,0), g2 = (0,1),
/// chi1 = (-1,-1), chi2 = (1,-1) on the generators.
YDModuleData a2_module();

}  // namespace hopflab
