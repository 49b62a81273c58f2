//! The quiverized Clifford algebra of the generic matrix: the star product on
//! `Λ_S(F^∨ ⊕ G)`, the divided-power operators `Δ^(t)`, PBW rewriting of
//! quiver paths, minimal presentations of the pieces `C_ab`, their block
//! decomposition over the rationals, and the Clifford action on `M_a`.
//!
//! Sign conventions, fixed once for the whole module:
//!
//! * The basis element `e(I, J)` of `Λ_S(F^∨ ⊕ G)` is
//!   `λ_{j_q} ∧ ⋯ ∧ λ_{j_1} ∧ g_{i_1} ∧ ⋯ ∧ g_{i_p}` for `I = {i_1 < ⋯ < i_p}`
//!   and `J = {j_1 < ⋯ < j_q}`. In path notation this is the PBW word of the
//!   right-first ordering.
//! * `∂_{g_i} e(I, J) = (−1)^{|J| + pos_I(i)} e(I∖i, J)` and
//!   `∂_{λ_j} e(I, J) = (−1)^{#{j' ∈ J : j' > j}} e(I, J∖j)`, positions from 0.
//! * `Δ(u ⊗ v) = (−1)^{|u|} Σ x_{ji} ∂_{g_i}u ⊗ ∂_{λ_j}v`, so that
//!   `Δ^(t)(u ⊗ v) = (−1)^{t|u| + t(t−1)/2} Σ_{|I'|=|J'|=t} [J'|I'] ∂_{g_{I'}} u ⊗ ∂_{λ_{J'}} v`
//!   where `∂_{g_{I'}} = ∂_{g_{i'_t}} ⋯ ∂_{g_{i'_1}}` and likewise for `λ`.
//! * On a presentation summand `Λ^p G ⊗ Λ^q F^∨` the generator `g_I ⊗ λ_J`
//!   stands for the pair `(e(I, ∅), e(∅, J))` and `Δ^(t)` acts by the rule above.
//! * The presentation matrix `ρ` uses the blocks `Δ^(a+b−k−l)` without extra signs.

pub mod action;
pub mod blocks;
pub mod delta;
pub mod element;
pub mod pbw;
pub mod presentation;

pub use action::{anticommutator_defect, clifford_action_lifts, ActionGenerator, ActionLift};
pub use blocks::{block_decomposition, hankel_factorial_det, symmetric_diagonalize, BlockDecomposition};
pub use delta::{delta_matrix, delta_power_matrix};
pub use element::CliffordElement;
pub use pbw::{pbw_expand, pbw_expand_with, quotient_to_c, right_first_to_element, Expansion, Letter, Ordering, PathWord, Strategy};
pub use presentation::{presentation, Presentation};
