#pragma once

#include <map>
#include <string>
#include <vector>

#include "comprelie/axioms.hpp"
#include "comprelie/ucp.hpp"

namespace comprelie {

/// T◇T' in g_UCP: Σ over s ∈ V(T) and b ∈ bl(s) ⊔ {*} of (T •_{s,b} T')[−1]_s.
/// Summands whose counter at s would go negative are dropped.
Elem diamond_ucp(const PForest& t, const PForest& t2);

/// T◇T' in g_CP: the same double sum without the shift.
Elem diamond_cp(const PForest& t, const PForest& t2);

/// ◇ on every partitioned forest. T◇∅ = |T|·T and ∅◇T = 0.
Elem diamond_ext(const PForest& t, const PForest& t2);
Elem diamond_ext(const Elem& x, const Elem& y);

/// Bilinear extensions (arguments must be one-rooted).
Elem diamond_ucp(const Elem& x, const Elem& y);
Elem diamond_cp(const Elem& x, const Elem& y);

/// One-rooted n-vertex trees with ς = 0.
std::vector<PForest> free_generators_cp(std::size_t n, const std::vector<std::string>& labels);

/// δ(B_d(T1…Tk)) = Σ_{i ≤ ς(T)} B_d(T1…T̂i…Tk) ⊗ Ti on one-rooted trees.
Tensor delta_gcp(const Elem& x);

/// Υ(T ⊗ T') = T •_{r(T),*} T'.
Elem upsilon(const Tensor& x);

/// Θ(T) = Σ_{π◁T} T/π, extended linearly.
Elem theta(const Elem& x);

/// Ψ(T) = Σ_{T' ≤ T} T' over coarsenings of the block structure.
Elem psi(const Elem& x);

/// Ψ⁻¹ by Möbius recursion down the refinement order.
Elem psi_inverse(const Elem& x);

/// Σ_s T •_{s,*} T' (the preLie product of CP on nonempty T').
Elem star_graft(const Elem& x, const Elem& y);

/// Handles for the sweeps: g_UCP and g_CP on one-rooted trees (no
/// product), and (CP, ·, ◇) on all partitioned forests.
AlgebraHandle<PForest> gucp_handle(const std::vector<std::string>& labels, unsigned max_counter);
AlgebraHandle<PForest> gcp_handle(const std::vector<std::string>& labels);
AlgebraHandle<PForest> cp_diamond_handle(const std::vector<std::string>& labels);

}  // namespace comprelie
