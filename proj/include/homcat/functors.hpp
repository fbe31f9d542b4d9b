#pragma once

#include "homcat/doihopf.hpp"

namespace homcat {

// theta: H -> H', beta: A -> A', gamma: C -> C'
struct DatumMorphism {
    DoiHopfDatum source;
    DoiHopfDatum target;
    LinearMap theta;
    LinearMap beta;
    LinearMap gamma;
};

// theta's entries carry the prefix "theta/"; beta and gamma use the plain homalg ids.
// "gamma-equivariance": γ(h·c) = θ(h)·γ(c) ; "beta-coaction": ρ'(β(a)) = β(a0)⊗θ(a1)
AxiomReport check_datum_morphism(const DatumMorphism& phi);

DatumMorphism identity_morphism(const DoiHopfDatum& d);
// (id, id, ε): (H, A, C) -> (H, A, k)
DatumMorphism counit_morphism(const DoiHopfDatum& d);
// (id, λ, id): (H, k, C) -> (H, A, C) with λ the unit of A
DatumMorphism unit_morphism(const DoiHopfDatum& d);

// F(M) = A'⊗_A M as a quotient of A'⊗M
struct InducedModule {
    DoiHopfModule module;
    Quotient quotient;
    LinearMap relations;  // A'⊗A⊗M -> A'⊗M, columns span the balancing subspace
    AxiomReport well_definedness;
};

// G(N') = N'□_{C'}C as a subspace of N'⊗C
struct CoinducedModule {
    DoiHopfModule module;
    LinearMap inclusion;  // G(N') -> N'⊗C
    AxiomReport well_definedness;
};

// throw PreconditionError when phi, M or the pushed structure fails
InducedModule induce(const DatumMorphism& phi, const DoiHopfModule& M);
CoinducedModule coinduce(const DatumMorphism& phi, const DoiHopfModule& N);

// F(f) and G(f) on morphisms
LinearMap induce_map(const InducedModule& FM, const InducedModule& FN, const LinearMap& f);
LinearMap coinduce_map(const CoinducedModule& GM, const CoinducedModule& GN, const LinearMap& f);

struct Adjunction {
    ModuleMorphism eta;    // M -> GF(M)
    ModuleMorphism delta;  // FG(M') -> M'
    // "triangle-coinduced": G(δ)∘η_{G(M')} = id ; "triangle-induced": δ_{F(M)}∘F(η_M) = id
    // "delta-balanced": δ vanishes on the balancing relations
    AxiomReport report;
};
Adjunction adjunction_maps(const DatumMorphism& phi, const DoiHopfModule& M, const DoiHopfModule& Mp);

// M with coaction (id⊗γ)∘ρ ; F(M) for phi = (id, id, γ)
DoiHopfModule corestrict(const DatumMorphism& phi, const DoiHopfModule& M);
// N with action ·∘(β⊗id) ; G(N) for phi = (id, β, id)
DoiHopfModule restrict_module(const DatumMorphism& phi, const DoiHopfModule& N);

struct TensorIdentity {
    ModuleMorphism phi;
    ModuleMorphism psi;
    // "inverse-left", "inverse-right" plus well-definedness entries
    AxiomReport report;
};
// M⊗G(N) ≅ G(F(M)⊗N) for phi = (id, id, γ) ; needs the antipode of C
TensorIdentity tensor_identity_coinduction(const DatumMorphism& phi, const DoiHopfModule& M, const DoiHopfModule& N);
// F(M)⊗N ≅ F(M⊗G(N)) for phi = (id, β, id) ; needs the antipode of A'
TensorIdentity tensor_identity_induction(const DatumMorphism& phi, const DoiHopfModule& M, const DoiHopfModule& N);

}  // namespace homcat
