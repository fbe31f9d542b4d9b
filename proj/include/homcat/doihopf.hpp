#pragma once

#include <optional>
#include <string>

#include "homcat/homalg.hpp"
#include "homcat/pipeline.hpp"

namespace homcat {

// A_coaction: A -> A⊗H ; C_action: H⊗C -> C.
// The optional halves make A and C bialgebras (monoidal data) or Hopf algebras.
struct DoiHopfDatum {
    HomHopfAlgebra H;
    HomAlgebra A;
    HomCoalgebra C;
    LinearMap A_coaction;
    LinearMap C_action;
    std::optional<HomCoalgebra> A_coalgebra;
    std::optional<HomAlgebra> C_algebra;
    std::optional<LinearMap> A_antipode;
    std::optional<LinearMap> C_antipode;

    std::size_t dim_H() const { return H.dim(); }
    std::size_t dim_A() const { return A.dim; }
    std::size_t dim_C() const { return C.dim; }
    bool has_bialgebra_extensions() const { return A_coalgebra && C_algebra; }
    HomBialgebra A_bialgebra() const;
    HomBialgebra C_bialgebra() const;
};

// action: A⊗M -> M ; coaction: M -> M⊗C ; one twist for both halves
struct DoiHopfModule {
    std::size_t dim = 0;
    LinearMap action;
    LinearMap coaction;
    Twist twist;
};

struct ModuleMorphism {
    DoiHopfModule source;
    DoiHopfModule target;
    LinearMap map;
};

void validate(const DoiHopfDatum& d);
void validate(const DoiHopfDatum& d, const DoiHopfModule& M);

AxiomReport check_module_structure(const HomAlgebra& A, const LinearMap& act, const Twist& twist);
AxiomReport check_comodule_structure(const HomCoalgebra& C, const LinearMap& coact, const Twist& twist);

AxiomReport check_datum(const DoiHopfDatum& d);
AxiomReport check_doi_hopf_module(const DoiHopfDatum& d, const DoiHopfModule& M);
AxiomReport check_monoidal_datum(const DoiHopfDatum& d);

AxiomReport check_module_morphism(const DoiHopfDatum& d, const ModuleMorphism& f);
// throws PreconditionError naming the violated property
ModuleMorphism validated_morphism(const DoiHopfDatum& d, DoiHopfModule source, DoiHopfModule target, LinearMap map);

DoiHopfModule unit_module(const DoiHopfDatum& d);
DoiHopfModule tensor_modules(const DoiHopfDatum& d, const DoiHopfModule& M, const DoiHopfModule& N);
// f⊗g between tensor modules
ModuleMorphism tensor_morphisms(const DoiHopfDatum& d, const ModuleMorphism& f, const ModuleMorphism& g);

struct StructureMaps {
    ModuleMorphism associator;  // (M⊗N)⊗P -> M⊗(N⊗P)
    LinearMap associator_inverse;
    ModuleMorphism left_unitor;   // k⊗M -> M
    ModuleMorphism right_unitor;  // M⊗k -> M
    LinearMap left_unitor_inverse, right_unitor_inverse;
};
StructureMaps structure_maps(const DoiHopfDatum& d, const DoiHopfModule& M, const DoiHopfModule& N,
                             const DoiHopfModule& P);
// plain matrices, no validation
LinearMap associator_map(const DoiHopfModule& M, const DoiHopfModule& N, const DoiHopfModule& P);
LinearMap associator_inverse_map(const DoiHopfModule& M, const DoiHopfModule& N, const DoiHopfModule& P);

AxiomEntry check_pentagon(const DoiHopfModule& M, const DoiHopfModule& N, const DoiHopfModule& P,
                          const DoiHopfModule& Q);
AxiomEntry check_triangle(const DoiHopfModule& M, const DoiHopfModule& N);

enum class Canonical { A, C, AC };
DoiHopfModule canonical_module(const DoiHopfDatum& d, Canonical which);

// (H^op⊗H, H, H) with the twisted coaction and action; H^op carries S⁻¹
DoiHopfDatum yetter_drinfeld_datum(const HomHopfAlgebra& H);
// ρ(h·m) = α⁻¹(h21)·m(0) ⊗ [α⁻²(h22)α⁻¹(m(1))]S⁻¹(h1), plus module and comodule axioms over H
AxiomReport check_yd_module(const HomHopfAlgebra& H, const DoiHopfModule& M);

// id on positions of a tensor factor list, helpers shared by other modules
LinearMap ident(std::size_t n);

}  // namespace homcat
